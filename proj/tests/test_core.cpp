#include <doctest.h>

#include <random>

#include "coiso/matrix.hpp"
#include "coiso/scalar.hpp"
#include "coiso/subspace.hpp"

using namespace coiso;

namespace {

Mat<Rat> mat(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    Mat<Rat> m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(*it++);
    return m;
}

Vec<Rat> vec(std::initializer_list<long> vals) {
    Vec<Rat> v;
    for (long x : vals) v.push_back(Rat(x));
    return v;
}

// deterministic small-rational generator for property tests
struct SmallRng {
    std::mt19937_64 eng;
    explicit SmallRng(std::uint64_t seed) : eng(seed) {}
    long next_int(long lo, long hi) { return lo + static_cast<long>(eng() % (hi - lo + 1)); }
    Rat next_rat() { return Rat(next_int(-3, 3)); }
    Vec<Rat> next_vec(std::size_t n) {
        Vec<Rat> v(n);
        for (auto& x : v) x = next_rat();
        return v;
    }
};

}  // namespace

TEST_CASE("rational arithmetic is exact and guards division") {
    CHECK(Rat::parse("1/3") + Rat::parse("1/6") == Rat(1, 2));
    CHECK(Rat::parse("-2/4").str() == "-1/2");
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(7);
    CHECK(Fp(3) * Fp(5) == Fp(1));
    CHECK(Fp(3) / Fp(5) == Fp(3) * Fp(5).inverse());
    CHECK((Fp(6) + Fp(1)).is_zero());
    CHECK_THROWS_AS(Fp(1) / Fp(0), std::domain_error);
    CHECK_THROWS_AS(Fp::set_modulus(6), std::invalid_argument);
    Fp::set_modulus(101);
    CHECK(Fp::parse("1/2") * Fp(2) == Fp(1));
}

TEST_CASE("rref on the pinned examples") {
    auto z = rref(mat(2, 2, {0, 0, 0, 0}));
    CHECK(z.mat.rows() == 0);
    CHECK(z.pivots.empty());

    auto id3 = rref(Mat<Rat>::identity(3));
    CHECK(id3.mat == Mat<Rat>::identity(3));
    CHECK(id3.pivots == std::vector<std::size_t>{0, 1, 2});

    // [[2,4],[1,2]] row-reduces to [[1,2]] by hand elimination
    auto r = rref(mat(2, 2, {2, 4, 1, 2}));
    CHECK(r.mat == mat(1, 2, {1, 2}));
    CHECK(r.pivots == std::vector<std::size_t>{1 - 1});
}

TEST_CASE("rref is idempotent on random matrices") {
    SmallRng rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t r = 1 + rng.next_int(0, 4), c = 1 + rng.next_int(0, 4);
        Mat<Rat> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.next_rat();
        auto once = rref(m);
        auto twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("solve: identity, underdetermined, inconsistent") {
    auto s1 = solve(Mat<Rat>::identity(3), vec({5, -1, 2}));
    CHECK(s1.consistent);
    CHECK(s1.particular == vec({5, -1, 2}));
    CHECK(s1.kernel.rows() == 0);

    auto s2 = solve(mat(1, 2, {1, 1}), vec({2}));
    CHECK(s2.consistent);
    CHECK(s2.particular == vec({2, 0}));
    REQUIRE(s2.kernel.rows() == 1);
    // kernel is the line through (1,-1); canonical RREF basis row
    CHECK(s2.kernel == mat(1, 2, {1, -1}));

    auto s3 = solve(mat(2, 1, {1, 1}), vec({0, 1}));
    CHECK_FALSE(s3.consistent);
}

TEST_CASE("solve result actually solves the system") {
    SmallRng rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t r = 1 + rng.next_int(0, 3), c = 1 + rng.next_int(0, 3);
        Mat<Rat> a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = rng.next_rat();
        Vec<Rat> x = rng.next_vec(c);
        Vec<Rat> b = a.apply(x);
        auto s = solve(a, b);
        REQUIRE(s.consistent);
        CHECK(a.apply(s.particular) == b);
        for (std::size_t kr = 0; kr < s.kernel.rows(); ++kr)
            CHECK(vec_is_zero(a.apply(s.kernel.row(kr))));
    }
}

TEST_CASE("subspace operations on the pinned examples") {
    auto e = [](int i) {
        Vec<Rat> v(3);
        v[i] = Rat(1);
        return v;
    };
    auto u = Subspace<Rat>::span(3, {e(0), e(1)});
    auto v = Subspace<Rat>::span(3, {e(1), e(2)});
    CHECK(intersect(u, v) == Subspace<Rat>::span(3, {e(1)}));

    CHECK(sum(u, Subspace<Rat>::zero(3)) == u);

    auto diag = Subspace<Rat>::span(2, {vec({1, 1})});
    CHECK_FALSE(diag.contains(vec({1, 0})));
    CHECK(diag.contains(vec({2, 2})));
}

TEST_CASE("dimension formula and canonical equality on random subspaces") {
    SmallRng rng(4242);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 2 + rng.next_int(0, 3);
        std::vector<Vec<Rat>> us, vs;
        for (int i = 0; i < 3; ++i) us.push_back(rng.next_vec(n));
        for (int i = 0; i < 3; ++i) vs.push_back(rng.next_vec(n));
        auto u = Subspace<Rat>::span(n, us);
        auto v = Subspace<Rat>::span(n, vs);
        CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());

        // canonical-form equality == double containment
        std::vector<Vec<Rat>> shuffled(us.rbegin(), us.rend());
        shuffled.push_back(u.basis().rows() ? u.basis().row(0) : Vec<Rat>(n));
        auto u2 = Subspace<Rat>::span(n, shuffled);
        bool same_set = u.contains(u2) && u2.contains(u);
        CHECK(same_set == (u == u2));
    }
}

TEST_CASE("quotient maps on the pinned examples") {
    auto q0 = quotient_map(Subspace<Rat>::zero(2));
    CHECK(q0.proj == Mat<Rat>::identity(2));
    CHECK(q0.sect == Mat<Rat>::identity(2));

    auto q1 = quotient_map(Subspace<Rat>::span(2, {vec({1, 0})}));
    CHECK(q1.proj == mat(1, 2, {0, 1}));
    CHECK(q1.sect == mat(2, 1, {0, 1}));

    auto q2 = quotient_map(Subspace<Rat>::full(3));
    CHECK(q2.proj.rows() == 0);
}

TEST_CASE("quotient identities on random subspaces") {
    SmallRng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 1 + rng.next_int(0, 4);
        std::vector<Vec<Rat>> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(rng.next_vec(n));
        auto u = Subspace<Rat>::span(n, gens);
        auto q = quotient_map(u);
        CHECK(q.proj * q.sect == Mat<Rat>::identity(n - u.dim()));
        // sect∘proj − id maps into u
        Mat<Rat> defect = q.sect * q.proj - Mat<Rat>::identity(n);
        for (std::size_t j = 0; j < n; ++j) CHECK(u.contains(defect.col(j)));
        // kernel of proj is exactly u
        CHECK(Subspace<Rat>::span_rows(kernel(q.proj)) == u);
    }
}

TEST_CASE("inverse and kron behave") {
    auto m = mat(2, 2, {1, 1, 0, 1});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == Mat<Rat>::identity(2));
    CHECK_FALSE(inverse(mat(2, 2, {1, 2, 2, 4})).has_value());

    auto a = mat(2, 2, {1, 2, 3, 4});
    auto b = mat(2, 2, {0, 1, 1, 0});
    Vec<Rat> x = vec({1, 2, 3, 4});
    CHECK(kron(a, b).apply(x) == apply_kron(a, b, x, 2, 2));
}
