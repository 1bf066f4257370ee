#include <doctest.h>

#include "coiso/fixtures.hpp"
#include "coiso/triple.hpp"

using namespace coiso;

namespace {

Vec<Rat> e(std::size_t n, std::size_t i) {
    Vec<Rat> v(n);
    v[i] = Rat(1);
    return v;
}

Triple<Rat> t2_dirac() {
    auto t2 = fixtures::t2<Rat>();
    return dirac_triple(t2, Subspace<Rat>::span(3, {e(3, 1)}));
}

}  // namespace

TEST_CASE("Dirac triples validate; bad triples report the broken axiom") {
    auto m2 = fixtures::m2<Rat>();
    auto d = dirac_triple(m2, fixtures::j_col<Rat>());
    CHECK(validate_triple(d).ok());
    CHECK(d.n_space.dim() == 3);  // lower triangular

    // (M2, span{1}, J_col): 0-part not inside the N-part
    auto bad = validate_triple_data(m2, subalgebra_closure(m2, {}), fixtures::j_col<Rat>());
    CHECK_FALSE(bad.ok());
    bool containment_failed = false;
    for (const auto& c : bad.checks)
        if (c.name == "0-part contained in N-part" && !c.pass) containment_failed = true;
    CHECK(containment_failed);

    CHECK(validate_triple(trivial_triple(fixtures::t2<Rat>())).ok());

    // containment failure surfaces as a report entry when built directly
    auto t2 = fixtures::t2<Rat>();
    auto loose = Triple<Rat>::make(t2, Subspace<Rat>::full(3), Subspace<Rat>::span(3, {e(3, 0)}));
    CHECK_FALSE(validate_triple(loose).ok());  // span{E11} is not a left ideal
}

TEST_CASE("dirac on a zero ideal is the un-reduce triple") {
    auto t2 = fixtures::t2<Rat>();
    auto d = dirac_triple(t2, Subspace<Rat>::zero(3));
    CHECK(d == unred_triple(t2));
    auto d2 = t2_dirac();
    CHECK(validate_triple(d2).ok());
    CHECK(d2.n_space.is_full());  // span{E12} is two-sided in T2
}

TEST_CASE("every valid triple satisfies A_0 ⊆ A_N ⊆ N(A_0)") {
    auto m2 = fixtures::m2<Rat>();
    std::vector<Triple<Rat>> ts = {dirac_triple(m2, fixtures::j_col<Rat>()), t2_dirac(),
                                   trivial_triple(m2), unred_triple(m2)};
    for (const auto& t : ts) {
        CHECK(t.n_space.contains(t.zero_space));
        CHECK(idealizer(t.tot, t.zero_space).contains(t.n_space));
    }
}

TEST_CASE("reduction on the pinned examples") {
    auto m2 = fixtures::m2<Rat>();
    auto red1 = reduce(dirac_triple(m2, fixtures::j_col<Rat>()));
    CHECK(red1.alg.dim() == 1);
    CHECK(red1.alg == fixtures::product_field<Rat>(1));

    auto red2 = reduce(t2_dirac());
    CHECK(red2.alg.dim() == 2);
    CHECK(red2.alg == fixtures::product_field<Rat>(2));

    // reduce(unred(a)) is literally a on the canonical bases
    CHECK(reduce(unred_triple(m2)).alg == m2);
    CHECK(reduce(trivial_triple(m2)).alg.dim() == 0);
}

TEST_CASE("reduction is functorial on quotient-map chains") {
    auto t2 = fixtures::t2<Rat>();
    auto src = unred_triple(t2);
    auto q = quotient_algebra(t2, Subspace<Rat>::span(3, {e(3, 1)}));
    auto mid = unred_triple(q.alg);
    TripleHom<Rat> f{src, mid, q.proj};
    CHECK(validate_triple_hom(f).ok());

    auto q2 = quotient_algebra(q.alg, Subspace<Rat>::span(2, {e(2, 0)}));
    auto dst = unred_triple(q2.alg);
    TripleHom<Rat> g{mid, dst, q2.proj};
    CHECK(validate_triple_hom(g).ok());

    auto gf = compose(g, f);
    auto lhs = reduce_hom(gf);
    auto rhs = compose(reduce_hom(g), reduce_hom(f));
    CHECK(lhs.m == rhs.m);
    CHECK(reduce_hom(TripleHom<Rat>::id(src)).m == Mat<Rat>::identity(3));
}

TEST_CASE("triple to pair and back") {
    auto d = t2_dirac();
    auto p = to_pair(d);
    CHECK(validate_pair(p).ok());
    auto t = pair_triple(p);
    auto p2 = to_pair(t);
    CHECK(p.n_alg == p2.n_alg);
    CHECK(p.zero == p2.zero);

    // a pair built by hand validates after extension
    auto kk = fixtures::product_field<Rat>(2);
    Pair<Rat> pr{kk, Subspace<Rat>::span(2, {e(2, 1)})};
    CHECK(validate_pair(pr).ok());
    CHECK(validate_triple(pair_triple(pr)).ok());
}

TEST_CASE("canonical bimodule on the pinned examples") {
    auto m2 = fixtures::m2<Rat>();
    auto d = dirac_triple(m2, fixtures::j_col<Rat>());
    auto cb = canonical_bimodule(d);
    CHECK(cb.bim.dim == 2);  // the column space
    CHECK(validate_bimodule(cb.bim).ok());
    auto rep = verify_canonical_endomorphisms(d);
    CHECK(rep.ok());

    // un-reduce: C(A) = a itself, endomorphisms are a^opp acting by right mult
    auto u = unred_triple(fixtures::t2<Rat>());
    CHECK(canonical_bimodule(u).bim.dim == 3);
    CHECK(verify_canonical_endomorphisms(u).ok());

    // trivial: everything collapses
    auto tr = trivial_triple(fixtures::t2<Rat>());
    CHECK(canonical_bimodule(tr).bim.dim == 0);
    CHECK(verify_canonical_endomorphisms(tr).ok());

    CHECK(verify_canonical_endomorphisms(t2_dirac()).ok());
}

TEST_CASE("reduce(dirac) is the opposite endomorphism algebra of the cyclic module") {
    // dimension-level consequence on the fixtures
    auto m2 = fixtures::m2<Rat>();
    auto d = dirac_triple(m2, fixtures::j_col<Rat>());
    auto cb = canonical_bimodule(d);
    auto endos = endomorphism_algebra(cb.bim.lact, cb.bim.dim);
    CHECK(endos.alg.dim() == reduce(d).alg.dim());
}
