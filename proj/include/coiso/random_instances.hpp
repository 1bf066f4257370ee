#pragma once

#include <cstdint>
#include <vector>

#include "coiso/cbimodule.hpp"
#include "coiso/fixtures.hpp"
#include "coiso/triple.hpp"

namespace coiso {

/// SplitMix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }

    template <ScalarField K>
    K scalar(long lo = -2, long hi = 2) {
        return K(range(lo, hi));
    }

    template <ScalarField K>
    Vec<K> vec(std::size_t n, long lo = -2, long hi = 2) {
        Vec<K> v(n);
        for (auto& x : v) x = scalar<K>(lo, hi);
        return v;
    }
};

/// Small unital algebras used as raw material for random instances.
template <ScalarField K>
std::vector<Algebra<K>> algebra_pool(std::size_t max_dim) {
    std::vector<Algebra<K>> pool;
    auto push = [&](Algebra<K> a) {
        if (a.dim() <= max_dim) pool.push_back(std::move(a));
    };
    push(Algebra<K>::field());
    push(fixtures::product_field<K>(2));
    push(fixtures::truncated_poly<K>(2));
    push(fixtures::product_field<K>(3));
    push(fixtures::truncated_poly<K>(3));
    push(fixtures::t2<K>());
    push(fixtures::m2<K>());
    push(fixtures::truncated_poly<K>(4));
    return pool;
}

/// Random coisotropic triple: Dirac data from a random generator, a random
/// intermediate subalgebra, or one of the trivial/un-reduce shapes. Always
/// valid by construction.
template <ScalarField K>
Triple<K> random_triple(Rng& rng, std::size_t max_dim) {
    auto pool = algebra_pool<K>(max_dim);
    const Algebra<K> a = pool[rng.below(pool.size())];
    switch (rng.below(4)) {
        case 0:
            return trivial_triple(a);
        case 1:
            return unred_triple(a);
        case 2: {
            auto j = left_ideal(a, {rng.vec<K>(a.dim())});
            return dirac_triple(a, j);
        }
        default: {
            auto j = left_ideal(a, {rng.vec<K>(a.dim())});
            auto n = idealizer(a, j);
            // a random unital subalgebra between the ideal and its idealizer
            std::vector<Vec<K>> seed;
            for (std::size_t r = 0; r < j.dim(); ++r) seed.push_back(j.basis().row(r));
            Vec<K> mix(a.dim());
            for (std::size_t r = 0; r < n.dim(); ++r)
                vec_add_scaled(mix, rng.scalar<K>(), n.basis().row(r));
            seed.push_back(mix);
            return Triple<K>::make(a, subalgebra_closure(a, seed), j);
        }
    }
}

/// Random bimodule over the given triples: a quotient of the free bimodule
/// on the N-algebras by a randomly generated sub-bimodule, with the matching
/// quotient over the total algebras and the induced connecting map. The
/// 0-part is B_0·E_N + E_N·A_0, the smallest valid choice.
template <ScalarField K>
CoisoBimodule<K> random_cbim(Rng& rng, const Triple<K>& b, const Triple<K>& a,
                             std::size_t max_dim,
                             const std::vector<Vec<K>>& extra_n_gens = {}) {
    auto free_n = PlainBimodule<K>::outer(b.n_alg, a.n_alg);
    auto free_tot = PlainBimodule<K>::outer(b.tot, a.tot);
    Mat<K> incl = kron(b.n_incl, a.n_incl);

    std::vector<Vec<K>> gens = extra_n_gens;
    Subspace<K> s_n = sub_bimodule(free_n, gens);
    while (free_n.dim - s_n.dim() > max_dim) {
        gens.push_back(rng.vec<K>(free_n.dim));
        s_n = sub_bimodule(free_n, gens);
    }

    std::vector<Vec<K>> tot_gens;
    for (const auto& g : gens) tot_gens.push_back(incl.apply(g));
    Subspace<K> s_tot = sub_bimodule(free_tot, tot_gens);

    auto q_n = quotient_bimodule(free_n, s_n);
    auto q_tot = quotient_bimodule(free_tot, s_tot);

    CoisoBimodule<K> e;
    e.left = b;
    e.right = a;
    e.tot = q_tot.bim;
    e.nmod = q_n.bim;
    e.iota = q_tot.proj * incl * q_n.sect;

    RrefBuilder<K> zb(e.nmod.dim);
    for (std::size_t r = 0; r < b.zero_in_n.dim(); ++r) {
        Mat<K> act = e.nmod.lact_of(b.zero_in_n.basis().row(r));
        for (std::size_t x = 0; x < e.nmod.dim; ++x) zb.add(act.col(x));
    }
    for (std::size_t r = 0; r < a.zero_in_n.dim(); ++r) {
        Mat<K> act = e.nmod.ract_of(a.zero_in_n.basis().row(r));
        for (std::size_t x = 0; x < e.nmod.dim; ++x) zb.add(act.col(x));
    }
    e.zero = Subspace<K>::span_rows(zb.basis());
    return e;
}

/// A chain of composable bimodules over count+1 random triples.
template <ScalarField K>
struct ComposableChain {
    std::vector<Triple<K>> triples;     // count+1, rightmost first
    std::vector<CoisoBimodule<K>> bims; // bims[i] over (triples[i+1], triples[i])
};

template <ScalarField K>
ComposableChain<K> random_chain(Rng& rng, std::size_t count, std::size_t alg_dim,
                                std::size_t mod_dim) {
    ComposableChain<K> c;
    for (std::size_t i = 0; i <= count; ++i) c.triples.push_back(random_triple<K>(rng, alg_dim));
    for (std::size_t i = 0; i < count; ++i)
        c.bims.push_back(random_cbim(rng, c.triples[i + 1], c.triples[i], mod_dim));
    return c;
}

/// Random 2-morphism as a combination of the canonical hom-space basis.
template <ScalarField K>
CHom<K> random_chom(Rng& rng, const CoisoBimodule<K>& e, const CoisoBimodule<K>& f) {
    auto basis = chom_space(e, f);
    CHom<K> h = chom_zero(e, f);
    for (const auto& hb : basis) {
        K c = rng.scalar<K>();
        if (c.is_zero()) continue;
        h.tot = h.tot + c * hb.tot;
        h.n = h.n + c * hb.n;
    }
    return h;
}

/// Random chain of triple morphisms src -> src/I1 -> (src/I1)/I2 by quotient
/// projections onto image triples.
template <ScalarField K>
struct MorphismChain {
    std::vector<Triple<K>> triples;
    std::vector<TripleHom<K>> homs;  // homs[i]: triples[i] -> triples[i+1]
};

template <ScalarField K>
MorphismChain<K> random_morphism_chain(Rng& rng, std::size_t length, std::size_t alg_dim) {
    MorphismChain<K> out;
    out.triples.push_back(random_triple<K>(rng, alg_dim));
    for (std::size_t step = 0; step < length; ++step) {
        const Triple<K>& src = out.triples.back();
        auto ideal = two_sided_ideal(src.tot, {rng.vec<K>(src.tot.dim())});
        auto q = quotient_algebra(src.tot, ideal);
        // image triple: q(N), q(A_0) with the projection as the morphism
        std::vector<Vec<K>> nrows, zrows;
        for (std::size_t r = 0; r < src.n_space.dim(); ++r)
            nrows.push_back(q.proj.apply(src.n_space.basis().row(r)));
        for (std::size_t r = 0; r < src.zero_space.dim(); ++r)
            zrows.push_back(q.proj.apply(src.zero_space.basis().row(r)));
        auto dst = Triple<K>::make(q.alg, Subspace<K>::span(q.alg.dim(), nrows),
                                   Subspace<K>::span(q.alg.dim(), zrows));
        out.homs.push_back(TripleHom<K>{src, dst, q.proj});
        out.triples.push_back(dst);
    }
    return out;
}

}  // namespace coiso
