#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coiso/algebra.hpp"
#include "coiso/module.hpp"
#include "coiso/report.hpp"
#include "coiso/subspace.hpp"

namespace coiso {

/// Coisotropic triple (A_tot, A_N, A_0): a unital algebra, a unital
/// subalgebra of weakly observable elements, and a left ideal of the total
/// algebra that is two-sided inside A_N. The induced algebra on A_N and the
/// 0-part in its coordinates are cached, since downstream constructions use
/// A_N as an algebra in its own right.
template <ScalarField K>
struct Triple {
    Algebra<K> tot;
    Subspace<K> n_space;   // A_N as a subspace of A_tot
    Subspace<K> zero_space;  // A_0 as a subspace of A_tot

    Algebra<K> n_alg;      // induced algebra on n_space's RREF basis
    Mat<K> n_incl;         // n-coords -> tot-coords
    Subspace<K> zero_in_n; // A_0 in n-coords

    static Triple make(Algebra<K> tot, Subspace<K> n_space, Subspace<K> zero_space) {
        Triple t;
        t.tot = std::move(tot);
        t.n_space = std::move(n_space);
        t.zero_space = std::move(zero_space);
        auto ind = induced_algebra(t.tot, t.n_space,
                                   t.tot.label().empty() ? std::string{} : t.tot.label() + "_N");
        t.n_alg = std::move(ind.alg);
        t.n_incl = std::move(ind.incl);
        // cache A_0 ∩ A_N in n-coordinates; equals A_0 for valid triples, and
        // keeps broken inputs representable so validation can report them
        auto meet = intersect(t.zero_space, t.n_space);
        std::vector<Vec<K>> zrows;
        for (std::size_t r = 0; r < meet.dim(); ++r)
            zrows.push_back(t.n_space.coords(meet.basis().row(r)));
        t.zero_in_n = Subspace<K>::span(t.n_space.dim(), zrows);
        return t;
    }

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.tot == b.tot && a.n_space == b.n_space && a.zero_space == b.zero_space;
    }
};

/// Coisotropic pair (A_N, A_0): a unital algebra with a two-sided ideal.
template <ScalarField K>
struct Pair {
    Algebra<K> n_alg;
    Subspace<K> zero;  // in n-coords
};

template <ScalarField K>
Triple<K> trivial_triple(const Algebra<K>& a) {
    return Triple<K>::make(a, Subspace<K>::full(a.dim()), Subspace<K>::full(a.dim()));
}

template <ScalarField K>
Triple<K> unred_triple(const Algebra<K>& a) {
    return Triple<K>::make(a, Subspace<K>::full(a.dim()), Subspace<K>::zero(a.dim()));
}

/// Dirac triple (A, N(J), J) of a left ideal J.
template <ScalarField K>
Triple<K> dirac_triple(const Algebra<K>& a, const Subspace<K>& j) {
    return Triple<K>::make(a, idealizer(a, j), j);
}

/// Validates the triple axioms on raw data, itemizing every failure.
template <ScalarField K>
Report validate_triple_data(const Algebra<K>& tot, const Subspace<K>& n_space,
                            const Subspace<K>& zero_space) {
    Report rep;
    rep.subject = "coisotropic triple over " + tot.label();
    rep.merge("tot: ", validate_algebra(tot));
    rep.require("N-part is a unital subalgebra", is_unital_subalgebra(tot, n_space));
    rep.require("0-part is a left ideal of tot", is_left_ideal(tot, zero_space));
    bool inside = n_space.contains(zero_space);
    rep.require("0-part contained in N-part", inside,
                inside ? std::string{}
                       : "dim A_0 = " + std::to_string(zero_space.dim()) + ", dim(A_0 ∩ A_N) = " +
                             std::to_string(intersect(zero_space, n_space).dim()));
    if (inside) {
        bool two_sided = true;
        std::string w;
        for (std::size_t i = 0; i < n_space.dim() && two_sided; ++i)
            for (std::size_t r = 0; r < zero_space.dim(); ++r) {
                Vec<K> prod = tot.mul(zero_space.basis().row(r), n_space.basis().row(i));
                if (!zero_space.contains(prod)) {
                    two_sided = false;
                    w = "A_0 basis " + std::to_string(r) + " times N basis " + std::to_string(i) +
                        " leaves A_0";
                    break;
                }
            }
        rep.require("0-part is two-sided inside N-part", two_sided, w);
    }
    return rep;
}

template <ScalarField K>
Report validate_triple(const Triple<K>& t) {
    return validate_triple_data(t.tot, t.n_space, t.zero_space);
}

template <ScalarField K>
Report validate_pair(const Pair<K>& p) {
    Report rep;
    rep.subject = "coisotropic pair over " + p.n_alg.label();
    rep.merge("N: ", validate_algebra(p.n_alg));
    rep.require("0-part is a two-sided ideal", is_two_sided_ideal(p.n_alg, p.zero));
    return rep;
}

template <ScalarField K>
Pair<K> to_pair(const Triple<K>& t) {
    return {t.n_alg, t.zero_in_n};
}

/// Extension (A_N, A_N, A_0); the round trip through to_pair is the identity.
template <ScalarField K>
Triple<K> pair_triple(const Pair<K>& p) {
    return Triple<K>::make(p.n_alg, Subspace<K>::full(p.n_alg.dim()), p.zero);
}

/// Morphism of coisotropic triples: a unital algebra morphism of the total
/// algebras mapping the N-part into the N-part and the 0-part into the 0-part.
template <ScalarField K>
struct TripleHom {
    Triple<K> source, target;
    Mat<K> m;  // target tot-dim × source tot-dim

    static TripleHom id(const Triple<K>& t) { return {t, t, Mat<K>::identity(t.tot.dim())}; }

    friend TripleHom compose(const TripleHom& g, const TripleHom& f) {
        if (!(f.target == g.source)) throw std::invalid_argument("compose: triple mismatch");
        return {f.source, g.target, g.m * f.m};
    }
};

template <ScalarField K>
Report validate_triple_hom(const TripleHom<K>& f) {
    Report rep;
    rep.subject = "triple morphism";
    rep.merge("", validate_hom(AlgebraHom<K>{f.source.tot, f.target.tot, f.m}));
    bool n_ok = true;
    for (std::size_t r = 0; r < f.source.n_space.dim(); ++r)
        if (!f.target.n_space.contains(f.m.apply(f.source.n_space.basis().row(r)))) n_ok = false;
    rep.require("maps N-part into N-part", n_ok);
    bool z_ok = true;
    for (std::size_t r = 0; r < f.source.zero_space.dim(); ++r)
        if (!f.target.zero_space.contains(f.m.apply(f.source.zero_space.basis().row(r)))) z_ok = false;
    rep.require("maps 0-part into 0-part", z_ok);
    return rep;
}

/// The reduced algebra A_N / A_0 with its quotient data (proj/sect are in
/// n-coordinates).
template <ScalarField K>
struct ReducedAlgebra {
    Algebra<K> alg;
    Mat<K> proj, sect;
};

template <ScalarField K>
ReducedAlgebra<K> reduce(const Pair<K>& p) {
    auto q = quotient_algebra(p.n_alg, p.zero,
                              p.n_alg.label().empty() ? std::string{} : p.n_alg.label() + "_red");
    return {std::move(q.alg), std::move(q.proj), std::move(q.sect)};
}

template <ScalarField K>
ReducedAlgebra<K> reduce(const Triple<K>& t) {
    return reduce(to_pair(t));
}

/// The induced morphism of reduced algebras.
template <ScalarField K>
AlgebraHom<K> reduce_hom(const TripleHom<K>& f, const ReducedAlgebra<K>& rs,
                         const ReducedAlgebra<K>& rt) {
    // red-coords -> n-coords -> tot -> f -> tot -> n-coords -> red-coords
    Mat<K> n_to_red = rt.proj * f.target.n_space.coord_matrix() * f.m * f.source.n_incl;
    return {rs.alg, rt.alg, n_to_red * rs.sect};
}

template <ScalarField K>
AlgebraHom<K> reduce_hom(const TripleHom<K>& f) {
    return reduce_hom(f, reduce(f.source), reduce(f.target));
}

/// The canonical (A_tot, A_red)-bimodule A_tot / A_0: cyclic for the left
/// action, with the reduced algebra acting by right multiplication.
template <ScalarField K>
struct CanonicalBimodule {
    PlainBimodule<K> bim;
    Mat<K> proj, sect;  // tot-coords <-> quotient coords
    ReducedAlgebra<K> red;
};

template <ScalarField K>
CanonicalBimodule<K> canonical_bimodule(const Triple<K>& t) {
    CanonicalBimodule<K> out;
    out.red = reduce(t);
    auto q = quotient_map(t.zero_space);
    out.proj = q.proj;
    out.sect = q.sect;
    out.bim.left = t.tot;
    out.bim.right = out.red.alg;
    out.bim.dim = q.proj.rows();
    for (std::size_t i = 0; i < t.tot.dim(); ++i)
        out.bim.lact.push_back(q.proj * t.tot.left_mult(t.tot.basis_vector(i)) * q.sect);
    for (std::size_t j = 0; j < out.red.alg.dim(); ++j) {
        Vec<K> lift = t.n_incl.apply(out.red.sect.col(j));
        out.bim.ract.push_back(q.proj * t.tot.right_mult(lift) * q.sect);
    }
    return out;
}

/// Machine check that the endomorphisms of the canonical left module are the
/// opposite of N(A_0)/A_0, acting by right multiplication.
template <ScalarField K>
Report verify_canonical_endomorphisms(const Triple<K>& t) {
    Report rep;
    rep.subject = "canonical bimodule endomorphisms";
    auto cb = canonical_bimodule(t);

    auto full_n = idealizer(t.tot, t.zero_space);
    auto ind = induced_algebra(t.tot, full_n);
    std::vector<Vec<K>> zrows;
    for (std::size_t r = 0; r < t.zero_space.dim(); ++r)
        zrows.push_back(full_n.coords(t.zero_space.basis().row(r)));
    auto nq = quotient_algebra(ind.alg, Subspace<K>::span(full_n.dim(), zrows));

    auto endos = endomorphism_algebra(cb.bim.lact, cb.bim.dim);

    rep.require("dimensions agree",
                endos.alg.dim() == nq.alg.dim(),
                "End dim " + std::to_string(endos.alg.dim()) + " vs N/A_0 dim " +
                    std::to_string(nq.alg.dim()));

    // theta: N(A_0)/A_0 -> End, [f] -> ([x] -> [x f])
    std::vector<Mat<K>> theta;
    for (std::size_t j = 0; j < nq.alg.dim(); ++j) {
        Vec<K> lift = ind.incl.apply(nq.sect.col(j));
        theta.push_back(cb.proj * t.tot.right_mult(lift) * cb.sect);
    }

    bool in_commutant = true;
    for (const auto& th : theta)
        if (!endos.span.contains(vectorize(th))) in_commutant = false;
    rep.require("right multiplications commute with the left action", in_commutant);

    Mat<K> stacked(nq.alg.dim(), cb.bim.dim * cb.bim.dim);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        Vec<K> v = vectorize(theta[j]);
        for (std::size_t c = 0; c < v.size(); ++c) stacked.at(j, c) = v[c];
    }
    rep.require("the map is injective", rank(stacked) == nq.alg.dim());

    bool anti = true;
    for (std::size_t i = 0; i < nq.alg.dim() && anti; ++i)
        for (std::size_t j = 0; j < nq.alg.dim(); ++j) {
            Mat<K> lhs(cb.bim.dim, cb.bim.dim);
            Vec<K> prod = nq.alg.basis_product(i, j);
            for (std::size_t k = 0; k < nq.alg.dim(); ++k)
                if (!prod[k].is_zero()) lhs = lhs + prod[k] * theta[k];
            if (lhs != theta[j] * theta[i]) {
                anti = false;
                break;
            }
        }
    rep.require("the map is an antihomomorphism onto the opposite algebra", anti);
    if (nq.alg.dim() > 0) {
        Mat<K> unit_img(cb.bim.dim, cb.bim.dim);
        for (std::size_t k = 0; k < nq.alg.dim(); ++k)
            if (!nq.alg.unit()[k].is_zero()) unit_img = unit_img + nq.alg.unit()[k] * theta[k];
        rep.require("unit acts as identity", unit_img == Mat<K>::identity(cb.bim.dim));
    }
    return rep;
}

}  // namespace coiso
