#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coiso/cbimodule.hpp"
#include "coiso/random_instances.hpp"
#include "coiso/triple.hpp"

namespace coiso {

/// Formal deformations truncated at order N: an algebra over the base field
/// with a designated central element lambda satisfying lambda^N = 0. All
/// order-N statements about quotients by lambda-multiples become plain
/// linear algebra.
template <ScalarField K>
struct DeformedAlgebra {
    Algebra<K> alg;
    Vec<K> lambda;
    int order = 2;
};

template <ScalarField K>
struct DeformedTriple {
    Triple<K> triple;
    Vec<K> lambda;  // in tot coordinates
    int order = 2;
};

template <ScalarField K>
struct DeformedPair {
    Pair<K> pair;
    Vec<K> lambda;  // in N coordinates
    int order = 2;
};

/// Bimodule over deformed pairs; the underlying coisotropic bimodule lives
/// over the pair-embedded triples.
template <ScalarField K>
struct DeformedCBim {
    DeformedPair<K> left, right;
    CoisoBimodule<K> bim;
};

template <ScalarField K>
Report validate_deformed_algebra(const DeformedAlgebra<K>& d) {
    Report rep;
    rep.subject = "deformed algebra " + d.alg.label();
    rep.merge("", validate_algebra(d.alg));
    Mat<K> l = d.alg.left_mult(d.lambda);
    rep.require("lambda is central", l == d.alg.right_mult(d.lambda));
    Vec<K> power = d.alg.unit();
    for (int i = 0; i < d.order; ++i) power = d.alg.mul(d.lambda, power);
    rep.require("lambda^N = 0", vec_is_zero(power));
    Mat<K> op = Mat<K>::identity(d.alg.dim());
    for (int i = 0; i < d.order; ++i) op = l * op;
    rep.require("lambda-multiplication nilpotent of index <= N", op.is_zero());
    return rep;
}

template <ScalarField K>
bool lambda_stable(const Mat<K>& lambda_op, const Subspace<K>& s) {
    for (std::size_t r = 0; r < s.dim(); ++r)
        if (!s.contains(lambda_op.apply(s.basis().row(r)))) return false;
    return true;
}

template <ScalarField K>
Report validate_deformed_triple(const DeformedTriple<K>& t) {
    Report rep = validate_deformed_algebra(DeformedAlgebra<K>{t.triple.tot, t.lambda, t.order});
    rep.subject = "deformed triple";
    rep.merge("triple: ", validate_triple(t.triple));
    Mat<K> l = t.triple.tot.left_mult(t.lambda);
    rep.require("N-part is lambda-stable", lambda_stable(l, t.triple.n_space));
    rep.require("0-part is lambda-stable", lambda_stable(l, t.triple.zero_space));
    return rep;
}

template <ScalarField K>
Report validate_deformed_pair(const DeformedPair<K>& p) {
    Report rep = validate_deformed_algebra(DeformedAlgebra<K>{p.pair.n_alg, p.lambda, p.order});
    rep.subject = "deformed pair";
    rep.merge("pair: ", validate_pair(p.pair));
    rep.require("0-part is lambda-stable",
                lambda_stable(p.pair.n_alg.left_mult(p.lambda), p.pair.zero));
    return rep;
}

/// lambda must land in the N-part for the pair picture to exist.
template <ScalarField K>
DeformedPair<K> deformed_pair(const DeformedTriple<K>& t) {
    if (!t.triple.n_space.contains(t.lambda))
        throw std::invalid_argument("lambda does not lie in the N-part");
    return {to_pair(t.triple), t.triple.n_space.coords(t.lambda), t.order};
}

template <ScalarField K>
Triple<K> pair_embed(const DeformedPair<K>& p) {
    return pair_triple(p.pair);
}

template <ScalarField K>
Report validate_deformed_cbim(const DeformedCBim<K>& e) {
    Report rep;
    rep.subject = "deformed coisotropic bimodule";
    rep.merge("", validate_cbim(e.bim));
    Mat<K> ll = e.bim.nmod.lact_of(e.left.lambda);
    Mat<K> lr = e.bim.nmod.ract_of(e.right.lambda);
    rep.require("lambda acts the same through both units", ll == lr);
    Mat<K> op = Mat<K>::identity(e.bim.nmod.dim);
    for (int i = 0; i < e.left.order; ++i) op = ll * op;
    rep.require("lambda action nilpotent", op.is_zero());
    rep.require("0-part is lambda-stable", lambda_stable(ll, e.bim.zero));
    return rep;
}

// ---------------------------------------------------------------------------
// classical limit functors
// ---------------------------------------------------------------------------

template <ScalarField K>
struct ClAlgebra {
    Algebra<K> alg;
    Mat<K> proj, sect;
};

/// cl(A) = A / lambda·A.
template <ScalarField K>
ClAlgebra<K> cl_algebra(const Algebra<K>& a, const Vec<K>& lambda, std::string label = {}) {
    auto ideal = column_space(a.left_mult(lambda));
    auto q = quotient_algebra(a, ideal,
                              label.empty() ? (a.label().empty() ? std::string{} : "cl(" + a.label() + ")")
                                            : std::move(label));
    return {q.alg, q.proj, q.sect};
}

template <ScalarField K>
struct ClPair {
    Pair<K> pair;
    Mat<K> proj, sect;  // N coords <-> cl coords
};

/// cl of a pair: (A_N/λA_N, image of A_0).
template <ScalarField K>
ClPair<K> cl_pair(const DeformedPair<K>& p) {
    auto ca = cl_algebra(p.pair.n_alg, p.lambda);
    return {{ca.alg, image(ca.proj, p.pair.zero)}, ca.proj, ca.sect};
}

template <ScalarField K>
struct ClTriple {
    Triple<K> triple;
    Mat<K> proj, sect;  // tot coords <-> cl(tot) coords
};

/// cl of a triple: the tot-quotient with the images of the N- and 0-parts.
template <ScalarField K>
ClTriple<K> cl_triple(const DeformedTriple<K>& t) {
    auto ca = cl_algebra(t.triple.tot, t.lambda);
    auto n_img = image(ca.proj, t.triple.n_space);
    auto z_img = image(ca.proj, t.triple.zero_space);
    return {Triple<K>::make(ca.alg, n_img, z_img), ca.proj, ca.sect};
}

/// The induced morphism on classical limits: cl(f)(cl(a)) = cl(f(a)).
template <ScalarField K>
struct ClHom {
    TripleHom<K> hom;
    bool well_defined = false;
};

template <ScalarField K>
ClHom<K> cl_triple_hom(const TripleHom<K>& f, const ClTriple<K>& cl_src, const ClTriple<K>& cl_dst) {
    Mat<K> m = cl_dst.proj * f.m * cl_src.sect;
    bool wd = cl_dst.proj * f.m == m * cl_src.proj;
    return {TripleHom<K>{cl_src.triple, cl_dst.triple, m}, wd};
}

/// Classical limit of a plain bimodule over deformed algebras (the lambda
/// operators through either side must agree).
template <ScalarField K>
struct ClBim {
    PlainBimodule<K> bim;
    Mat<K> proj, sect;
};

template <ScalarField K>
ClBim<K> cl_plain(const PlainBimodule<K>& e, const Vec<K>& lambda_left, const ClAlgebra<K>& cl_left,
                  const ClAlgebra<K>& cl_right) {
    Mat<K> op = e.lact_of(lambda_left);
    auto q = quotient_map(column_space(op));
    ClBim<K> out;
    out.proj = q.proj;
    out.sect = q.sect;
    out.bim.left = cl_left.alg;
    out.bim.right = cl_right.alg;
    out.bim.dim = q.proj.rows();
    for (std::size_t k = 0; k < cl_left.alg.dim(); ++k)
        out.bim.lact.push_back(q.proj * e.lact_of(cl_left.sect.col(k)) * q.sect);
    for (std::size_t k = 0; k < cl_right.alg.dim(); ++k)
        out.bim.ract.push_back(q.proj * e.ract_of(cl_right.sect.col(k)) * q.sect);
    return out;
}

/// Classical limit of a coisotropic bimodule over deformed pairs: the
/// N-component quotient with the image 0-part; the coisotropic conditions
/// are re-verified by the caller through validate_cbim.
template <ScalarField K>
struct ClCBim {
    DeformedPair<K> src_left, src_right;  // before the limit
    ClPair<K> cl_left, cl_right;
    CoisoBimodule<K> bim;  // over the pair-embedded classical-limit triples
    Mat<K> proj, sect;     // nmod coords <-> cl coords
};

template <ScalarField K>
ClCBim<K> cl_cbim(const DeformedCBim<K>& e, const ClPair<K>& cl_left, const ClPair<K>& cl_right) {
    ClCBim<K> out;
    out.src_left = e.left;
    out.src_right = e.right;
    out.cl_left = cl_left;
    out.cl_right = cl_right;

    Mat<K> op = e.bim.nmod.lact_of(e.left.lambda);
    auto q = quotient_map(column_space(op));
    out.proj = q.proj;
    out.sect = q.sect;

    PlainBimodule<K> nmod;
    nmod.left = cl_left.pair.n_alg;
    nmod.right = cl_right.pair.n_alg;
    nmod.dim = q.proj.rows();
    for (std::size_t k = 0; k < cl_left.pair.n_alg.dim(); ++k)
        nmod.lact.push_back(q.proj * e.bim.nmod.lact_of(cl_left.sect.col(k)) * q.sect);
    for (std::size_t k = 0; k < cl_right.pair.n_alg.dim(); ++k)
        nmod.ract.push_back(q.proj * e.bim.nmod.ract_of(cl_right.sect.col(k)) * q.sect);

    out.bim.left = pair_triple(cl_left.pair);
    out.bim.right = pair_triple(cl_right.pair);
    out.bim.tot = nmod;
    out.bim.nmod = nmod;
    out.bim.zero = image(q.proj, e.bim.zero);
    out.bim.iota = Mat<K>::identity(nmod.dim);
    return out;
}

template <ScalarField K>
Mat<K> cl_cbim_hom(const CHom<K>& phi, const ClCBim<K>& cl_e, const ClCBim<K>& cl_f) {
    return cl_f.proj * phi.n * cl_e.sect;
}

/// cl(y) ⊗ cl(x) ↦ cl(y ⊗ x): the composition isomorphism of the classical
/// limit, with well-definedness and invertibility certificates.
template <ScalarField K>
struct ClTensorIso {
    CTensor<K> fe;                 // F ⊗ E before the limit
    ClCBim<K> cl_f, cl_e, cl_fe;
    BalancedTensor<K> dom;         // cl(F) ⊗_{cl(B)} cl(E)
    Mat<K> map, inv;
    Report wd;
};

template <ScalarField K>
ClTensorIso<K> cl_tensor_iso(const DeformedCBim<K>& f, const DeformedCBim<K>& e,
                             const ClPair<K>& cl_c, const ClPair<K>& cl_b, const ClPair<K>& cl_a) {
    ClTensorIso<K> out;
    out.fe = ctensor(f.bim, e.bim);
    out.cl_f = cl_cbim(f, cl_c, cl_b);
    out.cl_e = cl_cbim(e, cl_b, cl_a);
    DeformedCBim<K> fe_def{f.left, e.right, out.fe.bim};
    out.cl_fe = cl_cbim(fe_def, cl_c, cl_a);
    out.dom = balanced_tensor(out.cl_f.bim.nmod, out.cl_e.bim.nmod);
    out.wd.subject = "classical limit composition iso";

    const std::size_t fr = out.cl_f.bim.nmod.dim, er = out.cl_e.bim.nmod.dim;
    Mat<K> plain(out.cl_fe.bim.nmod.dim, fr * er);
    for (std::size_t y = 0; y < fr; ++y)
        for (std::size_t x = 0; x < er; ++x) {
            Vec<K> w = vec_outer(out.cl_f.sect.col(y), out.cl_e.sect.col(x));
            plain.set_col(y * er + x, out.cl_fe.proj.apply(out.fe.n_t.proj.apply(w)));
        }

    // lambda-multiples of either factor must die in the target
    bool kills = true;
    Mat<K> lam_f = f.bim.nmod.lact_of(f.left.lambda);
    auto lam_f_img = column_space(lam_f);
    for (std::size_t r = 0; r < lam_f_img.dim() && kills; ++r)
        for (std::size_t x = 0; x < e.bim.nmod.dim; ++x) {
            Vec<K> ex(e.bim.nmod.dim);
            ex[x] = K(1);
            Vec<K> w = vec_outer(lam_f_img.basis().row(r), ex);
            if (!vec_is_zero(out.cl_fe.proj.apply(out.fe.n_t.proj.apply(w)))) {
                kills = false;
                break;
            }
        }
    out.wd.require("kills lambda-multiples on the left factor", kills);

    out.wd.require("descends to the balanced quotient",
                   plain * out.dom.sect * out.dom.proj == plain);
    out.map = plain * out.dom.sect;
    auto inv = inverse(out.map);
    out.wd.require("invertible", inv.has_value());
    if (inv) out.inv = *inv;

    // preserves the 0-parts: the domain 0-part maps onto the target 0-part
    RrefBuilder<K> zb(out.dom.bim.dim);
    for (std::size_t y = 0; y < fr; ++y) {
        Vec<K> ey(fr);
        ey[y] = K(1);
        for (std::size_t r = 0; r < out.cl_e.bim.zero.dim(); ++r)
            zb.add(out.dom.proj.apply(vec_outer(ey, out.cl_e.bim.zero.basis().row(r))));
    }
    for (std::size_t r = 0; r < out.cl_f.bim.zero.dim(); ++r) {
        Vec<K> zy = out.cl_f.bim.zero.basis().row(r);
        for (std::size_t x = 0; x < er; ++x) {
            Vec<K> ex(er);
            ex[x] = K(1);
            zb.add(out.dom.proj.apply(vec_outer(zy, ex)));
        }
    }
    auto dom_zero = Subspace<K>::span_rows(zb.basis());
    out.wd.require("0-parts correspond", image(out.map, dom_zero) == out.cl_fe.bim.zero);
    return out;
}

// ---------------------------------------------------------------------------
// deformation construction and random deformed instances
// ---------------------------------------------------------------------------

/// A ⊕ λA at order 2, with first-order term the Hochschild coboundary of a
/// linear map θ with θ(1) = 0: a·θ(b) − θ(ab) + θ(a)·b. Associative and
/// unital for every θ; λ is central and λ² = 0.
template <ScalarField K>
DeformedAlgebra<K> deform_order2(const Algebra<K>& base, const Mat<K>& theta_raw,
                                 std::string label = {}) {
    const std::size_t d = base.dim();
    // force θ(1) = 0 along a coordinate where the unit is supported
    std::size_t i0 = 0;
    while (i0 < d && base.unit()[i0].is_zero()) ++i0;
    if (i0 == d) throw std::invalid_argument("deform_order2: algebra has no unit support");
    // theta(x) = theta_raw(x) - rho(x)·theta_raw(1) with rho(x) = x_{i0}/u_{i0}
    Mat<K> theta = theta_raw;
    Vec<K> t_unit = theta_raw.apply(base.unit());
    for (std::size_t i = 0; i < d; ++i)
        theta.at(i, i0) = theta_raw.at(i, i0) - t_unit[i] / base.unit()[i0];

    const std::size_t m = 2 * d;
    std::vector<K> c(m * m * m);
    auto cochain = [&](std::size_t i, std::size_t j) {
        Vec<K> ei = base.basis_vector(i), ej = base.basis_vector(j);
        Vec<K> v = base.mul(ei, theta.col(j));
        vec_add_scaled(v, -K(1), theta.apply(base.basis_product(i, j)));
        vec_add_scaled(v, K(1), base.mul(theta.col(i), ej));
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> base_prod = base.basis_product(i, j);
            Vec<K> c1 = cochain(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                if (!base_prod[k].is_zero()) {
                    c[(i * m + j) * m + k] = base_prod[k];             // e_i e_j
                    c[((d + i) * m + j) * m + (d + k)] = base_prod[k]; // (λe_i) e_j
                    c[(i * m + (d + j)) * m + (d + k)] = base_prod[k]; // e_i (λe_j)
                }
                if (!c1[k].is_zero()) c[(i * m + j) * m + (d + k)] = c1[k];
            }
        }
    Vec<K> unit(m);
    for (std::size_t i = 0; i < d; ++i) unit[i] = base.unit()[i];
    Vec<K> lambda(m);
    for (std::size_t i = 0; i < d; ++i) lambda[d + i] = base.unit()[i];
    if (label.empty())
        label = base.label().empty() ? std::string("deformed") : base.label() + "[lambda]";
    return {Algebra<K>(m, std::move(c), std::move(unit), std::move(label)), std::move(lambda), 2};
}

template <ScalarField K>
DeformedAlgebra<K> random_deformed_algebra(Rng& rng, std::size_t max_base_dim) {
    auto pool = algebra_pool<K>(max_base_dim);
    const Algebra<K> base = pool[rng.below(pool.size())];
    Mat<K> theta(base.dim(), base.dim());
    for (std::size_t i = 0; i < base.dim(); ++i)
        for (std::size_t j = 0; j < base.dim(); ++j) theta.at(i, j) = rng.scalar<K>(-1, 1);
    return deform_order2(base, theta);
}

/// Random deformed pair: a Dirac pair, a trivial pair, or an un-reduce pair
/// of a random order-2 deformation. Left ideals of a deformed algebra are
/// automatically lambda-stable since lambda is central.
template <ScalarField K>
DeformedPair<K> random_deformed_pair(Rng& rng, std::size_t max_dim) {
    auto da = random_deformed_algebra<K>(rng, max_dim / 2 > 0 ? max_dim / 2 : 1);
    const Algebra<K>& a = da.alg;
    switch (rng.below(3)) {
        case 0:
            return {{a, Subspace<K>::full(a.dim())}, da.lambda, da.order};
        case 1:
            return {{a, Subspace<K>::zero(a.dim())}, da.lambda, da.order};
        default: {
            auto j = two_sided_ideal(a, {rng.vec<K>(a.dim())});
            return {{a, j}, da.lambda, da.order};
        }
    }
}

/// Random bimodule over deformed pairs: the free construction quotiented by
/// the lambda-imbalance (so both units act the same) plus random generators.
template <ScalarField K>
DeformedCBim<K> random_deformed_cbim(Rng& rng, const DeformedPair<K>& b, const DeformedPair<K>& a,
                                     std::size_t max_dim) {
    Triple<K> tb = pair_embed(b), ta = pair_embed(a);
    auto free_n = PlainBimodule<K>::outer(b.pair.n_alg, a.pair.n_alg);
    std::vector<Vec<K>> gens;
    Mat<K> lam_l = free_n.lact_of(b.lambda);
    Mat<K> lam_r = free_n.ract_of(a.lambda);
    for (std::size_t x = 0; x < free_n.dim; ++x) {
        Vec<K> ex(free_n.dim);
        ex[x] = K(1);
        Vec<K> w = lam_l.apply(ex);
        vec_add_scaled(w, -K(1), lam_r.apply(ex));
        gens.push_back(std::move(w));
    }
    return {b, a, random_cbim(rng, tb, ta, max_dim, gens)};
}

}  // namespace coiso
