#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coiso/algebra.hpp"
#include "coiso/matrix.hpp"
#include "coiso/report.hpp"
#include "coiso/subspace.hpp"

namespace coiso {

/// A (B, A)-bimodule given by one action matrix per basis element of each
/// algebra. Conventions: coordinates are column vectors; lact[i] is the
/// matrix of x ↦ e_i·x, ract[j] of x ↦ x·e_j, so ract is a representation of
/// the opposite algebra.
template <ScalarField K>
struct PlainBimodule {
    Algebra<K> left, right;
    std::size_t dim = 0;
    std::vector<Mat<K>> lact, ract;

    Mat<K> lact_of(const Vec<K>& b) const {
        Mat<K> m(dim, dim);
        for (std::size_t i = 0; i < left.dim(); ++i)
            if (!b[i].is_zero()) m = m + b[i] * lact[i];
        return m;
    }
    Mat<K> ract_of(const Vec<K>& a) const {
        Mat<K> m(dim, dim);
        for (std::size_t j = 0; j < right.dim(); ++j)
            if (!a[j].is_zero()) m = m + a[j] * ract[j];
        return m;
    }
    Vec<K> lmul(const Vec<K>& b, const Vec<K>& x) const { return lact_of(b).apply(x); }
    Vec<K> rmul(const Vec<K>& x, const Vec<K>& a) const { return ract_of(a).apply(x); }

    /// A as a bimodule over itself.
    static PlainBimodule regular(const Algebra<K>& a) {
        PlainBimodule m;
        m.left = a;
        m.right = a;
        m.dim = a.dim();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            m.lact.push_back(a.left_mult(a.basis_vector(i)));
            m.ract.push_back(a.right_mult(a.basis_vector(i)));
        }
        return m;
    }

    static PlainBimodule zero_module(const Algebra<K>& b, const Algebra<K>& a) {
        PlainBimodule m;
        m.left = b;
        m.right = a;
        m.dim = 0;
        m.lact.assign(b.dim(), Mat<K>(0, 0));
        m.ract.assign(a.dim(), Mat<K>(0, 0));
        return m;
    }

    /// Free bimodule B ⊗_k A with outer actions, flat index b·adim + a.
    static PlainBimodule outer(const Algebra<K>& b, const Algebra<K>& a) {
        PlainBimodule m;
        m.left = b;
        m.right = a;
        m.dim = b.dim() * a.dim();
        for (std::size_t i = 0; i < b.dim(); ++i) {
            Mat<K> l = kron(b.left_mult(b.basis_vector(i)), Mat<K>::identity(a.dim()));
            m.lact.push_back(std::move(l));
        }
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Mat<K> r = kron(Mat<K>::identity(b.dim()), a.right_mult(a.basis_vector(j)));
            m.ract.push_back(std::move(r));
        }
        return m;
    }

    friend bool operator==(const PlainBimodule& x, const PlainBimodule& y) {
        return x.left == y.left && x.right == y.right && x.dim == y.dim && x.lact == y.lact &&
               x.ract == y.ract;
    }
};

template <ScalarField K>
Report validate_bimodule(const PlainBimodule<K>& e) {
    Report rep;
    rep.subject = "bimodule";
    if (e.lact.size() != e.left.dim() || e.ract.size() != e.right.dim()) {
        rep.require("action tables sized", false, "wrong number of action matrices");
        return rep;
    }
    bool lrep = true;
    if (e.left.dim() > 0 && e.lact_of(e.left.unit()) != Mat<K>::identity(e.dim)) lrep = false;
    for (std::size_t i = 0; i < e.left.dim() && lrep; ++i)
        for (std::size_t j = 0; j < e.left.dim(); ++j)
            if (e.lact_of(e.left.basis_product(i, j)) != e.lact[i] * e.lact[j]) {
                lrep = false;
                break;
            }
    rep.require("left action is a unital representation", lrep);

    bool rrep = true;
    if (e.right.dim() > 0 && e.ract_of(e.right.unit()) != Mat<K>::identity(e.dim)) rrep = false;
    for (std::size_t i = 0; i < e.right.dim() && rrep; ++i)
        for (std::size_t j = 0; j < e.right.dim(); ++j)
            if (e.ract_of(e.right.basis_product(i, j)) != e.ract[j] * e.ract[i]) {
                rrep = false;
                break;
            }
    rep.require("right action is a unital antirepresentation", rrep);

    bool comm = true;
    for (std::size_t i = 0; i < e.left.dim() && comm; ++i)
        for (std::size_t j = 0; j < e.right.dim(); ++j)
            if (e.lact[i] * e.ract[j] != e.ract[j] * e.lact[i]) {
                comm = false;
                break;
            }
    rep.require("left and right actions commute", comm);
    return rep;
}

/// A sub-bimodule test: stable under all actions.
template <ScalarField K>
bool is_sub_bimodule(const PlainBimodule<K>& e, const Subspace<K>& s) {
    for (const auto& m : e.lact)
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(m.apply(s.basis().row(r)))) return false;
    for (const auto& m : e.ract)
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(m.apply(s.basis().row(r)))) return false;
    return true;
}

/// Smallest sub-bimodule containing the generators.
template <ScalarField K>
Subspace<K> sub_bimodule(const PlainBimodule<K>& e, const std::vector<Vec<K>>& gens) {
    RrefBuilder<K> b(e.dim);
    for (const auto& g : gens) b.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        Mat<K> cur = b.basis();
        for (std::size_t r = 0; r < cur.rows(); ++r) {
            for (const auto& m : e.lact)
                if (b.add(m.apply(cur.row(r)))) grew = true;
            for (const auto& m : e.ract)
                if (b.add(m.apply(cur.row(r)))) grew = true;
        }
    }
    return Subspace<K>::span_rows(b.basis());
}

/// Quotient bimodule by a sub-bimodule, with the quotient data retained.
template <ScalarField K>
struct QuotientBimodule {
    PlainBimodule<K> bim;
    Mat<K> proj, sect;
};

template <ScalarField K>
QuotientBimodule<K> quotient_bimodule(const PlainBimodule<K>& e, const Subspace<K>& s) {
    auto q = quotient_map(s);
    QuotientBimodule<K> out;
    out.bim.left = e.left;
    out.bim.right = e.right;
    out.bim.dim = q.proj.rows();
    for (const auto& m : e.lact) out.bim.lact.push_back(q.proj * m * q.sect);
    for (const auto& m : e.ract) out.bim.ract.push_back(q.proj * m * q.sect);
    out.proj = q.proj;
    out.sect = q.sect;
    return out;
}

/// Balanced tensor product F ⊗_B E as a quotient of the flat tensor space by
/// the span of the balancing vectors y·b ⊗ x − y ⊗ b·x.
template <ScalarField K>
struct BalancedTensor {
    PlainBimodule<K> f, e;    // the factors
    PlainBimodule<K> bim;     // quotient bimodule over (f.left, e.right)
    Mat<K> proj, sect;        // flat (f.dim·e.dim) <-> quotient coordinates
};

template <ScalarField K>
BalancedTensor<K> balanced_tensor(const PlainBimodule<K>& f, const PlainBimodule<K>& e) {
    if (!(f.right == e.left)) throw std::invalid_argument("balanced_tensor: middle algebra mismatch");
    const std::size_t fd = f.dim, ed = e.dim, plain = fd * ed;
    RrefBuilder<K> bal(plain);
    for (std::size_t s = 0; s < f.right.dim(); ++s) {
        const Mat<K>& rf = f.ract[s];
        const Mat<K>& le = e.lact[s];
        for (std::size_t r = 0; r < fd; ++r)
            for (std::size_t t = 0; t < ed; ++t) {
                Vec<K> w(plain);
                for (std::size_t r2 = 0; r2 < fd; ++r2) {
                    const K& c = rf.at(r2, r);
                    if (!c.is_zero()) w[r2 * ed + t] += c;
                }
                for (std::size_t t2 = 0; t2 < ed; ++t2) {
                    const K& c = le.at(t2, t);
                    if (!c.is_zero()) w[r * ed + t2] -= c;
                }
                bal.add(std::move(w));
            }
    }
    auto q = quotient_map(Subspace<K>::span_rows(bal.basis()));

    BalancedTensor<K> out;
    out.f = f;
    out.e = e;
    out.proj = q.proj;
    out.sect = q.sect;
    out.bim.left = f.left;
    out.bim.right = e.right;
    out.bim.dim = q.proj.rows();
    for (std::size_t i = 0; i < f.left.dim(); ++i) {
        Mat<K> m(out.bim.dim, out.bim.dim);
        for (std::size_t k = 0; k < out.bim.dim; ++k)
            m.set_col(k, q.proj.apply(apply_kron_left(f.lact[i], q.sect.col(k), fd, ed)));
        out.bim.lact.push_back(std::move(m));
    }
    for (std::size_t j = 0; j < e.right.dim(); ++j) {
        Mat<K> m(out.bim.dim, out.bim.dim);
        for (std::size_t k = 0; k < out.bim.dim; ++k)
            m.set_col(k, q.proj.apply(apply_kron_right(e.ract[j], q.sect.col(k), fd, ed)));
        out.bim.ract.push_back(std::move(m));
    }
    return out;
}

/// ψ ⊗ φ on balanced quotients, for bimodule morphisms ψ: src.f → dst.f and
/// φ: src.e → dst.e.
template <ScalarField K>
Mat<K> tensor_hom(const Mat<K>& psi, const Mat<K>& phi, const BalancedTensor<K>& src,
                  const BalancedTensor<K>& dst) {
    Mat<K> m(dst.bim.dim, src.bim.dim);
    for (std::size_t k = 0; k < src.bim.dim; ++k)
        m.set_col(k, dst.proj.apply(apply_kron(psi, phi, src.sect.col(k), src.f.dim, src.e.dim)));
    return m;
}

/// (z ⊗ y) ⊗ x ↦ z ⊗ (y ⊗ x). gf_e must be the tensor (G⊗F)⊗E built from
/// gf.bim and E, and g_fe the tensor G⊗(F⊗E) built from G and fe.bim.
template <ScalarField K>
Mat<K> asso_fwd(const BalancedTensor<K>& gf_e, const BalancedTensor<K>& gf,
                const BalancedTensor<K>& g_fe, const BalancedTensor<K>& fe) {
    const std::size_t gd = gf.f.dim, fd = gf.e.dim, ed = gf_e.e.dim;
    Mat<K> m(g_fe.bim.dim, gf_e.bim.dim);
    for (std::size_t k = 0; k < gf_e.bim.dim; ++k) {
        Vec<K> v = gf_e.sect.col(k);                       // (gf-quot, e) flat
        Vec<K> v1 = apply_kron_left(gf.sect, v, gf.bim.dim, ed);  // (g, f, e) flat
        Vec<K> v2 = apply_kron_right(fe.proj, v1, gd, fd * ed);   // (g, fe-quot)
        m.set_col(k, g_fe.proj.apply(v2));
    }
    return m;
}

/// Inverse regrouping z ⊗ (y ⊗ x) ↦ (z ⊗ y) ⊗ x.
template <ScalarField K>
Mat<K> asso_bwd(const BalancedTensor<K>& gf_e, const BalancedTensor<K>& gf,
                const BalancedTensor<K>& g_fe, const BalancedTensor<K>& fe) {
    const std::size_t gd = gf.f.dim, fd = gf.e.dim, ed = gf_e.e.dim;
    Mat<K> m(gf_e.bim.dim, g_fe.bim.dim);
    for (std::size_t k = 0; k < g_fe.bim.dim; ++k) {
        Vec<K> v = g_fe.sect.col(k);                        // (g, fe-quot)
        Vec<K> v1 = apply_kron_right(fe.sect, v, gd, fe.bim.dim);  // (g, f, e) flat
        Vec<K> v2 = apply_kron_left(gf.proj, v1, gd * fd, ed);     // (gf-quot, e)
        m.set_col(k, gf_e.proj.apply(v2));
    }
    return m;
}

/// b ⊗ x ↦ b·x for t = regular(B) ⊗_B E, landing in E.
template <ScalarField K>
Mat<K> left_unitor(const BalancedTensor<K>& t) {
    const std::size_t bd = t.f.dim, ed = t.e.dim;
    Mat<K> m(ed, t.bim.dim);
    for (std::size_t k = 0; k < t.bim.dim; ++k) {
        Vec<K> v = t.sect.col(k);
        Vec<K> out(ed);
        for (std::size_t i = 0; i < bd; ++i) {
            Vec<K> slice(v.begin() + i * ed, v.begin() + (i + 1) * ed);
            if (!vec_is_zero(slice)) vec_add_scaled(out, K(1), t.e.lact[i].apply(slice));
        }
        m.set_col(k, out);
    }
    return m;
}

/// x ⊗ a ↦ x·a for t = E ⊗_A regular(A), landing in E.
template <ScalarField K>
Mat<K> right_unitor(const BalancedTensor<K>& t) {
    const std::size_t ed = t.f.dim, ad = t.e.dim;
    Mat<K> m(ed, t.bim.dim);
    for (std::size_t k = 0; k < t.bim.dim; ++k) {
        Vec<K> v = t.sect.col(k);
        Vec<K> out(ed);
        for (std::size_t j = 0; j < ad; ++j) {
            Vec<K> slice(ed);
            for (std::size_t r = 0; r < ed; ++r) slice[r] = v[r * ad + j];
            if (!vec_is_zero(slice)) vec_add_scaled(out, K(1), t.f.ract[j].apply(slice));
        }
        m.set_col(k, out);
    }
    return m;
}

/// Same module with the left action precomposed with eta (eta: new left
/// algebra -> old left algebra).
template <ScalarField K>
PlainBimodule<K> twist_left(const PlainBimodule<K>& e, const AlgebraHom<K>& eta) {
    if (!(eta.target == e.left)) throw std::invalid_argument("twist_left: hom target mismatch");
    PlainBimodule<K> out = e;
    out.left = eta.source;
    out.lact.clear();
    for (std::size_t i = 0; i < eta.source.dim(); ++i) out.lact.push_back(e.lact_of(eta.m.col(i)));
    return out;
}

template <ScalarField K>
PlainBimodule<K> twist_right(const PlainBimodule<K>& e, const AlgebraHom<K>& eta) {
    if (!(eta.target == e.right)) throw std::invalid_argument("twist_right: hom target mismatch");
    PlainBimodule<K> out = e;
    out.right = eta.source;
    out.ract.clear();
    for (std::size_t j = 0; j < eta.source.dim(); ++j) out.ract.push_back(e.ract_of(eta.m.col(j)));
    return out;
}

/// Is phi: E -> F a morphism of bimodules (commutes with all actions)?
template <ScalarField K>
bool is_bimodule_hom(const Mat<K>& phi, const PlainBimodule<K>& e, const PlainBimodule<K>& f) {
    for (std::size_t i = 0; i < e.left.dim(); ++i)
        if (phi * e.lact[i] != f.lact[i] * phi) return false;
    for (std::size_t j = 0; j < e.right.dim(); ++j)
        if (phi * e.ract[j] != f.ract[j] * phi) return false;
    return true;
}

}  // namespace coiso
