#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coiso/cbimodule.hpp"
#include "coiso/triple.hpp"

namespace coiso {

/// Morita witness: an invertible bimodule E with partner E', the pairing
/// isomorphisms onto the identity bimodules, and the tensors they live on.
template <ScalarField K>
struct EquivData {
    Triple<K> a, b;            // E is a (B, A)-bimodule
    CoisoBimodule<K> e, e_prime;
    CTensor<K> ep_e;           // E' ⊗_B E  -> identity of A
    CTensor<K> e_ep;           // E ⊗_A E'  -> identity of B
    CHom<K> phi, psi;
};

/// Mat_n of a triple, componentwise.
template <ScalarField K>
Triple<K> matrix_triple(const Triple<K>& a, std::size_t n) {
    return Triple<K>::make(matrix_algebra(a.tot, n), matrix_subspace(a.n_space, n),
                           matrix_subspace(a.zero_space, n));
}

namespace detail {

/// A^n as columns: a (Mat_n(A), A)-bimodule, flat index p·dim + i.
template <ScalarField K>
CoisoBimodule<K> column_module(const Triple<K>& a, const Triple<K>& mat_a, std::size_t n) {
    CoisoBimodule<K> e;
    e.left = mat_a;
    e.right = a;

    auto build = [&](const Algebra<K>& base) {
        PlainBimodule<K> m;
        m.dim = n * base.dim();
        const std::size_t d = base.dim();
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t i = 0; i < d; ++i) {
                    Mat<K> l(m.dim, m.dim);
                    Mat<K> li = base.left_mult(base.basis_vector(i));
                    for (std::size_t k = 0; k < d; ++k)
                        for (std::size_t j = 0; j < d; ++j)
                            if (!li.at(k, j).is_zero()) l.at(p * d + k, q * d + j) = li.at(k, j);
                    m.lact.push_back(std::move(l));
                }
        for (std::size_t j = 0; j < d; ++j) {
            Mat<K> r(m.dim, m.dim);
            Mat<K> rj = base.right_mult(base.basis_vector(j));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t i = 0; i < d; ++i)
                        if (!rj.at(k, i).is_zero()) r.at(p * d + k, p * d + i) = rj.at(k, i);
            m.ract.push_back(std::move(r));
        }
        return m;
    };

    e.tot = build(a.tot);
    e.tot.left = mat_a.tot;
    e.tot.right = a.tot;
    e.nmod = build(a.n_alg);
    e.nmod.left = mat_a.n_alg;
    e.nmod.right = a.n_alg;

    std::vector<Vec<K>> zrows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < a.zero_in_n.dim(); ++r) {
            Vec<K> v(n * a.n_alg.dim());
            for (std::size_t i = 0; i < a.n_alg.dim(); ++i)
                v[p * a.n_alg.dim() + i] = a.zero_in_n.basis().at(r, i);
            zrows.push_back(std::move(v));
        }
    e.zero = Subspace<K>::span(n * a.n_alg.dim(), zrows);
    e.iota = kron(Mat<K>::identity(n), a.n_incl);
    return e;
}

/// A^n as rows: an (A, Mat_n(A))-bimodule.
template <ScalarField K>
CoisoBimodule<K> row_module(const Triple<K>& a, const Triple<K>& mat_a, std::size_t n) {
    CoisoBimodule<K> e;
    e.left = a;
    e.right = mat_a;

    auto build = [&](const Algebra<K>& base) {
        PlainBimodule<K> m;
        m.dim = n * base.dim();
        const std::size_t d = base.dim();
        for (std::size_t i = 0; i < d; ++i) {
            Mat<K> l(m.dim, m.dim);
            Mat<K> li = base.left_mult(base.basis_vector(i));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t j = 0; j < d; ++j)
                        if (!li.at(k, j).is_zero()) l.at(p * d + k, p * d + j) = li.at(k, j);
            m.lact.push_back(std::move(l));
        }
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t i = 0; i < d; ++i) {
                    // x · (E_pq e_i): moves row p to row q with right multiplication
                    Mat<K> r(m.dim, m.dim);
                    Mat<K> ri = base.right_mult(base.basis_vector(i));
                    for (std::size_t k = 0; k < d; ++k)
                        for (std::size_t j = 0; j < d; ++j)
                            if (!ri.at(k, j).is_zero()) r.at(q * d + k, p * d + j) = ri.at(k, j);
                    m.ract.push_back(std::move(r));
                }
        return m;
    };

    e.tot = build(a.tot);
    e.tot.left = a.tot;
    e.tot.right = mat_a.tot;
    e.nmod = build(a.n_alg);
    e.nmod.left = a.n_alg;
    e.nmod.right = mat_a.n_alg;

    std::vector<Vec<K>> zrows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < a.zero_in_n.dim(); ++r) {
            Vec<K> v(n * a.n_alg.dim());
            for (std::size_t i = 0; i < a.n_alg.dim(); ++i)
                v[p * a.n_alg.dim() + i] = a.zero_in_n.basis().at(r, i);
            zrows.push_back(std::move(v));
        }
    e.zero = Subspace<K>::span(n * a.n_alg.dim(), zrows);
    e.iota = kron(Mat<K>::identity(n), a.n_incl);
    return e;
}

}  // namespace detail

/// The standard equivalence between Mat_n(A) and A: columns and rows of A^n
/// with the row-by-column pairing and the outer product.
template <ScalarField K>
EquivData<K> standard_equivalence(const Triple<K>& a, std::size_t n) {
    EquivData<K> d;
    d.a = a;
    d.b = matrix_triple(a, n);
    d.e = detail::column_module(a, d.b, n);
    d.e_prime = detail::row_module(a, d.b, n);
    d.ep_e = ctensor(d.e_prime, d.e);
    d.e_ep = ctensor(d.e, d.e_prime);

    const std::size_t at = a.tot.dim(), an = a.n_alg.dim();

    // phi: x' ⊗ y ↦ Σ_p x'_p y_p
    auto pairing = [&](const Algebra<K>& base, const BalancedTensor<K>& t) {
        const std::size_t dd = base.dim();
        Mat<K> m(dd, t.bim.dim);
        for (std::size_t k = 0; k < t.bim.dim; ++k) {
            Vec<K> v = t.sect.col(k);
            Vec<K> out(dd);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t i = 0; i < dd; ++i)
                    for (std::size_t j = 0; j < dd; ++j) {
                        const K& c = v[(p * dd + i) * (n * dd) + (p * dd + j)];
                        if (!c.is_zero()) vec_add_scaled(out, c, base.basis_product(i, j));
                    }
            m.set_col(k, out);
        }
        return m;
    };
    d.phi = CHom<K>{pairing(a.tot, d.ep_e.tot_t), pairing(a.n_alg, d.ep_e.n_t)};

    // psi: y ⊗ x' ↦ (y_p x'_q)_{pq} in Mat_n
    auto outer_product = [&](const Algebra<K>& base, const BalancedTensor<K>& t) {
        const std::size_t dd = base.dim();
        Mat<K> m(n * n * dd, t.bim.dim);
        for (std::size_t k = 0; k < t.bim.dim; ++k) {
            Vec<K> v = t.sect.col(k);
            Vec<K> out(n * n * dd);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    for (std::size_t i = 0; i < dd; ++i)
                        for (std::size_t j = 0; j < dd; ++j) {
                            const K& c = v[(p * dd + i) * (n * dd) + (q * dd + j)];
                            if (c.is_zero()) continue;
                            Vec<K> prod = base.basis_product(i, j);
                            for (std::size_t l = 0; l < dd; ++l)
                                if (!prod[l].is_zero()) out[(p * n + q) * dd + l] += c * prod[l];
                        }
            m.set_col(k, out);
        }
        return m;
    };
    Mat<K> psi_tot = outer_product(a.tot, d.e_ep.tot_t);
    // for the N-level, outer_product lands in (p,q)-blocks of A_N coordinates,
    // which is exactly the basis order of Mat_n(A).n_alg
    Mat<K> psi_n = outer_product(a.n_alg, d.e_ep.n_t);
    (void)at;
    (void)an;
    d.psi = CHom<K>{psi_tot, psi_n};
    return d;
}

/// Classical-level Morita verification of a pairing pair on plain bimodules.
template <ScalarField K>
Report classical_equivalence_report(const PlainBimodule<K>& e, const PlainBimodule<K>& ep,
                                    const BalancedTensor<K>& ep_e, const BalancedTensor<K>& e_ep,
                                    const Mat<K>& phi, const Mat<K>& psi) {
    Report rep;
    rep.subject = "classical Morita data";
    rep.require("phi is a bimodule morphism",
                is_bimodule_hom(phi, ep_e.bim, PlainBimodule<K>::regular(e.right)));
    rep.require("psi is a bimodule morphism",
                is_bimodule_hom(psi, e_ep.bim, PlainBimodule<K>::regular(e.left)));
    rep.require("phi invertible", inverse(phi).has_value());
    rep.require("psi invertible", inverse(psi).has_value());

    bool compat = true;
    for (std::size_t x = 0; x < e.dim && compat; ++x)
        for (std::size_t xp = 0; xp < ep.dim && compat; ++xp) {
            Vec<K> ex(e.dim), exp(ep.dim);
            ex[x] = K(1);
            exp[xp] = K(1);
            Vec<K> b_coeff = psi.apply(e_ep.proj.apply(vec_outer(ex, exp)));
            for (std::size_t y = 0; y < e.dim; ++y) {
                Vec<K> ey(e.dim);
                ey[y] = K(1);
                Vec<K> lhs = e.lmul(b_coeff, ey);
                Vec<K> a_coeff = phi.apply(ep_e.proj.apply(vec_outer(exp, ey)));
                Vec<K> rhs = e.rmul(ex, a_coeff);
                if (lhs != rhs) {
                    compat = false;
                    break;
                }
            }
        }
    rep.require("psi(x⊗x')·y = x·phi(x'⊗y)", compat);
    return rep;
}

/// Full verification of a Morita witness at both the tot- and N-levels,
/// including component preservation and the injectivity consequences.
template <ScalarField K>
Report verify_equivalence(const EquivData<K>& d) {
    Report rep;
    rep.subject = "Morita witness";
    rep.merge("E: ", validate_cbim(d.e));
    rep.merge("E': ", validate_cbim(d.e_prime));

    auto id_a = identity_cbim(d.a);
    auto id_b = identity_cbim(d.b);
    rep.merge("phi: ", validate_chom(d.phi, d.ep_e.bim, id_a));
    rep.merge("psi: ", validate_chom(d.psi, d.e_ep.bim, id_b));

    rep.require("phi_tot invertible", inverse(d.phi.tot).has_value());
    rep.require("phi_N invertible", inverse(d.phi.n).has_value());
    rep.require("psi_tot invertible", inverse(d.psi.tot).has_value());
    rep.require("psi_N invertible", inverse(d.psi.n).has_value());

    // inverses are again morphisms: the 0-parts must map onto each other
    rep.require("phi maps the tensor 0-part onto A_0", image(d.phi.n, d.ep_e.bim.zero) == id_a.zero);
    rep.require("psi maps the tensor 0-part onto B_0", image(d.psi.n, d.e_ep.bim.zero) == id_b.zero);

    rep.merge("tot level: ",
              classical_equivalence_report(d.e.tot, d.e_prime.tot, d.ep_e.tot_t, d.e_ep.tot_t,
                                           d.phi.tot, d.psi.tot));
    rep.merge("N level: ",
              classical_equivalence_report(d.e.nmod, d.e_prime.nmod, d.ep_e.n_t, d.e_ep.n_t,
                                           d.phi.n, d.psi.n));

    rep.require("iota of E ⊗ E' is injective",
                d.e_ep.bim.iota.cols() == 0 || rank(d.e_ep.bim.iota) == d.e_ep.bim.iota.cols());
    return rep;
}

/// Dual basis data for a finitely generated projective N-component, with the
/// lifts to the tot-component through the pairing.
template <ScalarField K>
struct DualBasis {
    std::vector<Vec<K>> gens;       // e_j in E_N coordinates
    std::vector<Mat<K>> funcs;      // e^j: E_N -> A_N
    std::vector<Vec<K>> gens_tot;   // iota(e_j)
    std::vector<Mat<K>> funcs_tot;  // e^j_tot: E_tot -> A_tot
};

template <ScalarField K>
DualBasis<K> dual_basis(const EquivData<K>& d, const std::vector<Vec<K>>& gens) {
    const auto& e = d.e;
    const Triple<K>& a = d.a;
    const std::size_t en = e.nmod.dim, an = a.n_alg.dim();

    // right A_N-linear maps E_N -> A_N
    std::vector<Mat<K>> racts_a;
    for (std::size_t j = 0; j < an; ++j)
        racts_a.push_back(a.n_alg.right_mult(a.n_alg.basis_vector(j)));
    auto hom = intertwiners(e.nmod.ract, en, racts_a, an);
    if (hom.empty() && en > 0) throw std::invalid_argument("no right-linear functionals exist");

    // solve Σ_j e_j · f_j(x) = x with f_j = Σ_c λ_jc H_c
    const std::size_t J = gens.size(), C = hom.size();
    Mat<K> sys(en * en, J * C);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t c = 0; c < C; ++c) {
            Mat<K> m(en, en);
            for (std::size_t t = 0; t < en; ++t) {
                Vec<K> coeff = hom[c].col(t);
                m.set_col(t, e.nmod.ract_of(coeff).apply(gens[j]));
            }
            Vec<K> v = vectorize(m);
            for (std::size_t r = 0; r < v.size(); ++r) sys.at(r, j * C + c) = v[r];
        }
    Vec<K> target = vectorize(Mat<K>::identity(en));
    auto sol = solve(sys, target);
    if (!sol.consistent)
        throw std::invalid_argument("not projective over the given generators");

    DualBasis<K> db;
    db.gens = gens;
    for (std::size_t j = 0; j < J; ++j) {
        Mat<K> f(an, en);
        for (std::size_t c = 0; c < C; ++c) {
            const K& l = sol.particular[j * C + c];
            if (!l.is_zero()) f = f + l * hom[c];
        }
        db.funcs.push_back(std::move(f));
        db.gens_tot.push_back(e.iota.apply(gens[j]));
    }

    // unit decomposition 1_{B_N} = psi_N(Σ x_i ⊗ y_i)
    auto psi_inv = inverse(d.psi.n);
    if (!psi_inv) throw std::invalid_argument("psi_N is not invertible");
    Vec<K> u = psi_inv->apply(d.b.n_alg.unit());
    Vec<K> u_plain = d.e_ep.n_t.sect.apply(u);

    const std::size_t et = e.tot.dim, epn = d.e_prime.nmod.dim;
    for (std::size_t j = 0; j < J; ++j) {
        Mat<K> ft(a.tot.dim(), et);
        for (std::size_t x = 0; x < et; ++x) {
            Vec<K> ex(et);
            ex[x] = K(1);
            Vec<K> acc(a.tot.dim());
            for (std::size_t p = 0; p < en; ++p)
                for (std::size_t q = 0; q < epn; ++q) {
                    const K& c = u_plain[p * epn + q];
                    if (c.is_zero()) continue;
                    Vec<K> lifted_func = a.n_incl.apply(db.funcs[j].col(p));
                    Vec<K> w = vec_outer(d.e_prime.iota.col(q), ex);
                    Vec<K> paired = d.phi.tot.apply(d.ep_e.tot_t.proj.apply(w));
                    vec_add_scaled(acc, c, a.tot.mul(lifted_func, paired));
                }
            ft.set_col(x, acc);
        }
        db.funcs_tot.push_back(std::move(ft));
    }
    return db;
}

template <ScalarField K>
Report verify_dual_basis(const EquivData<K>& d, const DualBasis<K>& db) {
    Report rep;
    rep.subject = "dual basis";
    const auto& e = d.e;
    const std::size_t en = e.nmod.dim, et = e.tot.dim;

    Mat<K> sum_n(en, en);
    for (std::size_t j = 0; j < db.gens.size(); ++j) {
        Mat<K> m(en, en);
        for (std::size_t t = 0; t < en; ++t)
            m.set_col(t, e.nmod.ract_of(db.funcs[j].col(t)).apply(db.gens[j]));
        sum_n = sum_n + m;
    }
    rep.require("Σ e_j e^j(x) = x on E_N", sum_n == Mat<K>::identity(en));

    Mat<K> sum_t(et, et);
    for (std::size_t j = 0; j < db.gens.size(); ++j) {
        Mat<K> m(et, et);
        for (std::size_t t = 0; t < et; ++t)
            m.set_col(t, e.tot.ract_of(db.funcs_tot[j].col(t)).apply(db.gens_tot[j]));
        sum_t = sum_t + m;
    }
    rep.require("Σ e_j^tot e^j_tot(x) = x on E_tot", sum_t == Mat<K>::identity(et));

    bool restricts = true;
    for (std::size_t j = 0; j < db.gens.size(); ++j)
        if (db.funcs_tot[j] * e.iota != d.a.n_incl * db.funcs[j]) restricts = false;
    rep.require("lifted functionals restrict along iota", restricts);
    return rep;
}

template <ScalarField K>
struct Idempotents {
    std::vector<std::vector<Vec<K>>> e_n;    // n×n grid, entries in A_N coords
    std::vector<std::vector<Vec<K>>> e_tot;  // entries in A_tot coords
    bool n_idempotent = false, tot_idempotent = false, equal = false;
};

template <ScalarField K>
Idempotents<K> idempotents(const EquivData<K>& d, const DualBasis<K>& db) {
    const std::size_t n = db.gens.size();
    Idempotents<K> out;
    out.e_n.assign(n, std::vector<Vec<K>>(n));
    out.e_tot.assign(n, std::vector<Vec<K>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.e_n[i][j] = db.funcs[i].apply(db.gens[j]);
            out.e_tot[i][j] = db.funcs_tot[i].apply(db.gens_tot[j]);
        }
    auto idem = [&](const auto& grid, const Algebra<K>& alg) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> acc(alg.dim());
                for (std::size_t k = 0; k < n; ++k)
                    vec_add_scaled(acc, K(1), alg.mul(grid[i][k], grid[k][j]));
                if (acc != grid[i][j]) return false;
            }
        return true;
    };
    out.n_idempotent = idem(out.e_n, d.a.n_alg);
    out.tot_idempotent = idem(out.e_tot, d.a.tot);
    out.equal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d.a.n_incl.apply(out.e_n[i][j]) != out.e_tot[i][j]) out.equal = false;
    return out;
}

/// E_N · A_0 = E_0, exactly.
template <ScalarField K>
bool check_zero_component(const EquivData<K>& d) {
    RrefBuilder<K> b(d.e.nmod.dim);
    for (std::size_t r = 0; r < d.a.zero_in_n.dim(); ++r) {
        Mat<K> act = d.e.nmod.ract_of(d.a.zero_in_n.basis().row(r));
        for (std::size_t x = 0; x < d.e.nmod.dim; ++x) b.add(act.col(x));
    }
    return Subspace<K>::span_rows(b.basis()) == d.e.zero;
}

/// The structure theorem: all three left-multiplication maps are
/// isomorphisms, iota is injective, and E is the image of the idempotent.
template <ScalarField K>
Report check_structure_theorem(const EquivData<K>& d) {
    Report rep;
    rep.subject = "structure theorem";
    const auto& e = d.e;

    auto check_level = [&](const std::string& tag, const PlainBimodule<K>& mod,
                           const Algebra<K>& balg) {
        auto cmt = commutant(mod.ract, mod.dim);
        std::vector<Vec<K>> cvecs;
        for (const auto& t : cmt) cvecs.push_back(vectorize(t));
        auto cspan = Subspace<K>::span(mod.dim * mod.dim, cvecs);
        rep.require(tag + " endomorphism dimension matches", cmt.size() == balg.dim(),
                    "End dim " + std::to_string(cmt.size()) + " vs " + std::to_string(balg.dim()));
        Mat<K> stacked(balg.dim(), mod.dim * mod.dim);
        bool inside = true;
        for (std::size_t i = 0; i < balg.dim(); ++i) {
            Vec<K> v = vectorize(mod.lact[i]);
            if (!cspan.contains(v)) inside = false;
            for (std::size_t c = 0; c < v.size(); ++c) stacked.at(i, c) = v[c];
        }
        rep.require(tag + " left multiplications are endomorphisms", inside);
        rep.require(tag + " left multiplication is bijective", rank(stacked) == balg.dim());
        return cmt;
    };
    check_level("tot:", e.tot, d.b.tot);
    auto cmt_n = check_level("N:", e.nmod, d.b.n_alg);

    // B_0 ≅ Hom_{A_N}(E_N, E_0), viewed inside End_{A_N}(E_N)
    {
        std::vector<Vec<K>> hom0;
        if (e.nmod.dim > 0) {
            // the subspace of the commutant whose image lies in E_0
            auto q = quotient_map(e.zero);
            const std::size_t C = cmt_n.size();
            Mat<K> sys(q.proj.rows() * e.nmod.dim, C);
            for (std::size_t c = 0; c < C; ++c) {
                Mat<K> img = q.proj * cmt_n[c];
                Vec<K> v = vectorize(img);
                for (std::size_t r = 0; r < v.size(); ++r) sys.at(r, c) = v[r];
            }
            Mat<K> ker = kernel(sys);
            for (std::size_t r = 0; r < ker.rows(); ++r) {
                Mat<K> t(e.nmod.dim, e.nmod.dim);
                for (std::size_t c = 0; c < C; ++c)
                    if (!ker.at(r, c).is_zero()) t = t + ker.at(r, c) * cmt_n[c];
                hom0.push_back(vectorize(t));
            }
        }
        auto hom0_span = Subspace<K>::span(e.nmod.dim * e.nmod.dim, hom0);
        rep.require("Hom(E_N, E_0) dimension matches B_0",
                    hom0_span.dim() == d.b.zero_in_n.dim(),
                    "Hom dim " + std::to_string(hom0_span.dim()) + " vs B_0 dim " +
                        std::to_string(d.b.zero_in_n.dim()));
        std::vector<Vec<K>> b0_imgs;
        for (std::size_t r = 0; r < d.b.zero_in_n.dim(); ++r)
            b0_imgs.push_back(vectorize(e.nmod.lact_of(d.b.zero_in_n.basis().row(r))));
        rep.require("B_0 maps onto Hom(E_N, E_0)",
                    Subspace<K>::span(e.nmod.dim * e.nmod.dim, b0_imgs) == hom0_span);
    }

    rep.require("iota_E injective", e.iota.cols() == 0 || rank(e.iota) == e.iota.cols());

    // E ≅ e·A^n via the dual-basis coordinates, componentwise and
    // intertwining with iota
    {
        std::vector<Vec<K>> gens;
        for (std::size_t x = 0; x < e.nmod.dim; ++x) {
            Vec<K> v(e.nmod.dim);
            v[x] = K(1);
            gens.push_back(v);
        }
        auto db = dual_basis(d, gens);
        auto idem = idempotents(d, db);
        rep.require("idempotent on the N level", idem.n_idempotent);
        rep.require("idempotent on the tot level", idem.tot_idempotent);
        rep.require("idempotents agree along iota", idem.equal);

        const std::size_t n = gens.size(), an = d.a.n_alg.dim(), at = d.a.tot.dim();
        Mat<K> g_n(n * an, e.nmod.dim), g_tot(n * at, e.tot.dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t x = 0; x < e.nmod.dim; ++x) {
                Vec<K> v = db.funcs[i].col(x);
                for (std::size_t k = 0; k < an; ++k) g_n.at(i * an + k, x) = v[k];
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t x = 0; x < e.tot.dim; ++x) {
                Vec<K> v = db.funcs_tot[i].col(x);
                for (std::size_t k = 0; k < at; ++k) g_tot.at(i * at + k, x) = v[k];
            }
        rep.require("coordinate map injective on E_N", rank(g_n) == e.nmod.dim);
        rep.require("coordinate map injective on E_tot", rank(g_tot) == e.tot.dim);

        auto image_of = [&](const Mat<K>& g) { return column_space(g); };
        // e·A^n: columns of the block matrix with (i,j) block = left mult by e_ij
        auto idem_image = [&](const auto& grid, const Algebra<K>& alg) {
            const std::size_t dd = alg.dim();
            Mat<K> block(n * dd, n * dd);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Mat<K> l = alg.left_mult(grid[i][j]);
                    for (std::size_t r = 0; r < dd; ++r)
                        for (std::size_t c = 0; c < dd; ++c)
                            if (!l.at(r, c).is_zero()) block.at(i * dd + r, j * dd + c) = l.at(r, c);
                }
            return column_space(block);
        };
        rep.require("E_N lands exactly on e·A_N^n",
                    image_of(g_n) == idem_image(idem.e_n, d.a.n_alg));
        rep.require("E_tot lands exactly on e·A_tot^n",
                    image_of(g_tot) == idem_image(idem.e_tot, d.a.tot));
        rep.require("coordinate maps intertwine iota",
                    g_tot * e.iota == kron(Mat<K>::identity(n), d.a.n_incl) * g_n);
    }
    return rep;
}

}  // namespace coiso
