#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coiso/matrix.hpp"
#include "coiso/report.hpp"
#include "coiso/subspace.hpp"

namespace coiso {

/// Finite-dimensional unital associative algebra by structure constants:
/// e_i · e_j = Σ_k c[i][j][k] e_k. A zero-dimensional algebra is allowed and
/// plays the role of the zero algebra.
template <ScalarField K>
class Algebra {
public:
    Algebra() : dim_(0) {}

    Algebra(std::size_t dim, std::vector<K> structure, Vec<K> unit, std::string label = {})
        : dim_(dim), c_(std::move(structure)), unit_(std::move(unit)), label_(std::move(label)) {
        if (c_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure size mismatch");
        if (unit_.size() != dim_) throw std::invalid_argument("unit size mismatch");
    }

    /// The ground field as a one-dimensional algebra.
    static Algebra field(std::string label = "k") {
        return Algebra(1, {K(1)}, {K(1)}, std::move(label));
    }

    static Algebra zero_algebra(std::string label = "0") {
        return Algebra(0, {}, {}, std::move(label));
    }

    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    const Vec<K>& unit() const { return unit_; }

    const K& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    K& structure(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Vec<K> basis_product(std::size_t i, std::size_t j) const {
        Vec<K> v(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v[k] = structure(i, j, k);
        return v;
    }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                K c = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const K& s = structure(i, j, k);
                    if (!s.is_zero()) out[k] += c * s;
                }
            }
        }
        return out;
    }

    /// Matrix of y ↦ x·y.
    Mat<K> left_mult(const Vec<K>& x) const {
        Mat<K> m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const K& s = structure(i, j, k);
                    if (!s.is_zero()) m.at(k, j) += x[i] * s;
                }
        }
        return m;
    }

    /// Matrix of y ↦ y·x.
    Mat<K> right_mult(const Vec<K>& x) const {
        Mat<K> m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (x[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const K& s = structure(i, j, k);
                    if (!s.is_zero()) m.at(k, i) += x[j] * s;
                }
        }
        return m;
    }

    Vec<K> basis_vector(std::size_t i) const {
        Vec<K> v(dim_);
        v[i] = K(1);
        return v;
    }

    /// Opposite algebra, structure constants transposed in the first two slots.
    Algebra opposite() const {
        Algebra o(dim_, c_, unit_, label_.empty() ? std::string("opp") : label_ + "^opp");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) o.structure(i, j, k) = structure(j, i, k);
        return o;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_ && a.unit_ == b.unit_;
    }
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
    std::size_t dim_;
    std::vector<K> c_;
    Vec<K> unit_;
    std::string label_;
};

/// Checks associativity on all basis triples and both unit laws; failures are
/// itemized with the offending indices.
template <ScalarField K>
Report validate_algebra(const Algebra<K>& a) {
    Report rep;
    rep.subject = "algebra " + a.label();
    bool assoc = true;
    std::string w;
    for (std::size_t i = 0; i < a.dim() && assoc; ++i)
        for (std::size_t j = 0; j < a.dim() && assoc; ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                auto lhs = a.mul(a.basis_product(i, j), a.basis_vector(k));
                auto rhs = a.mul(a.basis_vector(i), a.basis_product(j, k));
                if (lhs != rhs) {
                    assoc = false;
                    w = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                        std::to_string(k) + " != e" + std::to_string(i) + " (e" +
                        std::to_string(j) + " e" + std::to_string(k) + ")";
                    break;
                }
            }
    rep.require("associativity", assoc, w);

    bool unit_ok = true;
    std::string uw;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.mul(a.unit(), a.basis_vector(i)) != a.basis_vector(i) ||
            a.mul(a.basis_vector(i), a.unit()) != a.basis_vector(i)) {
            unit_ok = false;
            uw = "unit law fails on e" + std::to_string(i);
            break;
        }
    }
    rep.require("unit laws", unit_ok, uw);
    return rep;
}

/// Smallest unital subalgebra containing the seed vectors, by iterating
/// products until the span stabilizes.
template <ScalarField K>
Subspace<K> subalgebra_closure(const Algebra<K>& a, const std::vector<Vec<K>>& seed) {
    RrefBuilder<K> b(a.dim());
    if (a.dim() > 0) b.add(a.unit());
    for (const auto& v : seed) b.add(v);
    bool grew = true;
    while (grew) {
        grew = false;
        Mat<K> cur = b.basis();
        for (std::size_t i = 0; i < cur.rows(); ++i)
            for (std::size_t j = 0; j < cur.rows(); ++j)
                if (b.add(a.mul(cur.row(i), cur.row(j)))) grew = true;
    }
    return Subspace<K>::span_rows(b.basis());
}

/// Left ideal generated by the given vectors: span of basis·g, iterated.
template <ScalarField K>
Subspace<K> left_ideal(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
    RrefBuilder<K> b(a.dim());
    for (const auto& g : gens) b.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        Mat<K> cur = b.basis();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t r = 0; r < cur.rows(); ++r)
                if (b.add(a.mul(a.basis_vector(i), cur.row(r)))) grew = true;
    }
    return Subspace<K>::span_rows(b.basis());
}

template <ScalarField K>
Subspace<K> two_sided_ideal(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
    RrefBuilder<K> b(a.dim());
    for (const auto& g : gens) b.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        Mat<K> cur = b.basis();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t r = 0; r < cur.rows(); ++r) {
                if (b.add(a.mul(a.basis_vector(i), cur.row(r)))) grew = true;
                if (b.add(a.mul(cur.row(r), a.basis_vector(i)))) grew = true;
            }
    }
    return Subspace<K>::span_rows(b.basis());
}

template <ScalarField K>
bool is_left_ideal(const Algebra<K>& a, const Subspace<K>& j) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < j.dim(); ++r)
            if (!j.contains(a.mul(a.basis_vector(i), j.basis().row(r)))) return false;
    return true;
}

template <ScalarField K>
bool is_right_ideal(const Algebra<K>& a, const Subspace<K>& j) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < j.dim(); ++r)
            if (!j.contains(a.mul(j.basis().row(r), a.basis_vector(i)))) return false;
    return true;
}

template <ScalarField K>
bool is_two_sided_ideal(const Algebra<K>& a, const Subspace<K>& j) {
    return is_left_ideal(a, j) && is_right_ideal(a, j);
}

/// Is s closed under multiplication and does it contain the unit?
template <ScalarField K>
bool is_unital_subalgebra(const Algebra<K>& a, const Subspace<K>& s) {
    if (a.dim() > 0 && !s.contains(a.unit())) return false;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(a.mul(s.basis().row(i), s.basis().row(j)))) return false;
    return true;
}

/// Idealizer N(j) = {x : j·x ⊆ j} of a left ideal j, the largest subalgebra
/// in which j sits as a two-sided ideal.
template <ScalarField K>
Subspace<K> idealizer(const Algebra<K>& a, const Subspace<K>& j) {
    if (!is_left_ideal(a, j)) throw std::invalid_argument("idealizer: not a left ideal");
    if (j.dim() == 0 || j.is_full()) return Subspace<K>::full(a.dim());
    auto q = quotient_map(j);
    // stack (proj ∘ L_g) for each ideal generator g; kernel is N(j)
    const std::size_t qrows = q.proj.rows();
    Mat<K> sys(j.dim() * qrows, a.dim());
    for (std::size_t r = 0; r < j.dim(); ++r) {
        Mat<K> m = q.proj * a.left_mult(j.basis().row(r));
        for (std::size_t i = 0; i < qrows; ++i)
            for (std::size_t col = 0; col < a.dim(); ++col)
                sys.at(r * qrows + i, col) = m.at(i, col);
    }
    return Subspace<K>::span_rows(kernel(sys));
}

template <ScalarField K>
struct InducedAlgebra {
    Algebra<K> alg;
    Mat<K> incl;  // subspace coords -> ambient coords
};

/// The algebra structure induced on a unital subalgebra's RREF basis.
template <ScalarField K>
InducedAlgebra<K> induced_algebra(const Algebra<K>& a, const Subspace<K>& s, std::string label = {}) {
    const std::size_t m = s.dim();
    std::vector<K> c(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec<K> p = a.mul(s.basis().row(i), s.basis().row(j));
            if (!s.contains(p)) throw std::invalid_argument("induced_algebra: subspace not closed");
            Vec<K> pc = s.coords(p);
            for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = pc[k];
        }
    Vec<K> unit;
    if (m > 0) {
        if (!s.contains(a.unit())) throw std::invalid_argument("induced_algebra: unit not in subspace");
        unit = s.coords(a.unit());
    }
    return {Algebra<K>(m, std::move(c), std::move(unit), std::move(label)), s.embed_matrix()};
}

template <ScalarField K>
struct QuotientAlgebra {
    Algebra<K> alg;
    Mat<K> proj;  // ambient -> quotient coords
    Mat<K> sect;  // quotient -> ambient, proj∘sect = id
};

/// Quotient by a two-sided ideal, with structure constants induced on the
/// canonical complement.
template <ScalarField K>
QuotientAlgebra<K> quotient_algebra(const Algebra<K>& a, const Subspace<K>& ideal,
                                    std::string label = {}) {
    if (!is_two_sided_ideal(a, ideal))
        throw std::invalid_argument("quotient_algebra: ideal is not two-sided");
    auto q = quotient_map(ideal);
    const std::size_t m = q.proj.rows();
    std::vector<K> c(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec<K> p = q.proj.apply(a.mul(q.sect.col(i), q.sect.col(j)));
            for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = p[k];
        }
    Vec<K> unit = (a.dim() > 0) ? q.proj.apply(a.unit()) : Vec<K>{};
    return {Algebra<K>(m, std::move(c), std::move(unit), std::move(label)), q.proj, q.sect};
}

/// Mat_n(a): basis E_pq ⊗ e_i, flat index (p·n + q)·dim + i.
template <ScalarField K>
Algebra<K> matrix_algebra(const Algebra<K>& a, std::size_t n, std::string label = {}) {
    const std::size_t d = a.dim();
    const std::size_t m = n * n * d;
    std::vector<K> c(m * m * m);
    auto idx = [&](std::size_t p, std::size_t q, std::size_t i) { return (p * n + q) * d + i; };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t j = 0; j < d; ++j) {
                        // (E_pq e_i)(E_qs e_j) = E_ps (e_i e_j)
                        std::size_t row = idx(p, q, i), col = idx(q, s, j);
                        for (std::size_t k = 0; k < d; ++k) {
                            const K& v = a.structure(i, j, k);
                            if (!v.is_zero()) c[(row * m + col) * m + idx(p, s, k)] = v;
                        }
                    }
    Vec<K> unit(m);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < d; ++i) unit[idx(p, p, i)] = a.unit()[i];
    if (label.empty()) label = "Mat" + std::to_string(n) + "(" + a.label() + ")";
    return Algebra<K>(m, std::move(c), std::move(unit), std::move(label));
}

/// E_pq ⊗ S for a subspace S ⊆ a, inside matrix_algebra(a, n).
template <ScalarField K>
Subspace<K> matrix_subspace(const Subspace<K>& s, std::size_t n) {
    const std::size_t d = s.ambient();
    std::vector<Vec<K>> rows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < s.dim(); ++r) {
                Vec<K> v(n * n * d);
                for (std::size_t i = 0; i < d; ++i) v[(p * n + q) * d + i] = s.basis().at(r, i);
                rows.push_back(std::move(v));
            }
    return Subspace<K>::span(n * n * d, rows);
}

/// Basis of {T : T·acts[i] = acts[i]·T for all i}, canonical (vectorized RREF).
template <ScalarField K>
std::vector<Mat<K>> commutant(const std::vector<Mat<K>>& acts, std::size_t dim) {
    // vec row-major: vec(T·M - M·T) = (I ⊗ Mᵀ - M ⊗ I)·vec(T)
    Mat<K> sys(acts.size() * dim * dim, dim * dim);
    std::size_t row0 = 0;
    for (const auto& m : acts) {
        Mat<K> block = kron(Mat<K>::identity(dim), m.transpose()) - kron(m, Mat<K>::identity(dim));
        for (std::size_t i = 0; i < dim * dim; ++i)
            for (std::size_t j = 0; j < dim * dim; ++j) sys.at(row0 + i, j) = block.at(i, j);
        row0 += dim * dim;
    }
    Mat<K> ker = kernel(sys);
    std::vector<Mat<K>> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Mat<K> t(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) t.at(i, j) = ker.at(r, i * dim + j);
        out.push_back(std::move(t));
    }
    return out;
}

/// Basis of {T : edim -> fdim, T·actsE[i] = actsF[i]·T}.
template <ScalarField K>
std::vector<Mat<K>> intertwiners(const std::vector<Mat<K>>& acts_e, std::size_t edim,
                                 const std::vector<Mat<K>>& acts_f, std::size_t fdim) {
    if (acts_e.size() != acts_f.size()) throw std::invalid_argument("intertwiners: action count mismatch");
    Mat<K> sys(acts_e.size() * fdim * edim, fdim * edim);
    std::size_t row0 = 0;
    for (std::size_t a = 0; a < acts_e.size(); ++a) {
        Mat<K> block = kron(Mat<K>::identity(fdim), acts_e[a].transpose()) -
                       kron(acts_f[a], Mat<K>::identity(edim));
        for (std::size_t i = 0; i < fdim * edim; ++i)
            for (std::size_t j = 0; j < fdim * edim; ++j) sys.at(row0 + i, j) = block.at(i, j);
        row0 += fdim * edim;
    }
    Mat<K> ker = kernel(sys);
    std::vector<Mat<K>> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Mat<K> t(fdim, edim);
        for (std::size_t i = 0; i < fdim; ++i)
            for (std::size_t j = 0; j < edim; ++j) t.at(i, j) = ker.at(r, i * edim + j);
        out.push_back(std::move(t));
    }
    return out;
}

template <ScalarField K>
Vec<K> vectorize(const Mat<K>& m) {
    Vec<K> v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

template <ScalarField K>
struct EndomorphismAlgebra {
    Algebra<K> alg;               // composition as product
    std::vector<Mat<K>> basis;    // the commutant basis matrices
    Subspace<K> span;             // vectorized span, for membership/coords
};

/// Endomorphism algebra of a module given by its action matrices: the
/// commutant, with composition as multiplication.
template <ScalarField K>
EndomorphismAlgebra<K> endomorphism_algebra(const std::vector<Mat<K>>& acts, std::size_t dim,
                                            std::string label = {}) {
    EndomorphismAlgebra<K> out;
    out.basis = commutant(acts, dim);
    std::vector<Vec<K>> vecs;
    for (const auto& t : out.basis) vecs.push_back(vectorize(t));
    out.span = Subspace<K>::span(dim * dim, vecs);
    const std::size_t m = out.basis.size();
    std::vector<K> c(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec<K> comp = vectorize(out.basis[i] * out.basis[j]);
            Vec<K> coords = out.span.coords(comp);
            for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = coords[k];
        }
    Vec<K> unit;
    if (m > 0) {
        Vec<K> id = vectorize(Mat<K>::identity(dim));
        if (!out.span.contains(id)) throw std::invalid_argument("endomorphism algebra misses identity");
        unit = out.span.coords(id);
    }
    out.alg = Algebra<K>(m, std::move(c), std::move(unit), std::move(label));
    return out;
}

/// Center of an algebra as a subspace.
template <ScalarField K>
Subspace<K> center(const Algebra<K>& a) {
    std::vector<Mat<K>> acts;
    for (std::size_t i = 0; i < a.dim(); ++i)
        acts.push_back(a.left_mult(a.basis_vector(i)) - a.right_mult(a.basis_vector(i)));
    Mat<K> sys(acts.size() * a.dim(), a.dim());
    for (std::size_t r = 0; r < acts.size(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) sys.at(r * a.dim() + i, j) = acts[r].at(i, j);
    return Subspace<K>::span_rows(kernel(sys));
}

/// Unital algebra morphism given by its matrix.
template <ScalarField K>
struct AlgebraHom {
    Algebra<K> source, target;
    Mat<K> m;  // target.dim × source.dim

    Vec<K> apply(const Vec<K>& x) const { return m.apply(x); }

    static AlgebraHom id(const Algebra<K>& a) { return {a, a, Mat<K>::identity(a.dim())}; }

    /// g ∘ f.
    friend AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
        if (!(f.target == g.source)) throw std::invalid_argument("compose: target/source mismatch");
        return {f.source, g.target, g.m * f.m};
    }
};

template <ScalarField K>
Report validate_hom(const AlgebraHom<K>& f) {
    Report rep;
    rep.subject = "algebra morphism";
    bool mult = true;
    std::string w;
    for (std::size_t i = 0; i < f.source.dim() && mult; ++i)
        for (std::size_t j = 0; j < f.source.dim(); ++j) {
            auto lhs = f.apply(f.source.basis_product(i, j));
            auto rhs = f.target.mul(f.m.col(i), f.m.col(j));
            if (lhs != rhs) {
                mult = false;
                w = "f(e" + std::to_string(i) + " e" + std::to_string(j) + ") != f(e" +
                    std::to_string(i) + ") f(e" + std::to_string(j) + ")";
                break;
            }
        }
    rep.require("multiplicative", mult, w);
    bool unit_ok = f.source.dim() == 0 || f.apply(f.source.unit()) == f.target.unit();
    rep.require("unit preserved", unit_ok);
    return rep;
}

template <ScalarField K>
bool is_bijective(const Mat<K>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace coiso
