#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coiso/matrix.hpp"

namespace coiso {

/// A subspace of k^n stored by its reduced row echelon basis. The RREF basis
/// is a canonical form: two subspaces are equal iff their bases are
/// entry-wise equal.
template <ScalarField K>
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec<K>>& vectors) {
        RrefBuilder<K> b(ambient);
        for (const auto& v : vectors) {
            if (v.size() != ambient) throw std::invalid_argument("span: ambient mismatch");
            b.add(v);
        }
        return from_builder(ambient, b);
    }

    static Subspace span_rows(const Mat<K>& m) {
        RrefBuilder<K> b(m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
        return from_builder(m.cols(), b);
    }

    static Subspace zero(std::size_t ambient) { return span(ambient, {}); }

    static Subspace full(std::size_t ambient) {
        return span_rows(Mat<K>::identity(ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat<K>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec<K>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
        Vec<K> r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const K& c = r[pivots_[i]];
            if (!c.is_zero()) vec_add_scaled(r, -c, basis_.row(i));
        }
        return vec_is_zero(r);
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
        for (std::size_t i = 0; i < other.basis_.rows(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Coordinates of a member vector in the RREF basis (pivot extraction).
    Vec<K> coords(const Vec<K>& v) const {
        Vec<K> c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    /// Inverse of coords on the subspace: basis^T · c.
    Vec<K> embed(const Vec<K>& c) const {
        if (c.size() != dim()) throw std::invalid_argument("embed: wrong coordinate length");
        Vec<K> v(ambient_);
        for (std::size_t i = 0; i < dim(); ++i)
            if (!c[i].is_zero()) vec_add_scaled(v, c[i], basis_.row(i));
        return v;
    }

    /// ambient -> subspace-coordinates matrix; only meaningful on members.
    Mat<K> coord_matrix() const {
        Mat<K> m(dim(), ambient_);
        for (std::size_t i = 0; i < dim(); ++i) m.at(i, pivots_[i]) = K(1);
        return m;
    }

    /// subspace-coordinates -> ambient matrix (columns are basis vectors).
    Mat<K> embed_matrix() const { return basis_.transpose(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& u, const Subspace& v) {
        if (u.ambient_ != v.ambient_) throw std::invalid_argument("sum: ambient mismatch");
        RrefBuilder<K> b(u.ambient_);
        for (std::size_t i = 0; i < u.basis_.rows(); ++i) b.add(u.basis_.row(i));
        for (std::size_t i = 0; i < v.basis_.rows(); ++i) b.add(v.basis_.row(i));
        return from_builder(u.ambient_, b);
    }

    /// Zassenhaus: row-reduce [U U; V 0]; rows with vanishing left half carry
    /// an intersection basis in the right half.
    friend Subspace intersect(const Subspace& u, const Subspace& v) {
        if (u.ambient_ != v.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
        const std::size_t n = u.ambient_;
        Mat<K> big(u.dim() + v.dim(), 2 * n);
        for (std::size_t i = 0; i < u.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                big.at(i, j) = u.basis_.at(i, j);
                big.at(i, n + j) = u.basis_.at(i, j);
            }
        for (std::size_t i = 0; i < v.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) big.at(u.dim() + i, j) = v.basis_.at(i, j);
        auto r = rref(big);
        std::vector<Vec<K>> rows;
        for (std::size_t i = 0; i < r.mat.rows(); ++i) {
            if (r.pivots[i] >= n) {
                Vec<K> w(n);
                for (std::size_t j = 0; j < n; ++j) w[j] = r.mat.at(i, n + j);
                rows.push_back(std::move(w));
            }
        }
        return span(n, rows);
    }

private:
    static Subspace from_builder(std::size_t ambient, const RrefBuilder<K>& b) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = b.basis();
        s.pivots_ = b.pivots();
        return s;
    }

    std::size_t ambient_;
    Mat<K> basis_;
    std::vector<std::size_t> pivots_;
};

template <ScalarField K>
struct QuotientMap {
    Mat<K> proj;  // (n - dim u) × n, kernel exactly u
    Mat<K> sect;  // n × (n - dim u), proj∘sect = identity
};

/// Quotient of k^n by u, with representatives on the non-pivot coordinates
/// of u's RREF basis. Deterministic, so reports are reproducible.
template <ScalarField K>
QuotientMap<K> quotient_map(const Subspace<K>& u) {
    const std::size_t n = u.ambient();
    std::vector<bool> is_pivot(n, false);
    for (auto p : u.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);

    QuotientMap<K> q;
    q.proj = Mat<K>(free.size(), n);
    q.sect = Mat<K>(n, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        q.proj.at(k, free[k]) = K(1);
        q.sect.at(free[k], k) = K(1);
        for (std::size_t i = 0; i < u.dim(); ++i)
            q.proj.at(k, u.pivots()[i]) = -u.basis().at(i, free[k]);
    }
    return q;
}

/// Image of a subspace under a linear map.
template <ScalarField K>
Subspace<K> image(const Mat<K>& m, const Subspace<K>& s) {
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(m.apply(s.basis().row(i)));
    return Subspace<K>::span(m.rows(), rows);
}

/// Column span of a matrix.
template <ScalarField K>
Subspace<K> column_space(const Mat<K>& m) {
    std::vector<Vec<K>> rows;
    for (std::size_t j = 0; j < m.cols(); ++j) rows.push_back(m.col(j));
    return Subspace<K>::span(m.rows(), rows);
}

}  // namespace coiso
