#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coiso/scalar.hpp"

namespace coiso {

template <ScalarField K>
using Vec = std::vector<K>;

template <ScalarField K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <ScalarField K>
void vec_add_scaled(Vec<K>& v, const K& c, const Vec<K>& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

template <ScalarField K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

/// Dense matrix over an exact scalar field, row-major.
template <ScalarField K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    static Mat from_rows(std::size_t cols, const std::vector<Vec<K>>& rows) {
        Mat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const {
        return Vec<K>(d_.begin() + i * cols_, d_.begin() + (i + 1) * cols_);
    }
    Vec<K> col(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(std::size_t j, const Vec<K>& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    bool is_zero() const { return vec_is_zero(d_); }

    /// Matrix-vector product.
    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
        Vec<K> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc{};
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("mul: dimension mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b.at(k, j);
                    if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("add: dimension mismatch");
        Mat c = a;
        for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] += b.d_[i];
        return c;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("sub: dimension mismatch");
        Mat c = a;
        for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] -= b.d_[i];
        return c;
    }

    friend Mat operator*(const K& c, Mat m) {
        for (auto& x : m.d_) x = c * x;
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).str();
            }
        }
        return s + "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> d_;
};

/// Kronecker product with row-major pairing: (a ⊗ b)[(i,k),(j,l)] = a[i][j] b[k][l].
template <ScalarField K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return c;
}

/// Maintains a reduced row echelon basis incrementally; rows stay fully
/// reduced against each other, so the final basis is the canonical RREF of
/// the span regardless of insertion order.
template <ScalarField K>
class RrefBuilder {
public:
    explicit RrefBuilder(std::size_t cols) : cols_(cols) {}

    /// Reduces v against the basis; returns the residual.
    Vec<K> reduce(Vec<K> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (!c.is_zero()) vec_add_scaled(v, -c, rows_[r]);
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

    /// Adds v to the span; returns true if the dimension grew.
    bool add(Vec<K> v) {
        if (v.size() != cols_) throw std::invalid_argument("RrefBuilder: bad vector length");
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < cols_ && v[p].is_zero()) ++p;
        if (p == cols_) return false;
        K inv = K(1) / v[p];
        for (auto& x : v) x = inv * x;
        // eliminate the new pivot from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = rows_[r][p];
            if (!c.is_zero()) vec_add_scaled(rows_[r], -c, v);
        }
        // insert keeping pivots ascending
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Mat<K> basis() const { return Mat<K>::from_rows(cols_, rows_); }

private:
    std::size_t cols_;
    std::vector<Vec<K>> rows_;
    std::vector<std::size_t> pivots_;
};

template <ScalarField K>
struct RrefResult {
    Mat<K> mat;                        // RREF with zero rows removed
    std::vector<std::size_t> pivots;   // ascending
};

/// Unique reduced row echelon form (zero rows dropped).
template <ScalarField K>
RrefResult<K> rref(const Mat<K>& m) {
    RrefBuilder<K> b(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
    return {b.basis(), b.pivots()};
}

template <ScalarField K>
std::size_t rank(const Mat<K>& m) {
    return rref(m).mat.rows();
}

template <ScalarField K>
struct SolveResult {
    bool consistent = false;
    Vec<K> particular;   // one solution when consistent
    Mat<K> kernel;       // RREF basis of ker(a), rows = basis vectors
};

/// Solves a·x = b; also returns the canonical kernel basis of a.
template <ScalarField K>
SolveResult<K> solve(const Mat<K>& a, const Vec<K>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.cols();
    Mat<K> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto r = rref(aug);

    SolveResult<K> out;
    out.consistent = true;
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        if (r.pivots[k] == n) out.consistent = false;

    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_row(n, 0);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        if (r.pivots[k] < n) {
            is_pivot[r.pivots[k]] = true;
            pivot_row[r.pivots[k]] = k;
        }
    }

    if (out.consistent) {
        out.particular.assign(n, K{});
        for (std::size_t j = 0; j < n; ++j)
            if (is_pivot[j]) out.particular[j] = r.mat.at(pivot_row[j], n);
    }

    RrefBuilder<K> ker(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(n);
        v[f] = K(1);
        for (std::size_t j = 0; j < n; ++j)
            if (is_pivot[j]) v[j] = -r.mat.at(pivot_row[j], f);
        ker.add(std::move(v));
    }
    out.kernel = ker.basis();
    return out;
}

/// Canonical kernel basis (rows) of a.
template <ScalarField K>
Mat<K> kernel(const Mat<K>& a) {
    return solve(a, Vec<K>(a.rows())).kernel;
}

template <ScalarField K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    auto r = rref(aug);
    if (r.mat.rows() != n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k)
        if (r.pivots[k] != k) return std::nullopt;
    Mat<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

/// Flattens row-major: vec(outer(y, x))[(r, t)] = y[r] * x[t].
template <ScalarField K>
Vec<K> vec_outer(const Vec<K>& y, const Vec<K>& x) {
    Vec<K> out(y.size() * x.size());
    for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r].is_zero()) continue;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (!x[t].is_zero()) out[r * x.size() + t] = y[r] * x[t];
    }
    return out;
}

/// Applies (L ⊗ I) to a flattened tensor without materializing the product.
template <ScalarField K>
Vec<K> apply_kron_left(const Mat<K>& l, const Vec<K>& v, std::size_t fdim, std::size_t edim) {
    Vec<K> out(l.rows() * edim);
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t r = 0; r < fdim; ++r) {
            const K& c = l.at(i, r);
            if (c.is_zero()) continue;
            for (std::size_t t = 0; t < edim; ++t) {
                const K& x = v[r * edim + t];
                if (!x.is_zero()) out[i * edim + t] += c * x;
            }
        }
    return out;
}

/// Applies (I ⊗ R) to a flattened tensor.
template <ScalarField K>
Vec<K> apply_kron_right(const Mat<K>& r, const Vec<K>& v, std::size_t fdim, std::size_t edim) {
    Vec<K> out(fdim * r.rows());
    for (std::size_t row = 0; row < fdim; ++row)
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t t = 0; t < edim; ++t) {
                const K& c = r.at(i, t);
                if (c.is_zero()) continue;
                const K& x = v[row * edim + t];
                if (!x.is_zero()) out[row * r.rows() + i] += c * x;
            }
    return out;
}

/// Applies (A ⊗ B) to a flattened tensor, v indexed by (fdim, edim).
template <ScalarField K>
Vec<K> apply_kron(const Mat<K>& a, const Mat<K>& b, const Vec<K>& v,
                  std::size_t fdim, std::size_t edim) {
    return apply_kron_right(b, apply_kron_left(a, v, fdim, edim), a.rows(), edim);
}

}  // namespace coiso
