#pragma once

#include <cstddef>
#include <string>

#include "coiso/algebra.hpp"

namespace coiso::fixtures {

/// Upper-triangular 2×2 matrices, basis (E11, E12, E22).
template <ScalarField K>
Algebra<K> t2() {
    std::vector<K> c(27);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * 3 + j) * 3 + k] = K(1); };
    set(0, 0, 0);  // E11 E11 = E11
    set(0, 1, 1);  // E11 E12 = E12
    set(1, 2, 1);  // E12 E22 = E12
    set(2, 2, 2);  // E22 E22 = E22
    return Algebra<K>(3, std::move(c), {K(1), K(0), K(1)}, "T2");
}

/// Full 2×2 matrix algebra, basis (E11, E12, E21, E22).
template <ScalarField K>
Algebra<K> m2() {
    std::vector<K> c(64);
    auto idx = [](std::size_t r, std::size_t s) { return r * 2 + s; };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (j == k) c[(idx(i, j) * 4 + idx(k, l)) * 4 + idx(i, l)] = K(1);
    return Algebra<K>(4, std::move(c), {K(1), K(0), K(0), K(1)}, "M2");
}

/// k[x]/(x^n), basis (1, x, ..., x^{n-1}).
template <ScalarField K>
Algebra<K> truncated_poly(std::size_t n, std::string label = {}) {
    std::vector<K> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) c[(i * n + j) * n + (i + j)] = K(1);
    Vec<K> unit(n);
    unit[0] = K(1);
    if (label.empty()) label = "k[x]/(x^" + std::to_string(n) + ")";
    return Algebra<K>(n, std::move(c), std::move(unit), std::move(label));
}

/// k × ... × k (n factors), componentwise product.
template <ScalarField K>
Algebra<K> product_field(std::size_t n, std::string label = {}) {
    std::vector<K> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = K(1);
    Vec<K> unit(n, K(1));
    if (label.empty()) label = "k^" + std::to_string(n);
    return Algebra<K>(n, std::move(c), std::move(unit), std::move(label));
}

/// Dual numbers k[λ]/(λ²) with the deformation parameter in degree one.
template <ScalarField K>
Algebra<K> dual_numbers() {
    return truncated_poly<K>(2, "DUAL");
}

template <ScalarField K>
Vec<K> dual_lambda() {
    return {K(0), K(1)};
}

/// Basis (1, x, λ, λx) with x² = λ, λ central, λ² = 0; concretely k[x]/(x⁴)
/// with λ designated as x².
template <ScalarField K>
Algebra<K> cliff() {
    return truncated_poly<K>(4, "CLIFF");
}

template <ScalarField K>
Vec<K> cliff_lambda() {
    return {K(0), K(0), K(1), K(0)};
}

/// J_col: the left ideal of M2 generated by E11 (matrices with zero second column).
template <ScalarField K>
Subspace<K> j_col() {
    auto a = m2<K>();
    return left_ideal(a, {a.basis_vector(0)});
}

}  // namespace coiso::fixtures
