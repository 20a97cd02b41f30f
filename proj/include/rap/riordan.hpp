#pragma once

#include <vector>

#include "rap/circulant.hpp"

namespace rap {

/// Lower-triangular table; row n stores columns 0..n.
template <class T>
struct LowerTriangular {
    std::vector<std::vector<T>> rows;

    std::size_t size() const { return rows.size(); }
    /// Entry (n, k); zero above the diagonal.
    T at(std::size_t n, std::size_t k) const { return k <= n ? rows[n][k] : Scalar<T>::zero(); }
};

/// Column k of the array: prefix of 1 + (k-1)(d+1) entries, then `block`
/// repeated forever.
template <class T>
struct ColumnStructure {
    int k = 1;
    std::vector<T> prefix;
    std::vector<T> block;
};

namespace detail {

/// Generating function of column k: (t p)^k / (1 - t^(d+1)).
template <class T>
Fps<T> column_series(const PolySpec<T>& p, unsigned long k, std::size_t n_terms) {
    return fps_expand_rational(poly_pow(p.tp(), k), one_minus_tn<T>(p.dim()), n_terms);
}

/// (t p)^k / ((1 - t)(1 - t^(d+1))).
template <class T>
Fps<T> psum_series(const PolySpec<T>& p, unsigned long k, std::size_t n_terms) {
    const Poly<T> den = one_minus_tn<T>(1) * one_minus_tn<T>(p.dim());
    return fps_expand_rational(poly_pow(p.tp(), k), den, n_terms);
}

inline std::size_t prefix_len(int d, int k) { return 1 + static_cast<std::size_t>(k - 1) * (d + 1); }

} // namespace detail

/// C_{n,k} = [t^n] (t p)^k / (1 - t^(d+1)).
template <class T>
T ra_entry(const PolySpec<T>& p, std::size_t n, std::size_t k) {
    if (n < k) return Scalar<T>::zero();
    return detail::column_series(p, k, n + 1).coeff(n);
}

template <class T>
LowerTriangular<T> ra_matrix(const PolySpec<T>& p, std::size_t n_rows) {
    LowerTriangular<T> out;
    out.rows.resize(n_rows);
    for (std::size_t n = 0; n < n_rows; ++n) out.rows[n].resize(n + 1);
    for (std::size_t k = 0; k < n_rows; ++k) {
        const auto col = detail::column_series(p, k, n_rows);
        for (std::size_t n = k; n < n_rows; ++n) out.rows[n][k] = col.coeff(n);
    }
    return out;
}

/// Splits column k into its prefix and repeating block, checking the block
/// over three more periods and against V^k (0, ..., 0, 1)^T.
template <class T>
ColumnStructure<T> column_structure(const PolySpec<T>& p, int k, double tol = kDefaultTol) {
    if (k < 1) throw Error(ErrorKind::InvalidInput, "column index must be at least 1");
    const int n = p.dim();
    const std::size_t m = detail::prefix_len(p.degree(), k);
    const auto col = detail::column_series(p, k, m + 4 * static_cast<std::size_t>(n));
    ColumnStructure<T> cs;
    cs.k = k;
    cs.prefix.assign(col.coeffs().begin(), col.coeffs().begin() + m);
    cs.block.assign(col.coeffs().begin() + m, col.coeffs().begin() + m + n);
    for (std::size_t i = m + n; i < col.truncation(); ++i)
        if (!Scalar<T>::equal(col.coeff(i), cs.block[(i - m) % n], tol))
            throw Error(ErrorKind::InternalInconsistency,
                        "column " + std::to_string(k) + " does not repeat at index " + std::to_string(i));
    std::vector<T> e(n, Scalar<T>::zero());
    e.back() = Scalar<T>::one();
    const auto vk = mat_power(circulant_of(p), k).apply(e);
    for (int i = 0; i < n; ++i)
        if (!Scalar<T>::equal(vk[i], cs.block[i], tol))
            throw Error(ErrorKind::InternalInconsistency,
                        "column " + std::to_string(k) + " block differs from the circulant power");
    return cs;
}

/// S_[k] = [t^((k-1)(d+1))] (t p)^k / ((1 - t)(1 - t^(d+1))).
template <class T>
T partial_sum_column(const PolySpec<T>& p, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidInput, "column index must be at least 1");
    const std::size_t idx = detail::prefix_len(p.degree(), k) - 1;
    return detail::psum_series(p, k, idx + 1).coeff(idx);
}

/// h_{n,k} = [t^n] (t p)^k / ((1 - t)(1 - t^(d+1))).
template <class T>
T psum_array_entry(const PolySpec<T>& p, std::size_t n, std::size_t k) {
    return detail::psum_series(p, k, n + 1).coeff(n);
}

/**
 * S_[1], ..., S_[count] computed incrementally from p^k.
 *
 * With m = (k-1)d - 1 and w(j) = floor(j/(d+1)) + 1 (the coefficients of
 * 1/((1-t)(1-t^(d+1)))), S_[k] = sum_{j<=m} [t^j]p^k * w(m-j).  This is a
 * separate path from partial_sum_column, which expands the full series.
 */
template <class T>
std::vector<T> psum_sequence(const PolySpec<T>& p, int count) {
    const int d = p.degree();
    std::vector<T> out;
    out.reserve(count);
    Poly<T> pk = p.poly();
    for (int k = 1; k <= count; ++k) {
        if (k > 1) pk = pk * p.poly();
        T s = Scalar<T>::zero();
        const long m = static_cast<long>(k - 1) * d - 1;
        for (long j = 0; j <= m && j < static_cast<long>(pk.size()); ++j) {
            const long w = (m - j) / (d + 1) + 1;
            s = s + pk.coeffs()[j] * Scalar<T>::from_rat(Rat(w));
        }
        out.push_back(s);
    }
    return out;
}

} // namespace rap
