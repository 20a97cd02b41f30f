#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "rap/polyspec.hpp"

namespace rap {

/// Square circulant matrix; row i is row 0 cyclically shifted right i times.
template <class T>
class CircMat {
public:
    explicit CircMat(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {}

    static CircMat identity(int n) {
        std::vector<std::vector<T>> r(n, std::vector<T>(n, Scalar<T>::zero()));
        for (int i = 0; i < n; ++i) r[i][i] = Scalar<T>::one();
        return CircMat(std::move(r));
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<T>>& rows() const { return rows_; }
    const T& at(int i, int j) const { return rows_[i][j]; }

    bool is_circulant(double tol = 0) const {
        const int n = dim();
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!Scalar<T>::equal(rows_[i][j], rows_[0][((j - i) % n + n) % n], tol)) return false;
        return true;
    }

    friend CircMat operator*(const CircMat& a, const CircMat& b) {
        const int n = a.dim();
        std::vector<std::vector<T>> r(n, std::vector<T>(n, Scalar<T>::zero()));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (Scalar<T>::is_zero(a.rows_[i][k], 0)) continue;
                for (int j = 0; j < n; ++j) r[i][j] = r[i][j] + a.rows_[i][k] * b.rows_[k][j];
            }
        return CircMat(std::move(r));
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        const int n = dim();
        std::vector<T> y(n, Scalar<T>::zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y[i] = y[i] + rows_[i][j] * x[j];
        return y;
    }

    bool equals(const CircMat& o, double tol) const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (!Scalar<T>::equal(rows_[i][j], o.rows_[i][j], tol)) return false;
        return true;
    }

private:
    std::vector<std::vector<T>> rows_;
};

/// Preperiod k and period mu with V^(k+mu) = V^k, both minimal.
struct PeriodInfo {
    int preperiod = 0;
    int period = 1;
    /// True when preperiod is 0, i.e. the period is the multiplicative order.
    bool is_order() const { return preperiod == 0; }
};

/// Row 0 is (a_d, ..., a_0); row i is row 0 shifted right i places.
template <class T>
CircMat<T> circulant_of(const PolySpec<T>& p) {
    const int n = p.dim();
    std::vector<std::vector<T>> rows(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = p[n - 1 - (((j - i) % n + n) % n)];
    return CircMat<T>(std::move(rows));
}

template <class T>
CircMat<T> mat_power(const CircMat<T>& v, unsigned long k) {
    CircMat<T> result = CircMat<T>::identity(v.dim());
    CircMat<T> base = v;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

/// 4 * lcm(2, ..., d+1) * 64.
inline long default_max_steps(int d) {
    long l = 2;
    for (long i = 2; i <= d + 1; ++i) l = std::lcm(l, i);
    return 4 * l * 64;
}

namespace detail {

// Keys are only comparable within one field, so exact states are embedded
// into the common order of everything the walk can produce.
inline std::string state_key(const std::vector<Cyclo>& xs, double, int order) {
    std::string k;
    for (const auto& x : xs) {
        k += x.embed(order).key();
        k += '|';
    }
    return k;
}

inline std::string state_key(const std::vector<ComplexF>& xs, double tol, int) {
    // Float states are bucketed on a grid much coarser than the comparison
    // tolerance, then confirmed entrywise.
    const double grid = std::max(tol * 1e3, 1e-7);
    std::string k;
    for (const auto& x : xs) {
        k += std::to_string(std::llround(x.real() / grid));
        k += ',';
        k += std::to_string(std::llround(x.imag() / grid));
        k += '|';
    }
    return k;
}

inline int field_order(const std::vector<Cyclo>& xs) { return common_order(xs); }
inline int field_order(const std::vector<ComplexF>&) { return 1; }

template <class T>
std::vector<T> flatten(const CircMat<T>& m) {
    std::vector<T> out;
    for (const auto& r : m.rows()) out.insert(out.end(), r.begin(), r.end());
    return out;
}

template <class T>
bool all_bounded(const std::vector<T>& xs, double tol) {
    for (const auto& x : xs)
        if (std::abs(Scalar<T>::to_complex(x)) > 1.0 + std::max(tol, 1e-9)) return false;
    return true;
}

/// Walks x_0, f(x_0), f(f(x_0)), ... until a state repeats.  Returns every
/// state visited (without the repeat) and the resulting period information.
template <class S, class Step, class Flatten>
std::pair<std::vector<S>, PeriodInfo> find_cycle(S start, Step step, Flatten flat, long max_steps, double tol,
                                                  int order, bool unit_bounded, const char* what) {
    using T = typename decltype(flat(start))::value_type;
    std::unordered_map<std::string, std::vector<int>> seen;
    std::vector<S> states;
    S cur = std::move(start);
    for (long i = 0; i <= max_steps; ++i) {
        const auto f = flat(cur);
        // A periodic circulant orbit stays inside the closed unit disc once
        // past index 1, so anything larger can never come back.
        if (unit_bounded && i >= 1 && !all_bounded(f, tol)) break;
        const std::string key = state_key(f, tol, order);
        auto it = seen.find(key);
        if (it != seen.end()) {
            for (int j : it->second) {
                const auto g = flat(states[j]);
                bool same = true;
                for (std::size_t e = 0; e < f.size() && same; ++e) same = Scalar<T>::equal(f[e], g[e], tol);
                if (same) return {std::move(states), PeriodInfo{j, static_cast<int>(i) - j}};
            }
        }
        seen[key].push_back(static_cast<int>(i));
        states.push_back(cur);
        cur = step(cur);
    }
    throw Error(ErrorKind::PeriodNotFound, std::string("no repetition of the ") + what + " within " +
                                               std::to_string(max_steps) + " steps");
}

} // namespace detail

/// Preperiod and period of I, V, V^2, ... (V^0 = I counts as index 0).
template <class T>
PeriodInfo matrix_period(const CircMat<T>& v, long max_steps, double tol = kDefaultTol) {
    if constexpr (Scalar<T>::exact) {
        // V is normal, so its powers cycle iff every nonzero eigenvalue is a
        // root of unity; reject early instead of exhausting the budget.
        for (const auto& lam : eigenvalues(v))
            if (!lam.is_zero() && !is_root_of_unity(lam))
                throw Error(ErrorKind::PeriodNotFound, "an eigenvalue of modulus " +
                                                           std::to_string(std::abs(lam.to_complex())) +
                                                           " is not a root of unity; powers never repeat");
    }
    const int order = detail::field_order(detail::flatten(v));
    return detail::find_cycle(
               CircMat<T>::identity(v.dim()), [&](const CircMat<T>& m) { return m * v; },
               [](const CircMat<T>& m) { return detail::flatten(m); }, max_steps, tol, order, true, "matrix powers")
        .second;
}

/// Forward orbit x0, V x0, V^2 x0, ... up to the first revisit.
template <class T>
std::pair<std::vector<std::vector<T>>, PeriodInfo> orbit(const CircMat<T>& v, const std::vector<T>& x0,
                                                         long max_steps, double tol = kDefaultTol) {
    if (static_cast<int>(x0.size()) != v.dim())
        throw Error(ErrorKind::InvalidInput, "orbit start vector has the wrong dimension");
    std::vector<T> all = detail::flatten(v);
    all.insert(all.end(), x0.begin(), x0.end());
    return detail::find_cycle(
        x0, [&](const std::vector<T>& x) { return v.apply(x); }, [](const std::vector<T>& x) { return x; },
        max_steps, tol, detail::field_order(all), false, "orbit");
}

/// lambda_l = nu_0 + xi^l nu_1 + ... + xi^(ld) nu_d for l = 1..d+1, where nu
/// is row 0 and xi = zeta_(d+1).  Element l-1 of the result is lambda_l, so
/// the last entry is the coefficient sum.
inline std::vector<Cyclo> eigenvalues(const CircMat<Cyclo>& v) {
    const int n = v.dim();
    std::vector<Cyclo> out;
    for (int l = 1; l <= n; ++l) {
        Cyclo lam;
        for (int m = 0; m < n; ++m) lam += v.at(0, m) * Cyclo::root(n, static_cast<long>(l) * m);
        out.push_back(lam);
    }
    return out;
}

/// Float eigenvalues with the same indexing as the exact version.
inline std::vector<ComplexF> eigenvalues(const CircMat<ComplexF>& v) {
    const int n = v.dim();
    std::vector<ComplexF> out;
    for (int l = 1; l <= n; ++l) {
        ComplexF lam{0, 0};
        for (int m = 0; m < n; ++m) lam += v.at(0, m) * std::polar(1.0, 2 * M_PI * l * m / n);
        out.push_back(lam);
    }
    return out;
}

/// p_k(t) = (1, t, ..., t^d) V^k (a_0, ..., a_d)^T.
template <class T>
Poly<T> pk_poly(const PolySpec<T>& p, unsigned long k) {
    return Poly<T>(mat_power(circulant_of(p), k).apply(p.coeffs()));
}

} // namespace rap
