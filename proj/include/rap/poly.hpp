#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "rap/error.hpp"
#include "rap/scalar.hpp"

namespace rap {

/// Dense univariate polynomial, lowest degree first, trailing zeros trimmed.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, Scalar<T>::zero());
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of t^i, zero beyond the degree.
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar<T>::zero(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> out(std::max(a.size(), b.size()), Scalar<T>::zero());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.c_[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(T(-Scalar<T>::one())); }
    friend Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

    Poly scaled(const T& s) const {
        std::vector<T> out = c_;
        for (auto& x : out) x = x * s;
        return Poly(std::move(out));
    }

    /// Multiply by t^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<T> out(k, Scalar<T>::zero());
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!Scalar<T>::equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    friend Poly poly_mul(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.size() + b.size() - 1, Scalar<T>::zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (Scalar<T>::is_zero(a.c_[i], 0)) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && Scalar<T>::is_zero(c_.back(), 0)) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
Poly<T> poly_pow(const Poly<T>& p, unsigned long k) {
    Poly<T> result{Scalar<T>::one()};
    Poly<T> base = p;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

template <class T>
T poly_eval(const Poly<T>& p, const T& x) {
    T acc = Scalar<T>::zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
    return acc;
}

/// 1 - t^n.
template <class T>
Poly<T> one_minus_tn(std::size_t n) {
    return Poly<T>{Scalar<T>::one()} - Poly<T>::monomial(Scalar<T>::one(), n);
}

/// Truncated formal power series: exactly `truncation` coefficients.
template <class T>
class Fps {
public:
    explicit Fps(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

    std::size_t truncation() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }

    const T& coeff(std::size_t n) const {
        if (n >= c_.size())
            throw Error(ErrorKind::TruncationExceeded, "coefficient " + std::to_string(n) +
                                                           " requested from a series truncated at " +
                                                           std::to_string(c_.size()));
        return c_[n];
    }

private:
    std::vector<T> c_;
};

template <class T>
const T& coeff_of(const Fps<T>& f, std::size_t n) {
    return f.coeff(n);
}

/// Product truncated to the shorter of the two series.
template <class T>
Fps<T> fps_mul(const Fps<T>& f, const Fps<T>& g) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    std::vector<T> out(n, Scalar<T>::zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] = out[i + j] + f.coeffs()[i] * g.coeffs()[j];
    return Fps<T>(std::move(out));
}

/// First n_terms coefficients of numer/denom by long division.
template <class T>
Fps<T> fps_expand_rational(const Poly<T>& numer, const Poly<T>& denom, std::size_t n_terms) {
    if (denom.is_zero() || Scalar<T>::is_zero(denom[0], 0))
        throw Error(ErrorKind::NonUnitConstantTerm, "denominator has zero constant term");
    const T inv0 = Scalar<T>::one() / denom[0];
    std::vector<T> out(n_terms, Scalar<T>::zero());
    for (std::size_t n = 0; n < n_terms; ++n) {
        T acc = numer[n];
        const std::size_t top = std::min<std::size_t>(n, denom.size() - 1);
        for (std::size_t j = 1; j <= top; ++j)
            if (!Scalar<T>::is_zero(denom.coeffs()[j], 0)) acc = acc - denom.coeffs()[j] * out[n - j];
        out[n] = acc * inv0;
    }
    return Fps<T>(std::move(out));
}

} // namespace rap
