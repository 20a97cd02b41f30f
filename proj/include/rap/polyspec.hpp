#pragma once

#include <vector>

#include "rap/poly.hpp"

namespace rap {

/// Input polynomial p(t) = a_0 + a_1 t + ... + a_d t^d with a_0 != 0.
/// Trailing zero coefficients are dropped so that a_d != 0.
template <class T>
class PolySpec {
public:
    explicit PolySpec(std::vector<T> a) : a_(std::move(a)) {
        while (a_.size() > 1 && Scalar<T>::is_zero(a_.back(), 0)) a_.pop_back();
        if (a_.empty() || Scalar<T>::is_zero(a_.front(), 0))
            throw Error(ErrorKind::InvalidPolynomial, "constant term must be nonzero");
    }

    int degree() const { return static_cast<int>(a_.size()) - 1; }
    /// d + 1, the size of the circulant matrix and the column period.
    int dim() const { return static_cast<int>(a_.size()); }
    const std::vector<T>& coeffs() const { return a_; }
    const T& operator[](std::size_t i) const { return a_[i]; }

    Poly<T> poly() const { return Poly<T>(a_); }
    /// t * p(t).
    Poly<T> tp() const { return poly().shifted(1); }

    T coeff_sum() const {
        T s = Scalar<T>::zero();
        for (const auto& x : a_) s = s + x;
        return s;
    }

private:
    std::vector<T> a_;
};

/// Float copy of an exact polynomial.
inline PolySpec<ComplexF> to_float(const PolySpec<Cyclo>& p) {
    std::vector<ComplexF> a;
    for (const auto& x : p.coeffs()) a.push_back(x.to_complex());
    return PolySpec<ComplexF>(std::move(a));
}

} // namespace rap
