#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "rap/cyclo.hpp"

namespace rap {

/// Absolute tolerance used by float-mode comparisons unless overridden.
inline constexpr double kDefaultTol = 1e-9;

enum class Mode { Exact, Float };

template <class T>
struct Scalar;

template <>
struct Scalar<Cyclo> {
    static constexpr bool exact = true;
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1); }
    static Cyclo from(const Cyclo& x) { return x; }
    static Cyclo from_rat(const Rat& r) { return Cyclo(r); }
    static bool is_zero(const Cyclo& x, double = 0) { return x.is_zero(); }
    static bool equal(const Cyclo& a, const Cyclo& b, double = 0) { return a == b; }
    static ComplexF to_complex(const Cyclo& x) { return x.to_complex(); }
    static Cyclo conj(const Cyclo& x) { return x.conj(); }
};

template <>
struct Scalar<ComplexF> {
    static constexpr bool exact = false;
    static ComplexF zero() { return {0.0, 0.0}; }
    static ComplexF one() { return {1.0, 0.0}; }
    static ComplexF from(const Cyclo& x) { return x.to_complex(); }
    static ComplexF from_rat(const Rat& r) { return {r.to_double(), 0.0}; }
    static bool is_zero(const ComplexF& x, double tol = kDefaultTol) { return std::abs(x) <= tol; }
    static bool equal(const ComplexF& a, const ComplexF& b, double tol = kDefaultTol) {
        return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
    }
    static ComplexF to_complex(const ComplexF& x) { return x; }
    static ComplexF conj(const ComplexF& x) { return std::conj(x); }
};

/// A value that is either exact or a float approximation; used where one
/// result type must carry both (classification parameters, JSON).
using AnyScalar = std::variant<Cyclo, ComplexF>;

inline ComplexF any_to_complex(const AnyScalar& v) {
    return std::visit([](const auto& x) { return Scalar<std::decay_t<decltype(x)>>::to_complex(x); }, v);
}

} // namespace rap
