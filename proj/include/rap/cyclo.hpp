#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rap/rat.hpp"

namespace rap {

using ComplexF = std::complex<double>;

/// Largest N accepted for Q(zeta_N). Defaults to 1024.
int max_root_order() noexcept;
void set_max_root_order(int n);

/// Euler phi, used for the dimension of Q(zeta_N) over Q.
int euler_phi(int n);

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
/// first. Memoized; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_poly(int n);

/**
 * Element of the cyclotomic field Q(zeta_N).
 *
 * Stored in the power basis zeta^0 .. zeta^(phi(N)-1) after reduction modulo
 * Phi_N, so two elements of the same order are equal iff their coefficient
 * vectors are.  Binary operations on elements of different orders embed both
 * into Q(zeta_lcm) first.  Rationals live in order 1.
 */
class Cyclo {
public:
    Cyclo() : order_(1), c_(1) {}
    Cyclo(const Rat& r) : order_(1), c_{r} {}
    Cyclo(long r) : Cyclo(Rat(r)) {}
    Cyclo(int r) : Cyclo(Rat(r)) {}

    /// Canonical representative of sum raw[j] * zeta_order^j.  raw may be
    /// longer than order; exponents are folded modulo order first.
    Cyclo(int order, const std::vector<Rat>& raw);

    /// zeta_order^k.
    static Cyclo root(int order, long k = 1);

    int order() const noexcept { return order_; }
    /// Power-basis coefficients (length phi(order)).
    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    /// Coefficients padded with zeros to length order.
    std::vector<Rat> padded() const;

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; only valid when is_rational().
    Rat rational() const;

    /// Same value in Q(zeta_target).  target must be a multiple of order()
    /// unless the value is rational.
    Cyclo embed(int target_order) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inv(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

    Cyclo inv() const;
    /// Complex conjugate: zeta^j -> zeta^-j.
    Cyclo conj() const;
    Cyclo pow(long exponent) const;

    /// Value equality; embeds into the lcm order when orders differ.
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    ComplexF to_complex() const;

    /// Order-tagged string, usable as a hash key.  Only elements of the same
    /// order are guaranteed to share a key when equal.
    std::string key() const;

private:
    void reduce_from(std::vector<Rat> raw);

    int order_;
    std::vector<Rat> c_;
};

std::optional<int> is_root_of_unity(const Cyclo& x);

/// Im(x) as an element of the same field: (x - conj x) / (2i).
Cyclo imag_part(const Cyclo& x);
Cyclo real_part(const Cyclo& x);

/// Common order of a list of elements (lcm of their orders).
int common_order(const std::vector<Cyclo>& xs);

long lcm_long(long a, long b);

} // namespace rap
