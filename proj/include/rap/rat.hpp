#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rap {

using BigInt = mpz_class;

/**
 * Arbitrary-precision rational number backed by GMP.
 *
 * Always kept in lowest terms with a positive denominator; zero is 0/1.
 * The wrapper exists so that GMP's expression templates never leak into
 * `auto` declarations elsewhere in the library.
 */
class Rat {
public:
    Rat() = default;
    Rat(long value) : v_(value) {}
    Rat(int value) : v_(static_cast<long>(value)) {}
    Rat(const BigInt& value) : v_(value) {}
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Exact value of a finite double.
    static Rat from_double(double x) { return Rat(mpq_class(x)); }

    /// Parses `INT` or `INT/POSINT` (optional leading sign).
    static Rat parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rat inv() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    /// Multiply in place by a machine integer; used by cyclotomic reduction.
    void addmul(const Rat& x, long factor);

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

Rat pow(const Rat& base, long exponent);

/// Binomial coefficient C(n, k) as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

} // namespace rap

template <>
struct std::hash<rap::Rat> {
    std::size_t operator()(const rap::Rat& r) const { return std::hash<std::string>{}(r.str()); }
};
