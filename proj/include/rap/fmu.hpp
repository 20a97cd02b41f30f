#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rap/rat.hpp"

namespace rap {

/// The rational polynomial f_mu(t) whose real roots r parameterize the
/// periodic quadratics a(1 - t)(1 + (r+1)t).  Coefficients lowest first,
/// trailing zeros trimmed.
struct FmuPoly {
    int mu = 1;
    std::vector<Rat> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rat eval(const Rat& x) const;
};

/**
 * f_mu(t) = sum_i (-t)^i C(mu, i) q_i with
 *   q_i = ((xi^i + xibar^i) - (-1)^mu (xi^(mu-i) + xibar^(mu-i)))
 *         / (2 - (-1)^mu (xi^mu + xibar^mu))            if 6 does not divide mu,
 *   q_i = (xi^i - xibar^i) / sqrt(-3)                    if 6 divides mu,
 * for xi = zeta_3.  Both branches are rational: xi^j + xibar^j is 2 or -1
 * and (xi^j - xibar^j)/sqrt(-3) is 0, 1 or -1.
 */
FmuPoly f_mu(int mu);

/// Coefficients of f_mu scaled by the lcm of their denominators, mu + 1 of
/// them, signed so the lowest-degree nonzero entry is positive.
std::vector<BigInt> f_mu_integer_row(int mu);

struct RealRoot {
    double approx = 0;
    /// Isolating interval, width at most the requested precision.
    Rat lo, hi;
    std::optional<Rat> exact;
    /// "1/2", "-2-√3" and the like when a closed form is known.
    std::string closed_form;
};

/// All distinct real roots of a nonzero rational polynomial, ascending.
std::vector<RealRoot> real_roots(const std::vector<Rat>& poly, double precision);

inline std::vector<RealRoot> real_roots(const FmuPoly& f, double precision) {
    return real_roots(f.coeffs, precision);
}

/// "1 + 4t - 4t^3 - t^4".
std::string format_rat_poly(const std::vector<Rat>& coeffs, const std::string& var = "t");

} // namespace rap
