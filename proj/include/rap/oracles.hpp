#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rap/poly.hpp"

namespace rap {

/// Outcome of comparing a closed form (rhs) against series extraction (lhs)
/// over a parameter range.
struct IdentityReport {
    std::string id;
    std::string range;
    std::vector<std::string> labels;  ///< parameter values, one per comparison
    std::vector<Cyclo> lhs;
    std::vector<Cyclo> rhs;
    bool pass = true;
    std::optional<std::size_t> first_mismatch;

    void add(std::string label, Cyclo l, Cyclo r);
};

/// [t^(2k-3)] (1-t^2)^(k-2) (1+t)^2 / (1+t+t^2) against
/// Im((2 eta / sqrt 3)(xi - 1)^(k-2)), eta = zeta_6, xi = zeta_3, in Q(zeta_12).
std::pair<Cyclo, Cyclo> lemma6_pair(int k);

enum class Lemma7Variant { EQ3, EQ3B };

/**
 * EQ3:  [t^(2k-i)] (1-t)^(k-2) (1-xi t)^(k-1) / (1 - xi^2 t)  vs  3^(k-2) (xi-1) xi^(k+i-1)
 * EQ3B: [t^(2k-i)] (1-t)^(k-2) (1-xi^2 t)^(k-1) / (1 - xi t)  vs  3^(k-2) (1-xi) xi^(2k-i)
 * The identity is claimed for 0 <= i <= 3.  Larger i is accepted so the
 * failure beyond that range can be shown.
 */
std::pair<Cyclo, Cyclo> lemma7_pair(int k, int i, Lemma7Variant variant);

/// sum_{n=0}^{k-2} C(k,n) floor((k-n)/2) b^n a^(k-n).
Cyclo prop9_sum(const Cyclo& a, const Cyclo& b, int k);

/// (sum_{n=0}^k (-1)^n C(k,n) floor((k-n)/2), (-2)^(k-2)).
std::pair<Rat, Rat> corollary_check(int k);

/// a^2 / ((1 + (a-b)t)(1 - (a+b)t)^2); term j is S_[j+2] of a + b t.
Fps<Cyclo> gf_linear_expand(const Cyclo& a, const Cyclo& b, std::size_t n_terms);

/// a^2 (1 + 2ax) / (1 + 3ax + 3a^2 x^2); term j is S_[j+2] of a(1 - t^2).
Fps<Cyclo> gf_case_b0_expand(const Cyclo& a, std::size_t n_terms);
Fps<ComplexF> gf_case_b0_expand(ComplexF a, std::size_t n_terms);

/// (2 / (3 sqrt 3)) (-a sqrt 3)^k sin((k-4) pi / 6), exactly as printed for
/// the r = 0 partial sums.
Cyclo sk1_printed(const Cyclo& a, int k);
/// a^k times the right side of the sine identity checked by lemma6_pair,
/// 2 a^k (-sqrt 3)^(k-3) sin((k-4) pi / 6).  This is what series extraction
/// gives; it is the negative of sk1_printed.
Cyclo sk1_from_lemma6(const Cyclo& a, int k);

IdentityReport lemma6_suite(int k_max);
IdentityReport lemma7_suite(int k_max, int i_max, Lemma7Variant variant);
/// prop9_sum against partial_sum_column for each (a, b), 1 <= k <= k_max.
IdentityReport prop9_suite(int k_max, const std::vector<std::pair<Cyclo, Cyclo>>& pairs);
IdentityReport corollary_suite(int k_max);
/// GF coefficients against partial_sum_column shifted by 2.
IdentityReport gf_linear_suite(const Cyclo& a, const Cyclo& b, int n_terms);
IdentityReport gf_case_b0_suite(const Cyclo& a, int n_terms);
/// Closed form sk1_printed against the same series extraction.
IdentityReport sk1_printed_suite(const Cyclo& a, int n_terms);

/// Random eventually periodic sequences over Q(zeta_6) (preperiod <= 6,
/// period <= 8) sent through gf_from_periodic, series expansion and
/// detect_eventual_period; each must come back equal to its minimized form.
IdentityReport lemma4_roundtrip_suite(std::uint64_t seed, int cases);

/// Default pairs for the prop9 suite: rationals and roots-of-unity scalings.
std::vector<std::pair<Cyclo, Cyclo>> prop9_default_pairs();

/// Named suites for the command line: lemma6, lemma7, prop9, corollary,
/// gflinear, gfb0, lemma4, all.  Throws InvalidInput for an unknown name.
std::vector<IdentityReport> run_suite(const std::string& name, int k_max, std::uint64_t seed = 20261016);
std::vector<std::string> suite_names();

} // namespace rap
