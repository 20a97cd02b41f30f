#include "rap/oracles.hpp"

#include "rap/error.hpp"
#include "rap/literal.hpp"
#include "rap/periodicity.hpp"
#include "rap/riordan.hpp"

#include <random>

namespace rap {

namespace {

using CPoly = Poly<Cyclo>;

Cyclo z12(long k) { return Cyclo::root(12, k); }
Cyclo sqrt3() { return z12(1) + z12(11); }
Cyclo xi() { return Cyclo::root(3); }

// sin(m pi / 6) as an element of Q(zeta_12).
Cyclo sin_sixth(long m) { return imag_part(z12(m)); }

Cyclo coefficient(const CPoly& num, const CPoly& den, long n) {
    if (n < 0) return Cyclo();
    return fps_expand_rational(num, den, static_cast<std::size_t>(n) + 1).coeff(n);
}

std::string kl(int k) { return "k=" + std::to_string(k); }

} // namespace

void IdentityReport::add(std::string label, Cyclo l, Cyclo r) {
    const bool ok = l == r;
    if (!ok && !first_mismatch) first_mismatch = lhs.size();
    pass = pass && ok;
    labels.push_back(std::move(label));
    lhs.push_back(std::move(l));
    rhs.push_back(std::move(r));
}

std::pair<Cyclo, Cyclo> lemma6_pair(int k) {
    if (k < 2) throw Error(ErrorKind::InvalidInput, "lemma6_pair needs k >= 2");
    const CPoly one_minus_t2{Cyclo(1), Cyclo(0), Cyclo(-1)};
    const CPoly one_plus_t{Cyclo(1), Cyclo(1)};
    const CPoly num = poly_pow(one_minus_t2, k - 2) * one_plus_t * one_plus_t;
    const CPoly den{Cyclo(1), Cyclo(1), Cyclo(1)};
    const Cyclo lhs = coefficient(num, den, 2L * k - 3);
    const Cyclo eta = z12(2);
    const Cyclo rhs = imag_part(Cyclo(2) * eta * sqrt3().inv() * (xi() - Cyclo(1)).pow(k - 2));
    return {lhs, rhs};
}

std::pair<Cyclo, Cyclo> lemma7_pair(int k, int i, Lemma7Variant variant) {
    if (k < 2 || i < 0 || i > 2 * k) throw Error(ErrorKind::InvalidInput, "lemma7_pair needs k >= 2 and 0 <= i <= 2k");
    const Cyclo x = xi();
    const Cyclo x2 = x * x;
    const Cyclo& top = variant == Lemma7Variant::EQ3 ? x : x2;
    const Cyclo& bottom = variant == Lemma7Variant::EQ3 ? x2 : x;
    const CPoly num = poly_pow(CPoly{Cyclo(1), Cyclo(-1)}, k - 2) * poly_pow(CPoly{Cyclo(1), -top}, k - 1);
    const CPoly den{Cyclo(1), -bottom};
    const Cyclo lhs = coefficient(num, den, 2L * k - i);
    const Cyclo scale = pow(Rat(3), k - 2);
    const Cyclo rhs = variant == Lemma7Variant::EQ3 ? scale * (x - Cyclo(1)) * x.pow(k + i - 1)
                                                    : scale * (Cyclo(1) - x) * x.pow(2L * k - i);
    return {lhs, rhs};
}

Cyclo prop9_sum(const Cyclo& a, const Cyclo& b, int k) {
    Cyclo s;
    for (int n = 0; n <= k - 2; ++n) s += Cyclo(binomial(k, n) * Rat((k - n) / 2)) * b.pow(n) * a.pow(k - n);
    return s;
}

std::pair<Rat, Rat> corollary_check(int k) {
    if (k < 2) throw Error(ErrorKind::InvalidInput, "corollary_check needs k >= 2");
    Rat lhs;
    for (int n = 0; n <= k; ++n) {
        const Rat term = binomial(k, n) * Rat((k - n) / 2);
        lhs = n % 2 ? lhs - term : lhs + term;
    }
    return {lhs, pow(Rat(-2), k - 2)};
}

Fps<Cyclo> gf_linear_expand(const Cyclo& a, const Cyclo& b, std::size_t n_terms) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::InvalidInput, "gf_linear_expand needs a*b != 0");
    const CPoly f1{Cyclo(1), a - b};
    const CPoly f2{Cyclo(1), -(a + b)};
    return fps_expand_rational(CPoly{a * a}, f1 * f2 * f2, n_terms);
}

Fps<Cyclo> gf_case_b0_expand(const Cyclo& a, std::size_t n_terms) {
    if (a.is_zero()) throw Error(ErrorKind::InvalidInput, "gf_case_b0_expand needs a != 0");
    const CPoly num{a * a, Cyclo(2) * a * a * a};
    const CPoly den{Cyclo(1), Cyclo(3) * a, Cyclo(3) * a * a};
    return fps_expand_rational(num, den, n_terms);
}

Fps<ComplexF> gf_case_b0_expand(ComplexF a, std::size_t n_terms) {
    if (a == ComplexF{}) throw Error(ErrorKind::InvalidInput, "gf_case_b0_expand needs a != 0");
    const Poly<ComplexF> num{a * a, 2.0 * a * a * a};
    const Poly<ComplexF> den{ComplexF{1, 0}, 3.0 * a, 3.0 * a * a};
    return fps_expand_rational(num, den, n_terms);
}

Cyclo sk1_printed(const Cyclo& a, int k) {
    const Cyclo s3 = sqrt3();
    return Cyclo(2) * (Cyclo(3) * s3).inv() * (-a * s3).pow(k) * sin_sixth(k - 4);
}

Cyclo sk1_from_lemma6(const Cyclo& a, int k) {
    return Cyclo(2) * a.pow(k) * (-sqrt3()).pow(k - 3) * sin_sixth(k - 4);
}

IdentityReport lemma6_suite(int k_max) {
    IdentityReport r;
    r.id = "lemma6";
    r.range = "2 <= k <= " + std::to_string(k_max);
    for (int k = 2; k <= k_max; ++k) {
        auto [l, rh] = lemma6_pair(k);
        r.add(kl(k), l, rh);
    }
    return r;
}

IdentityReport lemma7_suite(int k_max, int i_max, Lemma7Variant variant) {
    IdentityReport r;
    r.id = variant == Lemma7Variant::EQ3 ? "lemma7-eq3" : "lemma7-eq3b";
    r.range = "2 <= k <= " + std::to_string(k_max) + ", 0 <= i <= " + std::to_string(i_max);
    for (int k = 2; k <= k_max; ++k)
        for (int i = 0; i <= i_max && i <= 2 * k; ++i) {
            auto [l, rh] = lemma7_pair(k, i, variant);
            r.add(kl(k) + ",i=" + std::to_string(i), l, rh);
        }
    return r;
}

std::vector<std::pair<Cyclo, Cyclo>> prop9_default_pairs() {
    const Cyclo half(Rat(1, 2));
    return {
        {half, -half},
        {Cyclo(1), Cyclo(-1)},
        {half, half},
        {Cyclo(Rat(2, 3)), Cyclo(Rat(-1, 5))},
        {Cyclo::root(7, 2) * half, -Cyclo::root(7, 2) * half},
        {Cyclo::root(3), Cyclo(Rat(1, 3))},
        {Cyclo::root(12, 5) * Cyclo(Rat(1, 3)), Cyclo::root(4)},
    };
}

IdentityReport prop9_suite(int k_max, const std::vector<std::pair<Cyclo, Cyclo>>& pairs) {
    IdentityReport r;
    r.id = "prop9";
    r.range = "1 <= k <= " + std::to_string(k_max) + ", " + std::to_string(pairs.size()) + " (a, b) pairs";
    for (const auto& [a, b] : pairs) {
        const PolySpec<Cyclo> p({a, b});
        for (int k = 1; k <= k_max; ++k)
            r.add("a=" + format_cyclo(a, a.order()) + ",b=" + format_cyclo(b, b.order()) + "," + kl(k),
                  partial_sum_column(p, k), prop9_sum(a, b, k));
    }
    return r;
}

IdentityReport corollary_suite(int k_max) {
    IdentityReport r;
    r.id = "corollary";
    r.range = "2 <= k <= " + std::to_string(k_max);
    for (int k = 2; k <= k_max; ++k) {
        auto [l, rh] = corollary_check(k);
        r.add(kl(k), Cyclo(l), Cyclo(rh));
    }
    return r;
}

IdentityReport gf_linear_suite(const Cyclo& a, const Cyclo& b, int n_terms) {
    IdentityReport r;
    r.id = "gflinear";
    r.range = "a=" + format_cyclo(a, a.order()) + ", b=" + format_cyclo(b, b.order()) + ", " +
              std::to_string(n_terms) + " terms";
    const auto gf = gf_linear_expand(a, b, n_terms);
    const auto s = psum_sequence(PolySpec<Cyclo>({a, b}), n_terms + 1);
    for (int j = 0; j < n_terms; ++j) r.add(kl(j + 2), s[j + 1], gf.coeff(j));
    return r;
}

IdentityReport gf_case_b0_suite(const Cyclo& a, int n_terms) {
    IdentityReport r;
    r.id = "gfb0";
    r.range = "a=" + format_cyclo(a, a.order()) + ", " + std::to_string(n_terms) + " terms";
    const auto gf = gf_case_b0_expand(a, n_terms);
    const PolySpec<Cyclo> p({a, Cyclo(), -a});
    for (int j = 0; j < n_terms; ++j) r.add(kl(j + 2), partial_sum_column(p, j + 2), gf.coeff(j));
    return r;
}

IdentityReport sk1_printed_suite(const Cyclo& a, int n_terms) {
    IdentityReport r;
    r.id = "sk1-printed";
    r.range = "a=" + format_cyclo(a, a.order()) + ", 1 <= k <= " + std::to_string(n_terms);
    const auto s = psum_sequence(PolySpec<Cyclo>({a, Cyclo(), -a}), n_terms);
    for (int k = 1; k <= n_terms; ++k) r.add(kl(k), s[k - 1], sk1_printed(a, k));
    return r;
}

IdentityReport lemma4_roundtrip_suite(std::uint64_t seed, int cases) {
    IdentityReport r;
    r.id = "lemma4";
    r.range = std::to_string(cases) + " random sequences, seed " + std::to_string(seed);
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto random_value = [&]() {
        // Small rationals times a power of zeta_6, zero now and then.
        if (pick(0, 5) == 0) return Cyclo();
        return Cyclo(Rat(pick(-9, 9), pick(1, 6))) * Cyclo::root(6, pick(0, 5));
    };
    for (int c = 0; c < cases; ++c) {
        EventualPeriod<Cyclo> ep;
        const int k = pick(0, 6);
        const int n = pick(1, 8);
        for (int i = 0; i < k; ++i) ep.prefix.push_back(random_value());
        for (int i = 0; i < n; ++i) ep.block.push_back(random_value());
        ep.preperiod = k;
        ep.period = n;
        const auto expected = minimize(ep);
        const auto [num, den] = gf_from_periodic(ep);
        const std::size_t len = 2 * (k + 2 * n) + 4;
        const auto series = fps_expand_rational(num, den, len);
        const auto got = detect_eventual_period(series.coeffs());
        const std::string tag = "case=" + std::to_string(c);
        r.add(tag + ",preperiod", Cyclo(got.preperiod), Cyclo(expected.preperiod));
        r.add(tag + ",period", Cyclo(got.period), Cyclo(expected.period));
        for (std::size_t i = 0; i < len; ++i)
            r.add(tag + ",term=" + std::to_string(i), got.term(i), expected.term(i));
    }
    return r;
}

std::vector<std::string> suite_names() {
    return {"lemma6", "lemma7", "prop9", "corollary", "gflinear", "gfb0", "lemma4", "all"};
}

std::vector<IdentityReport> run_suite(const std::string& name, int k_max, std::uint64_t seed) {
    if (k_max < 2) throw Error(ErrorKind::InvalidInput, "--kmax must be at least 2");
    std::vector<IdentityReport> out;
    const bool all = name == "all";
    if (all || name == "lemma6") out.push_back(lemma6_suite(k_max));
    if (all || name == "lemma7") {
        out.push_back(lemma7_suite(k_max, 3, Lemma7Variant::EQ3));
        out.push_back(lemma7_suite(k_max, 3, Lemma7Variant::EQ3B));
    }
    if (all || name == "prop9") out.push_back(prop9_suite(k_max, prop9_default_pairs()));
    if (all || name == "corollary") out.push_back(corollary_suite(k_max));
    if (all || name == "gflinear") {
        const Cyclo half(Rat(1, 2));
        out.push_back(gf_linear_suite(half, -half, k_max));
        out.push_back(gf_linear_suite(half, half, k_max));
        out.push_back(gf_linear_suite(Cyclo::root(5, 2), Cyclo(Rat(1, 3)), k_max));
    }
    if (all || name == "gfb0") {
        out.push_back(gf_case_b0_suite(Cyclo(Rat(1, 3)), k_max));
        out.push_back(gf_case_b0_suite(Cyclo::root(4) * Cyclo(Rat(1, 2)), k_max));
    }
    if (all || name == "lemma4") out.push_back(lemma4_roundtrip_suite(seed, 200));
    if (out.empty()) throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
    return out;
}

} // namespace rap
