// Acceptance checks, one line per criterion.  Expected values are either
// hard-coded reference data or recomputed here by brute force, without going
// through the library routine under test.
//
//   acceptance            run every criterion
//   acceptance --only N   run criterion N (1..10)

#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "rap/classify.hpp"
#include "rap/fmu.hpp"
#include "rap/graphs.hpp"
#include "rap/literal.hpp"
#include "rap/oracles.hpp"

using namespace rap;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

Cyclo q(long n, long d = 1) { return Cyclo(Rat(n, d)); }
const Cyclo xi3 = Cyclo::root(3);

// ---------------------------------------------------------------------------
// Brute-force partial sums for rational p: column k of the array is
// C_{n,k} = sum over j = n - k (mod d+1), j <= n - k, of [t^j] p^k, and
// S_[k] adds C_{n,k} for n <= (k-1)(d+1).

std::vector<Rat> rat_poly_pow(const std::vector<Rat>& p, int k) {
    std::vector<Rat> out{Rat(1)};
    for (int e = 0; e < k; ++e) {
        std::vector<Rat> next(out.size() + p.size() - 1);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += out[i] * p[j];
        out = std::move(next);
    }
    return out;
}

Rat brute_psum(const std::vector<Rat>& p, int k) {
    const int n1 = static_cast<int>(p.size());
    const auto pk = rat_poly_pow(p, k);
    Rat s;
    for (int n = k; n <= (k - 1) * n1; ++n)
        for (int j = (n - k) % n1; j <= n - k; j += n1)
            if (j < static_cast<int>(pk.size())) s += pk[j];
    return s;
}

std::vector<Cyclo> cyclos(const std::vector<Rat>& xs) {
    return {xs.begin(), xs.end()};
}

std::string str(const Cyclo& x, int n = 1) { return format_cyclo(x, std::max(n, x.order())); }

// ---------------------------------------------------------------------------
// Z[xi], xi = zeta_3, xi^2 = -1 - xi, in 128-bit integers.

struct Zxi {
    __int128 a = 0, b = 0;  // a + b xi
    friend Zxi operator+(Zxi x, Zxi y) { return {x.a + y.a, x.b + y.b}; }
    friend Zxi operator-(Zxi x, Zxi y) { return {x.a - y.a, x.b - y.b}; }
    friend Zxi operator*(Zxi x, Zxi y) { return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b}; }
    friend bool operator==(Zxi x, Zxi y) { return x.a == y.a && x.b == y.b; }
};

const Zxi kOne{1, 0}, kXi{0, 1}, kXi2{-1, -1};

Zxi zpow(Zxi x, int e) {
    Zxi r = kOne;
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

std::string i128(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string s;
    for (; v != 0; v /= 10) s += static_cast<char>('0' + static_cast<int>(neg ? -(v % 10) : v % 10));
    if (neg) s += '-';
    return {s.rbegin(), s.rend()};
}

Cyclo to_cyclo(Zxi x) {
    return Cyclo(Rat(BigInt(i128(x.a)))) + Cyclo(Rat(BigInt(i128(x.b)))) * xi3;
}

std::vector<Zxi> zmul(const std::vector<Zxi>& f, const std::vector<Zxi>& g) {
    std::vector<Zxi> out(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
    return out;
}

// [t^m] (1-t)^(k-2) (1-u t)^(k-1) / (1 - w t).
Zxi lemma7_lhs(int k, int m, Zxi u, Zxi w) {
    std::vector<Zxi> f{kOne};
    for (int i = 0; i < k - 2; ++i) f = zmul(f, {kOne, Zxi{-1, 0}});
    for (int i = 0; i < k - 1; ++i) f = zmul(f, {kOne, Zxi{0, 0} - u});
    Zxi s;
    for (int j = 0; j <= m && j < static_cast<int>(f.size()); ++j) s = s + f[j] * zpow(w, m - j);
    return s;
}

// ---------------------------------------------------------------------------
// Q(sqrt 3): x + y sqrt 3.

struct QS3 {
    Rat x, y;
    friend QS3 operator*(const QS3& p, const QS3& r) {
        return {p.x * r.x + Rat(3) * p.y * r.y, p.x * r.y + p.y * r.x};
    }
};

// 2 sin(m pi / 6) for integer m.
QS3 two_sin_sixth(int m) {
    static const QS3 table[12] = {{Rat(0), Rat(0)},  {Rat(1), Rat(0)},  {Rat(0), Rat(1)},  {Rat(2), Rat(0)},
                                  {Rat(0), Rat(1)},  {Rat(1), Rat(0)},  {Rat(0), Rat(0)},  {Rat(-1), Rat(0)},
                                  {Rat(0), Rat(-1)}, {Rat(-2), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}};
    return table[((m % 12) + 12) % 12];
}

QS3 qs_pow(QS3 b, int e) {
    QS3 r{Rat(1), Rat(0)};
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    const std::vector<std::vector<Rat>> want{
        {Rat(1)},
        {Rat(0), Rat(1, 2)},
        {Rat(1), Rat(-1, 2), Rat(1, 4)},
        {Rat(0), Rat(1, 2), Rat(-1, 2), Rat(1, 8)},
        {Rat(1), Rat(-1, 2), Rat(1, 2), Rat(-3, 8), Rat(1, 16)},
        {Rat(0), Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 4), Rat(1, 32)},
        {Rat(1), Rat(-1, 2), Rat(1, 2), Rat(-1, 2), Rat(7, 16), Rat(-5, 32), Rat(1, 64)},
    };
    const auto m = ra_matrix(PolySpec<Cyclo>({q(1, 2), q(-1, 2)}), 7);
    for (std::size_t n = 0; n < 7; ++n)
        for (std::size_t k = 0; k < 7; ++k) {
            const Cyclo w = k <= n ? Cyclo(want[n][k]) : q(0);
            if (!(m.at(n, k) == w))
                o.require(false, "entry (" + std::to_string(n) + "," + std::to_string(k) + ") = " + str(m.at(n, k)) +
                                     ", expected " + str(w));
        }
    return o;
}

Outcome criterion2() {
    Outcome o;
    const std::vector<Rat> pa{Rat(1, 2), Rat(-1, 2)};
    const std::vector<Rat> pb{Rat(-1, 3), Rat(2, 3), Rat(2, 3)};
    const std::vector<Rat> pc{Rat(2, 3), Rat(-1, 3), Rat(2, 3)};

    // Library series extraction and the incremental path, both against brute force.
    for (const auto& p : {pa, pb, pc}) {
        const PolySpec<Cyclo> spec(cyclos(p));
        const auto seq = psum_sequence(spec, 30);
        for (int k = 1; k <= 30; ++k) {
            const Cyclo b(brute_psum(p, k));
            o.require(partial_sum_column(spec, k) == b && seq[k - 1] == b,
                      "S_[" + std::to_string(k) + "] differs from brute force");
        }
    }

    auto ep = measure_psum_period(PolySpec<Cyclo>(cyclos(pa)), 60);
    o.require(ep.preperiod == 1 && ep.period == 2 && ep.block == std::vector<Cyclo>{q(1, 4), q(-1, 4)},
              "(a) expected preperiod 1, period 2, block (1/4, -1/4)");
    o.note("(a) preperiod " + std::to_string(ep.preperiod) + ", period " + std::to_string(ep.period));

    ep = measure_psum_period(PolySpec<Cyclo>(cyclos(pb)), 60);
    const std::vector<Cyclo> six{q(0), q(-1, 3), q(-2, 3), q(-2, 3), q(-1, 3), q(0)};
    bool block_ok = ep.period == 6;
    // The block is read from S_[1]; compare as a cyclic sequence aligned at index 0.
    for (int i = 0; block_ok && i < 24; ++i) block_ok = ep.term(i) == six[i % 6];
    o.require(block_ok, "(b) expected period 6, block {0, -1/3, -2/3, -2/3, -1/3, 0}");
    o.note("(b) preperiod " + std::to_string(ep.preperiod) + ", period " + std::to_string(ep.period));

    const auto seq = psum_sequence(PolySpec<Cyclo>(cyclos(pc)), 60);
    const std::vector<Cyclo> ten{q(0), q(0), q(1, 3), q(1), q(5, 3), q(2), q(2), q(2), q(7, 3), q(3)};
    o.require(std::equal(ten.begin(), ten.end(), seq.begin()), "(c) first ten terms");
    bool found = true;
    try {
        detect_eventual_period(seq);
    } catch (const Error& e) {
        found = e.kind() != ErrorKind::NotPeriodic;
    }
    o.require(!found, "(c) a period was reported within 60 terms");
    o.note("(c) no period within 60 terms");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const std::vector<std::vector<Rat>> table{
        {Rat(1), Rat(-1)},
        {Rat(1), Rat(0), Rat(-1)},
        {Rat(1), Rat(3, 2), Rat(-3, 2), Rat(-1)},
        {Rat(1), Rat(4), Rat(0), Rat(-4), Rat(-1)},
        {Rat(1), Rat(10), Rat(10), Rat(-10), Rat(-10), Rat(-1)},
        {Rat(0), Rat(-6), Rat(-15), Rat(0), Rat(15), Rat(6)},
    };
    for (int mu = 1; mu <= 6; ++mu)
        o.require(f_mu(mu).coeffs == table[mu - 1], "f_" + std::to_string(mu) + " = " + format_rat_poly(f_mu(mu).coeffs));

    const std::vector<std::vector<long>> rows{
        {1, -1},
        {1, 0, -1},
        {2, 3, -3, -2},
        {1, 4, 0, -4, -1},
        {1, 10, 10, -10, -10, -1},
        {0, 6, 15, 0, -15, -6, 0},
        {1, -7, -42, -35, 35, 42, 7, -1},
        {1, 0, -28, -56, 0, 56, 28, 0, -1},
        {2, 9, -36, -168, -126, 126, 168, 36, -9, -2},
    };
    for (int mu = 1; mu <= 9; ++mu) {
        std::vector<long> got;
        for (const auto& c : f_mu_integer_row(mu)) got.push_back(c.get_si());
        o.require(got == rows[mu - 1], "integer row " + std::to_string(mu));
    }

    const auto r4 = real_roots(f_mu(4), 1e-12);
    const double s3 = std::sqrt(3.0);
    const std::vector<double> w4{-2 - s3, -1, -2 + s3, 1};
    o.require(r4.size() == 4, "f_4 has four real roots");
    for (std::size_t i = 0; i < std::min<std::size_t>(r4.size(), 4); ++i)
        o.require(std::abs(r4[i].approx - w4[i]) < 1e-9, "f_4 root " + std::to_string(i));
    o.require(r4.size() == 4 && r4[1].exact == Rat(-1) && r4[3].exact == Rat(1), "f_4 rational roots are exact");

    const auto r5 = real_roots(f_mu(5), 1e-12);
    const std::vector<double> w5{-8.74, -1.46, -0.68, -0.11, 1};
    o.require(r5.size() == 5, "f_5 has five real roots");
    std::string shown;
    for (std::size_t i = 0; i < std::min<std::size_t>(r5.size(), 5); ++i) {
        o.require(std::abs(r5[i].approx - w5[i]) < 0.005, "f_5 root " + std::to_string(i));
        std::ostringstream s;
        s.precision(4);
        s << r5[i].approx;
        shown += (i ? ", " : "") + s.str();
    }
    o.note("f_5 roots " + shown);
    return o;
}

Outcome criterion4() {
    Outcome o;
    {
        const auto cls = prop_d_family(3, q(1, 4));
        const auto ep = measure_psum_period(prop_d_polynomial(3, q(1, 4)), 60);
        o.require(cls.predicted_period == 4, "a = 1/4 predicted period 4");
        const std::vector<Cyclo> want{q(0), q(-1, 2), q(1, 2), q(0)};
        bool ok = ep.period == 4;
        for (int i = 0; ok && i < 4; ++i) ok = ep.block[i] == want[i];
        o.require(ok, "a = 1/4 block {0, -1/2, 1/2, 0}");
    }

    const Cyclo a = Cyclo::root(5, 3) / q(4);
    const auto cls = prop_d_family(3, a);
    o.require(cls.predicted_period == 20, "a = zeta_5^3/4 predicted period 20");
    const auto ep = measure_psum_period(prop_d_polynomial(3, a), 100);
    o.require(ep.period == 20, "measured period 20");

    // Reference block, xi = zeta_10: entries are sign * xi^e / 2, or 0.
    struct E {
        int sign, e;
    };
    const std::vector<E> ref{{0, 0},  {-1, 2}, {-1, 3}, {0, 0}, {0, 0},  {1, 1}, {1, 2}, {0, 0}, {0, 0},  {-1, 0},
                             {-1, 1}, {0, 0},  {0, 0},  {-1, 4}, {1, 0}, {0, 0}, {0, 0}, {1, 6}, {1, 8}, {0, 0}};
    const Cyclo xi = Cyclo::root(10);
    std::vector<int> bad;
    for (int i = 0; i < 20 && ep.period == 20; ++i) {
        const Cyclo want = ref[i].sign == 0 ? q(0) : q(ref[i].sign, 2) * xi.pow(ref[i].e);
        if (!(ep.term(ep.preperiod + i) == want)) bad.push_back(i);
    }
    o.note("measured preperiod " + std::to_string(ep.preperiod) + ", period " + std::to_string(ep.period));
    for (int i : bad) {
        const Cyclo got = ep.term(ep.preperiod + i);
        int e = -1;
        for (int j = 0; j < 10; ++j)
            if (got == q(1, 2) * xi.pow(j)) e = j;
        o.note("position " + std::to_string(i + 1) + ": reference xi^" + std::to_string(ref[i].e) +
               "/2, computed " + (e >= 0 ? "xi^" + std::to_string(e) + "/2" : str(got, 10)));
    }
    o.require(bad.empty(), "20-term block equals the reference list over Q(zeta_10)");
    if (!bad.empty()) {
        // Check the computed block independently: S_[k] by brute force over the
        // field, and the block against a closed-form shift of the reference.
        const auto p = prop_d_polynomial(3, a);
        bool brute = true;
        Poly<Cyclo> pk{q(1)};
        for (int k = 1; k <= ep.preperiod + 20 && brute; ++k) {
            pk = pk * p.poly();
            Cyclo s;
            for (int n = k; n <= (k - 1) * 4; ++n)
                for (int j = (n - k) % 4; j <= n - k; j += 4) s += pk[j];
            brute = s == ep.term(k - 1);
        }
        o.note(std::string("brute-force S_[k] ") + (brute ? "agrees with" : "differs from") + " the computed block");
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (int d = 2; d <= 7; ++d) {
        const auto p = prop_d_polynomial(d, q(1, d + 1));
        const auto pi = matrix_period(circulant_of(p), default_max_steps(d));
        const int want = d % 2 ? d + 1 : 2 * (d + 1);
        o.require(pi.preperiod == 0 && pi.period == want,
                  "d = " + std::to_string(d) + ": got preperiod " + std::to_string(pi.preperiod) + ", period " +
                      std::to_string(pi.period) + ", expected 0 and " + std::to_string(want));
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    // Sine identity: [t^(2k-3)] (1-t^2)^(k-2) (1+t)^2 / (1+t+t^2) = 2 (-sqrt 3)^(k-3) sin((k-4) pi / 6).
    for (int k = 2; k <= 30; ++k) {
        std::vector<long long> f{1};
        auto mul = [&](std::vector<long long> g) {
            std::vector<long long> out(f.size() + g.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
            f = out;
        };
        for (int i = 0; i < k - 2; ++i) mul({1, 0, -1});
        mul({1, 2, 1});
        // 1/(1+t+t^2) = (1-t)/(1-t^3): coefficients 1, -1, 0 repeating.
        const int m = 2 * k - 3;
        long lhs = 0;
        for (int j = 0; j <= m && j < static_cast<int>(f.size()); ++j) {
            const int r = (m - j) % 3;
            lhs += r == 0 ? f[j] : (r == 1 ? -f[j] : 0);
        }
        // (-sqrt 3)^(k-3) * 2 sin((k-4) pi/6) in Q(sqrt 3), with k = 2 handled by 1/(-sqrt 3) = -sqrt 3 / 3.
        const QS3 base = k >= 3 ? qs_pow({Rat(0), Rat(-1)}, k - 3) : QS3{Rat(0), Rat(-1, 3)};
        const QS3 rhs = base * two_sin_sixth(k - 4);
        const auto [ll, lr] = lemma6_pair(k);
        o.require(rhs.y.is_zero() && rhs.x == Rat(lhs) && ll == Cyclo(Rat(lhs)) && lr == Cyclo(Rat(lhs)),
                  "sine identity at k = " + std::to_string(k));
    }

    // Two-parameter identities over Z[xi], for both variants and 0 <= i <= 3.
    for (int k = 2; k <= 30; ++k)
        for (int i = 0; i <= 3; ++i) {
            const Zxi three = zpow(Zxi{3, 0}, k - 2);
            const Zxi l3 = lemma7_lhs(k, 2 * k - i, kXi, kXi2);
            const Zxi r3 = three * (kXi - kOne) * zpow(kXi, k + i - 1);
            const Zxi l3b = lemma7_lhs(k, 2 * k - i, kXi2, kXi);
            const Zxi r3b = three * (kOne - kXi) * zpow(kXi, 2 * k - i);
            const auto [la, ra] = lemma7_pair(k, i, Lemma7Variant::EQ3);
            const auto [lb, rb] = lemma7_pair(k, i, Lemma7Variant::EQ3B);
            const std::string at = " at k = " + std::to_string(k) + ", i = " + std::to_string(i);
            o.require(l3 == r3 && la == to_cyclo(l3) && ra == to_cyclo(r3), "first variant" + at);
            o.require(l3b == r3b && lb == to_cyclo(l3b) && rb == to_cyclo(r3b), "second variant" + at);
        }
    {
        const Zxi l = lemma7_lhs(3, 2, kXi, kXi2);
        const auto [lib, rhs] = lemma7_pair(3, 4, Lemma7Variant::EQ3);
        o.require(l == Zxi{-2, 3} && lib == q(3) * xi3 - q(2) && !(lib == rhs), "i = 4, k = 3 gives 3 xi - 2");
        o.note("i = 4, k = 3: lhs " + str(lib, 3) + ", formula " + str(rhs, 3));
    }

    // Binomial sum against brute-force partial sums of a + b t, k <= 25.
    const std::vector<std::pair<Rat, Rat>> pairs{{Rat(1, 2), Rat(-1, 2)}, {Rat(2), Rat(3)},     {Rat(-1, 3), Rat(5, 7)},
                                                 {Rat(1), Rat(1)},        {Rat(3, 4), Rat(-2)}, {Rat(-5), Rat(1, 6)}};
    for (const auto& [a, b] : pairs)
        for (int k = 1; k <= 25; ++k) {
            Rat s;
            for (int n = 0; n <= k - 2; ++n)
                s += Rat(binomial(k, n)) * Rat((k - n) / 2) * pow(b, n) * pow(a, k - n);
            const Rat brute = brute_psum({a, b}, k);
            o.require(s == brute && prop9_sum(Cyclo(a), Cyclo(b), k) == Cyclo(brute) &&
                          partial_sum_column(PolySpec<Cyclo>({Cyclo(a), Cyclo(b)}), k) == Cyclo(brute),
                      "binomial sum for a = " + a.str() + ", b = " + b.str() + ", k = " + std::to_string(k));
        }
    {
        const Cyclo a = Cyclo::root(7, 2) / q(3), b = Cyclo::root(4) - q(1);
        for (int k = 1; k <= 12; ++k)
            o.require(prop9_sum(a, b, k) == partial_sum_column(PolySpec<Cyclo>({a, b}), k),
                      "binomial sum over Q(zeta_28), k = " + std::to_string(k));
    }

    // Binomial transform: sum (-1)^n C(k,n) floor((k-n)/2) = (-2)^(k-2).
    for (int k = 2; k <= 30; ++k) {
        long s = 0, c = 1;
        for (int n = 0; n <= k; ++n) {
            s += (n % 2 ? -1 : 1) * c * ((k - n) / 2);
            c = c * (k - n) / (n + 1);
        }
        const long want = (k % 2 ? -1L : 1L) << (k - 2);
        const auto [l, r] = corollary_check(k);
        o.require(s == want && l == Rat(want) && r == Rat(want), "binomial transform at k = " + std::to_string(k));
    }

    for (const auto& name : {"lemma6", "lemma7", "prop9", "corollary"})
        for (const auto& rep : run_suite(name, 30)) o.require(rep.pass, std::string("suite ") + rep.id);
    return o;
}

Outcome criterion7() {
    Outcome o;
    const int mu = 14;
    for (int s = 1; s <= mu; ++s) {
        const Cyclo a = -Cyclo::root(mu, s) / q(2);
        const PolySpec<Cyclo> p({a, -a});
        const auto seq = psum_sequence(p, 30);
        for (int k = 2; k <= 30; ++k) {
            const Cyclo want = a * a * (q(-2) * a).pow(k - 2);
            if (!(seq[k - 1] == want) || !(partial_sum_column(p, k) == want)) {
                o.require(false, "s = " + std::to_string(s) + ", k = " + std::to_string(k));
                break;
            }
        }
        const auto cls = classify(p);
        o.require(cls.verdict == Verdict::PsumsPeriodic, "s = " + std::to_string(s) + " classified periodic");
    }

    auto no_period = [&](const Cyclo& a, const Cyclo& b, const std::string& name) {
        const auto seq = psum_sequence(PolySpec<Cyclo>({a, b}), 60);
        bool none = false;
        try {
            detect_eventual_period(seq);
        } catch (const Error& e) {
            none = e.kind() == ErrorKind::NotPeriodic;
        }
        o.require(none, name + ": no period in 60 terms");
        o.require(classify_linear(a, b).verdict != Verdict::PsumsPeriodic, name + " not classified periodic");
    };
    const Cyclo i = Cyclo::root(4);
    no_period(q(1, 2), q(1, 2), "a = b = 1/2");
    no_period((q(1) + i) / q(2), (q(1) - i) / q(2), "a = (1+i)/2, b = (1-i)/2");
    no_period(q(1, 3), q(2, 3), "a = 1/3, b = 2/3");
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Cyclo xi = xi3, xi2 = xi3 * xi3;
    const Cyclo c1 = (xi - q(1)) / (q(9) * xi);
    const Cyclo c2 = (q(1) - xi) / q(9);
    int checked = 0;
    for (int mu : {1, 3, 7}) {
        for (int s = 1; s <= mu; ++s) {
            const Cyclo z = Cyclo::root(mu, s);
            // (3 a xi)^mu = 1 with p = a(1 - t)(1 - xi t).
            const Cyclo a1 = z / (q(3) * xi);
            const PolySpec<Cyclo> p1({a1, a1 * xi2, a1 * xi});
            // (3 a xi^2)^mu = 1 with a the constant term: p = a(1 + xi t + xi^2 t^2).
            const Cyclo a2 = z / (q(3) * xi2);
            const PolySpec<Cyclo> p2({a2, a2 * xi, a2 * xi2});
            const auto k1 = classify(p1), k2 = classify(p2);
            o.require(k1.case_tag == CaseTag::QuadB1 && k2.case_tag == CaseTag::QuadB2,
                      "case tags for mu = " + std::to_string(mu) + ", s = " + std::to_string(s));
            for (int k = 2; k <= 3 * mu + 2; ++k) {
                const Cyclo w1 = (q(3) * a1 * xi).pow(k) * c1;
                const Cyclo w2 = (q(3) * a2 * xi2).pow(k) * c2;
                const std::string at = " mu = " + std::to_string(mu) + ", s = " + std::to_string(s) + ", k = " +
                                       std::to_string(k);
                o.require(partial_sum_column(p1, k) == w1 && predict_psums(k1, k) == w1, "first form" + at);
                o.require(partial_sum_column(p2, k) == w2 && predict_psums(k2, k) == w2, "second form" + at);
                ++checked;
            }
        }
    }
    o.note(std::to_string(checked) + " (mu, s, k) triples checked for both forms");

    // r = 0: p = a(1 - t^2), a = 1/3.  Generating function against series extraction.
    const Cyclo a = q(1, 3);
    const PolySpec<Cyclo> p({a, q(0), -a});
    const auto gf = gf_case_b0_expand(a, 24);
    bool gf_ok = true;
    for (int j = 0; j < 24; ++j) gf_ok = gf_ok && gf.coeff(j) == partial_sum_column(p, j + 2);
    o.require(gf_ok, "r = 0 generating function equals series extraction for 24 terms");

    // The closed form (2 / (3 sqrt 3)) (-a sqrt 3)^k sin((k-4) pi / 6), evaluated
    // in Q(sqrt 3) for a = 1/3, i.e. -a sqrt 3 = -sqrt 3 / 3.
    std::vector<int> bad, negated;
    for (int k = 1; k <= 24; ++k) {
        const QS3 lead{Rat(0), Rat(1, 9)};  // 2/(3 sqrt 3) * 1/2, the 2 goes into two_sin_sixth
        const QS3 v = lead * qs_pow({Rat(0), Rat(-1, 3)}, k) * two_sin_sixth(k - 4);
        const Cyclo series = k == 1 ? q(0) : partial_sum_column(p, k);
        const bool rational = v.y.is_zero();
        if (!rational || !(Cyclo(v.x) == series)) bad.push_back(k);
        if (rational && k >= 2 && Cyclo(-v.x) == series) negated.push_back(k);
        if (k <= 6)
            o.note("k = " + std::to_string(k) + ": closed form " + (rational ? v.x.str() : "irrational") +
                   ", series " + str(series));
    }
    o.require(bad.empty(), "closed form for r = 0 matches series extraction for 24 terms");
    if (!bad.empty())
        o.note(std::to_string(bad.size()) + " of 24 terms differ; the negated closed form matches " +
               std::to_string(negated.size()) + " of 23 terms with k >= 2, and S_[1] = 0 is not covered");
    o.require(predict_psums(classify(p), 4) == q(0), "predicted S_[4] = 0");
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(0x5eed1234ULL);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const Cyclo z6 = Cyclo::root(6);
    auto random_value = [&] {
        if (pick(0, 3) == 0) return q(0);
        return q(pick(-3, 3), pick(1, 3)) + q(pick(-2, 2), pick(1, 2)) * z6;
    };
    int trivial = 0;
    for (int c = 0; c < 200; ++c) {
        const int k = pick(0, 6), n = pick(1, 8);
        EventualPeriod<Cyclo> ep;
        for (int i = 0; i < k; ++i) ep.prefix.push_back(random_value());
        for (int i = 0; i < n; ++i) ep.block.push_back(random_value());
        ep.preperiod = k;
        ep.period = n;

        auto term = [&](int i) { return i < k ? ep.prefix[i] : ep.block[(i - k) % n]; };
        // Smallest period, then smallest preperiod, by direct search.
        int bn = n, bk = k;
        bool done = false;
        for (int cn = 1; cn <= n && !done; ++cn)
            for (int ck = 0; ck <= k && !done; ++ck) {
                bool ok = true;
                for (int i = ck; i < k + 2 * n * cn + 2 && ok; ++i) ok = term(i) == term(i + cn);
                if (ok) {
                    bn = cn;
                    bk = ck;
                    done = true;
                }
            }
        if (bn < n || bk < k) ++trivial;

        auto [num, den] = gf_from_periodic(ep);
        const std::size_t len = 2 * (k + 2 * n) + 4;
        const auto series = fps_expand_rational(num, den, len);
        const auto got = detect_eventual_period(series.coeffs());
        bool same = got.preperiod == bk && got.period == bn;
        for (std::size_t i = 0; i < len && same; ++i) same = got.term(i) == term(static_cast<int>(i));
        const auto m = minimize(ep);
        same = same && m.preperiod == bk && m.period == bn && same_period(got, m);
        if (!same) {
            o.require(false, "case " + std::to_string(c) + ": spec (" + std::to_string(k) + ", " + std::to_string(n) +
                                 "), expected (" + std::to_string(bk) + ", " + std::to_string(bn) + "), got (" +
                                 std::to_string(got.preperiod) + ", " + std::to_string(got.period) + ")");
        }
    }
    o.note("200 cases, " + std::to_string(trivial) + " of them not minimal as generated");
    const auto lib = lemma4_roundtrip_suite(20261016, 200);
    o.require(lib.pass, "library round-trip suite");
    return o;
}

// Minimal XML well-formedness: balanced tags, quoted attributes, declaration
// and comments skipped, entities limited to the five predefined ones.
bool well_formed(const std::string& s, std::string& why) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    while (i < s.size()) {
        if (s[i] != '<') {
            if (s[i] == '&') {
                const auto semi = s.find(';', i);
                const std::string ent = semi == std::string::npos ? "" : s.substr(i, semi - i + 1);
                if (ent != "&lt;" && ent != "&gt;" && ent != "&amp;" && ent != "&quot;" && ent != "&apos;") {
                    why = "bad entity at " + std::to_string(i);
                    return false;
                }
            } else if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) {
                why = "text outside the root element";
                return false;
            }
            ++i;
            continue;
        }
        if (s.compare(i, 5, "<?xml") == 0) {
            if (i != 0) {
                why = "declaration not at start";
                return false;
            }
            i = s.find("?>", i);
            if (i == std::string::npos) return why = "unterminated declaration", false;
            i += 2;
            continue;
        }
        if (s.compare(i, 4, "<!--") == 0) {
            i = s.find("-->", i);
            if (i == std::string::npos) return why = "unterminated comment", false;
            i += 3;
            continue;
        }
        const auto end = s.find('>', i);
        if (end == std::string::npos) return why = "unterminated tag", false;
        std::string tag = s.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return why = "empty tag", false;
        if (tag[0] == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return why = "mismatched </" + name + ">", false;
            stack.pop_back();
            continue;
        }
        const bool self = tag.back() == '/';
        if (self) tag.pop_back();
        std::size_t p = 0;
        while (p < tag.size() && !std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
        const std::string name = tag.substr(0, p);
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            return why = "bad element name '" + name + "'", false;
        // attributes: name="value"
        while (p < tag.size()) {
            while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
            if (p >= tag.size()) break;
            const auto eq = tag.find('=', p);
            if (eq == std::string::npos || eq + 1 >= tag.size() || (tag[eq + 1] != '"' && tag[eq + 1] != '\''))
                return why = "bad attribute in <" + name + ">", false;
            const auto close = tag.find(tag[eq + 1], eq + 2);
            if (close == std::string::npos) return why = "unterminated attribute in <" + name + ">", false;
            if (tag.substr(eq + 2, close - eq - 2).find('<') != std::string::npos)
                return why = "'<' in attribute", false;
            p = close + 1;
        }
        if (stack.empty()) {
            if (root_seen) return why = "second root element", false;
            root_seen = true;
        }
        if (!self) stack.push_back(name);
    }
    if (!stack.empty()) return why = "unclosed <" + stack.back() + ">", false;
    if (!root_seen) return why = "no root element", false;
    return true;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion10() {
    Outcome o;
    const fs::path base = fs::temp_directory_path() / ("rap_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(base);
    const std::vector<std::pair<Figure, std::size_t>> want{
        {Figure::Fig1, 8}, {Figure::Fig2, 7}, {Figure::Fig3, 7}, {Figure::Fig6, 3}};
    std::string counts;
    for (const auto& [fig, n] : want) {
        const auto a = figure_family(fig, base / "run1" / to_string(fig));
        const auto b = figure_family(fig, base / "run2" / to_string(fig));
        counts += (counts.empty() ? "" : "/") + std::to_string(a.size());
        o.require(a.size() == n, to_string(fig) + " produced " + std::to_string(a.size()) + " files, expected " +
                                     std::to_string(n));
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            const std::string sa = slurp(a[i]), sb = slurp(b[i]);
            std::string why;
            o.require(well_formed(sa, why), a[i].filename().string() + " is not well-formed: " + why);
            o.require(sa == sb, a[i].filename().string() + " differs between runs");
        }
    }
    o.note("file counts " + counts);

    double worst = 0;
    for (const auto& item : figure_items(Figure::Fig1))
        for (const auto& v : item.graph.vertices)
            if (std::abs(v) > 1e-12) worst = std::max(worst, std::abs(std::abs(v) - 0.25));
    o.require(worst <= 1e-9, "Fig1 vertices on the radius 1/4 circle");
    std::ostringstream w;
    w << "largest deviation from radius 1/4: " << worst;
    o.note(w.str());
    fs::remove_all(base);
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {"array reproduction, p = 1/2 - t/2", criterion1},
        {"partial-sum sequences", criterion2},
        {"f_mu table, integer rows and real roots", criterion3},
        {"degree-3 example, a = 1/4 and a = zeta_5^3/4", criterion4},
        {"order of V for a = 1/(d+1), d = 2..7", criterion5},
        {"identity suites", criterion6},
        {"linear family, mu = 14, and non-periodic samples", criterion7},
        {"quadratic closed forms", criterion8},
        {"generating-function round trips", criterion9},
        {"graph emission", criterion10},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--only N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(all.size())) {
        std::cerr << "criterion must be 1.." << all.size() << "\n";
        return 2;
    }
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            o = all[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << all[i].title
                  << "\n";
        std::size_t shown = 0;
        for (const auto& n : o.notes)
            if (shown++ < 40) std::cout << "        " << n << "\n";
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
