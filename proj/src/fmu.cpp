#include "rap/fmu.hpp"

#include <algorithm>
#include <cmath>

#include "rap/error.hpp"

namespace rap {

namespace {

using RPoly = std::vector<Rat>;

void trim(RPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Rat eval(const RPoly& p, const Rat& x) {
    Rat acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RPoly derivative(const RPoly& p) {
    RPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(static_cast<long>(i)));
    trim(out);
    return out;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    RPoly q(a.size() - b.size() + 1);
    const Rat lead_inv = b.back().inv();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        const Rat c = a[i] * lead_inv;
        q[i - b.size() + 1] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

RPoly monic(RPoly p) {
    const Rat inv = p.back().inv();
    for (auto& c : p) c *= inv;
    return p;
}

RPoly gcd(RPoly a, RPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(a);
}

// Integer multiple with coprime coefficients.
std::vector<BigInt> primitive(const RPoly& p) {
    BigInt l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto& c : p) {
        out.push_back(c.numerator() * (l / c.denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& c : out) c /= g;
    return out;
}

// Positive divisors by trial division; empty when n is too large to factor
// this way.
std::vector<BigInt> divisors(BigInt n) {
    n = abs(n);
    std::vector<BigInt> small, large;
    if (n > BigInt("1000000000000000")) return {};
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// p(a + (b - a) x) reversed and shifted, so its sign variations bound the
// number of roots in (a, b) (Descartes' rule after a Moebius map).
int variations_on(const RPoly& p, const Rat& a, const Rat& b) {
    const std::size_t n = p.size();
    RPoly q = p;
    auto taylor_shift = [](RPoly& c, const Rat& s) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            for (std::size_t j = c.size() - 1; j > i; --j) c[j - 1] += s * c[j];
    };
    taylor_shift(q, a);
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] *= scale;
        scale *= b - a;
    }
    std::reverse(q.begin(), q.end());
    taylor_shift(q, Rat(1));
    int count = 0, last = 0;
    for (const auto& c : q) {
        if (c.is_zero()) continue;
        if (last != 0 && c.sign() != last) ++count;
        last = c.sign();
    }
    return count;
}

std::string surd_part(const Rat& coeff, const BigInt& radicand) {
    std::string out;
    if (coeff.numerator() != 1) out += coeff.numerator().get_str();
    out += "√" + radicand.get_str();
    if (coeff.denominator() != 1) out += "/" + coeff.denominator().get_str();
    return out;
}

// Closed forms u - w and u + w for the roots of an irreducible quadratic.
std::pair<std::string, std::string> quadratic_closed_forms(const RPoly& q, double& minus_val, double& plus_val) {
    const Rat& c = q[0];
    const Rat& b = q[1];
    const Rat& a = q[2];
    const Rat u = -b / (Rat(2) * a);
    const Rat disc = b * b - Rat(4) * a * c;
    // sqrt(N/M) = sqrt(N M) / M; pull square factors out of N M.
    BigInt nm = disc.numerator() * disc.denominator();
    BigInt outside = 1;
    for (BigInt f = 2; f * f <= nm; ++f)
        while (nm % (f * f) == 0) {
            nm /= f * f;
            outside *= f;
        }
    const Rat w = Rat(outside, disc.denominator()) / (Rat(2) * a).abs();
    minus_val = u.to_double() - w.to_double() * std::sqrt(nm.get_d());
    plus_val = u.to_double() + w.to_double() * std::sqrt(nm.get_d());
    const std::string head = u.is_zero() ? "" : u.str();
    const std::string s = surd_part(w, nm);
    return {head + "-" + s, (head.empty() ? "" : head + "+") + s};
}

} // namespace

Rat FmuPoly::eval(const Rat& x) const { return rap::eval(coeffs, x); }

FmuPoly f_mu(int mu) {
    if (mu < 1) throw Error(ErrorKind::InvalidInput, "mu must be positive");
    auto two_cos = [](long j) { return j % 3 == 0 ? Rat(2) : Rat(-1); };
    const Rat sign_mu = mu % 2 == 0 ? Rat(1) : Rat(-1);
    FmuPoly f;
    f.mu = mu;
    for (int i = 0; i <= mu; ++i) {
        Rat q;
        if (mu % 6 == 0) {
            q = i % 3 == 1 ? Rat(1) : (i % 3 == 2 ? Rat(-1) : Rat(0));
        } else {
            q = (two_cos(i) - sign_mu * two_cos(mu - i)) / (Rat(2) - sign_mu * two_cos(mu));
        }
        Rat c = Rat(binomial(mu, i)) * q;
        if (i % 2) c = -c;
        f.coeffs.push_back(c);
    }
    trim(f.coeffs);
    return f;
}

std::vector<BigInt> f_mu_integer_row(int mu) {
    const FmuPoly f = f_mu(mu);
    BigInt l = 1;
    for (const auto& c : f.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<BigInt> row(mu + 1, BigInt(0));
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) row[i] = f.coeffs[i].numerator() * (l / f.coeffs[i].denominator());
    for (const auto& c : row) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : row) x = -x;
        break;
    }
    return row;
}

std::vector<RealRoot> real_roots(const std::vector<Rat>& input, double precision) {
    RPoly p = input;
    trim(p);
    if (p.empty()) throw Error(ErrorKind::InvalidInput, "the zero polynomial has no isolated roots");
    if (!(precision > 0)) throw Error(ErrorKind::InvalidInput, "precision must be positive");

    std::vector<RealRoot> roots;
    auto add_exact = [&](const Rat& r) {
        RealRoot root;
        root.approx = r.to_double();
        root.lo = root.hi = r;
        root.exact = r;
        root.closed_form = r.str();
        roots.push_back(root);
    };

    // Root 0, then the other rational roots by the rational root theorem.
    if (p[0].is_zero()) {
        add_exact(Rat(0));
        while (p[0].is_zero()) p.erase(p.begin());
    }
    {
        const auto ints = primitive(p);
        const auto num_div = divisors(ints.front());
        const auto den_div = divisors(ints.back());
        for (const auto& n : num_div)
            for (const auto& d : den_div)
                for (int s : {1, -1}) {
                    const Rat cand(BigInt(s * n), d);
                    if (p.size() < 2 || !eval(p, cand).is_zero()) continue;
                    if (std::any_of(roots.begin(), roots.end(), [&](const RealRoot& r) { return *r.exact == cand; }))
                        continue;
                    add_exact(cand);
                    while (p.size() >= 2 && eval(p, cand).is_zero()) p = divmod(p, RPoly{-cand, Rat(1)}).first;
                }
    }

    // What is left has no rational roots; isolate its real roots.
    if (p.size() >= 3) {
        const RPoly g = gcd(p, derivative(p));
        const RPoly sq = g.size() > 1 ? divmod(p, g).first : p;
        Rat bound(0);
        for (std::size_t i = 0; i + 1 < sq.size(); ++i) bound = std::max(bound, (sq[i] / sq.back()).abs());
        bound += Rat(1);
        std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}}, isolated;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const int v = variations_on(sq, a, b);
            if (v == 0) continue;
            if (v == 1) {
                isolated.emplace_back(a, b);
                continue;
            }
            const Rat m = (a + b) / Rat(2);
            stack.emplace_back(a, m);
            stack.emplace_back(m, b);
        }
        const Rat eps = Rat::from_double(precision);
        std::vector<RealRoot> irr;
        for (auto [a, b] : isolated) {
            int sa = eval(sq, a).sign();
            while (b - a > eps) {
                const Rat m = (a + b) / Rat(2);
                const int sm = eval(sq, m).sign();
                if (sm == sa) {
                    a = m;
                } else {
                    b = m;
                }
            }
            RealRoot r;
            r.lo = a;
            r.hi = b;
            r.approx = ((a + b) / Rat(2)).to_double();
            irr.push_back(r);
        }
        if (sq.size() == 3 && irr.size() == 2) {
            double lo_val = 0, hi_val = 0;
            auto [lo_form, hi_form] = quadratic_closed_forms(sq, lo_val, hi_val);
            std::sort(irr.begin(), irr.end(), [](const RealRoot& x, const RealRoot& y) { return x.approx < y.approx; });
            irr[0].closed_form = lo_form;
            irr[0].approx = lo_val;
            irr[1].closed_form = hi_form;
            irr[1].approx = hi_val;
        }
        roots.insert(roots.end(), irr.begin(), irr.end());
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& x, const RealRoot& y) { return x.approx < y.approx; });
    return roots;
}

std::string format_rat_poly(const std::vector<Rat>& coeffs, const std::string& var) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rat& c = coeffs[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const Rat mag = c.abs();
        if (i == 0 || mag != Rat(1)) out += (mag.is_integer() || i == 0) ? mag.str() : "(" + mag.str() + ")";
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace rap
