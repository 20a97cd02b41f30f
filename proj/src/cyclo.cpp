#include "rap/cyclo.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "rap/error.hpp"

namespace rap {

namespace {

std::atomic<int> g_max_order{1024};

// Function-local so that Cyclo constants at namespace scope in other
// translation units can be built during static initialization.
struct PhiMemo {
    std::mutex mutex;
    std::map<int, std::unique_ptr<std::vector<std::int64_t>>> polys;
};

PhiMemo& phi_memo() {
    static PhiMemo memo;
    return memo;
}

void check_order(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "root order must be positive, got " + std::to_string(n));
    if (n > max_root_order())
        throw Error(ErrorKind::InvalidOrder,
                    "root order " + std::to_string(n) + " exceeds limit " + std::to_string(max_root_order()));
}

// Exact quotient of monic integer polynomials.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::vector<std::int64_t> compute_phi(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d));
    return p;
}

} // namespace

int max_root_order() noexcept { return g_max_order.load(); }

void set_max_root_order(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "root order limit must be positive");
    g_max_order.store(n);
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<std::int64_t>& cyclotomic_poly(int n) {
    {
        std::lock_guard lock(phi_memo().mutex);
        auto it = phi_memo().polys.find(n);
        if (it != phi_memo().polys.end()) return *it->second;
    }
    // Computed outside the lock; recursion re-enters for the divisors.
    auto poly = std::make_unique<std::vector<std::int64_t>>(compute_phi(n));
    std::lock_guard lock(phi_memo().mutex);
    auto [it, inserted] = phi_memo().polys.try_emplace(n, std::move(poly));
    return *it->second;
}

Cyclo::Cyclo(int order, const std::vector<Rat>& raw) : order_(order) {
    check_order(order);
    reduce_from(raw);
}

void Cyclo::reduce_from(std::vector<Rat> raw) {
    const int n = order_;
    if (static_cast<int>(raw.size()) > n) {
        for (std::size_t j = n; j < raw.size(); ++j) raw[j % n] += raw[j];
        raw.resize(n);
    }
    const auto& phi = cyclotomic_poly(n);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
        if (raw[i].is_zero()) continue;
        const Rat c = raw[i];
        for (int j = 0; j <= deg; ++j) raw[i - deg + j].addmul(c, -phi[j]);
    }
    raw.resize(deg);
    c_ = std::move(raw);
}

Cyclo Cyclo::root(int order, long k) {
    check_order(order);
    long e = k % order;
    if (e < 0) e += order;
    std::vector<Rat> raw(e + 1);
    raw[e] = Rat(1);
    return Cyclo(order, raw);
}

std::vector<Rat> Cyclo::padded() const {
    std::vector<Rat> out = c_;
    out.resize(order_);
    return out;
}

bool Cyclo::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

Rat Cyclo::rational() const {
    if (!is_rational()) throw Error(ErrorKind::InvalidInput, "element is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

Cyclo Cyclo::embed(int target) const {
    check_order(target);
    if (target % order_ != 0 && is_rational()) return Cyclo(rational()).embed(target);
    if (target % order_ != 0)
        throw Error(ErrorKind::Embedding, "cannot embed order " + std::to_string(order_) + " into order " +
                                              std::to_string(target));
    if (target == order_) return *this;
    const int step = target / order_;
    std::vector<Rat> raw(static_cast<std::size_t>(step) * (c_.size() ? c_.size() - 1 : 0) + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) raw[j * step] = c_[j];
    return Cyclo(target, raw);
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.order_ == 1 && order_ != 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    if (o.order_ != order_) {
        const int l = static_cast<int>(lcm_long(order_, o.order_));
        *this = embed(l);
        return *this += o.embed(l);
    }
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    *this = *this * o;
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto scaled = [](Cyclo x, const Rat& r) {
        for (auto& c : x.c_) c *= r;
        return x;
    };
    if (b.order_ == 1) return scaled(a, b.c_[0]);
    if (a.order_ == 1) return scaled(b, a.c_[0]);
    if (a.order_ != b.order_) {
        const int l = static_cast<int>(lcm_long(a.order_, b.order_));
        return a.embed(l) * b.embed(l);
    }
    // Multiply over Z with a common denominator: mpq arithmetic would
    // canonicalize after every product.
    auto to_int = [](const std::vector<Rat>& c, BigInt& den) {
        den = 1;
        for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
        std::vector<BigInt> out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].numerator() * (den / c[i].denominator());
        return out;
    };
    BigInt da, db;
    const auto ia = to_int(a.c_, da);
    const auto ib = to_int(b.c_, db);
    const int n = a.order_;
    std::vector<BigInt> raw(std::max<std::size_t>(ia.size() + ib.size() - 1, n));
    for (std::size_t i = 0; i < ia.size(); ++i) {
        if (ia[i] == 0) continue;
        for (std::size_t j = 0; j < ib.size(); ++j)
            mpz_addmul(raw[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
    for (std::size_t j = n; j < raw.size(); ++j) raw[j % n] += raw[j];
    raw.resize(n);
    const auto& phi = cyclotomic_poly(n);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = n - 1; i >= deg; --i) {
        if (raw[i] == 0) continue;
        const BigInt c = raw[i];
        for (int j = 0; j <= deg; ++j)
            if (phi[j] != 0) raw[i - deg + j] -= c * static_cast<long>(phi[j]);
    }
    Cyclo out;
    out.order_ = n;
    out.c_.resize(deg);
    const BigInt den = da * db;
    for (int i = 0; i < deg; ++i) out.c_[i] = raw[i] == 0 ? Rat() : Rat(raw[i], den);
    return out;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    if (order_ == 1) return Cyclo(c_[0].inv());
    // Solve M y = e_0 where column j of M is this * zeta^j.
    const std::size_t n = c_.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        const Cyclo col = *this * Cyclo::root(order_, static_cast<long>(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = Rat(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error(ErrorKind::InternalInconsistency, "singular multiplication matrix");
        std::swap(m[piv], m[col]);
        const Rat scale = m[col][col].inv();
        for (std::size_t j = col; j <= n; ++j) m[col][j] *= scale;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = m[i][n];
    return Cyclo(order_, y);
}

Cyclo Cyclo::conj() const {
    if (order_ <= 2) return *this;
    std::vector<Rat> raw(order_);
    for (std::size_t j = 0; j < c_.size(); ++j) raw[j == 0 ? 0 : order_ - j] = c_[j];
    return Cyclo(order_, raw);
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo result(1);
    Cyclo b = *this;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return result;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    const int l = static_cast<int>(lcm_long(a.order_, b.order_));
    return a.embed(l).c_ == b.embed(l).c_;
}

ComplexF Cyclo::to_complex() const {
    long double re = 0, im = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        const long double v = c_[j].to_double();
        const long double ang = two_pi * static_cast<long double>(j) / order_;
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::key() const {
    std::string out = std::to_string(order_);
    for (const auto& c : c_) {
        out += ':';
        out += c.str();
    }
    return out;
}

std::optional<int> is_root_of_unity(const Cyclo& x) {
    if (x.is_zero()) return std::nullopt;
    if (std::abs(std::abs(x.to_complex()) - 1.0) > 1e-6) return std::nullopt;
    const long bound = lcm_long(2, x.order());
    const Cyclo one(1);
    for (long m = 1; m <= bound; ++m) {
        if (bound % m) continue;
        if (x.pow(m) == one) return static_cast<int>(m);
    }
    return std::nullopt;
}

Cyclo imag_part(const Cyclo& x) {
    const Cyclo i = Cyclo::root(4, 1);
    return (x - x.conj()) * (i * Cyclo(Rat(2))).inv();
}

Cyclo real_part(const Cyclo& x) { return (x + x.conj()) * Cyclo(Rat(1, 2)); }

int common_order(const std::vector<Cyclo>& xs) {
    long l = 1;
    for (const auto& x : xs) l = lcm_long(l, x.order());
    return static_cast<int>(l);
}

} // namespace rap
