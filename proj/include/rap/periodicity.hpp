#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rap/poly.hpp"

namespace rap {

/// s = prefix, block, block, ...; (preperiod, period) minimal.
template <class T>
struct EventualPeriod {
    int preperiod = 0;
    int period = 1;
    std::vector<T> prefix;
    std::vector<T> block;

    /// Term i of the sequence.
    const T& term(std::size_t i) const {
        return i < prefix.size() ? prefix[i] : block[(i - prefix.size()) % block.size()];
    }

    std::vector<T> expand(std::size_t n_terms) const {
        std::vector<T> out;
        for (std::size_t i = 0; i < n_terms; ++i) out.push_back(term(i));
        return out;
    }
};

template <class T>
bool same_period(const EventualPeriod<T>& a, const EventualPeriod<T>& b, double tol = kDefaultTol) {
    if (a.preperiod != b.preperiod || a.period != b.period) return false;
    for (std::size_t i = 0; i < a.prefix.size(); ++i)
        if (!Scalar<T>::equal(a.prefix[i], b.prefix[i], tol)) return false;
    for (std::size_t i = 0; i < a.block.size(); ++i)
        if (!Scalar<T>::equal(a.block[i], b.block[i], tol)) return false;
    return true;
}

/**
 * Smallest period n, then smallest preperiod k for that n, such that
 * s[i + n] = s[i] for every k <= i < L - n, where L = min(max_len, |seq|).
 *
 * A candidate is accepted only if k + 2n <= L (every block position seen at
 * least twice) and 2k <= L (the repeating tail is at least as long as the
 * prefix).  Without the second condition two coincidentally equal trailing
 * terms are reported as a period-1 tail.
 */
template <class T>
EventualPeriod<T> detect_eventual_period(std::span<const T> seq, std::size_t max_len, double tol = kDefaultTol) {
    const std::size_t len = std::min(max_len, seq.size());
    for (std::size_t n = 1; 2 * n <= len; ++n) {
        std::size_t k = len - n;
        while (k > 0 && Scalar<T>::equal(seq[k - 1], seq[k - 1 + n], tol)) --k;
        if (k + 2 * n > len || 2 * k > len) continue;
        EventualPeriod<T> ep;
        ep.preperiod = static_cast<int>(k);
        ep.period = static_cast<int>(n);
        ep.prefix.assign(seq.begin(), seq.begin() + k);
        ep.block.assign(seq.begin() + k, seq.begin() + k + n);
        return ep;
    }
    throw Error(ErrorKind::NotPeriodic,
                "no eventual period found within " + std::to_string(len) + " terms");
}

template <class T>
EventualPeriod<T> detect_eventual_period(const std::vector<T>& seq, double tol = kDefaultTol) {
    return detect_eventual_period(std::span<const T>(seq), seq.size(), tol);
}

/// (q_0(t)(1 - t^n) + q(t) t^k, 1 - t^n).
template <class T>
std::pair<Poly<T>, Poly<T>> gf_from_periodic(const EventualPeriod<T>& ep) {
    const Poly<T> den = one_minus_tn<T>(ep.block.size());
    const Poly<T> q0(ep.prefix);
    const Poly<T> q(ep.block);
    return {q0 * den + q.shifted(ep.prefix.size()), den};
}

/// Reduce to the minimal period, then pull the start of the block back
/// over prefix terms that already agree with it.
template <class T>
EventualPeriod<T> minimize(EventualPeriod<T> ep, double tol = kDefaultTol) {
    const std::size_t n = ep.block.size();
    for (std::size_t m = 1; m < n; ++m) {
        if (n % m) continue;
        bool ok = true;
        for (std::size_t i = m; i < n && ok; ++i) ok = Scalar<T>::equal(ep.block[i], ep.block[i - m], tol);
        if (ok) {
            ep.block.resize(m);
            break;
        }
    }
    while (!ep.prefix.empty() && Scalar<T>::equal(ep.prefix.back(), ep.block.back(), tol)) {
        ep.block.insert(ep.block.begin(), ep.prefix.back());
        ep.block.pop_back();
        ep.prefix.pop_back();
    }
    ep.preperiod = static_cast<int>(ep.prefix.size());
    ep.period = static_cast<int>(ep.block.size());
    return ep;
}

/**
 * Sequence with generating function numer(t) / (1 - t^n).
 *
 * Writing K = deg numer, every coefficient index i <= j with i = j mod n
 * contributes to term j, and once j > K - n nothing beyond K is missing, so
 * terms from K - n + 1 on repeat with block Pi_r = sum_{i = r mod n} q_i,
 * read from offset (K + 1) mod n.  Minimized before returning.
 */
template <class T>
EventualPeriod<T> periodic_from_gf(const Poly<T>& numer, int n, double tol = kDefaultTol) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "period must be positive");
    EventualPeriod<T> ep;
    const int deg = numer.degree();
    std::vector<T> pi(n, Scalar<T>::zero());
    for (int i = 0; i <= deg; ++i) pi[i % n] = pi[i % n] + numer.coeffs()[i];
    const int start = std::max(0, deg - n + 1);
    for (int j = 0; j < start; ++j) {
        T s = Scalar<T>::zero();
        for (int i = j % n; i <= j; i += n) s = s + numer[i];
        ep.prefix.push_back(s);
    }
    for (int t = 0; t < n; ++t) ep.block.push_back(pi[(start + t) % n]);
    return minimize(std::move(ep), tol);
}

} // namespace rap
