#include "rap/rat.hpp"

#include <cctype>

#include "rap/error.hpp"

namespace rap {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Embedding: return "embedding";
    case ErrorKind::NonUnitConstantTerm: return "non-unit-constant-term";
    case ErrorKind::TruncationExceeded: return "truncation-exceeded";
    case ErrorKind::InvalidPolynomial: return "invalid-polynomial";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::PeriodNotFound: return "period-not-found";
    case ErrorKind::NotPeriodic: return "not-periodic-within-budget";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw ParseError("expected digits", from);
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", i);
        return BigInt(std::string(text.substr(from, to - from)));
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t slash = text.find('/', pos);
    BigInt num = digits(pos, slash == std::string_view::npos ? text.size() : slash);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = digits(slash + 1, text.size());
        if (den == 0) throw ParseError("zero denominator", slash + 1);
    }
    if (negative) num = -num;
    return Rat(num, den);
}

Rat Rat::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
}

void Rat::addmul(const Rat& x, long factor) {
    if (factor == 0) return;
    v_ += x.v_ * factor;
}

Rat pow(const Rat& base, long exponent) {
    if (exponent < 0) return pow(base.inv(), -exponent);
    Rat result(1);
    Rat b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace rap
