#include "rap/literal.hpp"

#include <cctype>

#include "rap/error.hpp"

namespace rap {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t base, int order) : s_(text), base_(base), order_(order) {}

    Cyclo parse() {
        std::vector<Rat> raw(order_);
        skip_ws();
        if (at_end()) fail("empty coefficient");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            term(raw, sign);
            skip_ws();
        }
        return Cyclo(order_, raw);
    }

private:
    void term(std::vector<Rat>& raw, int sign) {
        Rat coeff(1);
        bool have_rat = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = rational();
            have_rat = true;
            skip_ws();
            if (at_end() || peek() != '*') {
                raw[0] += sign < 0 ? -coeff : coeff;
                return;
            }
            ++pos_;
            skip_ws();
        }
        if (at_end() || peek() != 'z') fail(have_rat ? "expected 'z' after '*'" : "expected a number or 'z'");
        ++pos_;
        skip_ws();
        long k = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 9) fail("exponent too large", start);
            k = std::stol(std::string(s_.substr(start, pos_ - start)));
        }
        raw[k % order_] += sign < 0 ? -coeff : coeff;
    }

    Rat rational() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        BigInt num(std::string(s_.substr(start, pos_ - start)));
        BigInt den(1);
        std::size_t save = pos_;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t ds = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (ds == pos_) fail("expected denominator");
            den = BigInt(std::string(s_.substr(ds, pos_ - ds)));
            if (den == 0) fail("zero denominator", ds);
        } else {
            pos_ = save;
        }
        return Rat(num, den);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

    std::string_view s_;
    std::size_t base_;
    int order_;
    std::size_t pos_ = 0;
};

} // namespace

Cyclo parse_cyclo(std::string_view text, int root_order) {
    if (root_order < 1) throw Error(ErrorKind::InvalidOrder, "root order must be positive");
    return Parser(text, 0, root_order).parse();
}

std::vector<Cyclo> parse_cyclo_list(std::string_view text, int root_order) {
    if (root_order < 1) throw Error(ErrorKind::InvalidOrder, "root order must be positive");
    std::vector<Cyclo> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(Parser(text.substr(start, end - start), start, root_order).parse());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_cyclo(const Cyclo& x, int root_order) {
    const Cyclo y = x.embed(root_order);
    const auto& c = y.coeffs();
    std::string out;
    for (std::size_t j = c.size(); j-- > 0;) {
        if (c[j].is_zero()) continue;
        const bool neg = c[j].sign() < 0;
        const Rat mag = c[j].abs();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (j == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rat(1)) out += mag.str() + "*";
        out += j == 1 ? "z" : "z^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

} // namespace rap
