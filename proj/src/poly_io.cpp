#include "knutson/poly_io.hpp"

#include <cctype>
#include <limits>

namespace knutson {

namespace {

// Recursive-descent parser over the raw byte string.  `pos_` is 0-based
// internally; every ParseError converts to the 1-based convention.
class Parser {
public:
    Parser(std::string_view text, std::size_t nvars, TermOrderPtr ord, std::size_t base)
        : text_(text), nvars_(nvars), ord_(std::move(ord)), base_(base) {}

    Polynomial<Rational> run() {
        skip_ws();
        if (at_end()) fail(pos_, "empty polynomial");
        Polynomial<Rational> p = expr();
        skip_ws();
        if (!at_end()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(std::size_t pos0, const std::string& why) const {
        throw ParseError(base_ + pos0 + 1, why);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial<Rational> zero() const { return Polynomial<Rational>(nvars_, ord_); }

    Polynomial<Rational> expr() {
        bool negate = false;
        skip_ws();
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Polynomial<Rational> sum = term();
        if (negate) sum = -sum;
        for (;;) {
            skip_ws();
            if (accept('+')) {
                sum = sum + term();
            } else if (accept('-')) {
                sum = sum - term();
            } else {
                return sum;
            }
        }
    }

    Polynomial<Rational> term() {
        Polynomial<Rational> prod = factor();
        while (accept('*')) prod = prod * factor();
        return prod;
    }

    Polynomial<Rational> factor() {
        Polynomial<Rational> base = primary();
        skip_ws();
        if (accept('^')) {
            std::uint64_t e = parse_uint("exponent", std::numeric_limits<std::uint32_t>::max());
            Polynomial<Rational> pow = Polynomial<Rational>::constant(nvars_, ord_, 1);
            for (std::uint64_t i = 0; i < e; ++i) pow = pow * base;
            return pow;
        }
        return base;
    }

    Polynomial<Rational> primary() {
        skip_ws();
        if (at_end()) fail(pos_, "unexpected end of input");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<Rational> inner = expr();
            skip_ws();
            if (!accept(')')) fail(pos_, "missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail(pos_, std::string("unexpected '") + c + "'");
    }

    Polynomial<Rational> number() {
        std::string num = digits("number");
        std::string den;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t den_at = pos_;
            den = digits("denominator");
            if (mpz_class(den) == 0) fail(den_at, "zero denominator");
        }
        mpz_class n(num), d(den.empty() ? "1" : den);
        return Polynomial<Rational>::constant(nvars_, ord_, Rational::from_mpz(n, d));
    }

    Polynomial<Rational> variable() {
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits_only = true;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits_only = false;
            }
            if (digits_only && name[1] != '0') {
                std::uint64_t idx = std::stoull(name.substr(1));
                if (idx >= 1 && idx <= nvars_) {
                    return Polynomial<Rational>::monomial(
                        nvars_, ord_, Rational(1), Monomial::variable(nvars_, idx - 1));
                }
                fail(start, "variable " + name + " outside x1..x" + std::to_string(nvars_));
            }
        }
        fail(start, "unknown identifier '" + name + "'");
    }

    std::string digits(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail(start, "expected " + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t parse_uint(const std::string& what, std::uint64_t max) {
        std::size_t start = pos_;
        std::string ds = digits(what);
        mpz_class v(ds);
        if (v > max) fail(start, what + " too large");
        return v.get_ui();
    }

    std::string_view text_;
    std::size_t nvars_;
    TermOrderPtr ord_;
    std::size_t base_; // offset of text_ within the caller's string
    std::size_t pos_ = 0;
};

} // namespace

Polynomial<Rational> parse_polynomial(std::string_view text, std::size_t nvars,
                                      TermOrderPtr ord) {
    return Parser(text, nvars, std::move(ord), 0).run();
}

std::vector<Polynomial<Rational>> parse_polynomial_list(std::string_view text,
                                                        std::size_t nvars,
                                                        TermOrderPtr ord) {
    std::vector<Polynomial<Rational>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::size_t end = semi == std::string_view::npos ? text.size() : semi;
        out.push_back(Parser(text.substr(start, end - start), nvars, ord, start).run());
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return out;
}

} // namespace knutson
