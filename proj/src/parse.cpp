#include "qloop/parse.hpp"

#include "qloop/error.hpp"

#include <cctype>
#include <string>
#include <tuple>

namespace qloop {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Field& f) : s_(s), f_(f) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("in \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    // Returns num/den with den > 0.
    std::pair<long, long> exponent() {
        if (eat('(')) {
            long sign = eat('-') ? -1 : 1;
            long num = sign * integer();
            long den = 1;
            if (eat('/')) den = integer();
            if (den == 0) fail("zero exponent denominator");
            if (!eat(')')) fail("expected ')'");
            return {num, den};
        }
        long sign = eat('-') ? -1 : 1;
        return {sign * integer(), 1};
    }

    Scalar power() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'q' || c == 'e') {
            ++pos_;
            bool generic_var = c == 'q';
            if (generic_var != f_.is_generic())
                fail(std::string("variable '") + c + "' is not available in " + f_.name());
            long num = 1, den = 1;
            if (eat('^')) std::tie(num, den) = exponent();
            if (den != 1) return f_.qpow_frac(num, den);
            return f_.qpow(num);
        }
        Scalar base;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = f_.rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (eat('^')) {
            auto [num, den] = exponent();
            if (den != 1) fail("fractional powers apply only to q");
            if (num < 0 && base.is_zero()) fail("division by zero");
            base = base.pow(num);
        }
        return base;
    }

    std::string_view s_;
    const Field& f_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) { return Parser(text, field).parse(); }

}  // namespace qloop
