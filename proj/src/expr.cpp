#include "nullspace/expr.hpp"

#include <cctype>
#include <string>

namespace nullspace {

namespace {

/// Hand-rolled recursive-descent evaluator. The grammar is small enough that
/// tokenizing and parsing in one pass keeps positions exact for diagnostics.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Interval run() {
        Interval value = parse_expr();
        skip_spaces();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return value;
    }

private:
    Interval parse_expr() {
        Interval value = parse_term();
        while (true) {
            skip_spaces();
            if (consume('+')) {
                value = iv_add(value, parse_term());
            } else if (consume('-')) {
                value = iv_sub(value, parse_term());
            } else {
                return value;
            }
        }
    }

    Interval parse_term() {
        skip_spaces();
        if (consume('-')) {
            return iv_scale(Rational(-1), parse_term());
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const Rational alpha = parse_rational("scalar");
            skip_spaces();
            if (!consume('*')) {
                fail("expected '*' after scalar (scalars only appear as s * <interval>)");
            }
            return iv_scale(alpha, parse_term());
        }
        return parse_primary();
    }

    Interval parse_primary() {
        skip_spaces();
        if (consume('(')) {
            Interval value = parse_expr();
            skip_spaces();
            if (!consume(')')) {
                fail("expected ')'");
            }
            return value;
        }
        if (consume('[')) {
            const Rational lo = parse_rational("interval endpoint");
            skip_spaces();
            if (!consume(',')) {
                fail("expected ',' between interval endpoints");
            }
            const Rational hi = parse_rational("interval endpoint");
            skip_spaces();
            if (!consume(']')) {
                fail("expected ']'");
            }
            if (lo > hi) {
                fail("interval endpoints out of order (need lo <= hi)");
            }
            return Interval(lo, hi);
        }
        fail("expected an interval '[lo,hi]', a scalar, '-', or '('");
    }

    Rational parse_rational(const char* what) {
        skip_spaces();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            ++pos_;
        }
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            fail("decimal literals are not supported; write an exact fraction such as 3/2");
        }
        if (pos_ == start) {
            fail(std::string("expected ") + what);
        }
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("expression error at position " + std::to_string(pos_ + 1) + ": " +
                         message);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Interval eval_expr(std::string_view text) {
    return ExprParser(text).run();
}

}  // namespace nullspace
