#include "nullspace/rational.hpp"

namespace nullspace {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) {
        throw DomainError("rational: zero denominator");
    }
    // cpp_rational's two-argument constructor requires a positive denominator.
    BigInt n = num;
    BigInt d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    v_ = boost::multiprecision::cpp_rational(n, d);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("rational: empty input");
    }
    if (text.find('.') != std::string_view::npos) {
        throw ParseError("rational: decimal literals are not supported; write an exact "
                         "fraction such as 3/2 instead of 1.5");
    }
    const auto slash = text.find('/');
    const auto parse_int = [](std::string_view part, const char* what) {
        if (part.empty()) {
            throw ParseError(std::string("rational: missing ") + what);
        }
        std::size_t i = 0;
        if (part[0] == '-' || part[0] == '+') {
            i = 1;
        }
        if (i == part.size()) {
            throw ParseError(std::string("rational: missing digits in ") + what);
        }
        for (std::size_t j = i; j < part.size(); ++j) {
            if (part[j] < '0' || part[j] > '9') {
                throw ParseError("rational: invalid character '" + std::string(1, part[j]) +
                                 "' in " + what);
            }
        }
        // cpp_int's string constructor rejects an explicit leading '+'.
        if (part[0] == '+') {
            part.remove_prefix(1);
        }
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, "numerator"), BigInt(1));
    }
    const BigInt num = parse_int(text.substr(0, slash), "numerator");
    const BigInt den = parse_int(text.substr(slash + 1), "denominator");
    if (den.is_zero()) {
        throw ParseError("rational: zero denominator");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (denominator() != 1) {
        out += "/" + denominator().str();
    }
    return out;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_.is_zero()) {
        throw DomainError("rational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& a) {
    return a.is_negative() ? -a : a;
}

Rational half(const Rational& a) {
    return a / Rational(2);
}

}  // namespace nullspace
