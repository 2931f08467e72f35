#ifndef NULLSPACE_RATIONAL_HPP
#define NULLSPACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nullspace {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when textual input (rationals, intervals, expressions, JSON values)
/// cannot be parsed; CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition is violated (division by zero,
/// decomposition out of range, grid mismatch, malformed pieces, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Every scalar in the library (endpoints, radii, epsilons, law coefficients)
/// is one of these; no floating point participates in any decision.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p" (optional leading '-'). Decimal literals are
    /// rejected with a hint, preserving exactness end to end.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    /// Serializes as "p/q", omitting "/q" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return v_.is_zero(); }
    bool is_negative() const { return v_ < 0; }
    bool is_positive() const { return v_ > 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& a);

/// Exact midpoint (a+b)/2 helper used by interval and region code.
Rational half(const Rational& a);

}  // namespace nullspace

#endif  // NULLSPACE_RATIONAL_HPP
