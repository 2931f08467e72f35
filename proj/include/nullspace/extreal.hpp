#ifndef NULLSPACE_EXTREAL_HPP
#define NULLSPACE_EXTREAL_HPP

#include "nullspace/rational.hpp"

namespace nullspace {

/// Extended rational: -inf < every finite value < +inf. Used for unbounded
/// box and piece edges; arithmetic is restricted to the cases region algebra
/// needs (adding a finite offset, scaling by a nonzero rational).
class ExtReal {
public:
    enum class Tag { NegInf, Finite, PosInf };

    ExtReal() : tag_(Tag::Finite), value_() {}
    static ExtReal neg_inf() { return ExtReal(Tag::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Tag::PosInf); }
    static ExtReal finite(Rational v) {
        ExtReal e(Tag::Finite);
        e.value_ = std::move(v);
        return e;
    }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }

    /// Finite value; calling this on an infinity is a logic error.
    const Rational& value() const;

    /// Serializes as "-inf", "inf", or the rational's "p/q" form.
    std::string str() const;
    static ExtReal parse(std::string_view text);

    ExtReal operator-() const;
    /// Adds a finite offset; infinities absorb.
    ExtReal operator+(const Rational& offset) const;
    /// Scales by a nonzero rational; a negative factor flips infinities.
    ExtReal scaled(const Rational& factor) const;

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
    friend bool operator<(const ExtReal& a, const ExtReal& b);
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

private:
    explicit ExtReal(Tag t) : tag_(t), value_() {}

    Tag tag_;
    Rational value_;
};

}  // namespace nullspace

#endif  // NULLSPACE_EXTREAL_HPP
