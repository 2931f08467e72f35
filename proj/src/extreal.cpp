#include "nullspace/extreal.hpp"

namespace nullspace {

const Rational& ExtReal::value() const {
    if (tag_ != Tag::Finite) {
        throw DomainError("extreal: value() called on an infinity");
    }
    return value_;
}

std::string ExtReal::str() const {
    switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::PosInf: return "inf";
        case Tag::Finite: return value_.str();
    }
    throw DomainError("extreal: corrupt tag");
}

ExtReal ExtReal::parse(std::string_view text) {
    if (text == "-inf") return neg_inf();
    if (text == "inf" || text == "+inf") return pos_inf();
    return finite(Rational::parse(text));
}

ExtReal ExtReal::operator-() const {
    switch (tag_) {
        case Tag::NegInf: return pos_inf();
        case Tag::PosInf: return neg_inf();
        case Tag::Finite: return finite(-value_);
    }
    throw DomainError("extreal: corrupt tag");
}

ExtReal ExtReal::operator+(const Rational& offset) const {
    return tag_ == Tag::Finite ? finite(value_ + offset) : *this;
}

ExtReal ExtReal::scaled(const Rational& factor) const {
    if (factor.is_zero()) {
        throw DomainError("extreal: scaling by zero is not defined for infinities");
    }
    if (tag_ == Tag::Finite) {
        return finite(value_ * factor);
    }
    const bool flip = factor.is_negative();
    if (tag_ == Tag::NegInf) {
        return flip ? pos_inf() : neg_inf();
    }
    return flip ? neg_inf() : pos_inf();
}

bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.tag_ == ExtReal::Tag::NegInf) return b.tag_ != ExtReal::Tag::NegInf;
    if (a.tag_ == ExtReal::Tag::PosInf) return false;
    if (b.tag_ == ExtReal::Tag::NegInf) return false;
    if (b.tag_ == ExtReal::Tag::PosInf) return true;
    return a.value_ < b.value_;
}

}  // namespace nullspace
