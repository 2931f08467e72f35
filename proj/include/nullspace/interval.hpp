#ifndef NULLSPACE_INTERVAL_HPP
#define NULLSPACE_INTERVAL_HPP

#include "nullspace/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nullspace {

/// A closed interval [lo, hi] of rationals, the vectors of the interval
/// space: addition is endpoint-wise, scaling reverses endpoints for negative
/// factors, and there is no additive inverse in general.
class Interval {
public:
    /// The zero element [0, 0].
    Interval() : lo_(0), hi_(0) {}
    /// Validates lo <= hi.
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    /// lo + hi: the functional the distance d compares.
    Rational sum() const { return lo_ + hi_; }
    /// Midpoint (lo+hi)/2.
    Rational mid() const { return half(sum()); }
    /// Radius (hi-lo)/2, always >= 0.
    Rational rad() const { return half(hi_ - lo_); }

    /// Serializes as "[lo,hi]" with exact rational endpoints.
    std::string str() const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    Rational lo_;
    Rational hi_;
};

/// A member [-k, k] of the null set: the intervals whose midpoint is zero.
class OmegaElement {
public:
    /// The zero element (k = 0).
    OmegaElement() : k_(0) {}
    /// Validates k >= 0.
    explicit OmegaElement(Rational k);
    /// Validates that x has midpoint zero.
    static OmegaElement from_interval(const Interval& x);

    const Rational& k() const { return k_; }
    Interval interval() const { return Interval(-k_, k_); }

    friend bool operator==(const OmegaElement& a, const OmegaElement& b) { return a.k_ == b.k_; }
    friend bool operator!=(const OmegaElement& a, const OmegaElement& b) { return !(a == b); }

private:
    Rational k_;
};

/// Vector addition: [a,b] + [c,d] = [a+c, b+d].
Interval iv_add(const Interval& x, const Interval& y);
/// Scalar multiplication: alpha*[a,b] = [alpha*a, alpha*b] for alpha >= 0,
/// [alpha*b, alpha*a] otherwise.
Interval iv_scale(const Rational& alpha, const Interval& x);
/// Difference x + (-1)*y; note x - x is [-(b-a), b-a], not the zero element.
Interval iv_sub(const Interval& x, const Interval& y);

/// True iff x belongs to the null set, i.e. lo = -hi (midpoint zero).
bool is_in_omega(const Interval& x);

/// Null-set translates making two intervals equal: x + omega1 = y + omega2.
struct OmegaWitnesses {
    OmegaElement omega1;
    OmegaElement omega2;
};

/// Decides whether x and y are equal up to the null set; equivalent to
/// lo_x+hi_x = lo_y+hi_y. On success returns the concrete witness pair
/// omega1 = (hi_y - lo_y)[-1,1], omega2 = (hi_x - lo_y)[-1,1] satisfying
/// x + omega1 = y + omega2 exactly.
std::optional<OmegaWitnesses> omega_equal(const Interval& x, const Interval& y);

/// The distance d([a,b],[c,d]) = |(a+b) - (c+d)| = 2|m_x - m_y|.
Rational metric_d(const Interval& x, const Interval& y);

/// alpha_1*x + ... + alpha_n*x, both as the literal fold and in the collapsed
/// two-term form (sum of positive coefficients applied once, sum of negative
/// coefficients applied once). The two agree identically; the constructor
/// verifies this.
struct LinearCombination {
    Interval folded;
    Interval collapsed;
};
LinearCombination linear_combination(const Interval& x, const std::vector<Rational>& alphas);

/// x split as core + null part with the null radius chosen by the caller.
struct NullDecomposition {
    Interval core;
    OmegaElement null_part;
};

/// Splits x = [lo,hi] into ([lo+k, hi-k], [-k,k]); requires 0 <= k <= radius.
NullDecomposition null_decompose(const Interval& x, const Rational& k);

/// Splits omega = [-k,k] as omega' + omega0 with omega' = [-(k-k0), k-k0];
/// requires k >= k0, otherwise no such omega' exists in the null set.
OmegaElement self_decompose(const OmegaElement& omega, const OmegaElement& omega0);

/// True iff x + y lies in the null set (midpoints cancel).
bool is_generalized_inverse(const Interval& x, const Interval& y);

/// Every law the space either satisfies or famously violates, as a closed
/// enumeration the checker and the auditor share.
enum class LawId {
    axiom_identity,                              // 1x = x
    axiom_substitution,                          // x=y implies x+z=y+z, ax=ay
    axiom_commutative,                           // x+y = y+x
    axiom_associative,                           // (x+y)+z = x+(y+z)
    distributive_vector_addition,                // a(x+y) = ax+ay, any a
    positively_distributive_vector_addition,     // same, a > 0
    associative_scalar_multiplication,           // a(bx) = (ab)x, any a,b
    associative_positive_scalar_multiplication,  // same, a,b > 0
    distributive_scalar_addition,                // (a+b)x = ax+bx, any a,b
    distributive_positive_scalar_addition,       // same, a,b > 0
    distributive_negative_scalar_addition,       // same, a,b < 0
    metric_zero_iff_omega_equal,                 // d = 0 iff null-set equality
    metric_zero_iff_equal,                       // d = 0 iff identical (fails here)
    metric_symmetry,                             // d(x,y) = d(y,x)
    metric_triangle,                             // d(x,y) <= d(x,z)+d(z,y)
    metric_null_inequalities,                    // d(x+w1, y+w2) >= d(x,y), both one-sided forms
    metric_null_equalities,                      // same three with equality
    metric_zero_sum_inequalities,                // zero-sum perturbations never shrink d
    metric_zero_sum_equalities,                  // zero-sum perturbations keep d fixed
    metric_translation_invariance,               // d(x+z, y+z) = d(x,y)
    metric_absolute_homogeneity,                 // d(ax, ay) = |a| d(x,y)
};

const char* law_name(LawId law);

/// Operand bundle for law_check; each law documents which fields it reads.
struct LawSample {
    std::vector<Interval> xs;       // interval operands in law order
    std::vector<Rational> scalars;  // scalar operands in law order
    std::vector<OmegaElement> omegas;
    std::vector<Rational> alphas;   // zero-sum coefficients applied to carrier a
    std::vector<Rational> betas;    // zero-sum coefficients applied to carrier b
    std::optional<Interval> a;
    std::optional<Interval> b;
};

/// Verdict plus both evaluated sides, rendered exactly, for counterexample
/// reporting.
struct LawCheck {
    bool holds = false;
    std::string lhs;
    std::string rhs;
};

/// Evaluates the law on the sample with exact arithmetic. Samples that do not
/// instantiate the law (missing operands, sign constraints violated,
/// coefficient sequences not zero-sum) are rejected with DomainError.
LawCheck law_check(LawId law, const LawSample& sample);

}  // namespace nullspace

#endif  // NULLSPACE_INTERVAL_HPP
