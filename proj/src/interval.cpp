#include "nullspace/interval.hpp"

#include <stdexcept>

namespace nullspace {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) {
        throw DomainError("interval: lower endpoint " + lo_.str() + " exceeds upper endpoint " +
                          hi_.str());
    }
}

std::string Interval::str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

OmegaElement::OmegaElement(Rational k) : k_(std::move(k)) {
    if (k_.is_negative()) {
        throw DomainError("null element: radius " + k_.str() + " is negative");
    }
}

OmegaElement OmegaElement::from_interval(const Interval& x) {
    if (!x.sum().is_zero()) {
        throw DomainError("null element: " + x.str() + " has nonzero midpoint");
    }
    return OmegaElement(x.hi());
}

Interval iv_add(const Interval& x, const Interval& y) {
    return Interval(x.lo() + y.lo(), x.hi() + y.hi());
}

Interval iv_scale(const Rational& alpha, const Interval& x) {
    if (alpha.is_negative()) {
        return Interval(alpha * x.hi(), alpha * x.lo());
    }
    return Interval(alpha * x.lo(), alpha * x.hi());
}

Interval iv_sub(const Interval& x, const Interval& y) {
    return iv_add(x, iv_scale(Rational(-1), y));
}

bool is_in_omega(const Interval& x) { return x.sum().is_zero(); }

std::optional<OmegaWitnesses> omega_equal(const Interval& x, const Interval& y) {
    if (x.sum() != y.sum()) {
        return std::nullopt;
    }
    // With equal endpoint sums, hi_x >= mid_x = mid_y >= lo_y, so both radii
    // below are nonnegative and x + omega1 = y + omega2 holds identically.
    OmegaWitnesses w;
    w.omega1 = OmegaElement(y.hi() - y.lo());
    w.omega2 = OmegaElement(x.hi() - y.lo());
    return w;
}

Rational metric_d(const Interval& x, const Interval& y) { return abs(x.sum() - y.sum()); }

LinearCombination linear_combination(const Interval& x, const std::vector<Rational>& alphas) {
    if (alphas.empty()) {
        throw DomainError("linear combination: coefficient list is empty");
    }
    LinearCombination out;
    out.folded = iv_scale(alphas.front(), x);
    Rational positive(0);
    Rational negative(0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i > 0) out.folded = iv_add(out.folded, iv_scale(alphas[i], x));
        (alphas[i].is_negative() ? negative : positive) += alphas[i];
    }
    out.collapsed = iv_add(iv_scale(positive, x), iv_scale(negative, x));
    if (out.folded != out.collapsed) {
        throw std::logic_error("linear combination: fold and collapsed form disagree");
    }
    return out;
}

NullDecomposition null_decompose(const Interval& x, const Rational& k) {
    if (k.is_negative() || x.rad() < k) {
        throw DomainError("null decomposition: radius " + k.str() + " outside [0, " +
                          x.rad().str() + "] for " + x.str());
    }
    NullDecomposition out;
    out.core = Interval(x.lo() + k, x.hi() - k);
    out.null_part = OmegaElement(k);
    return out;
}

OmegaElement self_decompose(const OmegaElement& omega, const OmegaElement& omega0) {
    if (omega.k() < omega0.k()) {
        throw DomainError("self decomposition: no null element completes " +
                          omega0.interval().str() + " to the smaller " + omega.interval().str());
    }
    return OmegaElement(omega.k() - omega0.k());
}

bool is_generalized_inverse(const Interval& x, const Interval& y) {
    return is_in_omega(iv_add(x, y));
}

const char* law_name(LawId law) {
    switch (law) {
        case LawId::axiom_identity: return "axiom_identity";
        case LawId::axiom_substitution: return "axiom_substitution";
        case LawId::axiom_commutative: return "axiom_commutative";
        case LawId::axiom_associative: return "axiom_associative";
        case LawId::distributive_vector_addition: return "distributive_vector_addition";
        case LawId::positively_distributive_vector_addition:
            return "positively_distributive_vector_addition";
        case LawId::associative_scalar_multiplication: return "associative_scalar_multiplication";
        case LawId::associative_positive_scalar_multiplication:
            return "associative_positive_scalar_multiplication";
        case LawId::distributive_scalar_addition: return "distributive_scalar_addition";
        case LawId::distributive_positive_scalar_addition:
            return "distributive_positive_scalar_addition";
        case LawId::distributive_negative_scalar_addition:
            return "distributive_negative_scalar_addition";
        case LawId::metric_zero_iff_omega_equal: return "metric_zero_iff_omega_equal";
        case LawId::metric_zero_iff_equal: return "metric_zero_iff_equal";
        case LawId::metric_symmetry: return "metric_symmetry";
        case LawId::metric_triangle: return "metric_triangle";
        case LawId::metric_null_inequalities: return "metric_null_inequalities";
        case LawId::metric_null_equalities: return "metric_null_equalities";
        case LawId::metric_zero_sum_inequalities: return "metric_zero_sum_inequalities";
        case LawId::metric_zero_sum_equalities: return "metric_zero_sum_equalities";
        case LawId::metric_translation_invariance: return "metric_translation_invariance";
        case LawId::metric_absolute_homogeneity: return "metric_absolute_homogeneity";
    }
    return "unknown";
}

namespace {

void require(bool ok, const char* law, const char* what) {
    if (!ok) {
        throw DomainError(std::string("law_check(") + law + "): " + what);
    }
}

/// x perturbed by the coefficient sequence applied to the carrier, folding
/// left to right exactly as written.
Interval perturb(Interval x, const std::vector<Rational>& coeffs, const Interval& carrier) {
    for (const Rational& c : coeffs) {
        x = iv_add(x, iv_scale(c, carrier));
    }
    return x;
}

Rational sum_of(const std::vector<Rational>& coeffs) {
    Rational total(0);
    for (const Rational& c : coeffs) total += c;
    return total;
}

LawCheck equality(const Interval& lhs, const Interval& rhs) {
    return {lhs == rhs, lhs.str(), rhs.str()};
}

LawCheck equality(const Rational& lhs, const Rational& rhs) {
    return {lhs == rhs, lhs.str(), rhs.str()};
}

std::string join3(const Rational& a, const Rational& b, const Rational& c) {
    return a.str() + " ; " + b.str() + " ; " + c.str();
}

/// The three perturbed distances (both sides, left only, right only) against
/// the base distance; `strict_equal` selects the equality or >= reading.
LawCheck compare_three(const Rational& both, const Rational& left, const Rational& right,
                       const Rational& base, bool strict_equal) {
    const bool holds = strict_equal
                           ? both == base && left == base && right == base
                           : both >= base && left >= base && right >= base;
    return {holds, join3(both, left, right), base.str()};
}

}  // namespace

LawCheck law_check(LawId law, const LawSample& s) {
    const char* name = law_name(law);
    const auto need_xs = [&](std::size_t n) {
        require(s.xs.size() >= n, name, "not enough interval operands");
    };
    const auto need_scalars = [&](std::size_t n) {
        require(s.scalars.size() >= n, name, "not enough scalar operands");
    };
    switch (law) {
        case LawId::axiom_identity: {
            need_xs(1);
            return equality(iv_scale(Rational(1), s.xs[0]), s.xs[0]);
        }
        case LawId::axiom_substitution: {
            need_xs(2);
            need_scalars(1);
            const Interval& x = s.xs[0];
            const Interval y = x;  // the hypothesis x = y, instantiated literally
            const Interval& z = s.xs[1];
            const bool adds = iv_add(x, z) == iv_add(y, z);
            const bool scales = iv_scale(s.scalars[0], x) == iv_scale(s.scalars[0], y);
            return {adds && scales, iv_add(x, z).str() + " ; " + iv_scale(s.scalars[0], x).str(),
                    iv_add(y, z).str() + " ; " + iv_scale(s.scalars[0], y).str()};
        }
        case LawId::axiom_commutative: {
            need_xs(2);
            return equality(iv_add(s.xs[0], s.xs[1]), iv_add(s.xs[1], s.xs[0]));
        }
        case LawId::axiom_associative: {
            need_xs(3);
            return equality(iv_add(iv_add(s.xs[0], s.xs[1]), s.xs[2]),
                            iv_add(s.xs[0], iv_add(s.xs[1], s.xs[2])));
        }
        case LawId::positively_distributive_vector_addition:
            need_scalars(1);
            require(s.scalars[0].is_positive(), name, "scalar must be positive");
            [[fallthrough]];
        case LawId::distributive_vector_addition: {
            need_xs(2);
            need_scalars(1);
            return equality(iv_scale(s.scalars[0], iv_add(s.xs[0], s.xs[1])),
                            iv_add(iv_scale(s.scalars[0], s.xs[0]),
                                   iv_scale(s.scalars[0], s.xs[1])));
        }
        case LawId::associative_positive_scalar_multiplication:
            need_scalars(2);
            require(s.scalars[0].is_positive() && s.scalars[1].is_positive(), name,
                    "scalars must be positive");
            [[fallthrough]];
        case LawId::associative_scalar_multiplication: {
            need_xs(1);
            need_scalars(2);
            return equality(iv_scale(s.scalars[0], iv_scale(s.scalars[1], s.xs[0])),
                            iv_scale(s.scalars[0] * s.scalars[1], s.xs[0]));
        }
        case LawId::distributive_positive_scalar_addition:
            need_scalars(2);
            require(s.scalars[0].is_positive() && s.scalars[1].is_positive(), name,
                    "scalars must be positive");
            goto scalar_addition;
        case LawId::distributive_negative_scalar_addition:
            need_scalars(2);
            require(s.scalars[0].is_negative() && s.scalars[1].is_negative(), name,
                    "scalars must be negative");
            goto scalar_addition;
        case LawId::distributive_scalar_addition: {
        scalar_addition:
            need_xs(1);
            need_scalars(2);
            return equality(iv_scale(s.scalars[0] + s.scalars[1], s.xs[0]),
                            iv_add(iv_scale(s.scalars[0], s.xs[0]),
                                   iv_scale(s.scalars[1], s.xs[0])));
        }
        case LawId::metric_zero_iff_omega_equal: {
            need_xs(2);
            const Rational d = metric_d(s.xs[0], s.xs[1]);
            const bool related = omega_equal(s.xs[0], s.xs[1]).has_value();
            return {d.is_zero() == related, d.str(), related ? "related" : "unrelated"};
        }
        case LawId::metric_zero_iff_equal: {
            need_xs(2);
            const Rational d = metric_d(s.xs[0], s.xs[1]);
            const bool same = s.xs[0] == s.xs[1];
            return {d.is_zero() == same, d.str(), same ? "identical" : "distinct"};
        }
        case LawId::metric_symmetry: {
            need_xs(2);
            return equality(metric_d(s.xs[0], s.xs[1]), metric_d(s.xs[1], s.xs[0]));
        }
        case LawId::metric_triangle: {
            need_xs(3);
            const Rational lhs = metric_d(s.xs[0], s.xs[1]);
            const Rational rhs = metric_d(s.xs[0], s.xs[2]) + metric_d(s.xs[2], s.xs[1]);
            return {lhs <= rhs, lhs.str(), rhs.str()};
        }
        case LawId::metric_null_inequalities:
        case LawId::metric_null_equalities: {
            need_xs(2);
            require(s.omegas.size() >= 2, name, "two null elements required");
            const Interval w1 = s.omegas[0].interval();
            const Interval w2 = s.omegas[1].interval();
            const Rational base = metric_d(s.xs[0], s.xs[1]);
            return compare_three(metric_d(iv_add(s.xs[0], w1), iv_add(s.xs[1], w2)),
                                 metric_d(iv_add(s.xs[0], w1), s.xs[1]),
                                 metric_d(s.xs[0], iv_add(s.xs[1], w2)), base,
                                 law == LawId::metric_null_equalities);
        }
        case LawId::metric_zero_sum_inequalities:
        case LawId::metric_zero_sum_equalities: {
            need_xs(2);
            require(sum_of(s.alphas).is_zero(), name, "alphas must sum to zero");
            require(sum_of(s.betas).is_zero(), name, "betas must sum to zero");
            require(s.alphas.empty() || s.a.has_value(), name, "carrier a required with alphas");
            require(s.betas.empty() || s.b.has_value(), name, "carrier b required with betas");
            const Interval xp =
                s.alphas.empty() ? s.xs[0] : perturb(s.xs[0], s.alphas, *s.a);
            const Interval yp = s.betas.empty() ? s.xs[1] : perturb(s.xs[1], s.betas, *s.b);
            const Rational base = metric_d(s.xs[0], s.xs[1]);
            return compare_three(metric_d(xp, yp), metric_d(xp, s.xs[1]), metric_d(s.xs[0], yp),
                                 base, law == LawId::metric_zero_sum_equalities);
        }
        case LawId::metric_translation_invariance: {
            need_xs(3);
            return equality(metric_d(iv_add(s.xs[0], s.xs[2]), iv_add(s.xs[1], s.xs[2])),
                            metric_d(s.xs[0], s.xs[1]));
        }
        case LawId::metric_absolute_homogeneity: {
            need_xs(2);
            need_scalars(1);
            return equality(metric_d(iv_scale(s.scalars[0], s.xs[0]),
                                     iv_scale(s.scalars[0], s.xs[1])),
                            abs(s.scalars[0]) * metric_d(s.xs[0], s.xs[1]));
        }
    }
    throw DomainError("law_check: unknown law identifier");
}

}  // namespace nullspace
