#include "nullspace/audit.hpp"

#include "nullspace/mset.hpp"

namespace nullspace {

namespace {

Interval omega_interval(const Rational& k) { return Interval(-k, k); }

Interval fold_sum(const std::vector<Interval>& xs) {
    Interval total = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        total = iv_add(total, xs[i]);
    }
    return total;
}

bool omega_related_with_witnesses(const Interval& x, const Interval& y) {
    const auto w = omega_equal(x, y);
    if (!w.has_value()) {
        return false;
    }
    return iv_add(x, w->omega1.interval()) == iv_add(y, w->omega2.interval());
}

/// The degenerate-diagonal subspace {[a,a]}: the full m-line at radius zero.
Region degenerate_line() {
    const Piece all_m{Bound::open(ExtReal::neg_inf()), Bound::open(ExtReal::pos_inf())};
    const Piece r_zero{Bound::closed_at(Rational(0)), Bound::closed_at(Rational(0))};
    return Region::from_boxes({{all_m, r_zero}});
}

}  // namespace

void register_algebra_cases(std::vector<AuditCase>& out) {
    {
        AuditCase c;
        c.id = "E2.1-model-operations";
        c.statement =
            "Vector addition is endpoint-wise, [a,b]+[c,d]=[a+c,b+d]; scaling by k maps "
            "[a,b] to [ka,kb] for k>=0 and to [kb,ka] for k<0.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            ops.scalars = {gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& y = o.xs[1];
            const Rational& k = o.scalars[0];
            const bool add_ok =
                iv_add(x, y) == Interval(x.lo() + y.lo(), x.hi() + y.hi());
            const Interval scaled = k.is_negative() ? Interval(k * x.hi(), k * x.lo())
                                                    : Interval(k * x.lo(), k * x.hi());
            return add_ok && iv_scale(k, x) == scaled;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(2)), Interval(Rational(3), Rational(5))};
        w.scalars = {Rational(-2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E2.2-null-set";
        c.statement =
            "x-x = [-(b-a), b-a] for x=[a,b]; the null set is exactly the zero-midpoint "
            "intervals {[-k,k] : k>=0}.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            if (rng.chance(1, 2)) {
                const Rational k = gen_null_radius(rng);
                ops.xs.push_back(Interval(-k, k));
            } else {
                ops.xs.push_back(gen_interval(rng));
            }
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& z = o.xs[1];
            const Rational spread = x.hi() - x.lo();
            const Interval self = iv_sub(x, x);
            return self == Interval(-spread, spread) && is_in_omega(self) &&
                   is_in_omega(z) == z.sum().is_zero();
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(4)), Interval(Rational(-2), Rational(2))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D2.1.i-identity";
        c.statement = "1x = x.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            return law_check(LawId::axiom_identity, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(-3), Rational(7))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D2.1.ii-substitution";
        c.statement = "x = y implies x+z = y+z and ax = ay.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            ops.scalars = {gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::axiom_substitution, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(2)), Interval(Rational(-1), Rational(5))};
        w.scalars = {Rational(-3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D2.1.iii-commutative-associative";
        c.statement = "Vector addition is commutative and associative.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng), gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample pair;
            pair.xs = {o.xs[0], o.xs[1]};
            LawSample triple;
            triple.xs = o.xs;
            return law_check(LawId::axiom_commutative, pair).holds &&
                   law_check(LawId::axiom_associative, triple).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(1)), Interval(Rational(-2), Rational(3)),
                Interval(Rational(5), Rational(5))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.vector-distributive";
        c.statement = "a(x+y) = ax+ay for every scalar a.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            ops.scalars = {gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::distributive_vector_addition, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3)), Interval(Rational(-2), Rational(0))};
        w.scalars = {Rational(-5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.vector-distributive-positive";
        c.statement = "a(x+y) = ax+ay for positive a.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            ops.scalars = {gen_positive_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::positively_distributive_vector_addition, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3)), Interval(Rational(-2), Rational(0))};
        w.scalars = {Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.scalar-associative";
        c.statement = "a(bx) = (ab)x for all scalars a, b.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.scalars = {gen_scalar(rng), gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::associative_scalar_multiplication, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(4))};
        w.scalars = {Rational(-2), Rational(3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.scalar-associative-positive";
        c.statement = "a(bx) = (ab)x for positive a, b.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.scalars = {gen_positive_scalar(rng), gen_positive_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::associative_positive_scalar_multiplication, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(4))};
        w.scalars = {Rational(2), Rational(3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.3-general-distributivity";
        c.statement = "(a+b)x = ax+bx for all scalars a, b.";
        c.expected = ExpectedStatus::expected_fail;
        c.note =
            "Refuted in this space: the two sides differ whenever the scalars straddle "
            "zero and x is non-degenerate. With a=1, b=-1, x=[1,3] the left side is "
            "0x=[0,0] while the right side is [1,3]+[-3,-1]=[-2,2].";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.scalars = {gen_scalar(rng), gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::distributive_scalar_addition, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3))};
        w.scalars = {Rational(1), Rational(-1)};
        c.witnesses = {w};
        c.canonical_counterexample = w.str();
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.3-positive-distributivity";
        c.statement = "(a+b)x = ax+bx for positive a, b.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.scalars = {gen_positive_scalar(rng), gen_positive_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::distributive_positive_scalar_addition, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3))};
        w.scalars = {Rational(2), Rational(5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L2.3-negative-distributivity";
        c.statement = "(a+b)x = ax+bx for negative a, b.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.scalars = {-gen_positive_scalar(rng), -gen_positive_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.scalars = o.scalars;
            return law_check(LawId::distributive_negative_scalar_addition, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3))};
        w.scalars = {Rational(-2), Rational(-5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R2.same-sign-distributivity";
        c.statement = "(a+b)x = ax+bx whenever ab > 0.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            const Rational a = gen_positive_scalar(rng);
            const Rational b = gen_positive_scalar(rng);
            if (rng.chance(1, 2)) {
                ops.scalars = {a, b};
            } else {
                ops.scalars = {-a, -b};
            }
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return (o.scalars[0] * o.scalars[1]).is_positive();
        };
        c.conclusion = [](const Operands& o) {
            const Rational& a = o.scalars[0];
            const Rational& b = o.scalars[1];
            const Interval& x = o.xs[0];
            return iv_scale(a + b, x) == iv_add(iv_scale(a, x), iv_scale(b, x));
        };
        Operands w;
        w.xs = {Interval(Rational(-1), Rational(4))};
        w.scalars = {Rational(-3), Rational(-2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R2.omega-equality-conditions";
        c.statement =
            "The three null-set-equality conditions (identity; one-sided null translate; "
            "two-sided null translates) collapse to the two-sided one and are decided by "
            "midpoint equality, with explicit translate witnesses.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            if (rng.chance(1, 2)) {
                ops.xs.push_back(gen_same_midpoint(rng, ops.xs[0]));
            } else {
                ops.xs.push_back(gen_interval(rng));
            }
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& y = o.xs[1];
            const auto w = omega_equal(x, y);
            const bool decision_ok = w.has_value() == (x.sum() == y.sum());
            bool witness_ok = true;
            if (w.has_value()) {
                witness_ok =
                    iv_add(x, w->omega1.interval()) == iv_add(y, w->omega2.interval());
            }
            // Condition (a) via the zero element, condition (b) via a
            // one-sided translate: both must be decided as related.
            const Interval shifted = iv_add(x, omega_interval(o.ks[0]));
            return decision_ok && witness_ok && omega_equal(x, x).has_value() &&
                   omega_equal(shifted, x).has_value();
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(1))};
        w.ks = {Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.1.i";
        c.statement = "If x+z = y+z for some z, then x and y are null-set equal.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Interval x = gen_interval(rng);
            // Addition is cancellative here, so the hypothesis forces y = x.
            ops.xs = {x, x, gen_interval(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return iv_add(o.xs[0], o.xs[2]) == iv_add(o.xs[1], o.xs[2]);
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& y = o.xs[1];
            const Interval& z = o.xs[2];
            const Interval wz = iv_sub(z, z);
            return omega_related_with_witnesses(x, y) &&
                   iv_add(x, wz) == iv_add(y, wz);
        };
        Operands w;
        w.xs = {Interval(Rational(2), Rational(5)), Interval(Rational(2), Rational(5)),
                Interval(Rational(-1), Rational(3))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.1.ii";
        c.statement = "If x-y lies in the null set, then x and y are null-set equal.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.xs.push_back(gen_same_midpoint(rng, ops.xs[0]));
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return is_in_omega(iv_sub(o.xs[0], o.xs[1])); };
        c.conclusion = [](const Operands& o) {
            return omega_related_with_witnesses(o.xs[0], o.xs[1]);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(-1), Rational(3))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.1.iii";
        c.statement =
            "The null set is closed under addition, and x null-set equal to y yields an "
            "omega with x-y+omega in the null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            ops.xs.push_back(gen_same_midpoint(rng, ops.xs[0]));
            ops.ks = {gen_null_radius(rng), gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return omega_equal(o.xs[0], o.xs[1]).has_value();
        };
        c.conclusion = [](const Operands& o) {
            const Interval closed_sum =
                iv_add(omega_interval(o.ks[0]), omega_interval(o.ks[1]));
            // omega = [0,0] already certifies the conclusion in this space.
            return is_in_omega(closed_sum) && is_in_omega(iv_sub(o.xs[0], o.xs[1]));
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(-1), Rational(3))};
        w.ks = {Rational(1), Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.2.i";
        c.statement = "-(x1+...+xn) is null-set equal to (-x1)+...+(-xn).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const std::size_t n = 1 + static_cast<std::size_t>(rng.below(8));
            for (std::size_t i = 0; i < n; ++i) {
                ops.xs.push_back(gen_interval(rng));
            }
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval total = fold_sum(o.xs);
            std::vector<Interval> negs;
            negs.reserve(o.xs.size());
            for (const Interval& x : o.xs) {
                negs.push_back(iv_scale(Rational(-1), x));
            }
            return omega_related_with_witnesses(iv_scale(Rational(-1), total),
                                                fold_sum(negs));
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(2)), Interval(Rational(-3), Rational(0)),
                Interval(Rational(4), Rational(6))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.2.ii";
        c.statement = "-(x-y) is null-set equal to (-x)+y.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval lhs = iv_scale(Rational(-1), iv_sub(o.xs[0], o.xs[1]));
            const Interval rhs = iv_add(iv_scale(Rational(-1), o.xs[0]), o.xs[1]);
            return omega_related_with_witnesses(lhs, rhs);
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(4)), Interval(Rational(-2), Rational(3))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.3";
        c.statement = "Any two generalized inverses of x are null-set equal.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Interval x = gen_interval(rng);
            const Rational m = x.mid();
            const Rational r1 = rng.nonneg_rational(50, 16);
            const Rational r2 = rng.nonneg_rational(50, 16);
            ops.xs = {x, Interval(-m - r1, -m + r1), Interval(-m - r2, -m + r2)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return is_generalized_inverse(o.xs[0], o.xs[1]) &&
                   is_generalized_inverse(o.xs[0], o.xs[2]);
        };
        c.conclusion = [](const Operands& o) {
            return omega_related_with_witnesses(o.xs[1], o.xs[2]);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(-3), Rational(1)),
                Interval(Rational(-1), Rational(-1))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "C2.1-generalized-inverse";
        c.statement = "Every generalized inverse of x is null-set equal to (-1)x.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Interval x = gen_interval(rng);
            const Rational m = x.mid();
            const Rational r = rng.nonneg_rational(50, 16);
            ops.xs = {x, Interval(-m - r, -m + r)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return is_generalized_inverse(o.xs[0], o.xs[1]);
        };
        c.conclusion = [](const Operands& o) {
            return omega_related_with_witnesses(o.xs[1], iv_scale(Rational(-1), o.xs[0]));
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3)), Interval(Rational(-4), Rational(0))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R2.2-subspace";
        c.statement =
            "For a subspace Y and y in Y: Y+y stays inside Y, and Y+(y-y) is contained "
            "in Y+y. Audited over the null set, the degenerate diagonal, and the whole "
            "space.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const std::uint64_t which = rng.below(3);
            if (which == 0) {
                ops.regions = {omega_region()};
                const Rational k = gen_null_radius(rng);
                ops.xs = {Interval(-k, k)};
            } else if (which == 1) {
                ops.regions = {degenerate_line()};
                ops.xs = {gen_degenerate_interval(rng)};
            } else {
                ops.regions = {Region::whole_space()};
                ops.xs = {gen_interval(rng)};
            }
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return o.regions[0].member(o.xs[0]); };
        c.conclusion = [](const Operands& o) {
            const Region& y_space = o.regions[0];
            const Interval& y = o.xs[0];
            const Region translated = region_translate(y_space, y);
            const Region null_translated = region_translate(y_space, iv_sub(y, y));
            return region_subset(translated, y_space) &&
                   region_subset(null_translated, translated);
        };
        Operands w;
        w.regions = {omega_region()};
        w.xs = {Interval(Rational(-2), Rational(2))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R2.3-linear-combination";
        c.statement =
            "A repeated-operand linear combination collapses exactly: the positive "
            "coefficients act once through their sum and the negative ones once through "
            "theirs, and 0x is the zero element of the null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            const std::size_t n = 1 + static_cast<std::size_t>(rng.below(8));
            for (std::size_t i = 0; i < n; ++i) {
                ops.scalars.push_back(gen_scalar(rng));
            }
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const LinearCombination lc = linear_combination(o.xs[0], o.scalars);
            Interval manual = iv_scale(o.scalars[0], o.xs[0]);
            for (std::size_t i = 1; i < o.scalars.size(); ++i) {
                manual = iv_add(manual, iv_scale(o.scalars[i], o.xs[0]));
            }
            return lc.folded == lc.collapsed && lc.folded == manual &&
                   is_in_omega(iv_scale(Rational(0), o.xs[0]));
        };
        Operands w;
        w.xs = {Interval(Rational(1), Rational(3))};
        w.scalars = {Rational(2), Rational(-1), Rational(4), Rational(-3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P2.4-span";
        c.statement =
            "Spans are closed under addition and scaling by coefficient certificates: "
            "the sum of two combinations of {s1,s2} is the concatenated combination, and "
            "a scalar multiple rescales every coefficient.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            ops.alphas = {gen_scalar(rng), gen_scalar(rng)};
            ops.betas = {gen_scalar(rng), gen_scalar(rng)};
            ops.scalars = {gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& s1 = o.xs[0];
            const Interval& s2 = o.xs[1];
            auto eval = [&](const Rational& c1, const Rational& c2) {
                return iv_add(iv_scale(c1, s1), iv_scale(c2, s2));
            };
            const Interval u = eval(o.alphas[0], o.alphas[1]);
            const Interval v = eval(o.betas[0], o.betas[1]);
            const Interval concat = iv_add(
                iv_add(iv_add(iv_scale(o.alphas[0], s1), iv_scale(o.alphas[1], s2)),
                       iv_scale(o.betas[0], s1)),
                iv_scale(o.betas[1], s2));
            const Rational& g = o.scalars[0];
            return iv_add(u, v) == concat &&
                   iv_scale(g, u) == eval(g * o.alphas[0], g * o.alphas[1]);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(-1), Rational(1))};
        w.alphas = {Rational(2), Rational(-1)};
        w.betas = {Rational(-3), Rational(4)};
        w.scalars = {Rational(-2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D3.1-null-decomposition";
        c.statement =
            "Every x splits as core + null part for any chosen null radius up to rad(x), "
            "and the whole space equals itself plus the null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            const std::int64_t quarters = rng.range(0, 4);
            ops.ks = {ops.xs[0].rad() * Rational(BigInt(quarters), BigInt(4))};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return !o.ks[0].is_negative() && o.ks[0] <= o.xs[0].rad();
        };
        c.conclusion = [](const Operands& o) {
            const NullDecomposition nd = null_decompose(o.xs[0], o.ks[0]);
            const Region whole = Region::whole_space();
            return iv_add(nd.core, nd.null_part.interval()) == o.xs[0] &&
                   nd.null_part.k() == o.ks[0] &&
                   region_equal(upward_closure(whole), whole);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(4))};
        w.ks = {Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E3.1-interval-null-decomposition";
        c.statement =
            "For non-degenerate x=[a,b] and 0 <= k < (b-a)/2 the split is exactly "
            "[a+k, b-k] + [-k, k].";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Rational a = gen_scalar(rng);
            const Rational spread = Rational(1) + rng.nonneg_rational(40, 16);
            ops.xs = {Interval(a, a + spread)};
            const std::int64_t n = rng.range(0, 7);
            ops.ks = {ops.xs[0].rad() * Rational(BigInt(n), BigInt(n + 1))};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return !o.ks[0].is_negative() && o.ks[0] < o.xs[0].rad();
        };
        c.conclusion = [](const Operands& o) {
            const NullDecomposition nd = null_decompose(o.xs[0], o.ks[0]);
            return nd.core == Interval(o.xs[0].lo() + o.ks[0], o.xs[0].hi() - o.ks[0]) &&
                   iv_add(nd.core, nd.null_part.interval()) == o.xs[0];
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(4))};
        w.ks = {Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E3.2-null-merge";
        c.statement =
            "[-k,k] = [-k1,k1] + [-k2,k2] whenever k = k1+k2, so the null set plus the "
            "null set is the null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Rational k = gen_null_radius(rng);
            const std::int64_t quarters = rng.range(0, 4);
            const Rational k1 = k * Rational(BigInt(quarters), BigInt(4));
            ops.ks = {k, k1};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return !o.ks[1].is_negative() && o.ks[1] <= o.ks[0];
        };
        c.conclusion = [](const Operands& o) {
            const Rational k2 = o.ks[0] - o.ks[1];
            const Interval merged =
                iv_add(omega_interval(o.ks[1]), omega_interval(k2));
            return merged == omega_interval(o.ks[0]) && is_in_omega(merged) &&
                   region_equal(upward_closure(omega_region()), omega_region());
        };
        Operands w;
        w.ks = {Rational(5), Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D3.2-self-decomposition";
        c.statement =
            "A null element omega decomposes against omega0 (omega = omega' + omega0 "
            "with omega' in the null set) exactly when k(omega) >= k(omega0); only "
            "omega0 = [0,0] decomposes every null element.";
        c.note =
            "The source asserts unrestricted self-decomposability of the null set; in "
            "this space a decomposition against omega0 exists exactly when k >= k0, so "
            "only the zero element works universally. Statements premised on "
            "unrestricted self-decomposition are audited conditionally on operands that "
            "satisfy it.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.ks = {gen_null_radius(rng), gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Rational& k = o.ks[0];
            const Rational& k0 = o.ks[1];
            if (k >= k0) {
                const OmegaElement rest =
                    self_decompose(OmegaElement(k), OmegaElement(k0));
                return iv_add(rest.interval(), omega_interval(k0)) == omega_interval(k) &&
                       rest.k() == k - k0;
            }
            // No null remainder exists: any candidate gives radius >= k0 > k;
            // in particular the smallest one misses omega.
            return (k - k0).is_negative() &&
                   iv_add(omega_interval(Rational(0)), omega_interval(k0)) !=
                       omega_interval(k);
        };
        Operands w1;
        w1.ks = {Rational(3), Rational(1)};
        Operands w2;
        w2.ks = {Rational(0), Rational(2)};
        c.witnesses = {w1, w2};
        out.push_back(std::move(c));
    }
}

}  // namespace nullspace
