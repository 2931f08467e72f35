#include "nullspace/audit.hpp"

namespace nullspace {

namespace {

Interval omega_interval(const Rational& k) { return Interval(-k, k); }

/// A probe interval that lands inside the ball half the time: either the
/// center nudged by less than epsilon, or a free draw.
Interval gen_ball_probe(const BallSpec& spec, Rng& rng) {
    if (rng.chance(1, 2)) {
        const Rational shift = rng.rational(30, 8);
        const Rational widen = rng.nonneg_rational(10, 4);
        const Interval& c = spec.center;
        return Interval(c.lo() + shift - widen, c.hi() + shift + widen);
    }
    return gen_interval(rng);
}

}  // namespace

void register_ball_cases(std::vector<AuditCase>& out) {
    {
        AuditCase c;
        c.id = "P5.1.i-null-absorption";
        c.statement =
            "If x + omega lies in the open ball B(x0; eps), then so does x (the "
            "distance satisfies the null inequalities).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center, gen_ball_probe(spec, rng)};
            ops.epsilons = {spec.epsilon};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region ball = open_ball({o.xs[0], o.epsilons[0]});
            const Interval shifted = iv_add(o.xs[1], omega_interval(o.ks[0]));
            return !ball.member(shifted) || ball.member(o.xs[1]);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(2))};
        w.epsilons = {Rational(3)};
        w.ks = {Rational(5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.1.ii-null-absorption-iff";
        c.statement =
            "x + omega lies in B(x0; eps) exactly when x does, and consequently "
            "B(x0; eps) + null set is contained in B(x0; eps).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center, gen_ball_probe(spec, rng)};
            ops.epsilons = {spec.epsilon};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region ball = open_ball({o.xs[0], o.epsilons[0]});
            const Interval shifted = iv_add(o.xs[1], omega_interval(o.ks[0]));
            return ball.member(shifted) == ball.member(o.xs[1]) &&
                   region_subset(upward_closure(ball), ball);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(2))};
        w.epsilons = {Rational(3)};
        w.ks = {Rational(5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.2.i-center-null-inclusion";
        c.statement = "B(x0 + omega; eps) is contained in B(x0; eps).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval shifted_center = iv_add(o.xs[0], omega_interval(o.ks[0]));
            return region_subset(open_ball({shifted_center, o.epsilons[0]}),
                                 open_ball({o.xs[0], o.epsilons[0]}));
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2))};
        w.epsilons = {Rational(1)};
        w.ks = {Rational(4)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.ball-omega-eq";
        c.statement = "B(x0 + omega; eps) = B(x0; eps) as regions.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval shifted_center = iv_add(o.xs[0], omega_interval(o.ks[0]));
            return region_equal(open_ball({shifted_center, o.epsilons[0]}),
                                open_ball({o.xs[0], o.epsilons[0]})) &&
                   region_equal(closed_ball({shifted_center, o.epsilons[0]}),
                                closed_ball({o.xs[0], o.epsilons[0]}));
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2))};
        w.epsilons = {Rational(1)};
        w.ks = {Rational(4)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.3.i-ball-upward-inclusion";
        c.statement = "B(x0; eps) is contained in B(x0; eps) + null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region ball = open_ball({o.xs[0], o.epsilons[0]});
            return region_subset(ball, upward_closure(ball));
        };
        Operands w;
        w.xs = {Interval(Rational(-1), Rational(3))};
        w.epsilons = {Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.3.ii-ball-upward-equal";
        c.statement = "B(x0; eps) + null set = B(x0; eps).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region ball = open_ball({o.xs[0], o.epsilons[0]});
            return region_equal(upward_closure(ball), ball);
        };
        Operands w;
        w.xs = {Interval(Rational(-1), Rational(3))};
        w.epsilons = {Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.4.i-translate-inclusions";
        c.statement =
            "B(x; eps) + xhat is contained in B(x + xhat; eps), and B(x; eps) + (x - x) "
            "is contained in x + B(x - x; eps).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center, gen_interval(rng)};
            ops.epsilons = {spec.epsilon};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& xhat = o.xs[1];
            const Rational& eps = o.epsilons[0];
            const Interval wx = iv_sub(x, x);
            const bool translate_ok =
                region_subset(region_translate(open_ball({x, eps}), xhat),
                              open_ball({iv_add(x, xhat), eps}));
            const bool null_route_ok =
                region_subset(region_translate(open_ball({x, eps}), wx),
                              region_translate(open_ball({wx, eps}), x));
            return translate_ok && null_route_ok;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(5))};
        w.epsilons = {Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.4.ii-null-translate-inclusions";
        c.statement =
            "B(x; eps) + omega and B(omega; eps) + xhat are contained in B(x; eps) and "
            "B(xhat; eps) respectively, and B(x + xhat; eps) + (xhat - xhat) is "
            "contained in B(x; eps) + xhat.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center, gen_interval(rng)};
            ops.epsilons = {spec.epsilon};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& xhat = o.xs[1];
            const Rational& eps = o.epsilons[0];
            const Interval omega = omega_interval(o.ks[0]);
            const Interval w_xhat = iv_sub(xhat, xhat);
            const bool first =
                region_subset(region_translate(open_ball({x, eps}), omega),
                              open_ball({x, eps}));
            const bool second =
                region_subset(region_translate(open_ball({omega, eps}), xhat),
                              open_ball({xhat, eps}));
            const bool third = region_subset(
                region_translate(open_ball({iv_add(x, xhat), eps}), w_xhat),
                region_translate(open_ball({x, eps}), xhat));
            return first && second && third;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(5))};
        w.epsilons = {Rational(2)};
        w.ks = {Rational(3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.4.iii-translate-equality";
        c.statement =
            "B(x + xhat; eps) = B(x; eps) + xhat, premised on the null set owning the "
            "self-decomposition for the null part of xhat.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "The premise holds in this space only for degenerate xhat (its null part "
            "xhat - xhat must be the zero element), so trials are restricted to "
            "rad(xhat) = 0. For rad(xhat) > 0 the left side is a full strip while the "
            "right side is clipped to radii >= rad(xhat).";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center,
                      rng.chance(1, 2) ? gen_degenerate_interval(rng) : gen_interval(rng)};
            ops.epsilons = {spec.epsilon};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return o.xs[1].rad().is_zero(); };
        c.conclusion = [](const Operands& o) {
            const Rational& eps = o.epsilons[0];
            return region_equal(open_ball({iv_add(o.xs[0], o.xs[1]), eps}),
                                region_translate(open_ball({o.xs[0], eps}), o.xs[1]));
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(3))};
        w.epsilons = {Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.4.iv-null-translate-equality";
        c.statement =
            "B(x; eps) + omega = B(x; eps) and B(omega; eps) + xhat = B(xhat; eps), "
            "premised on the null set owning the self-decomposition for the null "
            "elements involved.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "The premise restricts trials to omega = [0,0] and rad(xhat) = 0: "
            "translating by a null element of radius k clips the strip to radii >= k, "
            "so the equalities fail for any k > 0.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center,
                      rng.chance(1, 2) ? gen_degenerate_interval(rng) : gen_interval(rng)};
            ops.epsilons = {spec.epsilon};
            ops.ks = {rng.chance(1, 2) ? Rational(0) : gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return o.ks[0].is_zero() && o.xs[1].rad().is_zero();
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& xhat = o.xs[1];
            const Rational& eps = o.epsilons[0];
            const Interval omega = omega_interval(o.ks[0]);
            return region_equal(region_translate(open_ball({x, eps}), omega),
                                open_ball({x, eps})) &&
                   region_equal(region_translate(open_ball({omega, eps}), xhat),
                                open_ball({xhat, eps}));
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(3))};
        w.epsilons = {Rational(2)};
        w.ks = {Rational(0)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.5-ball-null-fattening";
        c.statement =
            "B(a; eps) + omega0 = B(a; eps) + null set, premised on the null set owning "
            "the self-decomposition with respect to omega0.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "Only omega0 = [0,0] satisfies the premise here. For k0 > 0 the left side "
            "is the strip clipped to radii >= k0 while the right side is the full "
            "strip, so the equality fails.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            ops.ks = {rng.chance(1, 2) ? Rational(0) : gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return o.ks[0].is_zero(); };
        c.conclusion = [](const Operands& o) {
            const Region ball = open_ball({o.xs[0], o.epsilons[0]});
            return region_equal(region_translate(ball, omega_interval(o.ks[0])),
                                upward_closure(ball));
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2))};
        w.epsilons = {Rational(2)};
        w.ks = {Rational(0)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.6-null-distances";
        c.statement =
            "Any two null elements are at distance zero, so the whole null set is "
            "contained in every ball B(omega; eps) around a null element.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.ks = {gen_null_radius(rng), gen_null_radius(rng)};
            ops.epsilons = {gen_epsilon(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval w1 = omega_interval(o.ks[0]);
            const Interval w2 = omega_interval(o.ks[1]);
            return metric_d(w1, w2).is_zero() &&
                   region_subset(omega_region(), open_ball({w1, o.epsilons[0]}));
        };
        Operands w;
        w.ks = {Rational(2), Rational(7)};
        w.epsilons = {Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P5.7-null-ball-scaling";
        c.statement =
            "alpha B(omega; eps) = B(omega; |alpha| eps) for every null element omega "
            "and every scalar alpha distinct from zero.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.ks = {gen_null_radius(rng)};
            ops.epsilons = {gen_epsilon(rng)};
            ops.scalars = {gen_nonzero_scalar(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return !o.scalars[0].is_zero(); };
        c.conclusion = [](const Operands& o) {
            const Interval omega = omega_interval(o.ks[0]);
            const Region scaled =
                region_scale(o.scalars[0], open_ball({omega, o.epsilons[0]}));
            return region_equal(scaled,
                                open_ball({omega, abs(o.scalars[0]) * o.epsilons[0]}));
        };
        Operands w;
        w.ks = {Rational(3)};
        w.epsilons = {Rational(2)};
        w.scalars = {Rational(-5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
}

}  // namespace nullspace
