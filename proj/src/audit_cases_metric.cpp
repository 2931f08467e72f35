#include "nullspace/audit.hpp"

namespace nullspace {

namespace {

Interval omega_interval(const Rational& k) { return Interval(-k, k); }

bool omega_related_with_witnesses(const Interval& x, const Interval& y) {
    const auto w = omega_equal(x, y);
    if (!w.has_value()) {
        return false;
    }
    return iv_add(x, w->omega1.interval()) == iv_add(y, w->omega2.interval());
}

/// x and either a same-midpoint partner (half the time) or a fresh draw.
std::vector<Interval> gen_metric_pair(Rng& rng) {
    const Interval x = gen_interval(rng);
    if (rng.chance(1, 2)) {
        return {x, gen_same_midpoint(rng, x)};
    }
    return {x, gen_interval(rng)};
}

GridIntervalFunction witness_fun(std::vector<Interval> values) {
    std::vector<std::string> grid;
    for (std::size_t i = 0; i < values.size(); ++i) {
        grid.push_back("t" + std::to_string(i));
    }
    return GridIntervalFunction(std::move(grid), std::move(values));
}

}  // namespace

void register_metric_cases(std::vector<AuditCase>& out) {
    {
        AuditCase c;
        c.id = "M4.i-zero-iff-omega-equal";
        c.statement = "d(x,y) = 0 exactly when x and y are null-set equal.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = gen_metric_pair(rng);
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            return law_check(LawId::metric_zero_iff_omega_equal, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(1))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.not-i-prime";
        c.statement =
            "Zero distance does not force identity: there are distinct x, y with "
            "d(x,y) = 0, so the distance is a pseudo-metric and not a metric.";
        c.note =
            "Any same-midpoint pair of different widths works; the embedded witness is "
            "x=[0,2], y=[1,1] with d = |(0+2)-(1+1)| = 0.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Interval x = gen_interval(rng);
            const Rational k = Rational(1) + gen_null_radius(rng);
            ops.xs = {x, iv_add(x, omega_interval(k))};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            return metric_d(o.xs[0], o.xs[1]).is_zero() && o.xs[0] != o.xs[1] &&
                   !law_check(LawId::metric_zero_iff_equal, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(1))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.ii-symmetry";
        c.statement = "d(x,y) = d(y,x).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            return law_check(LawId::metric_symmetry, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(-1), Rational(4)), Interval(Rational(2), Rational(7))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.iii-triangle";
        c.statement = "d(x,y) <= d(x,z) + d(z,y).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng), gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            return law_check(LawId::metric_triangle, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(1)), Interval(Rational(5), Rational(6)),
                Interval(Rational(-2), Rational(2))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.iv-null-inequalities";
        c.statement =
            "Null perturbations never change the distance downward: d(x+w1, y+w2), "
            "d(x+w1, y) and d(x, y+w2) are all >= d(x,y).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = gen_metric_pair(rng);
            ops.ks = {gen_null_radius(rng), gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.omegas = {OmegaElement(o.ks[0]), OmegaElement(o.ks[1])};
            return law_check(LawId::metric_null_inequalities, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5))};
        w.ks = {Rational(1), Rational(4)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.iv-prime-null-equalities";
        c.statement =
            "Null perturbations leave the distance unchanged: d(x+w1, y+w2), d(x+w1, y) "
            "and d(x, y+w2) all equal d(x,y).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = gen_metric_pair(rng);
            ops.ks = {gen_null_radius(rng), gen_null_radius(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            s.omegas = {OmegaElement(o.ks[0]), OmegaElement(o.ks[1])};
            return law_check(LawId::metric_null_equalities, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5))};
        w.ks = {Rational(1), Rational(4)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.v-zero-sum-inequalities";
        c.statement =
            "Perturbing x by a zero-sum coefficient sequence on one carrier and y by "
            "another never shrinks the distance.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng), gen_interval(rng),
                      gen_interval(rng)};
            ops.alphas = gen_zero_sum(rng);
            ops.betas = gen_zero_sum(rng);
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = {o.xs[0], o.xs[1]};
            s.alphas = o.alphas;
            s.betas = o.betas;
            s.a = o.xs[2];
            s.b = o.xs[3];
            return law_check(LawId::metric_zero_sum_inequalities, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5)),
                Interval(Rational(-1), Rational(1)), Interval(Rational(2), Rational(6))};
        w.alphas = {Rational(2), Rational(-3), Rational(1)};
        w.betas = {Rational(-1), Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "M4.v-prime-zero-sum-equalities";
        c.statement =
            "Zero-sum coefficient perturbations leave the distance exactly unchanged.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng), gen_interval(rng),
                      gen_interval(rng)};
            ops.alphas = gen_zero_sum(rng);
            ops.betas = gen_zero_sum(rng);
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = {o.xs[0], o.xs[1]};
            s.alphas = o.alphas;
            s.betas = o.betas;
            s.a = o.xs[2];
            s.b = o.xs[3];
            return law_check(LawId::metric_zero_sum_equalities, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5)),
                Interval(Rational(-1), Rational(1)), Interval(Rational(2), Rational(6))};
        w.alphas = {Rational(2), Rational(-3), Rational(1)};
        w.betas = {Rational(-1), Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R4.1-equalities-from-omega-instances";
        c.statement =
            "The null-perturbation equalities hold in particular for the canonical null "
            "elements a-a and b-b produced by self-subtraction.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng), gen_interval(rng),
                      gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = {o.xs[0], o.xs[1]};
            s.omegas = {OmegaElement::from_interval(iv_sub(o.xs[2], o.xs[2])),
                        OmegaElement::from_interval(iv_sub(o.xs[3], o.xs[3]))};
            return law_check(LawId::metric_null_equalities, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5)),
                Interval(Rational(-1), Rational(4)), Interval(Rational(1), Rational(2))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E4.1-distance-formula";
        c.statement =
            "d([a,b],[c,d]) = |(a+b)-(c+d)|, and zero-distance pairs carry explicit "
            "null-translate witnesses reconstructing the equality.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = gen_metric_pair(rng);
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Interval& x = o.xs[0];
            const Interval& y = o.xs[1];
            const Rational d = metric_d(x, y);
            if (d != abs(x.sum() - y.sum())) {
                return false;
            }
            return !d.is_zero() || omega_related_with_witnesses(x, y);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(-3), Rational(5))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E4.2.i-function-space";
        c.statement =
            "Interval-valued functions on a finite grid form the same kind of space "
            "pointwise: (f+g)(t) = f(t)+g(t) and (af)(t) = a f(t) at every grid point.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const std::vector<std::string> grid = gen_grid(rng);
            ops.funs = {gen_gridfun(rng, grid), gen_gridfun(rng, grid)};
            ops.scalars = {gen_scalar(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const GridIntervalFunction& f = o.funs[0];
            const GridIntervalFunction& g = o.funs[1];
            const GridIntervalFunction sum = f_add(f, g);
            const GridIntervalFunction scaled = f_scale(o.scalars[0], f);
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (sum.values()[i] != iv_add(f.values()[i], g.values()[i])) {
                    return false;
                }
                if (scaled.values()[i] != iv_scale(o.scalars[0], f.values()[i])) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.funs = {witness_fun({Interval(Rational(0), Rational(1)),
                               Interval(Rational(-2), Rational(3))}),
                  witness_fun({Interval(Rational(1), Rational(1)),
                               Interval(Rational(0), Rational(4))})};
        w.scalars = {Rational(-2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E4.2.ii-function-metric";
        c.statement =
            "The function-space distance is the maximum pointwise distance; it vanishes "
            "exactly when the functions are null-set equal pointwise, and the null set "
            "consists of the functions whose every value has midpoint zero.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const std::vector<std::string> grid = gen_grid(rng);
            ops.funs = {gen_gridfun(rng, grid)};
            if (rng.chance(1, 2)) {
                // Same-midpoint partner: perturb every value by a null element.
                std::vector<Interval> values;
                for (const Interval& v : ops.funs[0].values()) {
                    const Rational k = gen_null_radius(rng);
                    values.push_back(iv_add(v, Interval(-k, k)));
                }
                ops.funs.push_back(GridIntervalFunction(grid, std::move(values)));
            } else {
                ops.funs.push_back(gen_gridfun(rng, grid));
            }
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const GridIntervalFunction& f = o.funs[0];
            const GridIntervalFunction& g = o.funs[1];
            const Rational d = d_IC(f, g);
            Rational manual(0);
            bool all_null = true;
            for (std::size_t i = 0; i < f.size(); ++i) {
                const Rational di = metric_d(f.values()[i], g.values()[i]);
                if (di > manual) {
                    manual = di;
                }
                all_null = all_null && f.values()[i].sum().is_zero();
            }
            return d == manual && omega_equal_IC(f, g) == d.is_zero() &&
                   is_in_omega_IC(f) == all_null;
        };
        Operands w;
        w.funs = {witness_fun({Interval(Rational(0), Rational(2)),
                               Interval(Rational(-2), Rational(3))}),
                  witness_fun({Interval(Rational(1), Rational(1)),
                               Interval(Rational(0), Rational(4))})};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E4.2.iii-function-zero-sum";
        c.statement =
            "Zero-sum coefficient perturbations along a carrier function leave the "
            "function-space distance unchanged.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const std::vector<std::string> grid = gen_grid(rng);
            ops.funs = {gen_gridfun(rng, grid), gen_gridfun(rng, grid),
                        gen_gridfun(rng, grid)};
            ops.alphas = gen_zero_sum(rng);
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            GridIntervalFunction perturbed = o.funs[0];
            for (const Rational& a : o.alphas) {
                perturbed = f_add(perturbed, f_scale(a, o.funs[2]));
            }
            return d_IC(perturbed, o.funs[1]) == d_IC(o.funs[0], o.funs[1]);
        };
        Operands w;
        w.funs = {witness_fun({Interval(Rational(0), Rational(2)),
                               Interval(Rational(-2), Rational(3))}),
                  witness_fun({Interval(Rational(1), Rational(1)),
                               Interval(Rational(0), Rational(4))}),
                  witness_fun({Interval(Rational(-1), Rational(5)),
                               Interval(Rational(2), Rational(2))})};
        w.alphas = {Rational(3), Rational(-1), Rational(-2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D4.2.i-translation-invariance";
        c.statement = "d(x+z, y+z) = d(x,y).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng), gen_interval(rng), gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            LawSample s;
            s.xs = o.xs;
            return law_check(LawId::metric_translation_invariance, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5)),
                Interval(Rational(-4), Rational(1))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "D4.2.ii-absolute-homogeneity";
        c.statement = "d(ax, ay) = |a| d(x,y).";
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
            return law_check(LawId::metric_absolute_homogeneity, s).holds;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2)), Interval(Rational(3), Rational(5))};
        w.scalars = {Rational(-3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
}

}  // namespace nullspace
