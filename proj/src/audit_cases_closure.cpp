#include "nullspace/audit.hpp"

#include "nullspace/mset.hpp"

namespace nullspace {

namespace {

constexpr Kind all_kinds[] = {Kind::Plain, Kind::TypeI, Kind::TypeII, Kind::TypeIII};

Interval omega_interval(const Rational& k) { return Interval(-k, k); }

/// Region mix skewed toward closure-relevant shapes: closed columns, open
/// columns, bottom-touching bands, and unconstrained draws.
Region gen_closure_region(Rng& rng) {
    switch (rng.below(4)) {
        case 0: return gen_closed_region(rng);
        case 1: return gen_open_region(rng);
        case 2: return gen_squeezed_region(rng);
        default: return gen_region(rng);
    }
}

/// The canonical bottom-touching band: m in (0,2) with radii [0,1] union
/// [2,3]. Its closure is the full columns over [0,2].
Region squeezed_band() {
    const Piece m{Bound::open_at(Rational(0)), Bound::open_at(Rational(2))};
    const Piece r_low{Bound::closed_at(Rational(0)), Bound::closed_at(Rational(1))};
    const Piece r_high{Bound::closed_at(Rational(2)), Bound::closed_at(Rational(3))};
    return Region::from_boxes({{m, r_low}, {m, r_high}});
}

Region open_column_witness() {
    return columns_over(MSet::piece(Bound::open_at(Rational(-1)), Bound::open_at(Rational(1))));
}

Region closed_column_witness() {
    return columns_over(MSet::piece(Bound::closed_at(Rational(0)), Bound::closed_at(Rational(1))));
}

}  // namespace

void register_closure_cases(std::vector<AuditCase>& out) {
    {
        AuditCase c;
        c.id = "D7.1-closure-points";
        c.statement =
            "The compiled closure operators agree with the definitional point test "
            "(x in A, or every ball around x -- fattened by the null set for the "
            "type-I and type-III senses -- meets A -- fattened for the type-II and "
            "type-III senses) for all four kinds.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_closure_region(rng)};
            ops.xs = {gen_probe_interval(ops.regions[0], rng),
                      gen_probe_interval(ops.regions[0], rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            for (const Kind kind : all_kinds) {
                const Region compiled = closure_of(o.regions[0], kind);
                for (const Interval& x : o.xs) {
                    if (compiled.member(x) !=
                        oracle_point_check(o.regions[0], x, OracleMode::closure, kind)) {
                        return false;
                    }
                }
            }
            return true;
        };
        Operands w;
        w.regions = {squeezed_band()};
        w.xs = {Interval(Rational(-1, 2), Rational(5, 2)),
                Interval(Rational(5), Rational(5))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R7.1-closure-inclusions";
        c.statement =
            "The closure web: with the null equalities, cl-I(A) lies inside cl(A) and "
            "cl-III(A) inside cl-II(A); with the null decomposition, cl(A) lies inside "
            "cl-I(A) and cl-II(A) inside cl-III(A); with both (and the null set closed "
            "under addition), all four closures coincide.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region plain = closure_of(o.regions[0], Kind::Plain);
            const Region one = closure_of(o.regions[0], Kind::TypeI);
            const Region two = closure_of(o.regions[0], Kind::TypeII);
            const Region three = closure_of(o.regions[0], Kind::TypeIII);
            return region_subset(one, plain) && region_subset(three, two) &&
                   region_subset(plain, one) && region_subset(two, three) &&
                   region_equal(plain, one) && region_equal(two, three) &&
                   region_equal(plain, two);
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R7.2-type-one-closure-simplification";
        c.statement =
            "cl-I(A) needs no membership escape clause, because every fattened ball "
            "already contains its center: it equals the full columns over the "
            "one-dimensional closure of the midpoint shadow of A, and the other three "
            "closures compile to the same region.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region expected =
                columns_over(mset_closure(project_m(o.regions[0])));
            for (const Kind kind : all_kinds) {
                if (!region_equal(closure_of(o.regions[0], kind), expected)) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R7.3-closed-set-basics";
        c.statement =
            "For every kind: A lies inside cl-k(A); the empty set and the whole space "
            "are k-closed; cl-k(A) is the smallest k-closed superset of A; and A is "
            "k-closed exactly when cl-k(A) lies inside A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_closure_region(rng), gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region none = Region::empty_region();
            const Region whole = Region::whole_space();
            for (const Kind kind : all_kinds) {
                const Region cl = closure_of(a, kind);
                if (!region_subset(a, cl) || !is_closed(none, kind) ||
                    !is_closed(whole, kind)) {
                    return false;
                }
                // A k-closed superset of A, built by closing a union with A.
                const Region superset = closure_of(region_union(a, o.regions[1]), kind);
                if (!region_subset(cl, superset)) {
                    return false;
                }
                if (is_closed(a, kind) != region_subset(cl, a)) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.regions = {squeezed_band(), open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R7.singleton-closed";
        c.statement =
            "A singleton {x} is closed and type-III-closed; given the null "
            "decomposition it is also type-I-closed, and given the null equalities "
            "also type-II-closed.";
        c.expected = ExpectedStatus::expected_fail;
        c.note =
            "Refuted here even though both premises hold: distinct vectors sharing a "
            "midpoint are at distance zero, so every closure of {x} is the whole "
            "vertical line through x. With x = [0, 2], the vector y = [-1, 3] shares "
            "the midpoint 1 and lies in all four closures of {x} without lying in "
            "{x}, so no singleton is closed in any of the four senses.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.xs = {gen_interval(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region singleton = Region::point(to_midrad(o.xs[0]));
            for (const Kind kind : all_kinds) {
                if (!is_closed(singleton, kind)) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(2))};
        c.witnesses = {w};
        c.canonical_counterexample = w.str();
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.1-closure-idempotence";
        c.statement =
            "All four closure operators are idempotent: cl-k(cl-k(A)) = cl-k(A), so "
            "every closure is closed in its own sense.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            for (const Kind kind : all_kinds) {
                const Region cl = closure_of(o.regions[0], kind);
                if (!region_equal(closure_of(cl, kind), cl) || !is_closed(cl, kind)) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "L7.1-null-descent";
        c.statement =
            "Null translates descend out of fattened sets: x + omega in "
            "A + null set + x0 forces x in A + null set + x0 (likewise without x0, "
            "and from x + omega in A + omega or in A), with the converses for free "
            "since the null set is closed under addition; and A always lies inside "
            "A + null set -- premised on the null set owning the self-decomposition.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "The descent clauses are restricted to omega = [0,0], because the null "
            "set here only self-decomposes downward: with A = {[-1,1]}, x = [0,0] and "
            "omega = [-1,1], the translate x + omega lies in A + null set while x "
            "does not. The converse clauses and the inclusion of A in A + null set "
            "hold for every null element and are checked with an unrestricted second "
            "draw.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_closure_region(rng)};
            ops.xs = {gen_probe_interval(ops.regions[0], rng), gen_interval(rng)};
            ops.ks = {rng.chance(1, 2) ? Rational(0) : gen_null_radius(rng),
                      gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return o.ks[0].is_zero(); };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region fattened = upward_closure(a);
            const Region translated = region_translate(fattened, o.xs[1]);
            const Interval omega = omega_interval(o.ks[0]);
            const Interval shifted = iv_add(o.xs[0], omega);
            const bool descent_ok =
                (!translated.member(shifted) || translated.member(o.xs[0])) &&
                (!fattened.member(shifted) || fattened.member(o.xs[0])) &&
                (!region_translate(a, omega).member(shifted) ||
                 fattened.member(o.xs[0])) &&
                (!a.member(shifted) || fattened.member(o.xs[0]));
            const Interval free_shift = iv_add(o.xs[0], omega_interval(o.ks[1]));
            const bool converse_ok =
                (!translated.member(o.xs[0]) || translated.member(free_shift)) &&
                (!fattened.member(o.xs[0]) || fattened.member(free_shift));
            return descent_ok && converse_ok && region_subset(a, fattened);
        };
        Operands w;
        w.regions = {Region::point(MidRadPoint(Rational(0), Rational(1)))};
        w.xs = {Interval(Rational(0), Rational(0)), Interval(Rational(1), Rational(3))};
        w.ks = {Rational(0), Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.2-closed-null-expansion";
        c.statement =
            "cl-II(A) and cl-III(A) lie inside their own translates by any null "
            "element; in particular a type-II- or type-III-closed A satisfies A "
            "inside A + omega -- premised on the null set owning the "
            "self-decomposition and being closed under addition.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "The premise restricts trials to omega = [0,0]: translating by the null "
            "element of radius k lifts every point's radius by k, so for k > 0 the "
            "closed columns over [0,1] (type-II-closed) already escape -- their floor "
            "point [0,0] is not in the translate, which only starts at radius k.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(1, 2) ? gen_closed_region(rng)
                                            : gen_closure_region(rng)};
            ops.ks = {rng.chance(1, 2) ? Rational(0) : gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return o.ks[0].is_zero(); };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Interval omega = omega_interval(o.ks[0]);
            const Region two = closure_of(a, Kind::TypeII);
            const Region three = closure_of(a, Kind::TypeIII);
            const bool closure_ok =
                region_subset(two, region_translate(two, omega)) &&
                region_subset(three, region_translate(three, omega));
            const bool closed_ok =
                (!is_closed(a, Kind::TypeII) ||
                 region_subset(a, region_translate(a, omega))) &&
                (!is_closed(a, Kind::TypeIII) ||
                 region_subset(a, region_translate(a, omega)));
            return closure_ok && closed_ok;
        };
        Operands w;
        w.regions = {closed_column_witness()};
        w.ks = {Rational(0)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.3-plain-complement-duality";
        c.statement =
            "Complements swap openness and closedness: the complement of an open set "
            "is closed and the complement of a closed set is open, in the plain sense "
            "and in the type-I sense.";
        c.generate = [](Rng& rng) {
            Operands ops;
            switch (rng.below(4)) {
                case 0: ops.regions = {gen_open_region(rng)}; break;
                case 1: ops.regions = {gen_closed_region(rng)}; break;
                default: ops.regions = {gen_closure_region(rng)}; break;
            }
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region outside = region_complement(a);
            for (const Kind kind : {Kind::Plain, Kind::TypeI}) {
                if (is_open(a, kind) && !is_closed(outside, kind)) {
                    return false;
                }
                if (is_closed(a, kind) && !is_open(outside, kind)) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.4-open-complement-closed-pseudo";
        c.statement =
            "The complement of a type-II-pseudo-open set is type-II-closed, and the "
            "complement of a type-III-pseudo-open set is type-III-closed.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(1, 2) ? gen_open_region(rng)
                                            : gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region outside = region_complement(a);
            return (!is_pseudo_open(a, Kind::TypeII) ||
                    is_closed(outside, Kind::TypeII)) &&
                   (!is_pseudo_open(a, Kind::TypeIII) ||
                    is_closed(outside, Kind::TypeIII));
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.4-open-complement-closed-literal";
        c.statement =
            "Read with the literal openness (members required to lie in A): the "
            "complement of a type-II-open set is type-II-closed, and the complement "
            "of a type-III-open set is type-III-closed -- premised on A + null set "
            "inside A.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "Without the premise the band over (0,2) with radii [0,1] union [2,3] "
            "refutes both parts: it is literally type-II- and type-III-open, yet the "
            "closure of its complement is the whole space. The premise upgrades "
            "literal openness to full columns over an open set, whose complement is "
            "the closed columns over the complement.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(3, 4) ? gen_open_region(rng)
                                            : gen_closure_region(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return cond_506(o.regions[0]) && is_open(o.regions[0], Kind::TypeII);
        };
        c.conclusion = [](const Operands& o) {
            const Region outside = region_complement(o.regions[0]);
            return is_closed(outside, Kind::TypeII) &&
                   is_closed(outside, Kind::TypeIII);
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.5-closed-complement-open";
        c.statement =
            "The complement of a type-II-closed set is simultaneously open and "
            "type-II-open; the complement of a type-III-closed set is simultaneously "
            "type-I- and type-III-open.";
        c.note =
            "The graded premises behind the source claim are not needed here: every "
            "closed set of any kind is the full columns over a closed midpoint set, "
            "so its complement is the full columns over an open set, which is open "
            "in all four senses.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(1, 2) ? gen_closed_region(rng)
                                            : gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region outside = region_complement(a);
            const bool two_ok =
                !is_closed(a, Kind::TypeII) ||
                (is_open(outside, Kind::Plain) && is_open(outside, Kind::TypeII));
            const bool three_ok =
                !is_closed(a, Kind::TypeIII) ||
                (is_open(outside, Kind::TypeI) && is_open(outside, Kind::TypeIII));
            return two_ok && three_ok;
        };
        Operands w;
        w.regions = {closed_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.6-simultaneous-closedness";
        c.statement =
            "A set that is closed or type-I-closed is simultaneously closed in all "
            "four senses; here the four closedness predicates agree on every set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(1, 2) ? gen_closed_region(rng)
                                            : gen_closure_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const bool plain = is_closed(a, Kind::Plain);
            const bool one = is_closed(a, Kind::TypeI);
            const bool two = is_closed(a, Kind::TypeII);
            const bool three = is_closed(a, Kind::TypeIII);
            const bool joint_ok = !(plain || one) || (plain && one && two && three);
            return joint_ok && plain == one && one == two && two == three;
        };
        Operands w;
        w.regions = {closed_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P7.7-closed-balls-closed";
        c.statement =
            "Closed balls are closed and type-III-closed; with the null inequalities "
            "also type-I-closed; with the null decomposition and the null equalities "
            "also type-II-closed. All premises hold here, so every closed ball is "
            "closed in all four senses.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region ball = closed_ball({o.xs[0], o.epsilons[0]});
            for (const Kind kind : all_kinds) {
                if (!is_closed(ball, kind)) {
                    return false;
                }
            }
            return true;
        };
        Operands w;
        w.xs = {Interval(Rational(-2), Rational(2))};
        w.epsilons = {Rational(3)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
}

}  // namespace nullspace
