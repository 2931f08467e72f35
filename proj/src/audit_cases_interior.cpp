#include "nullspace/audit.hpp"

#include "nullspace/mset.hpp"

namespace nullspace {

namespace {

constexpr Kind all_kinds[] = {Kind::Plain, Kind::TypeI, Kind::TypeII, Kind::TypeIII};

Interval omega_interval(const Rational& k) { return Interval(-k, k); }

/// Region mix skewed toward the interesting shapes: open columns, upward
/// closures, bottom-touching bands, and unconstrained draws.
Region gen_topology_region(Rng& rng) {
    switch (rng.below(4)) {
        case 0: return gen_open_region(rng);
        case 1: return gen_upward_region(rng);
        case 2: return gen_squeezed_region(rng);
        default: return gen_region(rng);
    }
}

/// The canonical bottom-touching band: m in (0,2) with radii [0,1] union
/// [2,3]. Literally type-II-open yet not upward closed.
Region squeezed_band() {
    const Piece m{Bound::open_at(Rational(0)), Bound::open_at(Rational(2))};
    const Piece r_low{Bound::closed_at(Rational(0)), Bound::closed_at(Rational(1))};
    const Piece r_high{Bound::closed_at(Rational(2)), Bound::closed_at(Rational(3))};
    return Region::from_boxes({{m, r_low}, {m, r_high}});
}

Region open_column_witness() {
    return columns_over(MSet::piece(Bound::open_at(Rational(-1)), Bound::open_at(Rational(1))));
}

}  // namespace

void register_interior_cases(std::vector<AuditCase>& out) {
    {
        AuditCase c;
        c.id = "D6.1-interior-points";
        c.statement =
            "The compiled interior operators agree with the definitional point test "
            "(some ball, fattened per kind, inside the correspondingly fattened set, "
            "with the point itself in A) for all four kinds.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            ops.xs = {gen_probe_interval(ops.regions[0], rng),
                      gen_probe_interval(ops.regions[0], rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            for (const Kind kind : all_kinds) {
                const Region compiled = interior_of(o.regions[0], kind, false);
                for (const Interval& x : o.xs) {
                    if (compiled.member(x) !=
                        oracle_point_check(o.regions[0], x, OracleMode::interior, kind)) {
                        return false;
                    }
                }
            }
            return true;
        };
        Operands w;
        w.regions = {squeezed_band()};
        w.xs = {Interval(Rational(1), Rational(1)),
                Interval(Rational(-1, 2), Rational(5, 2))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R6.1-interior-inclusions";
        c.statement =
            "The graded interior inclusions: int(A) and int-I(A) are contained in "
            "int-III(A); int(A) = int-I(A); int-II(A) = int-III(A); and int-I(A) is "
            "contained in int(A), int-III(A) in int-II(A).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region plain = interior_of(o.regions[0], Kind::Plain, false);
            const Region one = interior_of(o.regions[0], Kind::TypeI, false);
            const Region two = interior_of(o.regions[0], Kind::TypeII, false);
            const Region three = interior_of(o.regions[0], Kind::TypeIII, false);
            return region_subset(plain, three) && region_subset(one, three) &&
                   region_subset(plain, one) && region_subset(two, three) &&
                   region_subset(one, plain) && region_subset(three, two) &&
                   region_equal(plain, one) && region_equal(two, three);
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "E6.1-null-set-idempotent";
        c.statement =
            "Every null element [-k,k] with k > 0 splits into two strictly positive "
            "null parts, so null set + null set = null set here.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const Rational k = Rational(1) + gen_null_radius(rng);
            const std::int64_t q = rng.range(1, 3);
            ops.ks = {k, k * Rational(BigInt(q), BigInt(4))};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return o.ks[0].is_positive() && o.ks[1].is_positive() && o.ks[1] < o.ks[0];
        };
        c.conclusion = [](const Operands& o) {
            const Rational k2 = o.ks[0] - o.ks[1];
            return k2.is_positive() &&
                   iv_add(omega_interval(o.ks[1]), omega_interval(k2)) ==
                       omega_interval(o.ks[0]) &&
                   region_equal(upward_closure(omega_region()), omega_region());
        };
        Operands w;
        w.ks = {Rational(4), Rational(1)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R6.2-center-in-fattened-ball";
        c.statement =
            "Because every point has the null decomposition, the center x belongs to "
            "B(x; eps) + null set; and type-I interiors stay inside A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region fattened = upward_closure(open_ball({o.xs[0], o.epsilons[0]}));
            return fattened.member(o.xs[0]) &&
                   region_subset(interior_of(o.regions[0], Kind::TypeI, false),
                                 o.regions[0]);
        };
        Operands w;
        w.xs = {Interval(Rational(0), Rational(4))};
        w.epsilons = {Rational(1)};
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R6.3-pseudo-interior-inclusions";
        c.statement =
            "Interiors are contained in pseudo-interiors of the same kind; the type-I "
            "pseudo-interior is contained in int(A), which lies in A; given A + null "
            "set inside A, the type-II and type-III pseudo-interiors also sit inside "
            "int(A).";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region plain = interior_of(a, Kind::Plain, false);
            for (const Kind kind : all_kinds) {
                if (!region_subset(interior_of(a, kind, false),
                                   interior_of(a, kind, true))) {
                    return false;
                }
            }
            const bool type_one_ok =
                region_subset(interior_of(a, Kind::TypeI, true), plain) &&
                region_subset(plain, a);
            if (!type_one_ok) {
                return false;
            }
            if (region_subset(upward_closure(a), a)) {
                return region_subset(interior_of(a, Kind::TypeII, true), plain) &&
                       region_subset(interior_of(a, Kind::TypeIII, true), plain);
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
        c.id = "R6.4-whole-and-empty-open";
        c.statement =
            "The empty set and the whole space are open and pseudo-open in all four "
            "senses.";
        c.generate = [](Rng&) { return Operands{}; };
        c.conclusion = [](const Operands&) {
            const Region none = Region::empty_region();
            const Region whole = Region::whole_space();
            for (const Kind kind : all_kinds) {
                if (!is_open(none, kind) || !is_open(whole, kind) ||
                    !is_pseudo_open(none, kind) || !is_pseudo_open(whole, kind)) {
                    return false;
                }
            }
            return true;
        };
        c.witnesses = {Operands{}};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "R6.5-largest-open-subset";
        c.statement =
            "int-k(A) is the largest k-open subset of A: it lies inside A, it is "
            "k-open, and every k-open subset of A is contained in it.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng), gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            for (const Kind kind : all_kinds) {
                const Region inner = interior_of(a, kind, false);
                if (!region_subset(inner, a) || !is_open(inner, kind)) {
                    return false;
                }
                // A k-open subset of A, built by taking an interior inside A.
                const Region sub =
                    interior_of(region_intersect(a, o.regions[1]), kind, false);
                if (!region_subset(sub, inner)) {
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
        c.id = "P6.1.i-pseudo-open-null-stability";
        c.statement =
            "For pseudo-open A: a in A implies a + omega in A, and indeed a in A "
            "exactly when a + omega is.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(3, 4) ? gen_open_region(rng)
                                            : gen_topology_region(rng)};
            ops.xs = {gen_probe_interval(ops.regions[0], rng)};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return is_pseudo_open(o.regions[0], Kind::Plain);
        };
        c.conclusion = [](const Operands& o) {
            const Interval shifted = iv_add(o.xs[0], omega_interval(o.ks[0]));
            return o.regions[0].member(o.xs[0]) == o.regions[0].member(shifted);
        };
        Operands w;
        w.regions = {open_column_witness()};
        w.xs = {Interval(Rational(0), Rational(0))};
        w.ks = {Rational(5)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.1.ii-pseudo-open-null-inclusions";
        c.statement =
            "For pseudo-open A: A + null set and A + omega stay inside A, and "
            "a + omega landing in A + omega forces a in A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(3, 4) ? gen_open_region(rng)
                                            : gen_topology_region(rng)};
            ops.xs = {gen_probe_interval(ops.regions[0], rng)};
            ops.ks = {gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return is_pseudo_open(o.regions[0], Kind::Plain);
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Interval omega = omega_interval(o.ks[0]);
            const Region translated = region_translate(a, omega);
            const Interval shifted = iv_add(o.xs[0], omega);
            const bool membership_ok =
                !translated.member(shifted) || a.member(o.xs[0]);
            return region_subset(upward_closure(a), a) &&
                   region_subset(translated, a) && membership_ok;
        };
        Operands w;
        w.regions = {open_column_witness()};
        w.xs = {Interval(Rational(0), Rational(0))};
        w.ks = {Rational(2)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.1.iii-pseudo-open-upward-equality";
        c.statement = "For pseudo-open A: A = A + null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(3, 4) ? gen_open_region(rng)
                                            : gen_topology_region(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return is_pseudo_open(o.regions[0], Kind::Plain);
        };
        c.conclusion = [](const Operands& o) {
            return region_equal(upward_closure(o.regions[0]), o.regions[0]);
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.1.iii-fixed-null-translate";
        c.statement =
            "For pseudo-open A: A = A + omega for a fixed null element omega, premised "
            "on the null set owning the self-decomposition.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "The premise restricts trials to omega = [0,0]: translating by radius k "
            "clips every column of A to radii >= k, so the equality fails for each "
            "k > 0 and nonempty A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(3, 4) ? gen_open_region(rng)
                                            : gen_topology_region(rng)};
            ops.ks = {rng.chance(1, 2) ? Rational(0) : gen_null_radius(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) {
            return is_pseudo_open(o.regions[0], Kind::Plain) && o.ks[0].is_zero();
        };
        c.conclusion = [](const Operands& o) {
            return region_equal(
                region_translate(o.regions[0], omega_interval(o.ks[0])), o.regions[0]);
        };
        Operands w;
        w.regions = {open_column_witness()};
        w.ks = {Rational(0)};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.i-type-one";
        c.statement =
            "int-I(A) + null set is contained in A; and a type-I-open A satisfies "
            "A + null set inside A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const bool interior_ok =
                region_subset(upward_closure(interior_of(a, Kind::TypeI, false)), a);
            const bool open_ok =
                !is_open(a, Kind::TypeI) || region_subset(upward_closure(a), a);
            return interior_ok && open_ok;
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.ii-type-two";
        c.statement =
            "int-II(A) is contained in A + null set; and a type-II-open A is contained "
            "in A + null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region fattened = upward_closure(a);
            const bool interior_ok =
                region_subset(interior_of(a, Kind::TypeII, false), fattened);
            const bool open_ok = !is_open(a, Kind::TypeII) || region_subset(a, fattened);
            return interior_ok && open_ok;
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.iii-type-two-complement-pseudo";
        c.statement =
            "The complement of the type-II pseudo-interior absorbs the null set: "
            "complement(pint-II(A)) + null set stays inside itself.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region outside =
                region_complement(interior_of(o.regions[0], Kind::TypeII, true));
            return region_subset(upward_closure(outside), outside);
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.iii-type-two-complement-literal";
        c.statement =
            "Read with the literal interior (points required to lie in A): "
            "complement(int-II(A)) absorbs the null set, and a type-II-open A has a "
            "null-absorbing complement -- premised on A + null set inside A.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "Without the premise both clauses fail on the band over (0,2) with radii "
            "[0,1] union [2,3]: it is literally type-II-open, yet (1, 3/2) lies outside "
            "it while its null translate (1, 5/2) lies inside, so the complement does "
            "not absorb the null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return cond_506(o.regions[0]); };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region outside =
                region_complement(interior_of(a, Kind::TypeII, false));
            const bool interior_ok = region_subset(upward_closure(outside), outside);
            const Region a_outside = region_complement(a);
            const bool open_ok =
                !is_open(a, Kind::TypeII) ||
                region_subset(upward_closure(a_outside), a_outside);
            return interior_ok && open_ok;
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.iv-plain";
        c.statement =
            "int(A) + null set is contained in A; and an open A satisfies A + null set "
            "inside A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const bool interior_ok =
                region_subset(upward_closure(interior_of(a, Kind::Plain, false)), a);
            const bool open_ok =
                !is_open(a, Kind::Plain) || region_subset(upward_closure(a), a);
            return interior_ok && open_ok;
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.v-type-three";
        c.statement =
            "int-III(A) is contained in A + null set; and a type-III-open A is "
            "contained in A + null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region fattened = upward_closure(a);
            const bool interior_ok =
                region_subset(interior_of(a, Kind::TypeIII, false), fattened);
            const bool open_ok =
                !is_open(a, Kind::TypeIII) || region_subset(a, fattened);
            return interior_ok && open_ok;
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.vi-type-three-complement-pseudo";
        c.statement =
            "The complement of the type-III pseudo-interior absorbs the null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region outside =
                region_complement(interior_of(o.regions[0], Kind::TypeIII, true));
            return region_subset(upward_closure(outside), outside);
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.2.vi-type-three-complement-literal";
        c.statement =
            "Read with the literal interior: complement(int-III(A)) absorbs the null "
            "set, and a type-III-open A has a null-absorbing complement -- premised on "
            "A + null set inside A.";
        c.expected = ExpectedStatus::conditional;
        c.note =
            "The same band over (0,2) with radii [0,1] union [2,3] refutes the "
            "unguarded form: it is literally type-III-open with int-III(A) = A, and "
            "the null translate of the outside point (1, 3/2) lands inside A.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return cond_506(o.regions[0]); };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const Region outside =
                region_complement(interior_of(a, Kind::TypeIII, false));
            const bool interior_ok = region_subset(upward_closure(outside), outside);
            const Region a_outside = region_complement(a);
            const bool open_ok =
                !is_open(a, Kind::TypeIII) ||
                region_subset(upward_closure(a_outside), a_outside);
            return interior_ok && open_ok;
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.3-open-implications";
        c.statement =
            "The implication web between the four kinds of openness: plain open "
            "coincides with type-I-open, type-II-open with type-III-open; plain open "
            "implies type-III-open; jointly type-I and type-II-open implies plain and "
            "type-III; plain plus type-III implies type-I; and plain or type-I-open "
            "implies all four.";
        c.generate = [](Rng& rng) {
            Operands ops;
            switch (rng.below(4)) {
                case 0: ops.regions = {gen_open_region(rng)}; break;
                case 1: ops.regions = {gen_squeezed_region(rng)}; break;
                default: ops.regions = {gen_topology_region(rng)}; break;
            }
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region& a = o.regions[0];
            const bool plain = is_open(a, Kind::Plain);
            const bool one = is_open(a, Kind::TypeI);
            const bool two = is_open(a, Kind::TypeII);
            const bool three = is_open(a, Kind::TypeIII);
            const bool i_ok = !plain || three;
            const bool ii_ok = (!plain || one) && (!two || three);
            const bool iii_ok = !one || three;
            const bool iv_ok = !(one && two) || (plain && three);
            const bool v_ok = !(plain && three) || one;
            const bool vi_ok = !plain || (one == three);
            const bool vii_ok = (plain == one) && (two == three);
            const bool viii_ok = !(plain || one) || (plain && one && two && three);
            return i_ok && ii_ok && iii_ok && iv_ok && v_ok && vi_ok && vii_ok &&
                   viii_ok;
        };
        Operands w;
        w.regions = {squeezed_band()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.4-open-upward-equality";
        c.statement = "An open A satisfies A = A + null set.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {rng.chance(1, 2) ? gen_open_region(rng)
                                            : gen_topology_region(rng)};
            return ops;
        };
        c.hypothesis = [](const Operands& o) { return is_open(o.regions[0], Kind::Plain); };
        c.conclusion = [](const Operands& o) {
            return region_equal(upward_closure(o.regions[0]), o.regions[0]);
        };
        Operands w;
        w.regions = {open_column_witness()};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
    {
        AuditCase c;
        c.id = "P6.5-interior-idempotence";
        c.statement =
            "All four interior operators are idempotent: int-k(int-k(A)) = int-k(A), "
            "so every interior is open in its own sense.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            for (const Kind kind : all_kinds) {
                const Region inner = interior_of(o.regions[0], kind, false);
                if (!region_equal(interior_of(inner, kind, false), inner)) {
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
        c.id = "P6.6-balls-open";
        c.statement = "Every open ball is open in all four senses.";
        c.generate = [](Rng& rng) {
            Operands ops;
            const BallSpec spec = gen_ballspec(rng);
            ops.xs = {spec.center};
            ops.epsilons = {spec.epsilon};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            const Region ball = open_ball({o.xs[0], o.epsilons[0]});
            for (const Kind kind : all_kinds) {
                if (!is_open(ball, kind)) {
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
    {
        AuditCase c;
        c.id = "D6.2-pseudo-interior-points";
        c.statement =
            "The compiled pseudo-interior operators agree with the definitional point "
            "test (membership in A not required) for all four kinds.";
        c.generate = [](Rng& rng) {
            Operands ops;
            ops.regions = {gen_topology_region(rng)};
            ops.xs = {gen_probe_interval(ops.regions[0], rng),
                      gen_probe_interval(ops.regions[0], rng)};
            return ops;
        };
        c.conclusion = [](const Operands& o) {
            for (const Kind kind : all_kinds) {
                const Region compiled = interior_of(o.regions[0], kind, true);
                for (const Interval& x : o.xs) {
                    if (compiled.member(x) != oracle_point_check(o.regions[0], x,
                                                                 OracleMode::interior,
                                                                 kind, true)) {
                        return false;
                    }
                }
            }
            return true;
        };
        Operands w;
        w.regions = {squeezed_band()};
        w.xs = {Interval(Rational(1), Rational(1)),
                Interval(Rational(-1, 2), Rational(5, 2))};
        c.witnesses = {w};
        out.push_back(std::move(c));
    }
}

}  // namespace nullspace
