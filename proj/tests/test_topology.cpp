#include "nullspace/rng.hpp"
#include "nullspace/topology.hpp"

#include <doctest.h>

#include <vector>

using namespace nullspace;

namespace {

Bound bc(long long v) { return Bound::closed_at(Rational(v)); }
Bound bo(long long v) { return Bound::open_at(Rational(v)); }
Bound pinf() { return Bound::open(ExtReal::pos_inf()); }
Bound ninf() { return Bound::open(ExtReal::neg_inf()); }

Piece full_r() { return {bc(0), pinf()}; }

Region boxes(std::vector<Box> bs) { return Region::from_boxes(bs); }

const Kind all_kinds[] = {Kind::Plain, Kind::TypeI, Kind::TypeII, Kind::TypeIII};

BallSpec spec24() { return {Interval(Rational(2), Rational(4)), Rational(2)}; }

Region random_region(Rng& rng, int max_boxes) {
    std::vector<Box> bs;
    const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_boxes) + 1));
    for (int i = 0; i < n; ++i) {
        Rational m1 = rng.rational(12, 4);
        Rational m2 = rng.rational(12, 4);
        if (m2 < m1) std::swap(m1, m2);
        Rational r1 = rng.nonneg_rational(8, 4);
        Rational r2 = rng.nonneg_rational(8, 4);
        if (r2 < r1) std::swap(r1, r2);
        const Piece m = m1 == m2 ? Piece{Bound::closed_at(m1), Bound::closed_at(m2)}
                                 : Piece{Bound{ExtReal::finite(m1), rng.chance(1, 2)},
                                         Bound{ExtReal::finite(m2), rng.chance(1, 2)}};
        Piece r;
        if (rng.chance(1, 3)) {
            r = Piece{Bound{ExtReal::finite(r1), rng.chance(1, 2)}, pinf()};
        } else if (r1 == r2) {
            r = Piece{Bound::closed_at(r1), Bound::closed_at(r2)};
        } else {
            r = Piece{Bound{ExtReal::finite(r1), rng.chance(1, 2)},
                      Bound{ExtReal::finite(r2), rng.chance(1, 2)}};
        }
        bs.push_back({m, r});
    }
    return Region::from_boxes(bs);
}

/// Adversarial probe intervals for a region: points on and around every
/// breakpoint column at assorted radii, plus random points.
std::vector<Interval> probe_intervals(Rng& rng, const Region& a, int randoms) {
    std::vector<Rational> ms{Rational(0)};
    std::vector<Rational> rs{Rational(0), Rational(1)};
    for (const Band& band : a.bands()) {
        if (band.m.lo.v.is_finite()) ms.push_back(band.m.lo.v.value());
        if (band.m.hi.v.is_finite()) ms.push_back(band.m.hi.v.value());
        for (const Rational& b : mset_breakpoints(band.r)) rs.push_back(b);
    }
    std::vector<Interval> out;
    const Rational tiny(BigInt(1), BigInt(9));
    for (const Rational& m : ms) {
        for (const Rational& r : rs) {
            out.push_back(from_midrad(MidRadPoint(m, r)));
            out.push_back(from_midrad(MidRadPoint(m + tiny, r)));
            out.push_back(from_midrad(MidRadPoint(m, r + tiny)));
        }
    }
    for (int i = 0; i < randoms; ++i) {
        out.push_back(from_midrad(MidRadPoint(rng.rational(15, 5), rng.nonneg_rational(10, 5))));
    }
    return out;
}

}  // namespace

TEST_CASE("balls and spheres") {
    CHECK(open_ball(spec24()) == boxes({{{bo(2), bo(4)}, full_r()}}));
    CHECK(closed_ball(spec24()) == boxes({{{bc(2), bc(4)}, full_r()}}));
    CHECK(sphere(spec24()) ==
          boxes({{{bc(2), bc(2)}, full_r()}, {{bc(4), bc(4)}, full_r()}}));
    CHECK(sphere({Interval(Rational(2), Rational(4)), Rational(0)}) ==
          boxes({{{bc(3), bc(3)}, full_r()}}));
    CHECK_THROWS_AS(open_ball({Interval(), Rational(0)}), DomainError);
    CHECK_THROWS_AS(closed_ball({Interval(), Rational(-1)}), DomainError);
    CHECK_THROWS_AS(sphere({Interval(), Rational(-1)}), DomainError);
}

TEST_CASE("interior examples") {
    const Region cols02 = boxes({{{bc(0), bc(2)}, full_r()}});
    CHECK(interior_of(cols02, Kind::Plain, false) == boxes({{{bo(0), bo(2)}, full_r()}}));
    // Definitional oracle agrees at the sampled midpoints.
    for (long long num : {0, 1, 2, 4}) {
        const Interval x = from_midrad(MidRadPoint(Rational(BigInt(num), BigInt(2)), Rational(1)));
        CHECK(oracle_point_check(cols02, x, OracleMode::interior, Kind::Plain) ==
              interior_of(cols02, Kind::Plain, false).member(x));
    }

    const Region truncated = boxes({{{bc(0), bc(2)}, {bc(0), bc(1)}}});
    CHECK(interior_of(truncated, Kind::Plain, false).empty());
    CHECK(interior_of(truncated, Kind::TypeII, false) ==
          boxes({{{bo(0), bo(2)}, {bc(0), bc(1)}}}));

    for (Kind k : all_kinds) {
        CHECK(interior_of(Region::empty_region(), k, false).empty());
        CHECK(interior_of(Region::empty_region(), k, true).empty());
    }
}

TEST_CASE("closure examples") {
    const Region point = Region::point(MidRadPoint(Rational(3), Rational(2)));
    const Region column3 = boxes({{{bc(3), bc(3)}, full_r()}});
    for (Kind k : all_kinds) {
        CHECK(closure_of(point, k) == column3);
        CHECK(closure_of(Region::empty_region(), k).empty());
    }
    const Region open_cols = boxes({{{bo(0), bo(1)}, full_r()}});
    const Region closed_cols = boxes({{{bc(0), bc(1)}, full_r()}});
    for (Kind k : all_kinds) {
        CHECK(closure_of(open_cols, k) == closed_cols);
    }
}

TEST_CASE("openness and closedness of balls") {
    const Region ob = open_ball(spec24());
    const Region cb = closed_ball(spec24());
    for (Kind k : all_kinds) {
        CHECK(is_open(ob, k));
        CHECK(is_pseudo_open(ob, k));
        CHECK(is_closed(cb, k));
        CHECK_FALSE(is_open(cb, k));
    }
    // A singleton is not closed in this pseudo-metric: its closure is the
    // whole equal-midpoint column.
    const Region single = Region::point(MidRadPoint(Rational(1), Rational(1)));
    CHECK_FALSE(is_closed(single, Kind::Plain));
}

TEST_CASE("oracle_point_check examples") {
    const Region truncated = boxes({{{bc(0), bc(2)}, {bc(0), bc(1)}}});
    const Interval x = from_midrad(MidRadPoint(Rational(1), Rational(BigInt(1), BigInt(2))));
    CHECK(oracle_point_check(truncated, x, OracleMode::interior, Kind::TypeII));
    CHECK_FALSE(oracle_point_check(truncated, x, OracleMode::interior, Kind::Plain));
    Rng rng(151);
    for (int i = 0; i < 30; ++i) {
        const Region a = random_region(rng, 3);
        if (a.empty()) continue;
        // Any member is a closure point of every kind.
        const Band& band = a.bands()[0];
        const Rational m = band.m.lo.v.is_finite() ? band.m.lo.v.value()
                                                   : band.m.hi.v.value() - Rational(1);
        Rational r(0);
        if (!band.r.member(r)) r = band.r.pieces()[0].lo.v.value();
        if (!band.r.member(r)) r += Rational(BigInt(1), BigInt(2));
        const MidRadPoint p(m, r);
        if (!a.member(p)) continue;
        for (Kind k : all_kinds) {
            CHECK(oracle_point_check(a, from_midrad(p), OracleMode::closure, k));
        }
    }
}

TEST_CASE("cond_506 examples") {
    CHECK(cond_506(open_ball(spec24())));
    CHECK_FALSE(cond_506(boxes({{{bc(0), bc(1)}, {bc(0), bc(1)}}})));
    CHECK(cond_506(Region::empty_region()));
}

TEST_CASE("compiled operators agree with the definitional oracle") {
    Rng rng(157);
    for (int round = 0; round < 25; ++round) {
        const Region a = random_region(rng, 4);
        for (Kind k : all_kinds) {
            const Region interior = interior_of(a, k, false);
            const Region pseudo = interior_of(a, k, true);
            const Region closure = closure_of(a, k);
            for (const Interval& x : probe_intervals(rng, a, 6)) {
                CHECK(interior.member(x) ==
                      oracle_point_check(a, x, OracleMode::interior, k, false));
                CHECK(pseudo.member(x) ==
                      oracle_point_check(a, x, OracleMode::interior, k, true));
                CHECK(closure.member(x) ==
                      oracle_point_check(a, x, OracleMode::closure, k, false));
            }
        }
    }
}

TEST_CASE("interior and closure are idempotent and ordered") {
    Rng rng(163);
    for (int round = 0; round < 40; ++round) {
        const Region a = random_region(rng, 4);
        for (Kind k : all_kinds) {
            const Region i = interior_of(a, k, false);
            const Region c = closure_of(a, k);
            CHECK(interior_of(i, k, false) == i);
            CHECK(closure_of(c, k) == c);
            CHECK(region_subset(i, a));
            CHECK(region_subset(a, c));
            const Region p = interior_of(a, k, true);
            CHECK(interior_of(p, k, true) == p);
        }
        // The interior chain: plain = type-I, both inside type-II = type-III.
        CHECK(interior_of(a, Kind::Plain, false) == interior_of(a, Kind::TypeI, false));
        CHECK(interior_of(a, Kind::TypeII, false) == interior_of(a, Kind::TypeIII, false));
        CHECK(region_subset(interior_of(a, Kind::Plain, false),
                            interior_of(a, Kind::TypeIII, false)));
        // All four closures coincide in this model.
        const Region c0 = closure_of(a, Kind::Plain);
        for (Kind k : {Kind::TypeI, Kind::TypeII, Kind::TypeIII}) {
            CHECK(closure_of(a, k) == c0);
        }
    }
}

TEST_CASE("ball invariants") {
    Rng rng(167);
    for (int round = 0; round < 50; ++round) {
        Rational lo = rng.rational(20, 6);
        Rational hi = rng.rational(20, 6);
        if (hi < lo) std::swap(lo, hi);
        const Interval center(lo, hi);
        Rational eps = rng.nonneg_rational(6, 4);
        if (eps.is_zero()) eps = Rational(1);
        const BallSpec s{center, eps};
        const Region b = open_ball(s);
        // Balls absorb the null set.
        CHECK(upward_closure(b) == b);
        // Null translates of the center do not move the ball.
        const Rational k = rng.nonneg_rational(9, 4);
        const Interval shifted = iv_add(center, Interval(-k, k));
        CHECK(open_ball({shifted, eps}) == b);
        // Scaling a ball about a null center scales the radius.
        const Interval omega_center(-k, k);
        Rational alpha = rng.rational(5, 3);
        if (alpha.is_zero()) alpha = Rational(-2);
        CHECK(region_scale(alpha, open_ball({omega_center, eps})) ==
              open_ball({omega_center, abs(alpha) * eps}));
        // The null column sits inside every ball about a null center.
        const Region omega_column = boxes({{{bc(0), bc(0)}, full_r()}});
        CHECK(region_subset(omega_column, open_ball({omega_center, eps})));
    }
}

TEST_CASE("pseudo-open sets absorb the null set") {
    Rng rng(173);
    int found = 0;
    for (int round = 0; round < 60; ++round) {
        const Region a = random_region(rng, 3);
        for (Kind k : all_kinds) {
            const Region p = interior_of(a, k, true);
            if (!is_pseudo_open(p, k)) continue;  // p is its own pseudo-interior
            CHECK(upward_closure(p) == p);
            ++found;
        }
    }
    CHECK(found > 0);
}

TEST_CASE("family membership predicates") {
    const Region ball = open_ball(spec24());
    const Region truncated = boxes({{{bc(0), bc(1)}, {bc(0), bc(1)}}});
    CHECK(in_family(ball, FamilyClass::tau0));
    CHECK(in_family(ball, FamilyClass::tauI));
    CHECK(in_family(ball, FamilyClass::tauII_tilde));
    CHECK(in_family(ball, FamilyClass::tauIII_tilde));
    CHECK(in_family(ball, FamilyClass::ptauII));
    CHECK(in_family(ball, FamilyClass::ptauIII));
    CHECK(in_family(Region::empty_region(), FamilyClass::tauII_tilde));
    CHECK(in_family(Region::whole_space(), FamilyClass::tauII_tilde));
    CHECK_FALSE(in_family(truncated, FamilyClass::tauII_tilde));
}

TEST_CASE("family_check examples") {
    const Region b1 = open_ball({Interval(Rational(0), Rational(2)), Rational(2)});
    const Region b2 = open_ball({Interval(Rational(1), Rational(3)), Rational(2)});
    const TopologyReport strips = family_check({b1, b2}, FamilyClass::tauI);
    CHECK(strips.all_ok);
    CHECK(strips.counterexample.empty());

    const TopologyReport trio =
        family_check({Region::empty_region(), Region::whole_space(), b1}, FamilyClass::tau0);
    CHECK(trio.all_ok);

    const Region truncated = boxes({{{bc(0), bc(1)}, {bc(0), bc(1)}}});
    const TopologyReport bad = family_check({b1, truncated}, FamilyClass::tauII_tilde);
    CHECK_FALSE(bad.all_ok);
    CHECK_FALSE(bad.counterexample.empty());
    // The report pinpoints the member check that failed.
    bool member_failed = false;
    for (const TopologyCheck& c : bad.checks) {
        if (!c.ok && c.name.rfind("member", 0) == 0) member_failed = true;
    }
    CHECK(member_failed);
}

TEST_CASE("family_check passes on ball-derived families for all classes") {
    Rng rng(179);
    const FamilyClass classes[] = {FamilyClass::tau0,         FamilyClass::tauI,
                                   FamilyClass::tauII_tilde,  FamilyClass::tauIII_tilde,
                                   FamilyClass::ptauII,       FamilyClass::ptauIII};
    for (int round = 0; round < 8; ++round) {
        std::vector<Region> family{Region::empty_region(), Region::whole_space()};
        for (int i = 0; i < 4; ++i) {
            Rational lo = rng.rational(10, 4);
            Rational hi = rng.rational(10, 4);
            if (hi < lo) std::swap(lo, hi);
            Rational eps = rng.nonneg_rational(5, 3);
            if (eps.is_zero()) eps = Rational(2);
            family.push_back(open_ball({Interval(lo, hi), eps}));
        }
        family.push_back(region_intersect(family[2], family[3]));
        for (FamilyClass klass : classes) {
            const TopologyReport rep = family_check(family, klass);
            CHECK(rep.all_ok);
        }
    }
}

TEST_CASE("whole space is made of full columns between bounds") {
    // Upward-closed unions of full-r boxes stay pseudo-open when their
    // column set is 1-D open.
    const Region a = boxes({{{bo(0), bo(2)}, full_r()}, {{bo(5), pinf()}, full_r()}});
    for (Kind k : all_kinds) {
        CHECK(is_open(a, k));
    }
    const Region with_edge = boxes({{{bc(0), bo(2)}, full_r()}});
    for (Kind k : all_kinds) {
        CHECK_FALSE(is_open(with_edge, k));
    }
    CHECK(region_complement(with_edge) ==
          boxes({{{ninf(), bo(0)}, full_r()}, {{bc(2), pinf()}, full_r()}}));
}
