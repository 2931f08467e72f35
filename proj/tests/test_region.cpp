#include "nullspace/region.hpp"
#include "nullspace/rng.hpp"

#include <doctest.h>

#include <vector>

using namespace nullspace;

namespace {

Bound bc(long long v) { return Bound::closed_at(Rational(v)); }
Bound bo(long long v) { return Bound::open_at(Rational(v)); }
Bound ninf() { return Bound::open(ExtReal::neg_inf()); }
Bound pinf() { return Bound::open(ExtReal::pos_inf()); }

Piece full_r() { return {bc(0), pinf()}; }

Box box(Piece m, Piece r) { return Box{std::move(m), std::move(r)}; }

MidRadPoint pt(long long m, long long r) { return MidRadPoint(Rational(m), Rational(r)); }

/// Membership oracle straight off the raw box list: a point is in the region
/// iff some box contains it, each box checked bound by bound.
bool raw_member(const std::vector<Box>& boxes, const MidRadPoint& p) {
    const auto inside = [](const Piece& piece, const Rational& v) {
        const ExtReal e = ExtReal::finite(v);
        const bool above = piece.lo.v < e || (piece.lo.v == e && piece.lo.closed);
        const bool below = e < piece.hi.v || (e == piece.hi.v && piece.hi.closed);
        return above && below;
    };
    for (const Box& b : boxes) {
        if (inside(b.m, p.m) && inside(b.r, p.r)) return true;
    }
    return false;
}

Piece random_piece(Rng& rng, bool nonneg) {
    const int shape = static_cast<int>(rng.below(10));
    const auto value = [&] {
        return nonneg ? rng.nonneg_rational(15, 4) : rng.rational(15, 4);
    };
    if (shape == 0 && !nonneg) return {ninf(), pinf()};
    if (shape <= 1) return {nonneg ? Bound{ExtReal::finite(value()), rng.chance(1, 2)}
                                   : Bound{ExtReal::finite(value()), rng.chance(1, 2)},
                            pinf()};
    if (shape == 2 && !nonneg) return {ninf(), Bound{ExtReal::finite(value()), rng.chance(1, 2)}};
    Rational a = value();
    Rational b = value();
    if (b < a) std::swap(a, b);
    if (a == b) return {Bound::closed_at(a), Bound::closed_at(b)};
    return {Bound{ExtReal::finite(a), rng.chance(1, 2)}, Bound{ExtReal::finite(b), rng.chance(1, 2)}};
}

std::vector<Box> random_boxes(Rng& rng, int max_boxes) {
    std::vector<Box> out;
    const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_boxes) + 1));
    for (int i = 0; i < n; ++i) {
        out.push_back(box(random_piece(rng, false), random_piece(rng, true)));
    }
    return out;
}

/// Points that stress every membership decision: box corners, points on
/// breakpoint lines, and random interior samples.
std::vector<MidRadPoint> probe_points(Rng& rng, const std::vector<Box>& boxes, int randoms) {
    std::vector<MidRadPoint> pts;
    std::vector<Rational> ms;
    std::vector<Rational> rs{Rational(0)};
    for (const Box& b : boxes) {
        if (b.m.lo.v.is_finite()) ms.push_back(b.m.lo.v.value());
        if (b.m.hi.v.is_finite()) ms.push_back(b.m.hi.v.value());
        if (b.r.lo.v.is_finite()) rs.push_back(b.r.lo.v.value());
        if (b.r.hi.v.is_finite()) rs.push_back(b.r.hi.v.value());
    }
    ms.push_back(Rational(0));
    for (const Rational& m : ms) {
        for (const Rational& r : rs) {
            pts.emplace_back(m, r);
            pts.emplace_back(m + Rational(BigInt(1), BigInt(9)), r);
            pts.emplace_back(m, r + Rational(BigInt(1), BigInt(9)));
        }
    }
    for (int i = 0; i < randoms; ++i) {
        pts.emplace_back(rng.rational(20, 6), rng.nonneg_rational(20, 6));
    }
    return pts;
}

}  // namespace

TEST_CASE("midrad conversion examples") {
    CHECK(to_midrad(Interval(Rational(1), Rational(5))) == pt(3, 2));
    CHECK(to_midrad(Interval(Rational(2), Rational(2))) == pt(2, 0));
    CHECK(from_midrad(pt(0, 3)) == Interval(Rational(-3), Rational(3)));
    CHECK_THROWS_AS(MidRadPoint(Rational(0), Rational(-1)), DomainError);
    Rng rng(113);
    for (int i = 0; i < 100; ++i) {
        Rational a = rng.rational(40, 8);
        Rational b = rng.rational(40, 8);
        if (b < a) std::swap(a, b);
        const Interval x(a, b);
        CHECK(from_midrad(to_midrad(x)) == x);
    }
}

TEST_CASE("region_member examples") {
    const Region a = Region::from_boxes({box({bc(0), bc(2)}, full_r())});
    CHECK(a.member(Interval(Rational(0), Rational(2))));
    CHECK_FALSE(a.member(Interval(Rational(3), Rational(3))));
    const Region open_strip = Region::from_boxes({box({bo(0), bo(2)}, full_r())});
    CHECK_FALSE(open_strip.member(Interval(Rational(0), Rational(0))));
}

TEST_CASE("box validation") {
    CHECK_THROWS_AS(Region::from_boxes({box({bc(2), bc(0)}, full_r())}), DomainError);
    // r-range must sit inside [0, inf).
    CHECK_THROWS_AS(Region::from_boxes({box({bc(0), bc(1)}, {bc(-1), bc(2)})}), DomainError);
    CHECK_THROWS_AS(Region::from_boxes({box({bc(0), bc(1)}, {ninf(), bc(2)})}), DomainError);
    // Open lower bound at r=0 is fine: the range (0,2] stays nonnegative.
    CHECK_NOTHROW(Region::from_boxes({box({bc(0), bc(1)}, {bo(0), bc(2)})}));
}

TEST_CASE("canonical form merges presentation differences") {
    const Region one = Region::from_boxes({box({bc(0), bc(2)}, full_r())});
    const Region two = Region::from_boxes(
        {box({bc(0), bo(1)}, full_r()), box({bc(1), bc(2)}, full_r())});
    CHECK(one == two);
    REQUIRE(one.bands().size() == 1);
    CHECK(one.bands()[0].m == Piece{bc(0), bc(2)});
    // Touching bands with different radii stay separate.
    const Region mixed = Region::from_boxes(
        {box({bc(0), bc(2)}, full_r()), box({bc(2), bc(5)}, {bc(1), pinf()})});
    CHECK(mixed.bands().size() == 2);
}

TEST_CASE("region complement of a strip") {
    const Region strip = Region::from_boxes({box({bo(2), bo(4)}, full_r())});
    const Region want = Region::from_boxes(
        {box({ninf(), bc(2)}, full_r()), box({bc(4), pinf()}, full_r())});
    CHECK(region_complement(strip) == want);
    CHECK(region_intersect(strip, region_complement(strip)).empty());
    CHECK(region_union(strip, region_complement(strip)) == Region::whole_space());
}

TEST_CASE("region subset example with grid oracle") {
    const std::vector<Box> small_boxes = {box({bc(0), bc(1)}, {bc(1), bc(2)})};
    const Region small = Region::from_boxes(small_boxes);
    const Region big = Region::from_boxes({box({bc(0), bc(2)}, full_r())});
    CHECK(region_subset(small, big));
    CHECK_FALSE(region_subset(big, small));
    // Oracle: all four corners plus a 5x5 rational grid inside the small box
    // are members of the big region.
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            const Rational m = Rational(BigInt(i), BigInt(4));
            const Rational r = Rational(1) + Rational(BigInt(j), BigInt(4));
            CHECK(small.member(MidRadPoint(m, r)));
            CHECK(big.member(MidRadPoint(m, r)));
        }
    }
}

TEST_CASE("upward_closure examples") {
    CHECK(upward_closure(Region::from_boxes({box({bc(0), bc(1)}, {bc(1), bc(2)})})) ==
          Region::from_boxes({box({bc(0), bc(1)}, {bc(1), pinf()})}));
    CHECK(upward_closure(Region::from_boxes({box({bc(0), bc(1)}, {bo(1), bo(2)})})) ==
          Region::from_boxes({box({bc(0), bc(1)}, {bo(1), pinf()})}));
    // Full strips are fixed points.
    const Region strip = Region::from_boxes({box({bo(-1), bo(1)}, full_r())});
    CHECK(upward_closure(strip) == strip);
    CHECK(upward_closure(Region::empty_region()).empty());
}

TEST_CASE("region_translate examples") {
    const Region a = Region::from_boxes({box({bc(0), bc(1)}, full_r())});
    const Interval xhat(Rational(1), Rational(3));  // (m,r) = (2,1)
    CHECK(region_translate(a, xhat) ==
          Region::from_boxes({box({bc(2), bc(3)}, {bc(1), pinf()})}));
    CHECK(region_translate(a, Interval()) == a);
    // The null column translated by (2,1) is a strict subset of column m=2.
    const Region omega_column = Region::from_boxes({box({bc(0), bc(0)}, full_r())});
    const Region shifted = region_translate(omega_column, xhat);
    const Region column2 = Region::from_boxes({box({bc(2), bc(2)}, full_r())});
    CHECK(shifted == Region::from_boxes({box({bc(2), bc(2)}, {bc(1), pinf()})}));
    CHECK(region_subset(shifted, column2));
    CHECK(shifted != column2);
}

TEST_CASE("region_scale examples") {
    CHECK(region_scale(Rational(2), Region::from_boxes({box({bo(-1), bo(1)}, full_r())})) ==
          Region::from_boxes({box({bo(-2), bo(2)}, full_r())}));
    CHECK(region_scale(Rational(-1), Region::from_boxes({box({bo(0), bo(1)}, {bc(0), bc(2)})})) ==
          Region::from_boxes({box({bo(-1), bo(0)}, {bc(0), bc(2)})}));
    const Region a = Region::from_boxes({box({bc(3), bc(4)}, {bc(1), bc(2)})});
    CHECK(region_scale(Rational(0), a) == Region::point(pt(0, 0)));
    CHECK(region_scale(Rational(0), Region::empty_region()).empty());
}

TEST_CASE("full_columns and project_m examples") {
    const Region a = Region::from_boxes(
        {box({bc(0), bc(2)}, full_r()), box({bc(2), bc(5)}, {bc(1), pinf()})});
    CHECK(full_columns(a) == MSet::piece(bc(0), bc(2)));
    CHECK(project_m(a) == MSet::piece(bc(0), bc(5)));
    const Region strip = Region::from_boxes({box({bo(2), bo(4)}, full_r())});
    CHECK(full_columns(strip) == MSet::piece(bo(2), bo(4)));
    CHECK(project_m(strip) == MSet::piece(bo(2), bo(4)));
    // Open lower r-bound never covers r=0.
    CHECK(full_columns(Region::from_boxes({box({bc(0), bc(1)}, {bo(0), pinf()})})).empty());
}

TEST_CASE("point and whole-space helpers") {
    const Region p = Region::point(pt(3, 2));
    CHECK(p.member(pt(3, 2)));
    CHECK_FALSE(p.member(pt(3, 1)));
    CHECK(Region::whole_space().member(pt(-50, 17)));
    CHECK(region_complement(Region::whole_space()).empty());
    CHECK(region_complement(Region::empty_region()) == Region::whole_space());
}

TEST_CASE("membership agrees with the raw box oracle") {
    Rng rng(127);
    int checks = 0;
    for (int round = 0; round < 200; ++round) {
        const std::vector<Box> boxes = random_boxes(rng, 6);
        const Region a = Region::from_boxes(boxes);
        for (const MidRadPoint& p : probe_points(rng, boxes, 8)) {
            CHECK(a.member(p) == raw_member(boxes, p));
            ++checks;
        }
    }
    CHECK(checks >= 1000);
}

TEST_CASE("boolean structure on random regions") {
    Rng rng(131);
    for (int round = 0; round < 60; ++round) {
        const std::vector<Box> boxes_a = random_boxes(rng, 4);
        const std::vector<Box> boxes_b = random_boxes(rng, 4);
        const Region a = Region::from_boxes(boxes_a);
        const Region b = Region::from_boxes(boxes_b);
        const Region u = region_union(a, b);
        const Region i = region_intersect(a, b);
        CHECK(u == region_union(b, a));
        CHECK(i == region_intersect(b, a));
        CHECK(region_subset(i, a));
        CHECK(region_subset(a, u));
        CHECK(region_complement(region_complement(a)) == a);
        CHECK(region_difference(a, b) == region_intersect(a, region_complement(b)));
        CHECK(region_union(a, region_complement(a)) == Region::whole_space());
        // Membership is the pointwise boolean of the operands.
        for (const MidRadPoint& p : probe_points(rng, boxes_a, 4)) {
            CHECK(u.member(p) == (a.member(p) || b.member(p)));
            CHECK(i.member(p) == (a.member(p) && b.member(p)));
            CHECK(region_complement(a).member(p) == !a.member(p));
        }
        // to_boxes round-trips exactly.
        CHECK(Region::from_boxes(a.to_boxes()) == a);
    }
}

TEST_CASE("upward closure is a closure operator") {
    Rng rng(137);
    for (int round = 0; round < 60; ++round) {
        const Region a = Region::from_boxes(random_boxes(rng, 4));
        const Region b = Region::from_boxes(random_boxes(rng, 4));
        const Region ua = upward_closure(a);
        CHECK(region_subset(a, ua));
        CHECK(upward_closure(ua) == ua);
        if (region_subset(a, b)) {
            CHECK(region_subset(ua, upward_closure(b)));
        }
        CHECK(upward_closure(region_union(a, b)) == region_union(ua, upward_closure(b)));
    }
}

TEST_CASE("translate and scale compose") {
    Rng rng(139);
    for (int round = 0; round < 60; ++round) {
        const Region a = Region::from_boxes(random_boxes(rng, 4));
        Rational lo1 = rng.rational(10, 4);
        Rational hi1 = rng.rational(10, 4);
        if (hi1 < lo1) std::swap(lo1, hi1);
        Rational lo2 = rng.rational(10, 4);
        Rational hi2 = rng.rational(10, 4);
        if (hi2 < lo2) std::swap(lo2, hi2);
        const Interval x(lo1, hi1);
        const Interval y(lo2, hi2);
        CHECK(region_translate(a, iv_add(x, y)) ==
              region_translate(region_translate(a, x), y));
        Rational alpha = rng.rational(6, 3);
        Rational beta = rng.rational(6, 3);
        if (alpha.is_zero()) alpha = Rational(1);
        if (beta.is_zero()) beta = Rational(-2);
        CHECK(region_scale(alpha * beta, a) == region_scale(alpha, region_scale(beta, a)));
        // Scaling by 1 and translating by the zero element are identities.
        CHECK(region_scale(Rational(1), a) == a);
        CHECK(region_translate(a, Interval()) == a);
    }
}

TEST_CASE("full_columns and project_m structure") {
    Rng rng(149);
    for (int round = 0; round < 60; ++round) {
        const Region a = Region::from_boxes(random_boxes(rng, 4));
        const Region b = Region::from_boxes(random_boxes(rng, 4));
        CHECK(mset_subset(full_columns(a), project_m(a)));
        CHECK(project_m(region_union(a, b)) == mset_union(project_m(a), project_m(b)));
        // Full columns of a union contain the union of full columns; the
        // reverse can fail (two half-columns can assemble a full one), so
        // only the inclusion is a law.
        CHECK(mset_subset(mset_union(full_columns(a), full_columns(b)),
                          full_columns(region_union(a, b))));
        // Upward closure never shrinks full columns, and a full column stays.
        CHECK(mset_subset(full_columns(a), full_columns(upward_closure(a))));
    }
    // Deterministic witness that the inclusion can be strict: the lower and
    // upper halves of a column are full only together.
    const Region lower = Region::from_boxes({box({bc(0), bc(1)}, {bc(0), bc(1)})});
    const Region upper = Region::from_boxes({box({bc(0), bc(1)}, {bc(1), pinf()})});
    CHECK(full_columns(lower).empty());
    CHECK(full_columns(upper).empty());
    CHECK(full_columns(region_union(lower, upper)) == MSet::piece(bc(0), bc(1)));
}
