#include "nullspace/gen.hpp"

#include "nullspace/mset.hpp"

#include <algorithm>

namespace nullspace {

namespace {

/// A value strictly inside (lo, hi), at a rational fraction of the width.
Rational inner_value(const Rational& lo, const Rational& hi, Rng& rng) {
    static const int nums[] = {1, 1, 1, 2, 3};
    static const int dens[] = {5, 3, 2, 3, 4};
    const std::size_t i = static_cast<std::size_t>(rng.below(5));
    const Rational t{BigInt(nums[i]), BigInt(dens[i])};
    return lo + t * (hi - lo);
}

/// A representative value of a nonempty 1-D piece, honoring open bounds.
Rational piece_value(const Piece& p, Rng& rng) {
    const bool lo_inf = p.lo.v.is_neg_inf();
    const bool hi_inf = p.hi.v.is_pos_inf();
    if (lo_inf && hi_inf) {
        return gen_scalar(rng);
    }
    if (lo_inf) {
        return p.hi.v.value() - Rational(static_cast<long long>(rng.range(1, 5)));
    }
    if (hi_inf) {
        return p.lo.v.value() + Rational(static_cast<long long>(rng.range(1, 5)));
    }
    const Rational lo = p.lo.v.value();
    const Rational hi = p.hi.v.value();
    if (lo == hi) {
        return lo;
    }
    if (p.lo.closed && rng.chance(1, 5)) {
        return lo;
    }
    if (p.hi.closed && rng.chance(1, 5)) {
        return hi;
    }
    return inner_value(lo, hi, rng);
}

Piece random_m_piece(Rng& rng) {
    if (rng.chance(1, 10)) {  // degenerate point
        const Rational v = gen_scalar(rng);
        return {Bound::closed_at(v), Bound::closed_at(v)};
    }
    Rational a = gen_scalar(rng);
    Rational b = gen_scalar(rng);
    if (b < a) {
        std::swap(a, b);
    }
    if (a == b) {
        b = a + Rational(1);
    }
    Bound lo = rng.chance(1, 10) ? Bound::open(ExtReal::neg_inf())
                                 : (rng.chance(1, 2) ? Bound::closed_at(a) : Bound::open_at(a));
    Bound hi = rng.chance(1, 10) ? Bound::open(ExtReal::pos_inf())
                                 : (rng.chance(1, 2) ? Bound::closed_at(b) : Bound::open_at(b));
    return {lo, hi};
}

Piece random_r_piece(Rng& rng) {
    Rational a = rng.nonneg_rational(40, 8);
    if (rng.chance(1, 10)) {  // degenerate point
        return {Bound::closed_at(a), Bound::closed_at(a)};
    }
    if (rng.chance(1, 4)) {  // upward ray
        return {rng.chance(1, 2) ? Bound::closed_at(a) : Bound::open_at(a),
                Bound::open(ExtReal::pos_inf())};
    }
    Rational b = a + rng.nonneg_rational(40, 8);
    if (a == b) {
        b = a + Rational(1);
    }
    Bound lo = rng.chance(1, 2) ? Bound::closed_at(a) : Bound::open_at(a);
    Bound hi = rng.chance(1, 2) ? Bound::closed_at(b) : Bound::open_at(b);
    return {lo, hi};
}

/// Open m-set of 1..3 strictly ordered open pieces (possibly half-infinite).
MSet open_mset(Rng& rng) {
    if (rng.chance(1, 12)) {
        return MSet();
    }
    if (rng.chance(1, 16)) {
        return MSet::full_line();
    }
    const int n = static_cast<int>(rng.range(1, 3));
    std::vector<Piece> pieces;
    for (int i = 0; i < n; ++i) {
        Rational a = gen_scalar(rng);
        Rational b = gen_scalar(rng);
        if (b < a) {
            std::swap(a, b);
        }
        if (a == b) {
            b = a + Rational(1);
        }
        Bound lo = (i == 0 && rng.chance(1, 8)) ? Bound::open(ExtReal::neg_inf())
                                                : Bound::open_at(a);
        Bound hi = (i == n - 1 && rng.chance(1, 8)) ? Bound::open(ExtReal::pos_inf())
                                                    : Bound::open_at(b);
        pieces.push_back({lo, hi});
    }
    return MSet::normalize(std::move(pieces));
}

MSet closed_mset(Rng& rng) {
    if (rng.chance(1, 12)) {
        return MSet();
    }
    if (rng.chance(1, 16)) {
        return MSet::full_line();
    }
    const int n = static_cast<int>(rng.range(1, 3));
    std::vector<Piece> pieces;
    for (int i = 0; i < n; ++i) {
        Rational a = gen_scalar(rng);
        if (rng.chance(1, 4)) {  // isolated point
            pieces.push_back({Bound::closed_at(a), Bound::closed_at(a)});
            continue;
        }
        Rational b = gen_scalar(rng);
        if (b < a) {
            std::swap(a, b);
        }
        if (a == b) {
            b = a + Rational(1);
        }
        Bound lo = (i == 0 && rng.chance(1, 8)) ? Bound::open(ExtReal::neg_inf())
                                                : Bound::closed_at(a);
        Bound hi = (i == n - 1 && rng.chance(1, 8)) ? Bound::open(ExtReal::pos_inf())
                                                    : Bound::closed_at(b);
        pieces.push_back({lo, hi});
    }
    return MSet::normalize(std::move(pieces));
}

}  // namespace

Rational gen_scalar(Rng& rng) { return rng.rational(100, 16); }

Rational gen_nonzero_scalar(Rng& rng) {
    for (;;) {
        Rational v = gen_scalar(rng);
        if (!v.is_zero()) {
            return v;
        }
    }
}

Rational gen_positive_scalar(Rng& rng) {
    const std::int64_t den = rng.range(1, 16);
    const std::int64_t num = rng.range(1, 100 * den);
    return Rational(BigInt(num), BigInt(den));
}

Rational gen_epsilon(Rng& rng) {
    const std::int64_t den = rng.range(1, 16);
    const std::int64_t num = rng.range(1, 40 * den);
    return Rational(BigInt(num), BigInt(den));
}

Rational gen_null_radius(Rng& rng) {
    if (rng.chance(1, 8)) {
        return Rational(0);
    }
    return rng.nonneg_rational(100, 16);
}

std::vector<Rational> gen_zero_sum(Rng& rng, std::size_t max_len) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(max_len - 1));
    std::vector<Rational> coeffs;
    Rational total(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Rational c = rng.rational(20, 8);
        total += c;
        coeffs.push_back(std::move(c));
    }
    coeffs.push_back(-total);
    return coeffs;
}

Interval gen_interval(Rng& rng) {
    const Rational a = gen_scalar(rng);
    if (rng.chance(1, 8)) {
        return Interval(a, a);
    }
    const Rational spread = rng.nonneg_rational(50, 16);
    return Interval(a, a + spread);
}

Interval gen_degenerate_interval(Rng& rng) {
    const Rational a = gen_scalar(rng);
    return Interval(a, a);
}

OmegaElement gen_omega(Rng& rng) { return OmegaElement(gen_null_radius(rng)); }

Interval gen_same_midpoint(Rng& rng, const Interval& x) {
    const Rational m = x.mid();
    const Rational r = rng.nonneg_rational(50, 16);
    return Interval(m - r, m + r);
}

std::vector<std::string> gen_grid(Rng& rng) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
    std::vector<std::string> grid;
    for (std::size_t i = 0; i < n; ++i) {
        grid.push_back("t" + std::to_string(i));
    }
    return grid;
}

GridIntervalFunction gen_gridfun(Rng& rng, const std::vector<std::string>& grid) {
    std::vector<Interval> values;
    values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values.push_back(gen_interval(rng));
    }
    return GridIntervalFunction(grid, std::move(values));
}

Region gen_region(Rng& rng, std::size_t max_boxes) {
    if (rng.chance(1, 12)) {
        return Region::empty_region();
    }
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_boxes));
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < n; ++i) {
        boxes.push_back({random_m_piece(rng), random_r_piece(rng)});
    }
    return Region::from_boxes(boxes);
}

Region gen_upward_region(Rng& rng) { return upward_closure(gen_region(rng)); }

Region gen_open_region(Rng& rng) { return columns_over(open_mset(rng)); }

Region gen_closed_region(Rng& rng) { return columns_over(closed_mset(rng)); }

Region gen_squeezed_region(Rng& rng) {
    const MSet u = open_mset(rng);
    if (u.empty()) {
        return Region::empty_region();
    }
    const Rational a = rng.nonneg_rational(5, 4);
    const Rational gap = Rational(1) + rng.nonneg_rational(5, 4);
    const Rational b = a + gap;
    const Rational c = b + rng.nonneg_rational(5, 4);
    std::vector<Box> boxes;
    for (const Piece& p : u.pieces()) {
        boxes.push_back({p, {Bound::closed_at(Rational(0)), Bound::closed_at(a)}});
        boxes.push_back({p, {Bound::closed_at(b), Bound::closed_at(c)}});
    }
    return Region::from_boxes(boxes);
}

Region omega_region() { return columns_over(MSet::point(Rational(0))); }

std::optional<MidRadPoint> gen_point_in(const Region& a, Rng& rng) {
    if (a.empty()) {
        return std::nullopt;
    }
    const std::size_t bi = static_cast<std::size_t>(rng.below(a.bands().size()));
    const Band& band = a.bands()[bi];
    const Rational m = piece_value(band.m, rng);
    const std::size_t pi = static_cast<std::size_t>(rng.below(band.r.pieces().size()));
    const Rational r = piece_value(band.r.pieces()[pi], rng);
    return MidRadPoint(m, r);
}

MidRadPoint gen_probe(const Region& a, Rng& rng) {
    std::vector<Rational> m_candidates;
    std::vector<Rational> r_candidates;
    for (const Band& band : a.bands()) {
        for (const Bound* b : {&band.m.lo, &band.m.hi}) {
            if (b->v.is_finite()) {
                m_candidates.push_back(b->v.value());
            }
        }
        for (const Piece& p : band.r.pieces()) {
            for (const Bound* b : {&p.lo, &p.hi}) {
                if (b->v.is_finite()) {
                    r_candidates.push_back(b->v.value());
                }
            }
        }
    }
    static const int offset_nums[] = {0, 0, 1, -1, 1, -1, 2, -2};
    static const int offset_dens[] = {1, 1, 2, 2, 1, 1, 1, 1};
    Rational m;
    if (!m_candidates.empty() && rng.chance(3, 4)) {
        const std::size_t i = static_cast<std::size_t>(rng.below(m_candidates.size()));
        const std::size_t oi = static_cast<std::size_t>(rng.below(8));
        m = m_candidates[i] + Rational(BigInt(offset_nums[oi]), BigInt(offset_dens[oi]));
    } else {
        m = gen_scalar(rng);
    }
    Rational r;
    if (!r_candidates.empty() && rng.chance(3, 4)) {
        const std::size_t i = static_cast<std::size_t>(rng.below(r_candidates.size()));
        const std::size_t oi = static_cast<std::size_t>(rng.below(8));
        r = r_candidates[i] + Rational(BigInt(offset_nums[oi]), BigInt(offset_dens[oi]));
        if (r.is_negative()) {
            r = -r;
        }
    } else {
        r = rng.nonneg_rational(40, 8);
    }
    return MidRadPoint(std::move(m), std::move(r));
}

Interval gen_probe_interval(const Region& a, Rng& rng) {
    return from_midrad(gen_probe(a, rng));
}

BallSpec gen_ballspec(Rng& rng) { return {gen_interval(rng), gen_epsilon(rng)}; }

}  // namespace nullspace
