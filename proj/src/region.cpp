#include "nullspace/region.hpp"

#include <algorithm>
#include <functional>

namespace nullspace {

MidRadPoint::MidRadPoint(Rational m_, Rational r_) : m(std::move(m_)), r(std::move(r_)) {
    if (r.is_negative()) {
        throw DomainError("midrad point: radius " + r.str() + " is negative");
    }
}

std::string MidRadPoint::str() const { return "(" + m.str() + "," + r.str() + ")"; }

MidRadPoint to_midrad(const Interval& x) { return MidRadPoint(x.mid(), x.rad()); }

Interval from_midrad(const MidRadPoint& p) { return Interval(p.m - p.r, p.m + p.r); }

namespace {

bool piece_contains(const Piece& p, const Rational& v) {
    const ExtReal e = ExtReal::finite(v);
    const bool above = p.lo.v < e || (p.lo.v == e && p.lo.closed);
    const bool below = e < p.hi.v || (e == p.hi.v && p.hi.closed);
    return above && below;
}

/// The elementary m-cells induced by a breakpoint list: unbounded end gaps,
/// each breakpoint as a singleton, and the open gaps between them. Every
/// band or box edge lies on a breakpoint, so each cell is uniformly inside
/// or outside every operand.
struct Cell {
    Piece piece;
    Rational representative;
};

std::vector<Cell> elementary_cells(std::vector<Rational> breakpoints) {
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    std::vector<Cell> cells;
    if (breakpoints.empty()) {
        cells.push_back({{Bound::open(ExtReal::neg_inf()), Bound::open(ExtReal::pos_inf())},
                         Rational(0)});
        return cells;
    }
    cells.push_back({{Bound::open(ExtReal::neg_inf()), Bound::open_at(breakpoints.front())},
                     breakpoints.front() - Rational(1)});
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        cells.push_back({{Bound::closed_at(breakpoints[i]), Bound::closed_at(breakpoints[i])},
                         breakpoints[i]});
        if (i + 1 < breakpoints.size()) {
            cells.push_back({{Bound::open_at(breakpoints[i]), Bound::open_at(breakpoints[i + 1])},
                             half(breakpoints[i] + breakpoints[i + 1])});
        }
    }
    cells.push_back({{Bound::open_at(breakpoints.back()), Bound::open(ExtReal::pos_inf())},
                     breakpoints.back() + Rational(1)});
    return cells;
}

void collect_piece_breakpoints(const Piece& p, std::vector<Rational>& out) {
    if (p.lo.v.is_finite()) out.push_back(p.lo.v.value());
    if (p.hi.v.is_finite()) out.push_back(p.hi.v.value());
}

/// Assembles canonical bands from the piecewise-constant column function:
/// evaluates the r-set on every elementary cell and merges maximal runs of
/// touching cells with identical nonempty r-sets.
std::vector<Band> assemble(const std::vector<Cell>& cells,
                           const std::function<MSet(const Rational&)>& r_at) {
    std::vector<Band> bands;
    for (const Cell& cell : cells) {
        MSet r = r_at(cell.representative);
        if (r.empty()) continue;
        if (!bands.empty()) {
            Band& prev = bands.back();
            const bool touches = cell.piece.lo.v == prev.m.hi.v &&
                                 (cell.piece.lo.closed || prev.m.hi.closed);
            if (touches && prev.r == r) {
                prev.m.hi = cell.piece.hi;
                continue;
            }
        }
        bands.push_back({cell.piece, std::move(r)});
    }
    return bands;
}

MSet region_r_at(const Region& a, const Rational& m) {
    for (const Band& band : a.bands()) {
        if (piece_contains(band.m, m)) return band.r;
    }
    return MSet();
}

/// Pointwise combination of two regions' column functions under an exact
/// 1-D set operation.
Region combine(const Region& a, const Region& b, MSet (*op)(const MSet&, const MSet&)) {
    std::vector<Rational> breakpoints;
    for (const Band& band : a.bands()) collect_piece_breakpoints(band.m, breakpoints);
    for (const Band& band : b.bands()) collect_piece_breakpoints(band.m, breakpoints);
    std::vector<Box> boxes;
    for (const Band& band : assemble(elementary_cells(std::move(breakpoints)),
                                     [&](const Rational& m) {
                                         return op(region_r_at(a, m), region_r_at(b, m));
                                     })) {
        for (const Piece& rp : band.r.pieces()) boxes.push_back({band.m, rp});
    }
    return Region::from_boxes(boxes);
}

MSet op_union(const MSet& x, const MSet& y) { return mset_union(x, y); }
MSet op_intersect(const MSet& x, const MSet& y) { return mset_intersect(x, y); }
MSet op_difference(const MSet& x, const MSet& y) { return mset_difference(x, y); }

}  // namespace

Region Region::from_boxes(const std::vector<Box>& boxes) {
    std::vector<Rational> breakpoints;
    for (const Box& b : boxes) {
        // Validation: normalize rejects malformed pieces, subset enforces
        // the half-plane constraint r >= 0.
        MSet::normalize({b.m});
        if (!mset_subset(MSet::normalize({b.r}), MSet::half_line())) {
            throw DomainError("region box: r-range " + piece_str(b.r) +
                              " leaves the half-plane r >= 0");
        }
        collect_piece_breakpoints(b.m, breakpoints);
    }
    Region out;
    out.bands_ = assemble(elementary_cells(std::move(breakpoints)), [&](const Rational& m) {
        std::vector<Piece> covering;
        for (const Box& b : boxes) {
            if (piece_contains(b.m, m)) covering.push_back(b.r);
        }
        return MSet::normalize(std::move(covering));
    });
    return out;
}

Region Region::whole_space() {
    return from_boxes({{{Bound::open(ExtReal::neg_inf()), Bound::open(ExtReal::pos_inf())},
                        {Bound::closed_at(Rational(0)), Bound::open(ExtReal::pos_inf())}}});
}

Region Region::point(const MidRadPoint& p) {
    return from_boxes({{{Bound::closed_at(p.m), Bound::closed_at(p.m)},
                        {Bound::closed_at(p.r), Bound::closed_at(p.r)}}});
}

std::vector<Box> Region::to_boxes() const {
    std::vector<Box> out;
    for (const Band& band : bands_) {
        for (const Piece& rp : band.r.pieces()) out.push_back({band.m, rp});
    }
    return out;
}

bool Region::member(const MidRadPoint& p) const {
    for (const Band& band : bands_) {
        if (piece_contains(band.m, p.m)) return band.r.member(p.r);
    }
    return false;
}

std::string Region::str() const {
    if (bands_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < bands_.size(); ++i) {
        if (i > 0) out += " u ";
        out += "m in " + piece_str(bands_[i].m) + " x r in " + mset_str(bands_[i].r);
    }
    return out;
}

Region region_union(const Region& a, const Region& b) { return combine(a, b, op_union); }

Region region_intersect(const Region& a, const Region& b) { return combine(a, b, op_intersect); }

Region region_complement(const Region& a) {
    return combine(Region::whole_space(), a, op_difference);
}

Region region_difference(const Region& a, const Region& b) { return combine(a, b, op_difference); }

bool region_subset(const Region& a, const Region& b) { return region_difference(a, b).empty(); }

bool region_equal(const Region& a, const Region& b) { return a == b; }

namespace {

/// Rebuilds a region from transformed bands; the transform may break
/// maximal-run canonicity, so everything goes back through from_boxes.
Region rebuild(const std::vector<Band>& bands) {
    std::vector<Box> boxes;
    for (const Band& band : bands) {
        for (const Piece& rp : band.r.pieces()) boxes.push_back({band.m, rp});
    }
    return Region::from_boxes(boxes);
}

}  // namespace

Region upward_closure(const Region& a) {
    std::vector<Band> bands = a.bands();
    for (Band& band : bands) band.r = mset_upward(band.r);
    return rebuild(bands);
}

Region region_translate(const Region& a, const Interval& xhat) {
    const Rational dm = xhat.mid();
    const Rational dr = xhat.rad();
    std::vector<Band> bands = a.bands();
    for (Band& band : bands) {
        band.m.lo.v = band.m.lo.v + dm;
        band.m.hi.v = band.m.hi.v + dm;
        band.r = mset_translate(band.r, dr);
    }
    return rebuild(bands);
}

Region region_scale(const Rational& alpha, const Region& a) {
    if (alpha.is_zero()) {
        return a.empty() ? Region::empty_region() : Region::point(MidRadPoint(Rational(0), Rational(0)));
    }
    std::vector<Band> bands = a.bands();
    for (Band& band : bands) {
        band.m.lo.v = band.m.lo.v.scaled(alpha);
        band.m.hi.v = band.m.hi.v.scaled(alpha);
        if (alpha.is_negative()) std::swap(band.m.lo, band.m.hi);
        band.r = mset_scale(abs(alpha), band.r);
    }
    return rebuild(bands);
}

MSet full_columns(const Region& a) {
    std::vector<Piece> pieces;
    for (const Band& band : a.bands()) {
        if (band.r == MSet::half_line()) pieces.push_back(band.m);
    }
    return MSet::normalize(std::move(pieces));
}

MSet project_m(const Region& a) {
    std::vector<Piece> pieces;
    for (const Band& band : a.bands()) pieces.push_back(band.m);
    return MSet::normalize(std::move(pieces));
}

Region columns_over(const MSet& ms) {
    std::vector<Box> boxes;
    for (const Piece& p : ms.pieces()) {
        boxes.push_back({p, {Bound::closed_at(Rational(0)), Bound::open(ExtReal::pos_inf())}});
    }
    return Region::from_boxes(boxes);
}

}  // namespace nullspace
