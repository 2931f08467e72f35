#ifndef NULLSPACE_REGION_HPP
#define NULLSPACE_REGION_HPP

#include "nullspace/interval.hpp"
#include "nullspace/mset.hpp"

#include <vector>

namespace nullspace {

/// An interval in midpoint-radius coordinates: lo = m-r, hi = m+r. The
/// half-plane {(m,r) : r >= 0} is the whole vector space, the null set is
/// the column m = 0, and null-set addition moves points straight up.
struct MidRadPoint {
    Rational m;
    Rational r;

    /// Validates r >= 0.
    MidRadPoint(Rational m_, Rational r_);
    MidRadPoint() : m(0), r(0) {}

    std::string str() const;

    friend bool operator==(const MidRadPoint& a, const MidRadPoint& b) {
        return a.m == b.m && a.r == b.r;
    }
};

MidRadPoint to_midrad(const Interval& x);
Interval from_midrad(const MidRadPoint& p);

/// An axis-aligned box in the (m,r) half-plane: an m-piece times an r-piece.
/// The r-piece must sit inside [0, +inf).
struct Box {
    Piece m;
    Piece r;

    friend bool operator==(const Box& a, const Box& b) { return a.m == b.m && a.r == b.r; }
};

/// One maximal vertical band of a canonical region: every m in the band sees
/// the same nonempty set of radii.
struct Band {
    Piece m;
    MSet r;

    friend bool operator==(const Band& a, const Band& b) { return a.m == b.m && a.r == b.r; }
};

/// A subset of the half-plane as a finite union of boxes, stored canonically
/// as maximal vertical bands: bands are sorted and disjoint in m, each
/// carries a nonempty canonical r-set, and touching bands always carry
/// different r-sets. Equal point sets have identical band lists, so region
/// equality is syntactic.
class Region {
public:
    Region() = default;

    /// Canonicalizes an arbitrary finite box union. Boxes are validated
    /// (nonempty, r-range inside [0,+inf)); the empty list is the empty
    /// region.
    static Region from_boxes(const std::vector<Box>& boxes);
    static Region empty_region() { return Region(); }
    /// The whole half-plane (every interval).
    static Region whole_space();
    /// The single point {(m,r)}.
    static Region point(const MidRadPoint& p);

    const std::vector<Band>& bands() const { return bands_; }
    bool empty() const { return bands_.empty(); }

    /// One box per (band, r-piece) pair; feeding these back into from_boxes
    /// reproduces the region exactly.
    std::vector<Box> to_boxes() const;

    bool member(const MidRadPoint& p) const;
    bool member(const Interval& x) const { return member(to_midrad(x)); }

    std::string str() const;

    friend bool operator==(const Region& a, const Region& b) { return a.bands_ == b.bands_; }
    friend bool operator!=(const Region& a, const Region& b) { return !(a == b); }

private:
    explicit Region(std::vector<Band> bands) : bands_(std::move(bands)) {}

    std::vector<Band> bands_;
};

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
/// Complement relative to the whole half-plane r >= 0.
Region region_complement(const Region& a);
Region region_difference(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);
bool region_equal(const Region& a, const Region& b);

/// A plus the null set: {(m, r+k) : (m,r) in A, k >= 0}. Fixed points are
/// exactly the regions whose columns extend upward forever.
Region upward_closure(const Region& a);

/// A translated by a vector: every point moves by (m_xhat, r_xhat).
Region region_translate(const Region& a, const Interval& xhat);

/// The image {alpha * x : x in A}: (m,r) goes to (alpha*m, |alpha|*r). For
/// alpha = 0 every element collapses to the zero interval, so a nonempty
/// region becomes the single point (0,0).
Region region_scale(const Rational& alpha, const Region& a);

/// {m : the whole column {m} x [0,inf) lies inside A}. Every ball is a full
/// vertical strip, so "some ball around x0 inside A" compiles to an m-set
/// question about this set.
MSet full_columns(const Region& a);

/// {m : some (m,r) lies in A}: the shadow of A on the m-axis. "Every ball
/// around x0 meets A" compiles to an m-set question about this set.
MSet project_m(const Region& a);

/// The full-height region {(m,r) : m in ms, r >= 0}: vertical columns over
/// a 1-D set. Inverse of full_columns on upward-closed full-column regions.
Region columns_over(const MSet& ms);

}  // namespace nullspace

#endif  // NULLSPACE_REGION_HPP
