#ifndef NULLSPACE_MSET_HPP
#define NULLSPACE_MSET_HPP

#include "nullspace/extreal.hpp"

#include <vector>

namespace nullspace {

/// One endpoint of a 1-D piece. Infinite bounds are always open.
struct Bound {
    ExtReal v;
    bool closed = false;

    static Bound open(ExtReal v) { return {std::move(v), false}; }
    static Bound closed_at(Rational v) { return {ExtReal::finite(std::move(v)), true}; }
    static Bound open_at(Rational v) { return {ExtReal::finite(std::move(v)), false}; }

    friend bool operator==(const Bound& a, const Bound& b) {
        return a.closed == b.closed && a.v == b.v;
    }
};

/// A nonempty 1-D interval piece [lo,hi] with independent open/closed flags.
struct Piece {
    Bound lo;
    Bound hi;

    friend bool operator==(const Piece& a, const Piece& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Canonical finite union of 1-D pieces: sorted, pairwise disjoint,
/// non-adjacent (no two pieces mergeable). Two MSets describe the same point
/// set exactly when their piece lists are identical, so equality is
/// syntactic. This is the 1-D algebra every region predicate reduces to.
class MSet {
public:
    MSet() = default;

    /// Builds the canonical form of the union of raw pieces. Raw pieces must
    /// be nonempty (lo < hi, or lo = hi finite with both bounds closed) and
    /// infinite bounds must be open; violations raise DomainError.
    static MSet normalize(std::vector<Piece> raw);

    /// The whole line (-inf, +inf).
    static MSet full_line();
    /// The half-line [0, +inf) -- the radius axis.
    static MSet half_line();
    /// Single piece helpers (validated like normalize).
    static MSet piece(Bound lo, Bound hi);
    static MSet point(const Rational& v);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    bool member(const Rational& x) const;
    bool member(const ExtReal& x) const;

    friend bool operator==(const MSet& a, const MSet& b) { return a.pieces_ == b.pieces_; }
    friend bool operator!=(const MSet& a, const MSet& b) { return !(a == b); }

private:
    explicit MSet(std::vector<Piece> canonical) : pieces_(std::move(canonical)) {}
    friend MSet mset_union(const MSet&, const MSet&);
    friend MSet mset_intersect(const MSet&, const MSet&);
    friend MSet mset_complement(const MSet&, const MSet&);
    friend MSet mset_interior(const MSet&);
    friend MSet mset_closure(const MSet&);
    friend MSet mset_translate(const MSet&, const Rational&);
    friend MSet mset_scale(const Rational&, const MSet&);
    friend MSet mset_upward(const MSet&);

    std::vector<Piece> pieces_;
};

MSet mset_union(const MSet& a, const MSet& b);
MSet mset_intersect(const MSet& a, const MSet& b);
/// Complement of a relative to domain (use MSet::full_line() or
/// MSet::half_line()); a is intersected with the domain first.
MSet mset_complement(const MSet& a, const MSet& domain);
MSet mset_difference(const MSet& a, const MSet& b);
bool mset_subset(const MSet& a, const MSet& b);

/// Topological interior in the real line: finite closed bounds open up,
/// isolated points vanish.
MSet mset_interior(const MSet& a);
/// Topological closure in the real line: finite open bounds close, pieces
/// that now touch merge.
MSet mset_closure(const MSet& a);

MSet mset_translate(const MSet& a, const Rational& offset);
/// Image under multiplication by a nonzero factor.
MSet mset_scale(const Rational& factor, const MSet& a);
/// {x + k : x in a, k >= 0}: everything from the lowest bound upward.
MSet mset_upward(const MSet& a);

/// All finite endpoint values, ascending and deduplicated.
std::vector<Rational> mset_breakpoints(const MSet& a);

/// Renders as "[0,2)", "(-inf,0]", "[3,3]", ...
std::string piece_str(const Piece& p);
/// Renders as "{}" or "{[0,2), [3,3]}".
std::string mset_str(const MSet& a);

}  // namespace nullspace

#endif  // NULLSPACE_MSET_HPP
