#include "nullspace/mset.hpp"

#include <algorithm>
#include <utility>

namespace nullspace {

namespace {

/// Orders lower bounds: smaller value first; at equal value a closed bound
/// covers more, so it sorts first.
bool lo_less(const Bound& a, const Bound& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.closed && !b.closed;
}

/// Upper bound covering more of the line: larger value, or closed at ties.
Bound max_hi(const Bound& a, const Bound& b) {
    if (a.v != b.v) return a.v < b.v ? b : a;
    return a.closed ? a : b;
}

/// Lower/upper bound of the intersection of two pieces at a shared edge:
/// the more restrictive side wins.
Bound max_lo(const Bound& a, const Bound& b) {
    if (a.v != b.v) return a.v < b.v ? b : a;
    return Bound{a.v, a.closed && b.closed};
}

Bound min_hi(const Bound& a, const Bound& b) {
    if (a.v != b.v) return a.v < b.v ? a : b;
    return Bound{a.v, a.closed && b.closed};
}

bool hi_less(const Bound& a, const Bound& b) {
    if (a.v != b.v) return a.v < b.v;
    return !a.closed && b.closed;
}

/// Appends {lo,hi} if it describes a nonempty piece; silently drops empties.
void emit_if_nonempty(const Bound& lo, const Bound& hi, std::vector<Piece>& out) {
    if (lo.v < hi.v) {
        out.push_back({lo, hi});
    } else if (lo.v == hi.v && lo.v.is_finite() && lo.closed && hi.closed) {
        out.push_back({lo, hi});
    }
}

void validate_piece(const Piece& p) {
    if (!p.lo.v.is_finite() && p.lo.closed) {
        throw DomainError("mset piece: an infinite bound must be open");
    }
    if (!p.hi.v.is_finite() && p.hi.closed) {
        throw DomainError("mset piece: an infinite bound must be open");
    }
    if (p.hi.v < p.lo.v) {
        throw DomainError("mset piece: lower bound exceeds upper bound");
    }
    if (p.lo.v == p.hi.v) {
        if (!p.lo.v.is_finite()) {
            throw DomainError("mset piece: infinite endpoints cannot coincide");
        }
        if (!p.lo.closed || !p.hi.closed) {
            throw DomainError("mset piece: a single-point piece needs both bounds closed");
        }
    }
}

/// Complement of canonical pieces over the whole line: the gaps between
/// pieces, with each shared edge flipped open/closed.
std::vector<Piece> gaps_over_line(const std::vector<Piece>& pieces) {
    std::vector<Piece> out;
    Bound cursor = Bound::open(ExtReal::neg_inf());
    for (const Piece& p : pieces) {
        emit_if_nonempty(cursor, Bound{p.lo.v, !p.lo.closed}, out);
        cursor = Bound{p.hi.v, !p.hi.closed};
    }
    emit_if_nonempty(cursor, Bound::open(ExtReal::pos_inf()), out);
    return out;
}

}  // namespace

MSet MSet::normalize(std::vector<Piece> raw) {
    for (const Piece& p : raw) validate_piece(p);
    std::sort(raw.begin(), raw.end(),
              [](const Piece& a, const Piece& b) { return lo_less(a.lo, b.lo); });
    std::vector<Piece> out;
    for (Piece& p : raw) {
        if (!out.empty()) {
            Piece& cur = out.back();
            const bool touches = p.lo.v < cur.hi.v ||
                                 (p.lo.v == cur.hi.v && (p.lo.closed || cur.hi.closed));
            if (touches) {
                cur.hi = max_hi(cur.hi, p.hi);
                continue;
            }
        }
        out.push_back(std::move(p));
    }
    return MSet(std::move(out));
}

MSet MSet::full_line() {
    return MSet({{Bound::open(ExtReal::neg_inf()), Bound::open(ExtReal::pos_inf())}});
}

MSet MSet::half_line() {
    return MSet({{Bound::closed_at(Rational(0)), Bound::open(ExtReal::pos_inf())}});
}

MSet MSet::piece(Bound lo, Bound hi) { return normalize({{std::move(lo), std::move(hi)}}); }

MSet MSet::point(const Rational& v) {
    return normalize({{Bound::closed_at(v), Bound::closed_at(v)}});
}

bool MSet::member(const Rational& x) const { return member(ExtReal::finite(x)); }

bool MSet::member(const ExtReal& x) const {
    if (!x.is_finite()) return false;
    for (const Piece& p : pieces_) {
        if (x < p.lo.v) return false;
        const bool above = p.lo.v < x || p.lo.closed;
        const bool below = x < p.hi.v || (x == p.hi.v && p.hi.closed);
        if (above && below) return true;
    }
    return false;
}

MSet mset_union(const MSet& a, const MSet& b) {
    std::vector<Piece> raw = a.pieces_;
    raw.insert(raw.end(), b.pieces_.begin(), b.pieces_.end());
    return MSet::normalize(std::move(raw));
}

MSet mset_intersect(const MSet& a, const MSet& b) {
    std::vector<Piece> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.pieces_.size() && j < b.pieces_.size()) {
        const Piece& pa = a.pieces_[i];
        const Piece& pb = b.pieces_[j];
        emit_if_nonempty(max_lo(pa.lo, pb.lo), min_hi(pa.hi, pb.hi), out);
        if (hi_less(pa.hi, pb.hi)) {
            ++i;
        } else {
            ++j;
        }
    }
    return MSet::normalize(std::move(out));
}

MSet mset_complement(const MSet& a, const MSet& domain) {
    return mset_intersect(MSet::normalize(gaps_over_line(a.pieces())), domain);
}

MSet mset_difference(const MSet& a, const MSet& b) {
    return mset_complement(b, a);
}

bool mset_subset(const MSet& a, const MSet& b) { return mset_intersect(a, b) == a; }

MSet mset_interior(const MSet& a) {
    std::vector<Piece> out;
    for (Piece p : a.pieces_) {
        if (p.lo.v.is_finite()) p.lo.closed = false;
        if (p.hi.v.is_finite()) p.hi.closed = false;
        emit_if_nonempty(p.lo, p.hi, out);
    }
    // Canonical pieces are separated by genuine gaps, so opened pieces stay
    // disjoint and non-adjacent.
    return MSet::normalize(std::move(out));
}

MSet mset_closure(const MSet& a) {
    std::vector<Piece> out;
    for (Piece p : a.pieces_) {
        if (p.lo.v.is_finite()) p.lo.closed = true;
        if (p.hi.v.is_finite()) p.hi.closed = true;
        out.push_back(std::move(p));
    }
    return MSet::normalize(std::move(out));
}

MSet mset_translate(const MSet& a, const Rational& offset) {
    std::vector<Piece> out = a.pieces_;
    for (Piece& p : out) {
        p.lo.v = p.lo.v + offset;
        p.hi.v = p.hi.v + offset;
    }
    return MSet(std::move(out));
}

MSet mset_scale(const Rational& factor, const MSet& a) {
    if (factor.is_zero()) {
        throw DomainError("mset_scale requires a nonzero factor");
    }
    std::vector<Piece> out = a.pieces_;
    for (Piece& p : out) {
        p.lo.v = p.lo.v.scaled(factor);
        p.hi.v = p.hi.v.scaled(factor);
        if (factor.is_negative()) std::swap(p.lo, p.hi);
    }
    if (factor.is_negative()) std::reverse(out.begin(), out.end());
    return MSet(std::move(out));
}

MSet mset_upward(const MSet& a) {
    if (a.empty()) return MSet();
    return MSet({{a.pieces_.front().lo, Bound::open(ExtReal::pos_inf())}});
}

std::string piece_str(const Piece& p) {
    std::string out = p.lo.closed ? "[" : "(";
    out += p.lo.v.str() + "," + p.hi.v.str();
    out += p.hi.closed ? "]" : ")";
    return out;
}

std::string mset_str(const MSet& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.pieces().size(); ++i) {
        if (i > 0) out += ", ";
        out += piece_str(a.pieces()[i]);
    }
    return out + "}";
}

std::vector<Rational> mset_breakpoints(const MSet& a) {
    std::vector<Rational> out;
    for (const Piece& p : a.pieces()) {
        if (p.lo.v.is_finite()) out.push_back(p.lo.v.value());
        if (p.hi.v.is_finite()) out.push_back(p.hi.v.value());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace nullspace
