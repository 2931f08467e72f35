#ifndef NULLSPACE_TOPOLOGY_HPP
#define NULLSPACE_TOPOLOGY_HPP

#include "nullspace/region.hpp"

#include <string>
#include <vector>

namespace nullspace {

/// Which interior/closure variant: the plain metric one, or one of the three
/// null-set-aware variants (ball fattened, set fattened, or both).
enum class Kind { Plain, TypeI, TypeII, TypeIII };

const char* kind_name(Kind kind);

/// Center and radius of a ball in the distance d.
struct BallSpec {
    Interval center;
    Rational epsilon;
};

/// {x : d(x, center) < eps}: the open vertical strip of half-width eps/2
/// around the center's midpoint, all radii. Requires eps > 0.
Region open_ball(const BallSpec& spec);
/// {x : d(x, center) <= eps}; requires eps > 0.
Region closed_ball(const BallSpec& spec);
/// {x : d(x, center) = eps}: two full columns (one when eps = 0); requires
/// eps >= 0.
Region sphere(const BallSpec& spec);

/// All interior points of A in the requested sense:
///   Plain:   some ball around x lies inside A,
///   TypeI:   some ball plus the null set lies inside A,
///   TypeII:  some ball lies inside A plus the null set,
///   TypeIII: some ball plus the null set lies inside A plus the null set.
/// Non-pseudo interiors additionally require x in A; pseudo ones do not.
Region interior_of(const Region& a, Kind kind, bool pseudo);

/// All closure points of A in the requested sense: x in A, or every ball
/// around x (fattened by the null set for TypeI/TypeIII) meets A (fattened
/// for TypeII/TypeIII). In this model all four kinds coincide.
Region closure_of(const Region& a, Kind kind);

bool is_open(const Region& a, Kind kind);
bool is_pseudo_open(const Region& a, Kind kind);
bool is_closed(const Region& a, Kind kind);

enum class OracleMode { interior, closure };

/// Definitional decision procedure for a single point, used to validate the
/// compiled interior_of/closure_of reductions: quantifies the ball condition
/// over the exact finite candidate set {|m_x - b| : b an m-breakpoint of A}
/// plus halves plus 1. Sound because every ball condition is monotone in
/// eps and A's structure is constant between breakpoints.
bool oracle_point_check(const Region& a, const Interval& x, OracleMode mode, Kind kind,
                        bool pseudo = false);

/// The two-part side condition the refined families impose on nonempty
/// members: A plus the null set stays inside A, and membership is preserved
/// when a null translate of a point lands in the null translate of A. The
/// second part always holds in this model, so the verdict equals the first
/// inclusion.
bool cond_506(const Region& a);

/// The six catalogued classes of open sets.
enum class FamilyClass { tau0, tauI, tauII_tilde, tauIII_tilde, ptauII, ptauIII };

const char* family_name(FamilyClass klass);

/// Single-region membership predicate of the class.
bool in_family(const Region& a, FamilyClass klass);

struct TopologyCheck {
    std::string name;
    bool ok = false;
};

struct TopologyReport {
    FamilyClass klass = FamilyClass::tau0;
    std::vector<TopologyCheck> checks;
    bool all_ok = false;
    /// Rendered form of the first failing set, empty when everything passed.
    std::string counterexample;
};

/// Verifies the family against the class: every member belongs, the empty
/// set and the whole space belong, every pairwise and windowed k-wise
/// (k <= 4) intersection stays in the class, and sampled unions (pairs,
/// prefixes, the whole family) stay in the class. Deterministic order.
TopologyReport family_check(const std::vector<Region>& regions, FamilyClass klass);

}  // namespace nullspace

#endif  // NULLSPACE_TOPOLOGY_HPP
