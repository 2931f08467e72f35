#ifndef NULLSPACE_GEN_HPP
#define NULLSPACE_GEN_HPP

#include "nullspace/gridfun.hpp"
#include "nullspace/interval.hpp"
#include "nullspace/region.hpp"
#include "nullspace/rng.hpp"
#include "nullspace/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nullspace {

/// Deterministic operand generators shared by the audit and the randomized
/// tests. All draws stay inside fixed desk-scale bounds: rational values in
/// [-100, 100] with denominator at most 16, regions of at most 6 boxes,
/// grids of at most 5 points, coefficient sequences of at most 8 entries.

/// Rational in [-100, 100], denominator <= 16.
Rational gen_scalar(Rng& rng);
/// Nonzero rational in [-100, 100] \ {0}.
Rational gen_nonzero_scalar(Rng& rng);
/// Strictly positive rational, <= 100.
Rational gen_positive_scalar(Rng& rng);
/// Strictly positive ball radius, <= 40, denominator <= 16.
Rational gen_epsilon(Rng& rng);
/// Nonnegative null-element radius k <= 100 (zero with probability ~1/8).
Rational gen_null_radius(Rng& rng);

/// 2..max_len coefficients summing exactly to zero (the last balances).
std::vector<Rational> gen_zero_sum(Rng& rng, std::size_t max_len = 8);

/// Interval with endpoints in [-100, 100], denominator <= 16; degenerate
/// with probability ~1/8.
Interval gen_interval(Rng& rng);
/// Degenerate interval [a, a].
Interval gen_degenerate_interval(Rng& rng);
/// Null element [-k, k].
OmegaElement gen_omega(Rng& rng);
/// Interval with the same midpoint as x (a null-set equal partner).
Interval gen_same_midpoint(Rng& rng, const Interval& x);

/// Grid of 1..5 fixed labels "t0", "t1", ...
std::vector<std::string> gen_grid(Rng& rng);
/// Interval values drawn independently at every grid point.
GridIntervalFunction gen_gridfun(Rng& rng, const std::vector<std::string>& grid);

/// Arbitrary region of at most max_boxes boxes (empty with probability
/// ~1/12); mixes bounded and unbounded pieces and open and closed bounds.
Region gen_region(Rng& rng, std::size_t max_boxes = 6);
/// Upward closure of an arbitrary region (a set satisfying A + null = A).
Region gen_upward_region(Rng& rng);
/// Full columns over an open m-set: the open sets of every kind in this
/// model, and the pseudo-open sets of every kind.
Region gen_open_region(Rng& rng);
/// Full columns over a closed m-set: the closed sets of every kind.
Region gen_closed_region(Rng& rng);
/// Bands over an open m-set whose columns all start with a piece closed at
/// r = 0 but stop short of full height: literally type-II-open without being
/// upward closed. Exercises the complement clauses that need the upward side
/// condition.
Region gen_squeezed_region(Rng& rng);

/// The null set as a region: the column m = 0, all radii.
Region omega_region();

/// A point guaranteed to lie inside the region (band/piece representative);
/// empty optional for the empty region.
std::optional<MidRadPoint> gen_point_in(const Region& a, Rng& rng);
/// An adversarial probe: midpoints near the region's breakpoints (offset by
/// 0, 1/2, or 1 on either side) and radii near the r-piece bounds, so that
/// membership flips are exercised; falls back to free draws.
MidRadPoint gen_probe(const Region& a, Rng& rng);
/// The probe as an interval vector.
Interval gen_probe_interval(const Region& a, Rng& rng);

/// Ball center and radius (epsilon > 0).
BallSpec gen_ballspec(Rng& rng);

}  // namespace nullspace

#endif  // NULLSPACE_GEN_HPP
