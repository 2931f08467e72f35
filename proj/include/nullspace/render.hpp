#ifndef NULLSPACE_RENDER_HPP
#define NULLSPACE_RENDER_HPP

#include "nullspace/region.hpp"

#include <string>

namespace nullspace {

/// Draws a region in the (m, r) half-plane, r pointing upward. Boxes appear
/// as translucent rectangles with solid strokes on closed edges and dashed
/// strokes on open ones; degenerate boxes shrink to segments or dots. The
/// picture is clipped to r <= r_max (display only; the region itself is
/// untouched) and the m-window adapts to the region's finite breakpoints.
/// Output is deterministic: identical input yields identical bytes.
std::string render_svg(const Region& a, const Rational& r_max);

}  // namespace nullspace

#endif  // NULLSPACE_RENDER_HPP
