#ifndef NULLSPACE_GRIDFUN_HPP
#define NULLSPACE_GRIDFUN_HPP

#include "nullspace/interval.hpp"

#include <string>
#include <vector>

namespace nullspace {

/// An interval-valued function on a finite ordered grid of labeled points.
/// All operations are pointwise; two functions combine only on identical
/// grids (same labels in the same order).
class GridIntervalFunction {
public:
    GridIntervalFunction() = default;
    /// Validates that the grid is nonempty and value counts match.
    GridIntervalFunction(std::vector<std::string> grid, std::vector<Interval> values);

    const std::vector<std::string>& grid() const { return grid_; }
    const std::vector<Interval>& values() const { return values_; }
    std::size_t size() const { return grid_.size(); }

    std::string str() const;

    friend bool operator==(const GridIntervalFunction& a, const GridIntervalFunction& b) {
        return a.grid_ == b.grid_ && a.values_ == b.values_;
    }
    friend bool operator!=(const GridIntervalFunction& a, const GridIntervalFunction& b) {
        return !(a == b);
    }

private:
    std::vector<std::string> grid_;
    std::vector<Interval> values_;
};

/// Pointwise vector addition; grids must be identical.
GridIntervalFunction f_add(const GridIntervalFunction& f, const GridIntervalFunction& g);
/// Pointwise scalar multiplication.
GridIntervalFunction f_scale(const Rational& alpha, const GridIntervalFunction& f);

/// Sup-distance: the maximum pointwise distance over the grid (sup = max on
/// a finite grid); grids must be identical.
Rational d_IC(const GridIntervalFunction& f, const GridIntervalFunction& g);

/// True iff every value has midpoint zero (membership in the null set of
/// this function space).
bool is_in_omega_IC(const GridIntervalFunction& f);

/// Null-set equality: midpoints agree at every grid point; grids must be
/// identical.
bool omega_equal_IC(const GridIntervalFunction& f, const GridIntervalFunction& g);

}  // namespace nullspace

#endif  // NULLSPACE_GRIDFUN_HPP
