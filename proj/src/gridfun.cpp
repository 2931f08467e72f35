#include "nullspace/gridfun.hpp"

namespace nullspace {

namespace {

void require_same_grid(const GridIntervalFunction& f, const GridIntervalFunction& g) {
    if (f.grid() != g.grid()) {
        throw DomainError("grid function: operands live on different grids");
    }
}

}  // namespace

GridIntervalFunction::GridIntervalFunction(std::vector<std::string> grid,
                                           std::vector<Interval> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.empty()) {
        throw DomainError("grid function: grid must have at least one point");
    }
    if (grid_.size() != values_.size()) {
        throw DomainError("grid function: " + std::to_string(grid_.size()) + " grid points but " +
                          std::to_string(values_.size()) + " values");
    }
}

std::string GridIntervalFunction::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (i > 0) out += ", ";
        out += grid_[i] + ":" + values_[i].str();
    }
    return out + "}";
}

GridIntervalFunction f_add(const GridIntervalFunction& f, const GridIntervalFunction& g) {
    require_same_grid(f, g);
    std::vector<Interval> values;
    values.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        values.push_back(iv_add(f.values()[i], g.values()[i]));
    }
    return GridIntervalFunction(f.grid(), std::move(values));
}

GridIntervalFunction f_scale(const Rational& alpha, const GridIntervalFunction& f) {
    std::vector<Interval> values;
    values.reserve(f.size());
    for (const Interval& v : f.values()) {
        values.push_back(iv_scale(alpha, v));
    }
    return GridIntervalFunction(f.grid(), std::move(values));
}

Rational d_IC(const GridIntervalFunction& f, const GridIntervalFunction& g) {
    require_same_grid(f, g);
    Rational best(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational d = metric_d(f.values()[i], g.values()[i]);
        if (best < d) best = d;
    }
    return best;
}

bool is_in_omega_IC(const GridIntervalFunction& f) {
    for (const Interval& v : f.values()) {
        if (!is_in_omega(v)) return false;
    }
    return true;
}

bool omega_equal_IC(const GridIntervalFunction& f, const GridIntervalFunction& g) {
    require_same_grid(f, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.values()[i].mid() != g.values()[i].mid()) return false;
    }
    return true;
}

}  // namespace nullspace
