#include "nullspace/gridfun.hpp"
#include "nullspace/rng.hpp"

#include <doctest.h>

#include <vector>

using namespace nullspace;

namespace {

Interval iv(long long lo, long long hi) { return Interval(Rational(lo), Rational(hi)); }

GridIntervalFunction two_point(Interval v1, Interval v2) {
    return GridIntervalFunction({"t1", "t2"}, {std::move(v1), std::move(v2)});
}

GridIntervalFunction random_fun(Rng& rng, const std::vector<std::string>& grid) {
    std::vector<Interval> values;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Rational a = rng.rational(30, 8);
        Rational b = rng.rational(30, 8);
        if (b < a) std::swap(a, b);
        values.emplace_back(a, b);
    }
    return GridIntervalFunction(grid, std::move(values));
}

}  // namespace

TEST_CASE("gridfun: construction validation") {
    CHECK_THROWS_AS(GridIntervalFunction({}, {}), DomainError);
    CHECK_THROWS_AS(GridIntervalFunction({"a", "b"}, {iv(0, 1)}), DomainError);
    const GridIntervalFunction f = two_point(iv(0, 1), iv(2, 4));
    CHECK(f.size() == 2);
}

TEST_CASE("f_add example and grid mismatch") {
    const GridIntervalFunction f = two_point(iv(0, 1), iv(2, 4));
    const GridIntervalFunction g = two_point(iv(1, 2), iv(1, 3));
    CHECK(f_add(f, g) == two_point(iv(1, 3), iv(3, 7)));
    const GridIntervalFunction other({"t1", "zz"}, {iv(1, 2), iv(1, 3)});
    CHECK_THROWS_AS(f_add(f, other), DomainError);
    const GridIntervalFunction shorter({"t1"}, {iv(1, 2)});
    CHECK_THROWS_AS(f_add(f, shorter), DomainError);
}

TEST_CASE("f_scale examples") {
    const GridIntervalFunction f = two_point(iv(0, 1), iv(2, 4));
    CHECK(f_scale(Rational(1), f) == f);
    CHECK(f_scale(Rational(-1), f) == two_point(iv(-1, 0), iv(-4, -2)));
}

TEST_CASE("d_IC examples") {
    const GridIntervalFunction f = two_point(iv(0, 1), iv(2, 4));
    const GridIntervalFunction g = two_point(iv(1, 2), iv(1, 3));
    CHECK(d_IC(f, g) == Rational(2));
    CHECK(d_IC(f, f) == Rational(0));
    CHECK(d_IC(two_point(iv(0, 0), iv(0, 0)), two_point(iv(5, 5), iv(0, 0))) == Rational(10));
    CHECK_THROWS_AS(d_IC(f, GridIntervalFunction({"x"}, {iv(0, 1)})), DomainError);
}

TEST_CASE("omega membership and equality examples") {
    CHECK(is_in_omega_IC(two_point(iv(-1, 1), iv(-3, 3))));
    CHECK_FALSE(is_in_omega_IC(two_point(iv(-1, 1), iv(0, 3))));
    const GridIntervalFunction f = two_point(iv(0, 2), iv(0, 0));
    const GridIntervalFunction g = two_point(iv(1, 1), iv(-1, 1));
    CHECK(omega_equal_IC(f, f));
    CHECK(omega_equal_IC(f, g));
    CHECK(d_IC(f, g) == Rational(0));
}

TEST_CASE("sup-distance properties on random functions") {
    Rng rng(103);
    const std::vector<std::string> grid = {"a", "b", "c"};
    for (int i = 0; i < 200; ++i) {
        const GridIntervalFunction f = random_fun(rng, grid);
        const GridIntervalFunction g = random_fun(rng, grid);
        const GridIntervalFunction h = random_fun(rng, grid);
        CHECK(d_IC(f, g) == d_IC(g, f));
        CHECK(d_IC(f, g) <= d_IC(f, h) + d_IC(h, g));
        CHECK((d_IC(f, g) == Rational(0)) == omega_equal_IC(f, g));
        // Def 2.1 axioms pointwise.
        CHECK(f_add(f, g) == f_add(g, f));
        CHECK(f_add(f_add(f, g), h) == f_add(f, f_add(g, h)));
        CHECK(f_scale(Rational(1), f) == f);
    }
}

TEST_CASE("zero-sum perturbations keep the sup-distance fixed") {
    Rng rng(107);
    const std::vector<std::string> grid = {"a", "b", "c", "d"};
    for (int i = 0; i < 150; ++i) {
        const GridIntervalFunction f = random_fun(rng, grid);
        const GridIntervalFunction g = random_fun(rng, grid);
        const GridIntervalFunction h1 = random_fun(rng, grid);
        const GridIntervalFunction h2 = random_fun(rng, grid);
        // Coefficients summing to zero on each side.
        const Rational a1 = rng.rational(10, 4);
        const Rational a2 = rng.rational(10, 4);
        const Rational b1 = rng.rational(10, 4);
        GridIntervalFunction fp = f_add(f_add(f_add(f, f_scale(a1, h1)), f_scale(a2, h1)),
                                        f_scale(-(a1 + a2), h1));
        GridIntervalFunction gp = f_add(f_add(g, f_scale(b1, h2)), f_scale(-b1, h2));
        CHECK(d_IC(fp, gp) == d_IC(f, g));
        CHECK(d_IC(fp, g) == d_IC(f, g));
        CHECK(d_IC(f, gp) == d_IC(f, g));
    }
}
