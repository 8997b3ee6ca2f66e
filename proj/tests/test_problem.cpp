#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fracsolve/problem.hpp"

using namespace fracsolve;

namespace {

FdeProblem three_dim_problem() {
    FdeProblem p;
    p.rhs = [](double, const Vec& x, const std::any&) { return Vec(x.size(), 0.0); };
    p.t_span = {0.0, 1.0};
    p.x0 = Matrix{{1.0, 2.0, 3.0}};
    p.beta = {0.9, 0.6, 0.7};
    return p;
}

}  // namespace

TEST_CASE("validate_problem accepts the documented configurations", "[problem]") {
    SECTION("incommensurate three-dimensional system, orders below one") {
        const FdeProblem p = three_dim_problem();
        CHECK_NOTHROW(validate_problem(p));
    }
    SECTION("scalar order two with two initial-value rows") {
        FdeProblem p;
        p.rhs = [](double, const Vec&, const std::any&) { return Vec{0.0}; };
        p.t_span = {0.0, 10.0};
        p.x0 = Matrix{{1.0}, {1.0}};
        p.beta = {2.0};
        CHECK_NOTHROW(validate_problem(p));
    }
    SECTION("validation is idempotent") {
        const FdeProblem p = three_dim_problem();
        const FdeProblem& once = validate_problem(p);
        const FdeProblem& twice = validate_problem(once);
        CHECK(&twice == &p);
    }
}

TEST_CASE("validate_problem rejects bad input", "[problem]") {
    SECTION("multi-dimensional order above one") {
        FdeProblem p;
        p.rhs = [](double, const Vec&, const std::any&) { return Vec{0.0, 0.0}; };
        p.t_span = {0.0, 1.0};
        p.x0 = Matrix{{1.0, 1.0}, {0.0, 0.0}};
        p.beta = {1.5, 0.5};
        try {
            validate_problem(p);
            FAIL("expected UnsupportedOrder");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::unsupported_order);
        }
    }
    SECTION("nonpositive order") {
        FdeProblem p = three_dim_problem();
        p.beta[1] = 0.0;
        try {
            validate_problem(p);
            FAIL("expected UnsupportedOrder");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::unsupported_order);
        }
    }
    SECTION("reversed span") {
        FdeProblem p = three_dim_problem();
        p.t_span = {2.0, 2.0};
        try {
            validate_problem(p);
            FAIL("expected BadSpan");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bad_span);
        }
    }
    SECTION("wrong initial-value shape") {
        FdeProblem p = three_dim_problem();
        p.x0 = Matrix{{1.0, 2.0, 3.0}, {0.0, 0.0, 0.0}};
        try {
            validate_problem(p);
            FAIL("expected BadInitialShape");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bad_initial_shape);
        }
    }
    SECTION("rhs output length mismatch") {
        FdeProblem p = three_dim_problem();
        p.rhs = [](double, const Vec&, const std::any&) { return Vec{0.0}; };
        try {
            validate_problem(p);
            FAIL("expected DimensionMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::dimension_mismatch);
        }
    }
}

TEST_CASE("grid_points covers the span with uniform steps", "[problem]") {
    SECTION("exact division") {
        auto [n, grid] = grid_points({0.0, 1.0}, 0.25);
        REQUIRE(n == 4);
        const Vec expected{0.0, 0.25, 0.5, 0.75, 1.0};
        for (std::size_t r = 0; r <= n; ++r) CHECK(grid[r] == Catch::Approx(expected[r]));
    }
    SECTION("non-integral span stops at the last point inside") {
        auto [n, grid] = grid_points({0.0, 1.0}, 0.3);
        REQUIRE(n == 3);
        CHECK(grid.back() == Catch::Approx(0.9));
    }
    SECTION("dyadic step") {
        auto [n, grid] = grid_points({0.0, 5.0}, 0x1p-3);
        CHECK(n == 40);
        CHECK(grid.back() == Catch::Approx(5.0));
    }
    SECTION("bad span rejected") {
        try {
            grid_points({1.0, 1.0}, 0.1);
            FAIL("expected BadSpan");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bad_span);
        }
    }
}

TEST_CASE("grid spacing stays uniform to rounding", "[problem][property]") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> t0_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> span_dist(0.5, 200.0);
    std::uniform_real_distribution<double> h_dist(1e-4, 0.7);
    for (int trial = 0; trial < 200; ++trial) {
        const double t0 = t0_dist(rng);
        const double t_end = t0 + span_dist(rng);
        const double h = h_dist(rng);
        auto [n, grid] = grid_points({t0, t_end}, h);
        const double bound = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(t_end);
        for (std::size_t r = 0; r < n; ++r)
            REQUIRE(std::abs(grid[r + 1] - grid[r] - h) <= bound);
        REQUIRE(grid.back() <= t_end + bound);
        REQUIRE(t_end - grid.back() < h + bound);
    }
}
