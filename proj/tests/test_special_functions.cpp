#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fracsolve/special_functions.hpp"

TEST_CASE("gamma matches high-precision references", "[special]") {
    CHECK(fracsolve::gamma(5.0) == Catch::Approx(24.0).epsilon(1e-13));
    CHECK(fracsolve::gamma(0.5) == Catch::Approx(1.7724538509055160273).epsilon(1e-13));
    CHECK(fracsolve::gamma(1.5) == Catch::Approx(0.88622692545275801365).epsilon(1e-13));
    CHECK(fracsolve::gamma(2.5) == Catch::Approx(1.3293403881791370205).epsilon(1e-13));
    CHECK(fracsolve::gamma(8.5) == Catch::Approx(14034.407293483411676).epsilon(1e-13));
}

TEST_CASE("gamma rejects nonpositive arguments", "[special]") {
    for (double x : {0.0, -0.5, -3.0}) {
        try {
            fracsolve::gamma(x);
            FAIL("expected DomainError");
        } catch (const fracsolve::Error& e) {
            CHECK(e.code() == fracsolve::Errc::domain_error);
        }
    }
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)", "[special][property]") {
    for (double x : {0.3, 0.5, 0.8, 1.7, 4.2}) {
        const double lhs = fracsolve::gamma(x + 1.0);
        const double rhs = x * fracsolve::gamma(x);
        CHECK(lhs == Catch::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("mittag_leffler known values", "[special]") {
    SECTION("beta = 1 recovers the exponential") {
        CHECK(fracsolve::mittag_leffler(1.0, 1.0) ==
              Catch::Approx(2.7182818284590452354).epsilon(1e-12));
    }
    SECTION("E_beta(0) = 1 exactly") {
        for (double beta : {0.2, 0.8, 1.0, 1.7, 2.0})
            CHECK(fracsolve::mittag_leffler(beta, 0.0) == 1.0);
    }
    SECTION("E_2(-x^2) = cos(x)") {
        CHECK(fracsolve::mittag_leffler(2.0, -4.0) ==
              Catch::Approx(-0.41614683654714238700).epsilon(1e-12));
    }
    SECTION("strongly negative argument against the big-float series oracle") {
        // E_0.8(-10 * 5^0.8), 220-digit series reference
        const double z = -10.0 * std::pow(5.0, 0.8);
        CHECK(fracsolve::mittag_leffler(0.8, z) ==
              Catch::Approx(0.0062249229867453566538).epsilon(1e-10));
    }
    SECTION("additional series references") {
        CHECK(fracsolve::mittag_leffler(0.8, -1.0) ==
              Catch::Approx(0.38694857861897685146).epsilon(1e-12));
        CHECK(fracsolve::mittag_leffler(0.5, -2.0) ==
              Catch::Approx(0.25539567631050574387).epsilon(1e-12));
    }
}

TEST_CASE("mittag_leffler tracks exp on [-30, 5] at beta = 1", "[special][property]") {
    for (double z = -30.0; z <= 5.0; z += 0.5) {
        const double expected = std::exp(z);
        CHECK(std::abs(fracsolve::mittag_leffler(1.0, z) - expected) <= 1e-10 * expected);
    }
}

TEST_CASE("mittag_leffler error handling", "[special]") {
    SECTION("series cap exhausted") {
        fracsolve::MlSeriesConfig cfg;
        cfg.term_cap = 1000;
        try {
            fracsolve::mittag_leffler(0.5, -400.0, cfg);
            FAIL("expected ConvergenceError");
        } catch (const fracsolve::Error& e) {
            CHECK(e.code() == fracsolve::Errc::convergence_error);
        }
    }
    SECTION("configuration floors") {
        try {
            fracsolve::mittag_leffler(0.8, 1.0, {40, 10000});
            FAIL("expected config error");
        } catch (const fracsolve::Error& e) {
            CHECK(e.code() == fracsolve::Errc::bad_config);
        }
        try {
            fracsolve::mittag_leffler(0.8, 1.0, {200, 500});
            FAIL("expected config error");
        } catch (const fracsolve::Error& e) {
            CHECK(e.code() == fracsolve::Errc::bad_config);
        }
    }
    SECTION("beta must be positive") {
        try {
            fracsolve::mittag_leffler(0.0, 1.0);
            FAIL("expected DomainError");
        } catch (const fracsolve::Error& e) {
            CHECK(e.code() == fracsolve::Errc::domain_error);
        }
    }
}
