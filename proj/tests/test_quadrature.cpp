#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quartic/quadrature.hpp"

using quartic::AccuracyError;
using quartic::Finite;
using quartic::HalfLine;
using quartic::integrate;
using quartic::IntegrandSpec;
using quartic::ramanujan_master_pair;
using quartic::sqrt_derivative_pair;
using quartic::vanishing_odd_moment;
using quartic::WholeLine;

TEST_CASE("finite intervals") {
    IntegrandSpec spec;

    SUBCASE("polynomials are exact in one panel") {
        spec.f = [](double x) { return x * x; };
        spec.domain = Finite{0.0, 1.0};
        CHECK(integrate(spec).value == doctest::Approx(1.0 / 3).epsilon(1e-15));
        spec.f = [](double x) { return std::pow(x, 8); };
        CHECK(integrate(spec).value == doctest::Approx(1.0 / 9).epsilon(1e-15));
    }

    SUBCASE("sine over a period") {
        spec.f = [](double x) { return std::sin(x); };
        spec.domain = Finite{0.0, std::numbers::pi};
        spec.rel_tol = 1e-12;
        auto r = integrate(spec);
        CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(r.error_estimate < 1e-10);
    }

    SUBCASE("identically zero needs no absolute tolerance") {
        spec.f = [](double) { return 0.0; };
        spec.domain = Finite{-1.0, 1.0};
        CHECK(integrate(spec).value == 0.0);
    }

    SUBCASE("invalid interval") {
        spec.f = [](double) { return 1.0; };
        spec.domain = Finite{1.0, 1.0};
        CHECK_THROWS_AS(integrate(spec), std::invalid_argument);
    }
}

TEST_CASE("unbounded domains") {
    IntegrandSpec spec;

    SUBCASE("half line") {
        spec.f = [](double x) { return std::exp(-x); };
        spec.rel_tol = 1e-12;
        CHECK(integrate(spec).value == doctest::Approx(1.0).epsilon(1e-12));
        spec.f = [](double x) { return 1.0 / (1.0 + x * x); };
        CHECK(integrate(spec).value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    }

    SUBCASE("whole line") {
        spec.domain = WholeLine{};
        spec.rel_tol = 1e-12;
        spec.f = [](double x) { return std::exp(-x * x); };
        CHECK(integrate(spec).value ==
              doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
        // off-center Lorentzian: both half lines contribute differently
        spec.f = [](double x) { return 1.0 / (x * x + 2.0 * x + 2.0); };
        CHECK(integrate(spec).value == doctest::Approx(std::numbers::pi).epsilon(1e-11));
    }
}

TEST_CASE("failure modes") {
    IntegrandSpec spec;

    SUBCASE("non-finite integrand values") {
        spec.f = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
        spec.domain = Finite{0.0, 1.0};
        CHECK_THROWS_AS(integrate(spec), std::domain_error);
    }

    SUBCASE("missing integrand") {
        spec.domain = Finite{0.0, 1.0};
        CHECK_THROWS_AS(integrate(spec), std::invalid_argument);
    }

    SUBCASE("budget too small for a kink") {
        spec.f = [](double x) { return std::sqrt(std::abs(x - 0.3)); };
        spec.domain = Finite{0.0, 1.0};
        spec.rel_tol = 1e-14;
        spec.max_subintervals = 8;
        CHECK_THROWS_AS(integrate(spec), AccuracyError);
    }

    SUBCASE("divergent integral") {
        spec.f = [](double) { return 1.0; };
        spec.domain = HalfLine{};
        spec.max_subintervals = 200;
        CHECK_THROWS_AS(integrate(spec), AccuracyError);
    }
}

TEST_CASE("odd trigonometric moments vanish") {
    CHECK(std::abs(vanishing_odd_moment(1.0, 2, 1)) < 1e-12);
    CHECK(std::abs(vanishing_odd_moment(0.5, 3, 7)) < 1e-12);
    CHECK(std::abs(vanishing_odd_moment(4.0, 1, 3)) < 1e-12);
    CHECK_THROWS_AS(vanishing_odd_moment(1.0, 2, 2), std::domain_error);
    CHECK_THROWS_AS(vanishing_odd_moment(1.0, 2, 7), std::domain_error);
    CHECK_THROWS_AS(vanishing_odd_moment(-1.0, 2, 1), std::domain_error);
}

TEST_CASE("half-integer power integral pair") {
    SUBCASE("closed form at a = 1, m = 1") {
        auto p = ramanujan_master_pair(1.0, 1);
        double exact = 5.0 * std::sqrt(2.0) / 3.0;
        CHECK(p.rhs == doctest::Approx(exact).epsilon(1e-14));
        CHECK(p.lhs == doctest::Approx(exact).epsilon(1e-8));
    }

    SUBCASE("sides agree away from the closed form") {
        for (int m : {1, 2, 3})
            for (double a : {0.5, 2.0}) {
                auto p = ramanujan_master_pair(a, m);
                CHECK(p.lhs == doctest::Approx(p.rhs).epsilon(1e-7));
            }
    }

    CHECK_THROWS_AS(ramanujan_master_pair(1.0, 0), std::domain_error);
    CHECK_THROWS_AS(ramanujan_master_pair(-2.0, 1), std::domain_error);
}

TEST_CASE("shifted quartic against the derivative form") {
    SUBCASE("c = 0 reduces to the plain quartic value") {
        auto p = sqrt_derivative_pair(1.0, 0.0);
        CHECK(p.rhs == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
        CHECK(p.lhs == doctest::Approx(std::numbers::pi / 4).epsilon(1e-10));
    }

    SUBCASE("shifted cases") {
        for (double a : {0.5, 1.0, 2.0})
            for (double c : {0.1, 3.0}) {
                auto p = sqrt_derivative_pair(a, c);
                CHECK(p.lhs == doctest::Approx(p.rhs).epsilon(1e-9));
            }
    }

    CHECK_THROWS_AS(sqrt_derivative_pair(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(sqrt_derivative_pair(-3.0, 0.0), std::domain_error);
}
