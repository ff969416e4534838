#include "doctest.h"

#include <stdexcept>

#include "quartic/exact.hpp"

using quartic::beta_half_integer;
using quartic::binomial;
using quartic::check_binomial_identity;
using quartic::check_fibonacci_sum;
using quartic::check_phi_identity;
using quartic::check_recurrence;
using quartic::even_moment;
using quartic::hypergeometric_2f1_terminating;
using quartic::landen_numerator;
using quartic::PiRational;
using quartic::pochhammer;
using quartic::Polynomial;
using quartic::quartic_coefficient;
using quartic::quartic_coefficient_oracle;
using quartic::quartic_polynomial;
using quartic::quartic_polynomial_shifted_basis;
using quartic::quartic_value;
using quartic::quartic_value_exact;
using quartic::quartic_value_hypergeometric;
using quartic::quartic_value_landen_route;
using quartic::Rational;
using quartic::sqrt_quartic;

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 7) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);

    SUBCASE("Pascal's rule") {
        for (long n = 1; n <= 12; ++n)
            for (long k = 0; k <= n; ++k)
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(2), 3) == Rational(24));
    CHECK(pochhammer(Rational(7, 5), 0) == Rational(1));
    CHECK(pochhammer(Rational(-3), 5) == Rational(0));
    CHECK(pochhammer(Rational(-3), 3) == Rational(-6));
}

TEST_CASE("quartic coefficients") {
    SUBCASE("small tables") {
        CHECK(quartic_coefficient(0, 0) == Rational(1));
        CHECK(quartic_coefficient(1, 0) == Rational(3, 2));
        CHECK(quartic_coefficient(1, 1) == Rational(1));
        CHECK(quartic_coefficient(2, 0) == Rational(21, 8));
        CHECK(quartic_coefficient(2, 1) == Rational(15, 4));
        CHECK(quartic_coefficient(2, 2) == Rational(3, 2));
    }

    SUBCASE("m = 5 row") {
        CHECK(quartic_coefficient(5, 0) == Rational(4389, 256));
        CHECK(quartic_coefficient(5, 1) == Rational(8589, 128));
        CHECK(quartic_coefficient(5, 2) == Rational(7161, 64));
        CHECK(quartic_coefficient(5, 3) == Rational(777, 8));
        CHECK(quartic_coefficient(5, 4) == Rational(693, 16));
        CHECK(quartic_coefficient(5, 5) == Rational(63, 8));
    }

    SUBCASE("agrees with the alternating triple sum") {
        for (int m = 0; m <= 6; ++m)
            for (int l = 0; l <= m; ++l)
                CHECK(quartic_coefficient(m, l) == quartic_coefficient_oracle(m, l));
    }

    SUBCASE("positivity") {
        for (int m = 0; m <= 12; ++m)
            for (int l = 0; l <= m; ++l)
                CHECK(quartic_coefficient(m, l).sign() == 1);
    }

    SUBCASE("polynomial assembly") {
        CHECK(quartic_polynomial(1) == Polynomial{Rational(3, 2), Rational(1)});
        CHECK(quartic_polynomial(5).degree() == 5);
        CHECK(quartic_polynomial(5).coeff(2) == Rational(7161, 64));
        for (int m = 0; m <= 8; ++m)
            CHECK(quartic_polynomial_shifted_basis(m) == quartic_polynomial(m));
    }

    SUBCASE("out of range") {
        CHECK_THROWS_AS(quartic_coefficient(-1, 0), std::domain_error);
        CHECK_THROWS_AS(quartic_coefficient(3, 4), std::domain_error);
        CHECK_THROWS_AS(quartic_coefficient(3, -1), std::domain_error);
    }
}

TEST_CASE("quartic closed form") {
    SUBCASE("known values") {
        CHECK(quartic_value(1.0, 0) == doctest::Approx(0.7853981633974483).epsilon(1e-15));
        CHECK(quartic_value(1.0, 1) == doctest::Approx(0.4908738521234052).epsilon(1e-15));
        CHECK(quartic_value(0.0, 0) == doctest::Approx(1.1107207345395915).epsilon(1e-15));
    }

    SUBCASE("exact values when the root resolves") {
        auto v1 = quartic_value_exact(Rational(1), 1);
        REQUIRE(v1.has_value());
        CHECK(*v1 == PiRational(Rational(5, 32), 1));

        auto v2 = quartic_value_exact(Rational(7, 2), 1);
        REQUIRE(v2.has_value());
        CHECK(*v2 == PiRational(Rational(5, 54), 1));

        auto v3 = quartic_value_exact(Rational(-1, 2), 1);
        REQUIRE(v3.has_value());
        CHECK(*v3 == PiRational(Rational(1, 2), 1));

        CHECK_FALSE(quartic_value_exact(Rational(1, 2), 1).has_value());
        CHECK_THROWS_AS(quartic_value_exact(Rational(-1), 0), std::domain_error);
    }

    SUBCASE("domain") {
        CHECK_THROWS_AS(quartic_value(-1.0, 0), std::domain_error);
        CHECK_THROWS_AS(quartic_value(1.0, -1), std::domain_error);
    }
}

TEST_CASE("quartic with a scaled leading term") {
    CHECK(sqrt_quartic(1.0, 1.0) == doctest::Approx(0.7853981633974483).epsilon(1e-15));
    CHECK(sqrt_quartic(1.0, 4.0) == doctest::Approx(0.6412749150809321).epsilon(1e-14));
    CHECK(sqrt_quartic(-2.0, 9.0) == doctest::Approx(1.1107207345395915).epsilon(1e-14));
    for (double a : {0.25, 1.0, 3.0})
        CHECK(sqrt_quartic(a, 1.0) == doctest::Approx(quartic_value(a, 0)).epsilon(1e-14));
    CHECK_THROWS_AS(sqrt_quartic(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(sqrt_quartic(-2.0, 1.0), std::domain_error);
}

TEST_CASE("transformed numerator polynomial") {
    CHECK(landen_numerator(0) == Polynomial{Rational(1)});
    CHECK(landen_numerator(1) == Polynomial{Rational(1), Rational(0), Rational(1)});
    CHECK(landen_numerator(2) ==
          Polynomial{Rational(1), Rational(0), Rational(3), Rational(0), Rational(1)});
    CHECK(landen_numerator(3).coeff(2) == Rational(6));
    CHECK(landen_numerator(3).coeff(4) == Rational(5));
    CHECK(landen_numerator(7).degree() == 14);

    SUBCASE("half-angle identity") {
        // (phi^3 + phi^-3) / (phi + phi^-1) at phi = 2 is 13/4, and so is
        // T_1 at u = 3/2
        CHECK(landen_numerator(1)(Rational(3, 2)) == Rational(13, 4));
        CHECK(check_phi_identity(1, Rational(2)));
        for (int m = 0; m <= 8; ++m)
            for (Rational phi : {Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                                 Rational(-3, 5), Rational(7, 3)})
                CHECK(check_phi_identity(m, phi));
    }

    SUBCASE("three-term recurrence") {
        for (int m = 0; m <= 6; ++m) {
            CHECK(check_recurrence(m, Rational(3, 2)));
            CHECK(check_recurrence(m, Rational(-2, 3)));
        }
    }
}

TEST_CASE("terminating Gauss series") {
    CHECK(hypergeometric_2f1_terminating(-2, Rational(3), Rational(5), Rational(1, 2)) ==
          Rational(1, 2));
    CHECK(hypergeometric_2f1_terminating(-1, Rational(7, 3), Rational(7, 3), Rational(2, 5)) ==
          Rational(3, 5));
    CHECK(hypergeometric_2f1_terminating(0, Rational(4), Rational(9), Rational(8)) == Rational(1));
    CHECK(hypergeometric_2f1_terminating(-3, Rational(1), Rational(-5), Rational(1)) == Rational(2));

    SUBCASE("Chu-Vandermonde at z = 1") {
        // 2F1(-m, b; c; 1) = (c-b)_m / (c)_m
        CHECK(hypergeometric_2f1_terminating(-2, Rational(1, 2), Rational(3), Rational(1)) ==
              Rational(35, 48));
        CHECK(hypergeometric_2f1_terminating(-4, Rational(2), Rational(6), Rational(1)) ==
              pochhammer(Rational(4), 4) / pochhammer(Rational(6), 4));
    }

    SUBCASE("lower parameter hits a pole inside the sum") {
        CHECK_THROWS_AS(hypergeometric_2f1_terminating(-3, Rational(1), Rational(-2), Rational(1)),
                        std::domain_error);
        CHECK_THROWS_AS(hypergeometric_2f1_terminating(1, Rational(1), Rational(2), Rational(1)),
                        std::domain_error);
    }
}

TEST_CASE("beta at half-integers") {
    CHECK(beta_half_integer(Rational(1, 2), Rational(1, 2)) == PiRational(Rational(1), 1));
    CHECK(beta_half_integer(Rational(1), Rational(1)) == PiRational(Rational(1), 0));
    CHECK(beta_half_integer(Rational(3, 2), Rational(1, 2)) == PiRational(Rational(1, 2), 1));
    CHECK(beta_half_integer(Rational(2), Rational(3)) == PiRational(Rational(1, 12), 0));
    CHECK(beta_half_integer(Rational(5, 2), Rational(1, 2)) == PiRational(Rational(3, 8), 1));
    CHECK_THROWS_AS(beta_half_integer(Rational(1, 3), Rational(1)), std::domain_error);
    CHECK_THROWS_AS(beta_half_integer(Rational(-1, 2), Rational(1, 2)), std::domain_error);
}

TEST_CASE("even moments of the squared-argument kernel") {
    CHECK(even_moment(0, 0) == PiRational(Rational(1, 2), 1));
    CHECK(even_moment(0, 1) == PiRational(Rational(1, 4), 1));
    CHECK(even_moment(1, 1) == PiRational(Rational(1, 4), 1));
    CHECK(even_moment(2, 3) == PiRational(Rational(1, 32), 1));
    CHECK_THROWS_AS(even_moment(4, 3), std::domain_error);
    CHECK_THROWS_AS(even_moment(-1, 3), std::domain_error);
}

TEST_CASE("alternative evaluation routes agree with the closed form") {
    for (double a : {0.3, 1.0, 2.5})
        for (int m : {0, 2, 5}) {
            double reference = quartic_value(a, m);
            CHECK(quartic_value_hypergeometric(a, m) ==
                  doctest::Approx(reference).epsilon(1e-13));
            CHECK(quartic_value_landen_route(a, m) == doctest::Approx(reference).epsilon(1e-13));
        }
}

TEST_CASE("binomial product identity") {
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(check_binomial_identity(m, k));
}

TEST_CASE("diagonal binomial sums") {
    CHECK(check_fibonacci_sum(2, Rational(2)));
    CHECK(check_fibonacci_sum(3, Rational(6)));
    CHECK(check_fibonacci_sum(3, Rational(-1, 4)));
    CHECK(check_fibonacci_sum(6, Rational(1)));
    CHECK(check_fibonacci_sum(5, Rational(1, 3)));
    for (int n = 0; n <= 12; ++n)
        CHECK(check_fibonacci_sum(n, Rational(3, 4)));
    CHECK_THROWS_AS(check_fibonacci_sum(3, Rational(-1)), std::domain_error);
}
