#include <doctest.h>

#include "golden_suite.hpp"
#include "test_support.hpp"
#include "zetaform/errors.hpp"
#include "zetaform/numeric.hpp"

using namespace zetaform;

namespace {

// [prefix, prefix + 10^-digits] encloses every real whose decimal
// expansion starts with the given truncated digits.
bool consistent_with_prefix(const DecimalInterval& interval,
                            const std::string& prefix, unsigned digits,
                            mpfr_prec_t prec = 256) {
    Rational lo = decimal_to_rational(prefix);
    Rational hi = lo + rational_pow(10, -static_cast<long>(digits));
    DecimalInterval window = DecimalInterval::from_midpoint_radius(
        (lo + hi) / 2, (hi - lo) / 2, prec);
    return interval.intersects(window);
}

}  // namespace

TEST_CASE("interval arithmetic basics") {
    DecimalInterval a = DecimalInterval::exact(make_rational(1, 3), 128);
    CHECK(a.contains(make_rational(1, 3)));
    CHECK(a.radius_at_most(rational_pow(10, -30)));

    DecimalInterval b = DecimalInterval::from_midpoint_radius(2, make_rational(1, 100), 128);
    DecimalInterval sum = a + b;
    CHECK(sum.contains(make_rational(1, 3) + 2));
    CHECK(sum.radius_at_most(make_rational(2, 100)));

    DecimalInterval product = a * b;
    CHECK(product.contains(make_rational(2, 3)));

    CHECK(a.scaled(-6).contains(-2));
    CHECK(DecimalInterval::pi(256).pow(2).contains(
        decimal_to_rational("9.86960440108935861883449099987615")));

    DecimalInterval wide = DecimalInterval::from_midpoint_radius(1, 1, 64);
    DecimalInterval far = DecimalInterval::exact(3, 64);
    CHECK_FALSE(wide.intersects(far));
    CHECK(wide.intersects(DecimalInterval::exact(2, 64)));
}

TEST_CASE("zeta enclosures against independent summation") {
    CHECK(consistent_with_prefix(zeta_numeric(2, 10), "1.6449340668", 10));
    CHECK(zeta_numeric(2, 10).radius_at_most(rational_pow(10, -10)));

    // Independent oracle for zeta(3): exact sum to M plus the integral-test
    // bracket [1/(2(M+1)^2), 1/(2M^2)] for the tail.
    {
        unsigned long m = 200000;
        Rational partial = harmonic(3, m);
        Rational lo = partial + make_rational(1, 2) / Rational((m + 1) * (m + 1));
        Rational hi = partial + make_rational(1, 2) / Rational(m * m);
        DecimalInterval oracle = DecimalInterval::from_midpoint_radius(
            (lo + hi) / 2, (hi - lo) / 2, 256);
        DecimalInterval computed = zeta_numeric(3, 15);
        CHECK(computed.radius_at_most(rational_pow(10, -15)));
        CHECK(computed.intersects(oracle));
        CHECK(consistent_with_prefix(computed, "1.202056903159594", 15));
    }

    // Rapidly convergent case, same bracket at small M.
    {
        unsigned long m = 200;
        Rational partial = harmonic(10, m);
        Rational lo = partial + make_rational(1, 9) /
                                    rational_pow(Rational(static_cast<long>(m) + 1), 9);
        Rational hi = partial + make_rational(1, 9) /
                                    rational_pow(Rational(static_cast<long>(m)), 9);
        DecimalInterval oracle = DecimalInterval::from_midpoint_radius(
            (lo + hi) / 2, (hi - lo) / 2, 256);
        DecimalInterval computed = zeta_numeric(10, 10);
        CHECK(computed.radius_at_most(rational_pow(10, -10)));
        CHECK(computed.intersects(oracle));
        CHECK(consistent_with_prefix(computed, "1.0009945751", 10));
    }
}

TEST_CASE("even zeta values against the pi powers") {
    for (unsigned k = 1; k <= 5; ++k) {
        DecimalInterval from_pi =
            DecimalInterval::pi(384).pow(2 * k).scaled(even_zeta_pi_coeff(k));
        CHECK(zeta_numeric(2 * k, 40).intersects(from_pi));
    }
}

TEST_CASE("verification of the weight-two eulerian form") {
    ZetaIntegrand form = eulerian_form(2, 2);
    VerificationReport report =
        verify_linear_form(form, coefficients(form), 100000, 30);
    CHECK(report.pass);
    CHECK(report.terms == 100000);
    CHECK(report.digits == 30);
}

TEST_CASE("verification rejects corrupted coefficients") {
    ZetaIntegrand beukers = ball_rivoal_form({2, 2}, {2, 2}, 2);
    ZetaCoefficients good = coefficients(beukers);
    VerificationReport ok = verify_linear_form(beukers, good, 100000, 30);
    CHECK(ok.pass);
    CHECK(ok.lhs.radius_at_most(rational_pow(10, -4)));
    CHECK(ok.rhs.radius_at_most(rational_pow(10, -4)));
    // Both sides sit around 5 - 3 zeta(2) ~ 0.06519.
    CHECK(consistent_with_prefix(ok.lhs, "0.0651", 4));

    ZetaCoefficients bad = good;
    bad.set_a(2, Rational(-2));  // off by one zeta(2)
    CHECK_FALSE(verify_linear_form(beukers, bad, 100000, 30).pass);
}

TEST_CASE("golden suite verifies and refines monotonically") {
    for (const ZetaIntegrand& form : testing::golden_forms()) {
        ZetaCoefficients c = coefficients(form);
        VerificationReport coarse = verify_linear_form(form, c, 2000, 15);
        VerificationReport fine = verify_linear_form(form, c, 40000, 25);
        CHECK(coarse.pass);
        CHECK(fine.pass);
        CHECK(fine.lhs.radius_rational() <= coarse.lhs.radius_rational());
        CHECK(fine.rhs.radius_rational() <= coarse.rhs.radius_rational());
    }
}

TEST_CASE("partial sums stay within the certified tail of the summed value") {
    // Golden summands at K = 10^5: the exact partial sum must sit inside
    // constant + sum coord_r zeta(r) within tail_bound plus zeta radii.
    for (const ZetaIntegrand& form : testing::golden_forms()) {
        if (form.pole_order == 0) continue;
        SeriesTerm summand = series_summand(form);
        SeriesSum value = sum_series(summand);
        DecimalInterval rhs = DecimalInterval::exact(value.constant, 128);
        for (unsigned r = 2; r <= value.klass.max_order(); ++r)
            if (value.klass.coord(r) != 0)
                rhs = rhs + zeta_numeric(r, 30).scaled(value.klass.coord(r));
        DecimalInterval lhs = DecimalInterval::from_midpoint_radius(
            partial_sum(summand, 100000), tail_bound(summand, 100000), 128);
        CHECK(lhs.intersects(rhs));
    }
}

TEST_CASE("verification needs an integrable form") {
    ZetaIntegrand divergent(2, MultiLaurent::constant(2, 1), 2);
    CHECK_THROWS_AS(verify_linear_form(divergent, ZetaCoefficients{}, 100, 10),
                    NotIntegrable);
}
