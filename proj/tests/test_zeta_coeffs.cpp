#include <doctest.h>

#include "test_support.hpp"
#include "zetaform/errors.hpp"
#include "zetaform/zeta_coeffs.hpp"

using namespace zetaform;

namespace {

SeriesTerm term_of(std::initializer_list<std::pair<std::pair<long, unsigned>, long>> poles) {
    SeriesTerm r;
    for (const auto& [key, c] : poles) r.add_pole(key.first, key.second, Rational(c));
    return r;
}

ZetaIntegrand monomial_form(int n, MultiLaurent::ExponentVec e, unsigned pole) {
    return ZetaIntegrand(n, MultiLaurent::monomial(n, std::move(e), 1), pole);
}

}  // namespace

TEST_CASE("series summand on monomials") {
    CHECK(series_summand(eulerian_form(2, 2)) == term_of({{{1, 2}, 1}}));
    CHECK(series_summand(monomial_form(2, {1, 0}, 1)) ==
          term_of({{{1, 1}, 1}, {{2, 1}, -1}}));
    CHECK(series_summand(monomial_form(2, {2, 0}, 0)).is_zero());
    CHECK_THROWS_AS(
        series_summand(ZetaIntegrand(2, MultiLaurent::monomial(2, {-1, 0}, 1), 1)),
        NotPolynomial);
}

TEST_CASE("coefficients of the pinned forms") {
    ZetaCoefficients e32 = coefficients(eulerian_form(3, 2));
    CHECK(e32.a0 == 0);
    CHECK(e32.a_coeff(2) == 1);
    CHECK(e32.a_coeff(3) == 0);

    ZetaCoefficients beukers = coefficients(ball_rivoal_form({2, 2}, {2, 2}, 2));
    CHECK(beukers.a0 == 5);
    CHECK(beukers.a_coeff(2) == -3);

    ZetaCoefficients tele = coefficients(monomial_form(2, {1, 0}, 1));
    CHECK(tele.a0 == 1);
    CHECK(tele.a_coeff(2) == 0);

    ZetaCoefficients flat = coefficients(monomial_form(1, {1}, 0));
    CHECK(flat.a0 == make_rational(1, 2));

    CHECK_THROWS_AS(coefficients(ZetaIntegrand(2, MultiLaurent::constant(2, 1), 2)),
                    NotIntegrable);
}

TEST_CASE("eulerian forms give unit vectors") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= n; ++k) {
            ZetaCoefficients c = coefficients(eulerian_form(n, k));
            CHECK(c.a0 == 0);
            for (int r = 2; r <= n; ++r)
                CHECK(c.a_coeff(r) == Rational(r == k ? 1 : 0));
        }
}

TEST_CASE("summand shape on random integrable forms") {
    testing::Rng rng(71);
    for (int trial = 0; trial < 500; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 4);
        ZetaIntegrand form = testing::random_integrable_form(rng, nvars, 5, 6);
        SeriesTerm summand = series_summand(form);
        CHECK(summand.poly_part().is_zero());
        CHECK(pole_class(summand).coord(1) == 0);
    }
}

TEST_CASE("summand class is stable under pole-order rewriting") {
    // Multiplying numerator and denominator by (1 - x1...xn) must not move
    // the class modulo differences.
    testing::Rng rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        MultiLaurent p = testing::random_polynomial(rng, nvars, 4, 5);
        unsigned pole = static_cast<unsigned>(rng() % 4);
        MultiLaurent product = MultiLaurent::monomial(
            nvars, MultiLaurent::ExponentVec(static_cast<std::size_t>(nvars), 1), 1);
        ZetaIntegrand form(nvars, p, pole);
        ZetaIntegrand rewritten(nvars,
                                p * (MultiLaurent::constant(nvars, 1) - product),
                                pole + 1);
        CHECK(same_pole_class(series_summand(form), series_summand(rewritten)));
    }
}

TEST_CASE("derivatives restrict compatibly through the series map") {
    // The class of the summand of d(eta) matches the summand of the
    // restriction of eta to x_j = 1 with the wedge sign.
    testing::Rng rng(79);
    int checked = 0;
    while (checked < 250) {
        PartialForm eta = testing::random_partial_form(rng, 4, 4, 4);
        SeriesTerm lhs = series_summand(exterior_derivative(eta));
        Rational sign = (eta.omitted_index % 2 == 1) ? 1 : -1;
        SeriesTerm rhs = series_summand(restrict_face(eta, 1)).scaled(sign);
        CHECK(same_pole_class(lhs, rhs));
        ++checked;
    }

    // The worked two-variable instance, explicitly.
    PartialForm eta(2, 2, MultiLaurent::variable(2, 2), 1);
    SeriesTerm lhs = series_summand(exterior_derivative(eta));
    CHECK(lhs == term_of({{{1, 1}, -1}}));
    SeriesTerm rhs = series_summand(restrict_face(eta, 1)).scaled(-1);
    CHECK(rhs == term_of({{{1, 1}, -1}}));
}

TEST_CASE("parity of the summand class under inversion") {
    testing::Rng rng(83);
    for (int trial = 0; trial < 300; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        unsigned pole = 2 + static_cast<unsigned>(rng() % 3);
        // Exponents <= pole-2 keep the inversion image polynomial.
        MultiLaurent p = testing::random_polynomial(
            rng, nvars, static_cast<int>(pole) - 2, 4);
        ZetaIntegrand form(nvars, p, pole);
        ZetaIntegrand reflected = inversion_pullback(form);
        REQUIRE(reflected.numerator.is_polynomial());
        PoleClass original = pole_class(series_summand(form));
        PoleClass mirrored = pole_class(series_summand(reflected));
        unsigned top = std::max(original.max_order(), mirrored.max_order());
        for (unsigned r = 1; r <= top; ++r) {
            Rational expected = original.coord(r);
            if (r % 2 == 0) expected = -expected;
            CHECK(mirrored.coord(r) == expected);
        }
    }
}

TEST_CASE("vanishing prediction") {
    CHECK(predict_vanishing(ZetaIntegrand(3, MultiLaurent::constant(3, 1), 2)) ==
          std::set<int>{3});
    CHECK(predict_vanishing(eulerian_form(2, 2)).empty());

    // Well-poised with (n+1)(N+1) odd: n = 2, N = 2, u = (1,1), v = (1,1).
    ZetaIntegrand wp = ball_rivoal_form({1, 1}, {1, 1}, 2);
    CHECK(inversion_symmetry(wp) == Symmetry::plus);
    CHECK(predict_vanishing(wp) == std::set<int>{2});

    // Predicted indices actually vanish whenever the form is integrable.
    testing::Rng rng(89);
    for (int trial = 0; trial < 100; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        ZetaIntegrand form = testing::random_integrable_form(rng, nvars, 4, 4);
        ZetaCoefficients c = coefficients(form);
        for (int r : predict_vanishing(form)) CHECK(c.a_coeff(r) == 0);
    }
}

TEST_CASE("top coefficient by residue") {
    CHECK(top_coeff_residue(eulerian_form(2, 2)) == 1);
    CHECK(top_coeff_residue(monomial_form(2, {1, 0}, 1)) == 0);
    CHECK(top_coeff_residue(eulerian_form(3, 2)) == 0);
    CHECK(top_coeff_residue(ball_rivoal_form({2, 2}, {2, 2}, 2)) == -3);

    testing::Rng rng(97);
    for (int trial = 0; trial < 150; ++trial) {
        int nvars = 2 + static_cast<int>(rng() % 3);
        ZetaIntegrand form = testing::random_integrable_form(rng, nvars, 4, 5);
        CHECK(top_coeff_residue(form) == coefficients(form).a_coeff(form.n));
    }
}

TEST_CASE("even zeta rationals") {
    CHECK(even_zeta_rational(1) == make_rational(-1, 24));
    CHECK(even_zeta_pi_coeff(1) == make_rational(1, 6));
    CHECK(even_zeta_pi_coeff(2) == make_rational(1, 90));
    CHECK(even_zeta_pi_coeff(3) == make_rational(1, 945));
}

TEST_CASE("rewriting over the odd basis") {
    GradedScalar basel = odd_zeta_rewrite(coefficients(eulerian_form(3, 2)));
    CHECK(basel.t_coeffs.at(2) == make_rational(-1, 24));
    CHECK(basel.odd_zeta.empty());

    ZetaCoefficients odd;
    odd.n = 3;
    odd.a0 = make_rational(7, 2);
    odd.set_a(3, Rational(-2));
    GradedScalar rewritten = odd_zeta_rewrite(odd);
    CHECK(rewritten.t_coeffs == std::map<unsigned, Rational>{{0, make_rational(7, 2)}});
    CHECK(rewritten.odd_zeta == std::map<unsigned, Rational>{{3, Rational(-2)}});

    CHECK(odd_zeta_rewrite(ZetaCoefficients{}).t_coeffs.empty());

    // Exact and invertible: recover every even coefficient.
    testing::Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        ZetaCoefficients c;
        c.n = 2 + static_cast<int>(rng() % 5);
        c.a0 = testing::random_rational(rng);
        for (int r = 2; r <= c.n; ++r) c.set_a(r, testing::random_rational(rng));
        GradedScalar g = odd_zeta_rewrite(c);
        ZetaCoefficients back;
        back.n = c.n;
        for (const auto& [m, value] : g.t_coeffs) {
            if (m == 0)
                back.a0 = value;
            else
                back.set_a(static_cast<int>(m), value / even_zeta_rational(m / 2));
        }
        for (const auto& [r, value] : g.odd_zeta) back.set_a(static_cast<int>(r), value);
        CHECK(back == c);
    }
}

TEST_CASE("hypergeometric display") {
    HypergeometricSeries a = hypergeometric_params({1, 1}, {1, 1}, 1);
    CHECK(a.upper == std::vector<long>{1, 1, 1});
    CHECK(a.lower == std::vector<long>{2, 2});
    CHECK(a.prefactor == 1);
    CHECK_FALSE(a.well_poised);

    CHECK(hypergeometric_params({1, 1, 1}, {1, 1, 1}, 2).well_poised);
    CHECK(hypergeometric_params({2, 2}, {2, 2}, 2).prefactor == make_rational(1, 36));
}
