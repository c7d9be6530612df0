#include <doctest.h>

#include "test_support.hpp"
#include "zetaform/errors.hpp"
#include "zetaform/forms.hpp"
#include "zetaform/periods.hpp"

using namespace zetaform;

namespace {

ZetaIntegrand simple_form(int n, long constant, unsigned pole) {
    return ZetaIntegrand(n, MultiLaurent::constant(n, Rational(constant)), pole);
}

}  // namespace

TEST_CASE("integrability criterion") {
    CHECK(is_integrable(simple_form(2, 1, 1)));
    CHECK_FALSE(is_integrable(simple_form(2, 1, 2)));  // sum 1/(k+1) diverges
    CHECK(is_integrable(ball_rivoal_form({2, 2}, {2, 2}, 2)));
    CHECK(is_integrable(ZetaIntegrand(2, MultiLaurent(2), 5)));  // zero form

    ZetaIntegrand laurent(2, invert_substitute(MultiLaurent::variable(2, 1), 0), 1);
    CHECK_THROWS_AS(is_integrable(laurent), NotPolynomial);
}

TEST_CASE("integrability agrees with the full substitution") {
    testing::Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        MultiLaurent p = testing::random_polynomial(rng, nvars, 4, 4);
        unsigned pole = static_cast<unsigned>(rng() % 7);
        bool fast = is_integrable(ZetaIntegrand(nvars, p, pole));
        bool naive;
        if (p.is_zero()) {
            naive = true;
        } else {
            long v = substitute_one_minus(p).min_total_degree() + nvars;
            naive = v >= static_cast<long>(pole) + 1;
        }
        CHECK(fast == naive);
    }
}

TEST_CASE("inversion pullback") {
    ZetaIntegrand base = simple_form(2, 1, 1);
    ZetaIntegrand image = inversion_pullback(base);
    CHECK(image.pole_order == 1);
    CHECK(image.numerator == MultiLaurent::monomial(2, {-1, -1}, -1));

    CHECK(inversion_pullback(simple_form(3, 1, 2)).numerator ==
          MultiLaurent::constant(3, -1));

    testing::Rng rng(59);
    for (int trial = 0; trial < 500; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 4);
        ZetaIntegrand form(nvars, testing::random_laurent(rng, nvars, 3, 5),
                           static_cast<unsigned>(rng() % 5));
        CHECK(inversion_pullback(inversion_pullback(form)) == form);
    }
}

TEST_CASE("inversion symmetry") {
    CHECK(inversion_symmetry(simple_form(3, 1, 2)) == Symmetry::minus);
    CHECK(inversion_symmetry(simple_form(2, 1, 1)) == Symmetry::none);
    CHECK(inversion_symmetry(ZetaIntegrand(2, MultiLaurent(2), 3)) == Symmetry::plus);

    // The identity the symmetry flags encode, checked literally.
    testing::Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        ZetaIntegrand form(nvars, testing::random_polynomial(rng, nvars, 3, 4),
                           static_cast<unsigned>(rng() % 5));
        Symmetry s = inversion_symmetry(form);
        MultiLaurent image = invert_substitute(form.numerator,
                                               static_cast<int>(form.pole_order) - 2);
        Rational sign = ((form.pole_order + static_cast<unsigned>(form.n)) % 2 == 0)
                            ? 1 : -1;
        if (s == Symmetry::plus) CHECK(image.scaled(sign) == form.numerator);
        if (s == Symmetry::minus) CHECK(image.scaled(sign) == -form.numerator);
    }
}

TEST_CASE("eulerian forms") {
    CHECK(eulerian_form(2, 2) == simple_form(2, 1, 1));
    CHECK(eulerian_form(3, 2) == simple_form(3, 1, 2));

    ZetaIntegrand e42 = eulerian_form(4, 2);
    CHECK(e42.pole_order == 3);
    CHECK(e42.numerator ==
          MultiLaurent::constant(4, 1) + MultiLaurent::monomial(4, {1, 1, 1, 1}, 1));

    for (int n = 2; n <= 8; ++n) {
        CHECK(eulerian_form(n, n) ==
              ZetaIntegrand(n, MultiLaurent::constant(n, 1), 1));
        for (int k = 2; k <= n; ++k) CHECK(is_integrable(eulerian_form(n, k)));
    }
    CHECK_THROWS_AS(eulerian_form(3, 1), std::out_of_range);
}

TEST_CASE("ball-rivoal forms") {
    CHECK(ball_rivoal_form({1, 1}, {1, 1}, 1) == simple_form(2, 1, 1));
    CHECK(ball_rivoal_form({1, 1, 1}, {1, 1, 1}, 2) == simple_form(3, 1, 2));

    ZetaIntegrand beukers = ball_rivoal_form({2, 2}, {2, 2}, 2);
    MultiLaurent x1 = MultiLaurent::variable(2, 1);
    MultiLaurent x2 = MultiLaurent::variable(2, 2);
    MultiLaurent one = MultiLaurent::constant(2, 1);
    CHECK(beukers.numerator == x1 * x2 * (one - x1) * (one - x2));
}

TEST_CASE("exterior derivative") {
    PartialForm flat(2, 2, MultiLaurent::variable(2, 2), 0);
    ZetaIntegrand d_flat = exterior_derivative(flat);
    CHECK(d_flat.pole_order == 0);
    CHECK(d_flat.numerator == MultiLaurent::constant(2, -1));

    PartialForm curved(2, 2, MultiLaurent::variable(2, 2), 1);
    ZetaIntegrand d_curved = exterior_derivative(curved);
    CHECK(d_curved.pole_order == 2);
    CHECK(d_curved.numerator == MultiLaurent::constant(2, -1));
}

TEST_CASE("eulerian forms arise as derivatives") {
    // (-1)^(n-1) d(x_n E_{n-1-k}(x1..xn)/(1-x1..xn)^(n-k) dx1..dx_{n-1})
    // equals the weight-k Eulerian form, exactly.
    for (int n = 2; n <= 8; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            MultiLaurent num =
                MultiLaurent::variable(n, n) *
                MultiLaurent::unipoly_at_product(
                    eulerian_poly(static_cast<unsigned>(n - 1 - k)), n);
            PartialForm eta(n, n, std::move(num), static_cast<unsigned>(n - k));
            Rational sign = (n % 2 == 1) ? 1 : -1;
            CHECK(exterior_derivative(eta).scaled(sign) == eulerian_form(n, k));
        }
        // Weight-zero analogue with numerator x_n and no pole.
        PartialForm eta0(n, n, MultiLaurent::variable(n, n), 0);
        Rational sign = (n % 2 == 1) ? 1 : -1;
        CHECK(exterior_derivative(eta0).scaled(sign) ==
              ZetaIntegrand(n, MultiLaurent::constant(n, 1), 0));
    }
}

TEST_CASE("face restriction") {
    PartialForm pf(2, 2, MultiLaurent::variable(2, 2), 1);
    ZetaIntegrand at_one = restrict_face(pf, 1);
    CHECK(at_one.n == 1);
    CHECK(at_one.pole_order == 1);
    CHECK(at_one.numerator == MultiLaurent::constant(1, 1));

    ZetaIntegrand at_zero = restrict_face(pf, 0);
    CHECK(at_zero.n == 1);
    CHECK(at_zero.pole_order == 0);
    CHECK(at_zero.numerator.is_zero());

    PartialForm three(3, 1, MultiLaurent::variable(3, 1) * MultiLaurent::variable(3, 2), 2);
    ZetaIntegrand r = restrict_face(three, 1);
    CHECK(r.n == 2);
    CHECK(r.pole_order == 2);
    CHECK(r.numerator == MultiLaurent::variable(2, 1));  // old x2
}

TEST_CASE("one-variable integration factor") {
    CHECK(integrate_factor(1, 1, 2) == UniPoly::constant(1));
    CHECK(integrate_factor(1, 1, 3) ==
          UniPoly({Rational(1), make_rational(-1, 2)}));  // (2 - t)/2
    CHECK(integrate_factor(1, 2, 3) == UniPoly::constant(make_rational(1, 2)));
    CHECK_THROWS_AS(integrate_factor(2, 2, 3), LemmaInapplicable);

    // Taylor oracle at t = 0: the m-th derivative of the integral is
    // (N)_m B(u+m, v), so the series of P(t)/(1-t)^(N-v) must match.
    testing::Rng rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        long u = 1 + static_cast<long>(rng() % 3);
        long v = 1 + static_cast<long>(rng() % 3);
        unsigned N = static_cast<unsigned>(u + v + static_cast<long>(rng() % 4));
        UniPoly p = integrate_factor(u, v, N);

        std::size_t order = static_cast<std::size_t>(p.degree()) + 4;
        // (1-t)^(v-N) as a power series: coefficients C(N-v+i-1, i).
        std::vector<Rational> geom(order);
        for (std::size_t i = 0; i < order; ++i)
            geom[i] = Rational(binomial(static_cast<unsigned long>(N) -
                                            static_cast<unsigned long>(v) + i - 1,
                                        i));
        UniPoly rhs = p.mul_mod(UniPoly(std::move(geom)), order);

        Rational rising = 1;
        for (std::size_t m = 0; m < order; ++m) {
            // (N)_m / m! * B(u+m, v) with B the beta integral.
            Rational beta = make_rational(
                factorial(static_cast<unsigned long>(u) + m - 1) *
                    factorial(static_cast<unsigned long>(v) - 1),
                factorial(static_cast<unsigned long>(u + v) + m - 1));
            CHECK(rhs.coeff(m) == rising * beta / Rational(factorial(m)));
            rising *= Rational(static_cast<long>(N + m));
        }
    }
}

TEST_CASE("dimension reduction") {
    ZetaIntegrand two = simple_form(2, 1, 2);
    ZetaIntegrand reduced = reduce_dimension(two, 2);
    CHECK(reduced == ZetaIntegrand(1, MultiLaurent::constant(1, 1), 1));

    ZetaIntegrand three = simple_form(3, 1, 2);
    CHECK(reduce_dimension(three, 3) == ZetaIntegrand(2, MultiLaurent::constant(2, 1), 1));

    ZetaIntegrand bad(2, MultiLaurent::variable(2, 1) + MultiLaurent::variable(2, 2), 3);
    CHECK_THROWS_AS(reduce_dimension(bad, 1), NotFactorable);
}
