#include "zetaform/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "zetaform/errors.hpp"

namespace zetaform {

namespace {

// Exact value of an MPFR number as a rational (MPFR stores dyadics).
Rational mpfr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return 0;
    if (!mpfr_number_p(x)) throw std::domain_error("non-finite interval bound");
    Integer mantissa;
    mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
    Rational r(mantissa);
    if (exp >= 0) {
        Integer two_exp;
        mpz_ui_pow_ui(two_exp.get_mpz_t(), 2, static_cast<unsigned long>(exp));
        r *= Rational(two_exp);
    } else {
        Integer two_exp;
        mpz_ui_pow_ui(two_exp.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
        r /= Rational(two_exp);
    }
    return r;
}

}  // namespace

DecimalInterval::DecimalInterval(mpfr_prec_t precision_bits)
    : precision_(std::max<mpfr_prec_t>(precision_bits, MPFR_PREC_MIN)) {
    mpfr_init2(midpoint_, precision_);
    mpfr_init2(radius_, precision_);
    mpfr_set_zero(midpoint_, 1);
    mpfr_set_zero(radius_, 1);
}

DecimalInterval::DecimalInterval(const DecimalInterval& other)
    : precision_(other.precision_) {
    mpfr_init2(midpoint_, precision_);
    mpfr_init2(radius_, precision_);
    mpfr_set(midpoint_, other.midpoint_, MPFR_RNDN);
    mpfr_set(radius_, other.radius_, MPFR_RNDU);
}

DecimalInterval::DecimalInterval(DecimalInterval&& other) noexcept
    : precision_(other.precision_) {
    mpfr_init2(midpoint_, MPFR_PREC_MIN);
    mpfr_init2(radius_, MPFR_PREC_MIN);
    mpfr_swap(midpoint_, other.midpoint_);
    mpfr_swap(radius_, other.radius_);
}

DecimalInterval& DecimalInterval::operator=(DecimalInterval other) {
    precision_ = other.precision_;
    mpfr_swap(midpoint_, other.midpoint_);
    mpfr_swap(radius_, other.radius_);
    return *this;
}

DecimalInterval::~DecimalInterval() {
    mpfr_clear(midpoint_);
    mpfr_clear(radius_);
}

void DecimalInterval::bump_radius_by_ulp(const mpfr_t reference) {
    if (mpfr_zero_p(reference)) return;
    // 2^(exp - prec + 1) covers at least one ulp of the reference value.
    mpfr_t ulp;
    mpfr_init2(ulp, MPFR_PREC_MIN);
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(reference) - precision_ + 1, MPFR_RNDU);
    mpfr_add(radius_, radius_, ulp, MPFR_RNDU);
    mpfr_clear(ulp);
}

DecimalInterval DecimalInterval::exact(const Rational& value, mpfr_prec_t precision_bits) {
    DecimalInterval out(precision_bits);
    int inexact = mpfr_set_q(out.midpoint_, value.get_mpq_t(), MPFR_RNDN);
    if (inexact != 0) out.bump_radius_by_ulp(out.midpoint_);
    return out;
}

DecimalInterval DecimalInterval::from_midpoint_radius(const Rational& midpoint,
                                                      const Rational& radius,
                                                      mpfr_prec_t precision_bits) {
    if (radius < 0) throw std::domain_error("negative radius");
    DecimalInterval out = exact(midpoint, precision_bits);
    mpfr_t extra;
    mpfr_init2(extra, out.precision_);
    mpfr_set_q(extra, radius.get_mpq_t(), MPFR_RNDU);
    mpfr_add(out.radius_, out.radius_, extra, MPFR_RNDU);
    mpfr_clear(extra);
    return out;
}

DecimalInterval DecimalInterval::operator+(const DecimalInterval& rhs) const {
    DecimalInterval out(std::max(precision_, rhs.precision_));
    int inexact = mpfr_add(out.midpoint_, midpoint_, rhs.midpoint_, MPFR_RNDN);
    mpfr_add(out.radius_, radius_, rhs.radius_, MPFR_RNDU);
    if (inexact != 0) out.bump_radius_by_ulp(out.midpoint_);
    return out;
}

DecimalInterval DecimalInterval::operator*(const DecimalInterval& rhs) const {
    DecimalInterval out(std::max(precision_, rhs.precision_));
    int inexact = mpfr_mul(out.midpoint_, midpoint_, rhs.midpoint_, MPFR_RNDN);

    // |m1| r2 + |m2| r1 + r1 r2, all rounded up.
    mpfr_t abs_m, term;
    mpfr_init2(abs_m, out.precision_);
    mpfr_init2(term, out.precision_);
    mpfr_abs(abs_m, midpoint_, MPFR_RNDU);
    mpfr_mul(term, abs_m, rhs.radius_, MPFR_RNDU);
    mpfr_add(out.radius_, out.radius_, term, MPFR_RNDU);
    mpfr_abs(abs_m, rhs.midpoint_, MPFR_RNDU);
    mpfr_mul(term, abs_m, radius_, MPFR_RNDU);
    mpfr_add(out.radius_, out.radius_, term, MPFR_RNDU);
    mpfr_mul(term, radius_, rhs.radius_, MPFR_RNDU);
    mpfr_add(out.radius_, out.radius_, term, MPFR_RNDU);
    mpfr_clear(abs_m);
    mpfr_clear(term);

    if (inexact != 0) out.bump_radius_by_ulp(out.midpoint_);
    return out;
}

DecimalInterval DecimalInterval::scaled(const Rational& c) const {
    DecimalInterval out(precision_);
    int inexact = mpfr_mul_q(out.midpoint_, midpoint_, c.get_mpq_t(), MPFR_RNDN);
    Rational abs_c = c < 0 ? Rational(-c) : c;
    mpfr_mul_q(out.radius_, radius_, abs_c.get_mpq_t(), MPFR_RNDU);
    if (inexact != 0) out.bump_radius_by_ulp(out.midpoint_);
    return out;
}

DecimalInterval DecimalInterval::pow(unsigned e) const {
    DecimalInterval acc = exact(1, precision_);
    DecimalInterval base(*this);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

DecimalInterval DecimalInterval::pi(mpfr_prec_t precision_bits) {
    DecimalInterval out(precision_bits);
    mpfr_const_pi(out.midpoint_, MPFR_RNDN);
    out.bump_radius_by_ulp(out.midpoint_);
    return out;
}

Rational DecimalInterval::midpoint_rational() const {
    return mpfr_to_rational(midpoint_);
}

Rational DecimalInterval::radius_rational() const {
    return mpfr_to_rational(radius_);
}

bool DecimalInterval::contains(const Rational& value) const {
    Rational mid = midpoint_rational(), rad = radius_rational();
    Rational d = value - mid;
    if (d < 0) d = -d;
    return d <= rad;
}

bool DecimalInterval::intersects(const DecimalInterval& rhs) const {
    Rational d = midpoint_rational() - rhs.midpoint_rational();
    if (d < 0) d = -d;
    return d <= radius_rational() + rhs.radius_rational();
}

bool DecimalInterval::radius_at_most(const Rational& bound) const {
    return radius_rational() <= bound;
}

std::string DecimalInterval::to_string(std::size_t decimal_digits) const {
    char* mid_str = nullptr;
    char* rad_str = nullptr;
    mpfr_asprintf(&mid_str, "%.*Re", static_cast<int>(decimal_digits), midpoint_);
    mpfr_asprintf(&rad_str, "%.2Re", radius_);
    std::string out = std::string(mid_str) + " +/- " + rad_str;
    mpfr_free_str(mid_str);
    mpfr_free_str(rad_str);
    return out;
}

namespace {

Integer rising_factorial(unsigned long base, unsigned long count) {
    Integer acc = 1;
    for (unsigned long i = 0; i < count; ++i) acc *= Integer(base + i);
    return acc;
}

}  // namespace

DecimalInterval zeta_numeric(unsigned r, unsigned digits) {
    if (r < 2) throw std::domain_error("zeta_numeric needs r >= 2");
    if (digits < 1) throw std::domain_error("digits must be >= 1");
    mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.33) + 64;

    Rational target = rational_pow(10, -static_cast<long>(digits)) / 2;

    // Tail past M with correction terms; the remainder after p correction
    // terms is bounded by |B_{2p+2}|/(2p+2)! (r)_{2p+1} M^(-r-2p-1).
    unsigned long cutoff = std::max<unsigned long>(16, digits);
    unsigned terms = 0;
    Rational remainder;
    for (;;) {
        std::vector<Rational> bern = bernoulli_list(82);
        bool found = false;
        for (unsigned p = 1; p <= 40; ++p) {
            Rational b = bern[2 * p + 2];
            if (b < 0) b = -b;
            remainder = b * Rational(rising_factorial(r, 2 * p + 1)) /
                        Rational(factorial(2 * p + 2)) /
                        rational_pow(Rational(static_cast<long>(cutoff)),
                                     static_cast<long>(r + 2 * p + 1));
            if (remainder <= target) {
                terms = p;
                found = true;
                break;
            }
        }
        if (found) break;
        cutoff *= 2;
    }

    // Everything except the remainder is an exact rational.
    Rational m(static_cast<long>(cutoff));
    Rational value = harmonic(r, cutoff - 1);
    value += rational_pow(m, 1 - static_cast<long>(r)) / Rational(static_cast<long>(r) - 1);
    value += rational_pow(m, -static_cast<long>(r)) / 2;
    std::vector<Rational> bern = bernoulli_list(2 * terms);
    for (unsigned j = 1; j <= terms; ++j) {
        value += bern[2 * j] / Rational(factorial(2 * j)) *
                 Rational(rising_factorial(r, 2 * j - 1)) *
                 rational_pow(m, 1 - static_cast<long>(r) - 2 * static_cast<long>(j));
    }
    return DecimalInterval::from_midpoint_radius(value, remainder, prec);
}

VerificationReport verify_linear_form(const ZetaIntegrand& form,
                                      const ZetaCoefficients& claimed,
                                      unsigned long terms, unsigned digits) {
    if (!is_integrable(form)) throw NotIntegrable("divergent cube integral");
    if (terms < 1) throw std::domain_error("need at least one term");
    mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.33) + 64;

    VerificationReport report;
    report.terms = terms;
    report.digits = digits;

    if (form.pole_order == 0) {
        // Finite sum; both sides are exact.
        Rational value = 0;
        for (const auto& [e, c] : form.numerator.terms()) {
            Rational den = 1;
            for (int d : e) den *= Rational(d + 1);
            value += c / den;
        }
        report.lhs = DecimalInterval::exact(value, prec);
    } else {
        SeriesTerm summand = series_summand(form);
        report.lhs = DecimalInterval::from_midpoint_radius(
            partial_sum(summand, terms), tail_bound(summand, terms), prec);
    }

    DecimalInterval rhs = DecimalInterval::exact(claimed.a0, prec);
    for (const auto& [r, value] : claimed.a)
        rhs = rhs + zeta_numeric(static_cast<unsigned>(r), digits).scaled(value);
    report.rhs = std::move(rhs);
    report.pass = report.lhs.intersects(report.rhs);
    return report;
}

}  // namespace zetaform
