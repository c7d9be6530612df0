#pragma once

#include <mpfr.h>

#include <string>

#include "zetaform/forms.hpp"
#include "zetaform/rational.hpp"
#include "zetaform/zeta_coeffs.hpp"

namespace zetaform {

/// Midpoint-radius interval over MPFR numbers. Every operation rounds the
/// radius outward, so an interval always encloses the real number it
/// asserts; the predicates (contains, intersects) are decided exactly on
/// the underlying dyadic rationals.
class DecimalInterval {
public:
    explicit DecimalInterval(mpfr_prec_t precision_bits = 128);
    DecimalInterval(const DecimalInterval& other);
    DecimalInterval(DecimalInterval&& other) noexcept;
    DecimalInterval& operator=(DecimalInterval other);
    ~DecimalInterval();

    /// Tightest representable interval around an exact rational.
    static DecimalInterval exact(const Rational& value, mpfr_prec_t precision_bits);
    static DecimalInterval from_midpoint_radius(const Rational& midpoint,
                                                const Rational& radius,
                                                mpfr_prec_t precision_bits);

    DecimalInterval operator+(const DecimalInterval& rhs) const;
    DecimalInterval operator*(const DecimalInterval& rhs) const;
    DecimalInterval scaled(const Rational& c) const;
    DecimalInterval pow(unsigned e) const;

    /// Enclosure of pi at the given precision.
    static DecimalInterval pi(mpfr_prec_t precision_bits);

    mpfr_prec_t precision() const { return precision_; }
    /// Exact values of the stored dyadic midpoint and radius.
    Rational midpoint_rational() const;
    Rational radius_rational() const;

    bool contains(const Rational& value) const;
    bool intersects(const DecimalInterval& rhs) const;
    /// True when the radius is at most the given rational, exactly.
    bool radius_at_most(const Rational& bound) const;

    /// "1.6449340668...e+00 +/- 2.1e-31"
    std::string to_string(std::size_t decimal_digits = 20) const;

private:
    void bump_radius_by_ulp(const mpfr_t reference);
    mpfr_prec_t precision_;
    mpfr_t midpoint_;
    mpfr_t radius_;
};

/// Certified enclosure of zeta(r) with radius at most 10^-digits, by the
/// tail-corrected sum with an explicit remainder bound.
DecimalInterval zeta_numeric(unsigned r, unsigned digits);

struct VerificationReport {
    DecimalInterval lhs;  // series side: partial sum +/- tail bound
    DecimalInterval rhs;  // zeta-combination side
    bool pass = false;    // true iff the intervals intersect
    unsigned long terms = 0;
    unsigned digits = 0;
};

/// Checks numerically that the claimed coefficients reproduce the
/// integral: encloses the series through `terms` exact partial-sum terms
/// plus a certified tail bound, encloses a0 + sum a_r zeta(r), and reports
/// whether the enclosures meet. Throws NotIntegrable on divergent forms.
VerificationReport verify_linear_form(const ZetaIntegrand& form,
                                      const ZetaCoefficients& claimed,
                                      unsigned long terms, unsigned digits);

}  // namespace zetaform
