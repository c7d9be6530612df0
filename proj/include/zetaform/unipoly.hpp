#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "zetaform/rational.hpp"

namespace zetaform {

/// Dense univariate polynomial with exact rational coefficients. The
/// indeterminate is whatever the caller says it is: the series variable k,
/// the product variable t, or the formal symbol T standing for 2*pi*i.
/// Invariant: no trailing zero coefficients (zero polynomial is empty).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending_coeffs);
    explicit UniPoly(std::vector<Rational> ascending_coeffs);
    static UniPoly constant(const Rational& c);
    /// c * X^d
    static UniPoly monomial(const Rational& c, std::size_t d);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly& operator+=(const UniPoly& rhs) { return *this = *this + rhs; }
    UniPoly& operator-=(const UniPoly& rhs) { return *this = *this - rhs; }
    UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }
    bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    UniPoly scaled(const Rational& c) const;
    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    /// P(X + c), expanded.
    UniPoly shifted(const Rational& c) const;
    UniPoly pow(unsigned e) const;

    /// Quotient and remainder of exact division by a nonzero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    /// Product truncated to degree < order.
    UniPoly mul_mod(const UniPoly& rhs, std::size_t order) const;
    /// Power series inverse modulo X^order; requires coeff(0) != 0.
    UniPoly inverse_series(std::size_t order) const;

    /// "1 + 4*X + X^2" with the given variable name; "0" for zero.
    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// The binomial coefficient C(k+N-1, N-1) as a polynomial in k:
/// (k+1)(k+2)...(k+N-1)/(N-1)!. Requires N >= 1; N = 1 gives 1.
UniPoly binomial_poly(unsigned N);

}  // namespace zetaform
