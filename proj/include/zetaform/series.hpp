#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetaform/rational.hpp"
#include "zetaform/unipoly.hpp"

namespace zetaform {

/// Coordinates of a series term modulo forward differences, in the basis
/// (k+1)^-r: entry r (1-based) is the coefficient of (k+1)^-r left after
/// telescoping away every shifted pole. Entry 1 must vanish for the series
/// to converge; entries r >= 2 multiply zeta(r) in the summed value.
class PoleClass {
public:
    PoleClass() = default;
    explicit PoleClass(std::vector<Rational> entries_from_order_one);

    const Rational& coord(unsigned r) const;
    /// Largest order with a nonzero coordinate (0 when all vanish).
    unsigned max_order() const { return static_cast<unsigned>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }
    bool operator==(const PoleClass& rhs) const { return entries_ == rhs.entries_; }

    void set_coord(unsigned r, const Rational& value);
    void add_coord(unsigned r, const Rational& value);

private:
    void trim();
    std::vector<Rational> entries_;  // entries_[i] = coordinate of order i+1
};

/// A rational function of the series variable k with poles among the
/// negative integers, stored in partial-fraction form: a polynomial part
/// plus coefficients of (k+j)^-r for shifts j >= 1 and orders r >= 1.
/// These are exactly the general terms R(k) of the series that integrals
/// over the unit cube expand into. No zero coefficients are stored.
class SeriesTerm {
public:
    /// Key: (shift j, order r).
    using PoleKey = std::pair<long, unsigned>;
    using PoleMap = std::map<PoleKey, Rational>;

    SeriesTerm() = default;
    SeriesTerm(UniPoly poly_part, PoleMap pole_coeffs);

    const UniPoly& poly_part() const { return poly_part_; }
    const PoleMap& pole_coeffs() const { return pole_coeffs_; }
    bool is_zero() const { return poly_part_.is_zero() && pole_coeffs_.empty(); }

    void add_pole(long shift, unsigned order, const Rational& c);
    void add_poly(const UniPoly& p) { poly_part_ += p; }

    SeriesTerm operator-() const;
    SeriesTerm operator+(const SeriesTerm& rhs) const;
    SeriesTerm operator-(const SeriesTerm& rhs) const;
    SeriesTerm& operator+=(const SeriesTerm& rhs);
    SeriesTerm scaled(const Rational& c) const;
    bool operator==(const SeriesTerm& rhs) const;

    /// Exact value R(k); k must avoid the poles.
    Rational eval(const Rational& k) const;

    std::string to_string() const;

private:
    UniPoly poly_part_;
    PoleMap pole_coeffs_;
};

/// Expands numerator(k) / prod_j (k+j)^{m_j} into a SeriesTerm: quotient
/// polynomial by long division, singular parts by exact Taylor development
/// of the cofactor at each pole. Recombining recovers the input exactly.
/// All shifts must be >= 1.
SeriesTerm partial_fractions(const UniPoly& numerator,
                             const std::map<long, unsigned>& poles);

/// Forward difference R(k+1) - R(k).
SeriesTerm forward_difference(const SeriesTerm& r);

/// Class of R modulo forward differences: order-r coordinate is the sum of
/// the order-r pole coefficients over all shifts (polynomial parts and
/// shifted poles telescope away).
PoleClass pole_class(const SeriesTerm& r);

/// Whether R and S agree modulo forward differences.
bool same_pole_class(const SeriesTerm& r, const SeriesTerm& s);

/// The rational constant contributed by telescoping: writing
/// R = sum_r coord_r (k+1)^-r - (T(k+1) - T(k)) with T vanishing at
/// infinity, returns T(0). Requires a zero polynomial part and a zero
/// order-1 coordinate (throws NotSummable otherwise).
Rational telescoped_constant(const SeriesTerm& r);

struct SeriesSum {
    Rational constant;  // rational part of the summed series
    PoleClass klass;    // coord(r) multiplies zeta(r), r >= 2
};

/// Evaluates sum_{k>=0} R(k) = constant + sum_{r>=2} coord_r zeta(r).
/// Throws NotSummable when the series does not converge absolutely.
SeriesSum sum_series(const SeriesTerm& r);

/// Exact sum_{k=0}^{K-1} R(k); balanced splitting keeps K ~ 10^5 cheap.
Rational partial_sum(const SeriesTerm& r, unsigned long terms);

/// Certified rational bound B with |sum_{k>=K} R(k)| <= B. Order-1 poles
/// are paired against the lowest active shift (their coefficients sum to
/// zero), higher orders use the integral test. Loose on purpose.
Rational tail_bound(const SeriesTerm& r, unsigned long from_index);

}  // namespace zetaform
