#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zetaform/forms.hpp"
#include "zetaform/rational.hpp"
#include "zetaform/series.hpp"

namespace zetaform {

/// The exact value of a cube integral as a0 + sum_{r=2..n} a_r zeta(r).
/// Absent map entries are zero; keys stay within 2..n.
struct ZetaCoefficients {
    int n = 1;
    Rational a0;
    std::map<int, Rational> a;

    const Rational& a_coeff(int r) const;
    void set_a(int r, const Rational& value);
    bool operator==(const ZetaCoefficients& rhs) const;
    std::string to_string() const;
};

/// A number written in the ring generated by powers of T (standing for
/// 2*pi*i) and odd zeta values: t_coeffs[m] multiplies T^m, odd_zeta[r]
/// multiplies zeta(r) for odd r >= 3. No zero entries are stored.
struct GradedScalar {
    std::map<unsigned, Rational> t_coeffs;
    std::map<unsigned, Rational> odd_zeta;

    void add_t(unsigned power, const Rational& value);
    void add_zeta(unsigned r, const Rational& value);
    bool is_zero() const { return t_coeffs.empty() && odd_zeta.empty(); }
    bool operator==(const GradedScalar& rhs) const;
};

/// The series term R(k) whose sum over k >= 0 equals the cube integral:
/// each monomial x^(a-1)/(1-x1...xn)^N maps to
/// binomial_poly(N)/((k+a_1)...(k+a_n)), extended linearly; pole order
/// zero maps to the zero term. Returns the specific representative built
/// monomial by monomial, not just its class modulo differences.
SeriesTerm series_summand(const ZetaIntegrand& form);

/// Exact coefficients with integral(form) = a0 + sum a_r zeta(r).
/// Throws NotIntegrable for divergent forms; InternalInconsistency if the
/// summand fails the convergence shape that integrability guarantees.
ZetaCoefficients coefficients(const ZetaIntegrand& form);

/// Indices r whose coefficient is forced to vanish by the symmetry of the
/// form under variable inversion: even r for symmetric forms, odd r for
/// antisymmetric ones, nothing otherwise.
std::set<int> predict_vanishing(const ZetaIntegrand& form);

/// The top coefficient a_n alone, from the residue of the form along its
/// pole divisor paired against the (n-1)-torus: an independent route that
/// never builds the series. Exact.
Rational top_coeff_residue(const ZetaIntegrand& form);

/// lambda_{2k} = -B_{2k}/(2 (2k)!), the rational with
/// zeta(2k) = lambda_{2k} (2 pi i)^{2k}.
Rational even_zeta_rational(unsigned k);

/// q_{2k} = (-1)^k 4^k lambda_{2k}, the rational with zeta(2k) = q pi^{2k}.
Rational even_zeta_pi_coeff(unsigned k);

/// Rewrites a0 + sum a_r zeta(r) over the basis {T^m, zeta(odd)}: even
/// zeta values are absorbed as a_{2k} lambda_{2k} T^{2k}. Exact and
/// invertible.
GradedScalar odd_zeta_rewrite(const ZetaCoefficients& c);

/// Parameters of the hypergeometric series the Ball-Rivoal integral
/// expands into.
struct HypergeometricSeries {
    std::vector<long> upper;  // u_1..u_n, N
    std::vector<long> lower;  // u_i + v_i
    Rational prefactor;       // prod (u_i-1)!(v_i-1)!/(u_i+v_i-1)!
    bool well_poised;         // 2u_i + v_i = N + 1 for every i
};

HypergeometricSeries hypergeometric_params(const std::vector<long>& u,
                                           const std::vector<long>& v,
                                           unsigned N);

}  // namespace zetaform
