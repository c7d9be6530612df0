#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetaform/rational.hpp"
#include "zetaform/unipoly.hpp"

namespace zetaform {

/// Sparse multivariate Laurent polynomial in x1..xn with exact rational
/// coefficients. Exponents may be negative (images under variable
/// inversion are first-class values). Invariants: every stored exponent
/// vector has length nvars, no zero coefficients are stored. Terms are
/// keyed in lexicographic exponent order, which fixes printing.
class MultiLaurent {
public:
    using ExponentVec = std::vector<int>;
    using TermMap = std::map<ExponentVec, Rational>;

    explicit MultiLaurent(int nvars);
    static MultiLaurent constant(int nvars, const Rational& c);
    /// The variable x_index (1-based).
    static MultiLaurent variable(int nvars, int index);
    static MultiLaurent monomial(int nvars, ExponentVec exponents, const Rational& c);
    /// p evaluated at the full product x1*...*xn, expanded.
    static MultiLaurent unipoly_at_product(const UniPoly& p, int nvars);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;
    bool is_constant() const;
    const Rational& coeff(const ExponentVec& exponents) const;

    MultiLaurent operator-() const;
    MultiLaurent operator+(const MultiLaurent& rhs) const;
    MultiLaurent operator-(const MultiLaurent& rhs) const;
    MultiLaurent operator*(const MultiLaurent& rhs) const;
    MultiLaurent& operator+=(const MultiLaurent& rhs);
    MultiLaurent& operator-=(const MultiLaurent& rhs) { return *this += -rhs; }
    MultiLaurent& operator*=(const MultiLaurent& rhs) { return *this = *this * rhs; }
    bool operator==(const MultiLaurent& rhs) const;

    MultiLaurent scaled(const Rational& c) const;
    /// d/dx_index (1-based).
    MultiLaurent partial_derivative(int index) const;
    /// Substitutes x_index = 0 or 1; the variable stays in the ring with
    /// exponent 0. Substituting 0 into a negative power throws.
    MultiLaurent substitute_unit(int index, int value) const;
    /// Removes a variable that no term uses and renumbers the rest.
    MultiLaurent drop_variable(int index) const;
    /// Exact evaluation; zero coordinates with negative exponents throw.
    Rational eval(const std::vector<Rational>& point) const;

    /// Coefficient of x_index^power, as a polynomial with exponent 0 in
    /// that slot.
    MultiLaurent coefficient_of(int index, int power) const;
    int min_degree(int index) const;
    int max_degree(int index) const;
    long min_total_degree() const;
    long max_total_degree() const;

    void add_term(const ExponentVec& exponents, const Rational& c);

    /// "1 - x1*x2 + 3/2*x3^2" in lexicographic term order; "0" when zero.
    std::string to_string() const;

private:
    int nvars_;
    TermMap terms_;
};

/// x_i -> 1 - x_i for every variable, expanded. Input must be a genuine
/// polynomial (throws NotPolynomial on negative exponents).
MultiLaurent substitute_one_minus(const MultiLaurent& p);

/// (x1*...*xn)^m * p(1/x1, ..., 1/xn); a Laurent polynomial for any m.
MultiLaurent invert_substitute(const MultiLaurent& p, int m);

}  // namespace zetaform
