#pragma once

#include <string>
#include <vector>

#include "zetaform/rational.hpp"
#include "zetaform/unipoly.hpp"

namespace zetaform {

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    RationalMatrix inverse() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Matrix whose entries are polynomials in the formal symbol T standing
/// for 2*pi*i; products stay in the polynomial ring, comparisons are exact.
class GradedMatrix {
public:
    GradedMatrix(std::size_t rows, std::size_t cols);
    static GradedMatrix diagonal_powers(std::size_t n);  // Diag(T, T^2, ..., T^n)

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    UniPoly& at(std::size_t i, std::size_t j);
    const UniPoly& at(std::size_t i, std::size_t j) const;

    GradedMatrix operator*(const GradedMatrix& rhs) const;
    bool operator==(const GradedMatrix& rhs) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<UniPoly> data_;
};

GradedMatrix operator*(const RationalMatrix& lhs, const GradedMatrix& rhs);

/// Eulerian polynomial E_r, from the recurrence
/// E_{r+1}(x) = x(1-x)E'_r(x) + (1+rx)E_r(x), E_0 = 1.
UniPoly eulerian_poly(unsigned r);

/// Eulerian number <n,k> by the two-term recursion
/// <n,k> = (n-k)<n-1,k-1> + (k+1)<n-1,k>; 0 outside 0 <= k <= n-1.
Integer eulerian_number(unsigned n, long k);

/// Volume <n,k>/n! of the slice k <= t_1+...+t_n <= k+1 of the unit cube.
Rational hypersimplex_volume(unsigned n, unsigned k);

/// Same volume by brute force: the fraction of permutations of {1..n}
/// with exactly k descents. Enumeration is capped at n <= 9.
Rational descent_volume(unsigned n, unsigned k);

/// (n-1) x n matrix of the boundary map in the hypersimplex bases:
/// column 0 -> e0, column k -> e_k - e_{k-1} (1 <= k <= n-2),
/// column n-1 -> -e_{n-2}.
RationalMatrix boundary_matrix(unsigned n);

/// n x n matrix with 1 on the diagonal of the first n-1 columns, -1 on
/// the subdiagonal, and the Eulerian numbers <n,0..n-1> as last column.
RationalMatrix eulerian_matrix(unsigned n);

/// Exact change of basis defined by Q_1 = (1) and
/// Q_n = blockdiag(Q_{n-1}, n!) * eulerian_matrix(n)^-1. Its rows give the
/// cycles against which the period matrix becomes diagonal.
RationalMatrix basis_change_matrix(unsigned n);

/// Period matrix in the hypersimplex basis: P_1 = (T) and
/// P_n = eulerian_matrix(n) * blockdiag(P_{n-1}, T^n/n!).
GradedMatrix period_matrix(unsigned n);

/// Checks basis_change_matrix(n) * period_matrix(n) == Diag(T, ..., T^n).
bool verify_diagonal_identity(unsigned n);

}  // namespace zetaform
