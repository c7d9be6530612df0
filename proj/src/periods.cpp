#include "zetaform/periods.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zetaform/errors.hpp"

namespace zetaform {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) throw std::domain_error("empty matrix");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::domain_error("matrix shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
    std::size_t n = rows_;
    RationalMatrix a(*this);
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rational scale = 1 / a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational factor = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << zetaform::to_string(at(i, j));
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

GradedMatrix::GradedMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::domain_error("empty matrix");
}

GradedMatrix GradedMatrix::diagonal_powers(std::size_t n) {
    GradedMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UniPoly::monomial(1, i + 1);
    return m;
}

UniPoly& GradedMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

const UniPoly& GradedMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::domain_error("matrix shape mismatch");
    GradedMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

bool GradedMatrix::operator==(const GradedMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string GradedMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string("T");
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

GradedMatrix operator*(const RationalMatrix& lhs, const GradedMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw std::domain_error("matrix shape mismatch");
    GradedMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            if (lhs.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                out.at(i, j) += rhs.at(k, j).scaled(lhs.at(i, k));
        }
    return out;
}

UniPoly eulerian_poly(unsigned r) {
    UniPoly e = UniPoly::constant(1);
    UniPoly x = UniPoly::monomial(1, 1);
    UniPoly x_one_minus_x({Rational(0), Rational(1), Rational(-1)});
    for (unsigned i = 0; i < r; ++i) {
        UniPoly one_plus_ix({Rational(1), Rational(static_cast<long>(i))});
        e = x_one_minus_x * e.derivative() + one_plus_ix * e;
    }
    return e;
}

Integer eulerian_number(unsigned n, long k) {
    if (n < 1) throw std::domain_error("eulerian_number needs n >= 1");
    if (k < 0 || k > static_cast<long>(n) - 1) return 0;
    // Row-by-row table of the recursion.
    std::vector<Integer> row{1};  // <1,0>
    for (unsigned m = 2; m <= n; ++m) {
        std::vector<Integer> next(m);
        for (unsigned j = 0; j < m; ++j) {
            Integer left = (j >= 1) ? row[j - 1] * (m - j) : Integer(0);
            Integer right = (j < m - 1) ? row[j] * (j + 1) : Integer(0);
            next[j] = left + right;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Rational hypersimplex_volume(unsigned n, unsigned k) {
    if (n < 1 || k > n - 1) throw std::out_of_range("hypersimplex index");
    return make_rational(Integer(eulerian_number(n, static_cast<long>(k))),
                         factorial(n));
}

Rational descent_volume(unsigned n, unsigned k) {
    if (n < 1 || k > n - 1) throw std::out_of_range("hypersimplex index");
    if (n > 9) throw EnumerationBound("descent enumeration capped at n = 9");
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    unsigned long count = 0;
    do {
        unsigned descents = 0;
        for (unsigned i = 0; i + 1 < n; ++i)
            if (perm[i] > perm[i + 1]) ++descents;
        if (descents == k) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return make_rational(Integer(count), factorial(n));
}

RationalMatrix boundary_matrix(unsigned n) {
    if (n < 2) throw std::domain_error("boundary_matrix needs n >= 2");
    RationalMatrix m(n - 1, n);
    m.at(0, 0) = 1;
    for (unsigned k = 1; k + 1 < n; ++k) {
        m.at(k, k) = 1;
        m.at(k - 1, k) = -1;
    }
    m.at(n - 2, n - 1) = -1;
    return m;
}

RationalMatrix eulerian_matrix(unsigned n) {
    if (n < 1) throw std::domain_error("eulerian_matrix needs n >= 1");
    RationalMatrix m(n, n);
    for (unsigned i = 0; i + 1 < n; ++i) {
        m.at(i, i) = 1;
        m.at(i + 1, i) = -1;
    }
    for (unsigned i = 0; i < n; ++i)
        m.at(i, n - 1) = Rational(eulerian_number(n, static_cast<long>(i)));
    return m;
}

RationalMatrix basis_change_matrix(unsigned n) {
    if (n < 1) throw std::domain_error("basis_change_matrix needs n >= 1");
    RationalMatrix q(1, 1);
    q.at(0, 0) = 1;
    for (unsigned m = 2; m <= n; ++m) {
        RationalMatrix block(m, m);
        for (unsigned i = 0; i + 1 < m; ++i)
            for (unsigned j = 0; j + 1 < m; ++j) block.at(i, j) = q.at(i, j);
        block.at(m - 1, m - 1) = Rational(factorial(m));
        q = block * eulerian_matrix(m).inverse();
    }
    return q;
}

GradedMatrix period_matrix(unsigned n) {
    if (n < 1) throw std::domain_error("period_matrix needs n >= 1");
    GradedMatrix p(1, 1);
    p.at(0, 0) = UniPoly::monomial(1, 1);
    for (unsigned m = 2; m <= n; ++m) {
        GradedMatrix block(m, m);
        for (unsigned i = 0; i + 1 < m; ++i)
            for (unsigned j = 0; j + 1 < m; ++j) block.at(i, j) = p.at(i, j);
        block.at(m - 1, m - 1) =
            UniPoly::monomial(make_rational(Integer(1), factorial(m)), m);
        p = eulerian_matrix(m) * block;
    }
    return p;
}

bool verify_diagonal_identity(unsigned n) {
    RationalMatrix q = basis_change_matrix(n);
    GradedMatrix product = q * period_matrix(n);
    return product == GradedMatrix::diagonal_powers(n);
}

}  // namespace zetaform
