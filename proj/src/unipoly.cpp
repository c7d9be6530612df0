#include "zetaform/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaform {

UniPoly::UniPoly(std::initializer_list<Rational> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
    trim();
}

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (c != 0) p.coeffs_ = {c};
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t d) {
    UniPoly p;
    if (c != 0) {
        p.coeffs_.assign(d + 1, Rational(0));
        p.coeffs_[d] = c;
    }
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
    return *this + (-rhs);
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    UniPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

UniPoly UniPoly::shifted(const Rational& c) const {
    // Horner in (X + c).
    UniPoly acc;
    UniPoly x_plus_c({c, Rational(1)});
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x_plus_c + constant(coeffs_[i]);
    }
    return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = constant(1);
    UniPoly base(*this);
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly rem(*this);
    std::vector<Rational> quot;
    long dd = divisor.degree();
    if (rem.degree() >= dd) quot.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        long shift = rem.degree() - dd;
        Rational factor = rem.coeffs_.back() / divisor.coeffs_.back();
        quot[static_cast<std::size_t>(shift)] = factor;
        rem -= divisor.scaled(factor) * monomial(1, static_cast<std::size_t>(shift));
    }
    return {UniPoly(std::move(quot)), std::move(rem)};
}

UniPoly UniPoly::mul_mod(const UniPoly& rhs, std::size_t order) const {
    if (is_zero() || rhs.is_zero() || order == 0) return {};
    std::vector<Rational> out(std::min(order, coeffs_.size() + rhs.coeffs_.size() - 1), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size() && i < order; ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < order; ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::inverse_series(std::size_t order) const {
    if (coeffs_.empty() || coeffs_[0] == 0)
        throw std::domain_error("series inverse needs a unit constant term");
    std::vector<Rational> inv(order, Rational(0));
    inv[0] = 1 / coeffs_[0];
    for (std::size_t i = 1; i < order; ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i && j < coeffs_.size(); ++j)
            acc += coeffs_[j] * inv[i - j];
        inv[i] = -acc / coeffs_[0];
    }
    return UniPoly(std::move(inv));
}

UniPoly binomial_poly(unsigned N) {
    if (N < 1) throw std::domain_error("binomial_poly needs N >= 1");
    UniPoly p = UniPoly::constant(1);
    for (unsigned i = 1; i <= N - 1; ++i)
        p *= UniPoly({Rational(static_cast<long>(i)), Rational(1)});
    return p.scaled(make_rational(Integer(1), factorial(N - 1)));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool need_coeff = (i == 0) || abs_c != 1;
        if (need_coeff) out << zetaform::to_string(abs_c);
        if (i > 0) {
            if (need_coeff) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace zetaform
