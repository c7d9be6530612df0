#include "zetaform/multilaurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zetaform/errors.hpp"

namespace zetaform {

MultiLaurent::MultiLaurent(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::domain_error("nvars must be >= 1");
}

MultiLaurent MultiLaurent::constant(int nvars, const Rational& c) {
    MultiLaurent p(nvars);
    p.add_term(ExponentVec(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiLaurent MultiLaurent::variable(int nvars, int index) {
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index - 1)) = 1;
    return monomial(nvars, std::move(e), 1);
}

MultiLaurent MultiLaurent::monomial(int nvars, ExponentVec exponents, const Rational& c) {
    MultiLaurent p(nvars);
    p.add_term(exponents, c);
    return p;
}

MultiLaurent MultiLaurent::unipoly_at_product(const UniPoly& p, int nvars) {
    MultiLaurent out(nvars);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        if (p.coeff(j) == 0) continue;
        out.add_term(ExponentVec(static_cast<std::size_t>(nvars), static_cast<int>(j)),
                     p.coeff(j));
    }
    return out;
}

bool MultiLaurent::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int d : e)
            if (d < 0) return false;
    return true;
}

bool MultiLaurent::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
}

const Rational& MultiLaurent::coeff(const ExponentVec& exponents) const {
    static const Rational zero(0);
    auto it = terms_.find(exponents);
    return it == terms_.end() ? zero : it->second;
}

void MultiLaurent::add_term(const ExponentVec& exponents, const Rational& c) {
    if (exponents.size() != static_cast<std::size_t>(nvars_))
        throw std::domain_error("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& rhs) {
    if (nvars_ != rhs.nvars_) throw std::domain_error("nvars mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& rhs) const {
    MultiLaurent r(*this);
    r += rhs;
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& rhs) const {
    return *this + (-rhs);
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::domain_error("nvars mismatch");
    MultiLaurent r(nvars_);
    ExponentVec e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool MultiLaurent::operator==(const MultiLaurent& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

MultiLaurent MultiLaurent::scaled(const Rational& c) const {
    MultiLaurent r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MultiLaurent MultiLaurent::partial_derivative(int index) const {
    std::size_t i = static_cast<std::size_t>(index - 1);
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        ExponentVec de(e);
        de[i] -= 1;
        r.add_term(de, c * Rational(e[i]));
    }
    return r;
}

MultiLaurent MultiLaurent::substitute_unit(int index, int value) const {
    if (value != 0 && value != 1) throw std::domain_error("substitute_unit takes 0 or 1");
    std::size_t i = static_cast<std::size_t>(index - 1);
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (value == 0) {
            if (e[i] < 0)
                throw NotPolynomial("substituting 0 into a negative power of x" +
                                    std::to_string(index));
            if (e[i] > 0) continue;
        }
        ExponentVec se(e);
        se[i] = 0;
        r.add_term(se, c);
    }
    return r;
}

MultiLaurent MultiLaurent::drop_variable(int index) const {
    if (nvars_ < 2) throw std::domain_error("cannot drop the last variable");
    std::size_t i = static_cast<std::size_t>(index - 1);
    MultiLaurent r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[i] != 0) throw std::domain_error("dropping a variable still in use");
        ExponentVec se;
        se.reserve(e.size() - 1);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != i) se.push_back(e[j]);
        r.add_term(se, c);
    }
    return r;
}

Rational MultiLaurent::eval(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
        throw std::domain_error("point dimension mismatch");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= rational_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

MultiLaurent MultiLaurent::coefficient_of(int index, int power) const {
    std::size_t i = static_cast<std::size_t>(index - 1);
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != power) continue;
        ExponentVec se(e);
        se[i] = 0;
        r.add_term(se, c);
    }
    return r;
}

int MultiLaurent::min_degree(int index) const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    std::size_t i = static_cast<std::size_t>(index - 1);
    int best = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
    return best;
}

int MultiLaurent::max_degree(int index) const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    std::size_t i = static_cast<std::size_t>(index - 1);
    int best = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
    return best;
}

long MultiLaurent::min_total_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

long MultiLaurent::max_total_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

std::string MultiLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](int d) { return d != 0; });
        bool need_coeff = !any_var || abs_c != 1;
        if (need_coeff) out << zetaform::to_string(abs_c);
        bool need_star = need_coeff;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << "x" << (i + 1);
            if (e[i] != 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

MultiLaurent substitute_one_minus(const MultiLaurent& p) {
    if (!p.is_polynomial())
        throw NotPolynomial("substitution x -> 1 - x needs a polynomial");
    MultiLaurent out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiLaurent term = MultiLaurent::constant(p.nvars(), c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            // (1 - x_i)^{e_i}, expanded.
            MultiLaurent binom(p.nvars());
            for (int s = 0; s <= e[i]; ++s) {
                MultiLaurent::ExponentVec se(static_cast<std::size_t>(p.nvars()), 0);
                se[i] = s;
                Rational coeff(binomial(static_cast<unsigned long>(e[i]),
                                        static_cast<unsigned long>(s)));
                if (s % 2 == 1) coeff = -coeff;
                binom.add_term(se, coeff);
            }
            term *= binom;
        }
        out += term;
    }
    return out;
}

MultiLaurent invert_substitute(const MultiLaurent& p, int m) {
    MultiLaurent out(p.nvars());
    MultiLaurent::ExponentVec ie(static_cast<std::size_t>(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) ie[i] = m - e[i];
        out.add_term(ie, c);
    }
    return out;
}

}  // namespace zetaform
