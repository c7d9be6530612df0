#include "zetaform/zeta_coeffs.hpp"

#include <sstream>
#include <stdexcept>

#include "zetaform/errors.hpp"

namespace zetaform {

const Rational& ZetaCoefficients::a_coeff(int r) const {
    static const Rational zero(0);
    auto it = a.find(r);
    return it == a.end() ? zero : it->second;
}

void ZetaCoefficients::set_a(int r, const Rational& value) {
    if (r < 2 || r > n) throw std::out_of_range("coefficient index outside 2..n");
    if (value == 0)
        a.erase(r);
    else
        a[r] = value;
}

bool ZetaCoefficients::operator==(const ZetaCoefficients& rhs) const {
    return n == rhs.n && a0 == rhs.a0 && a == rhs.a;
}

std::string ZetaCoefficients::to_string() const {
    std::ostringstream out;
    out << "a0 = " << zetaform::to_string(a0);
    for (int r = 2; r <= n; ++r)
        out << ", a" << r << " = " << zetaform::to_string(a_coeff(r));
    return out.str();
}

void GradedScalar::add_t(unsigned power, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = t_coeffs.emplace(power, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) t_coeffs.erase(it);
    }
}

void GradedScalar::add_zeta(unsigned r, const Rational& value) {
    if (r < 3 || r % 2 == 0) throw std::domain_error("odd zeta index >= 3 expected");
    if (value == 0) return;
    auto [it, inserted] = odd_zeta.emplace(r, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) odd_zeta.erase(it);
    }
}

bool GradedScalar::operator==(const GradedScalar& rhs) const {
    return t_coeffs == rhs.t_coeffs && odd_zeta == rhs.odd_zeta;
}

SeriesTerm series_summand(const ZetaIntegrand& form) {
    if (!form.numerator.is_polynomial())
        throw NotPolynomial("the series map is defined on polynomial numerators");
    SeriesTerm out;
    if (form.pole_order == 0 || form.numerator.is_zero()) return out;

    // Monomials with the same pole multiset share their expansion; group
    // before decomposing.
    std::map<std::map<long, unsigned>, Rational> groups;
    for (const auto& [e, c] : form.numerator.terms()) {
        std::map<long, unsigned> poles;
        for (int d : e) poles[d + 1] += 1;
        auto [it, inserted] = groups.emplace(std::move(poles), c);
        if (!inserted) it->second += c;
    }

    UniPoly numerator = binomial_poly(form.pole_order);
    for (const auto& [poles, c] : groups) {
        if (c == 0) continue;
        out += partial_fractions(numerator, poles).scaled(c);
    }
    return out;
}

ZetaCoefficients coefficients(const ZetaIntegrand& form) {
    if (!is_integrable(form)) throw NotIntegrable("divergent cube integral");

    ZetaCoefficients out;
    out.n = form.n;
    if (form.pole_order == 0) {
        // No pole: integrate monomials directly.
        Rational acc = 0;
        for (const auto& [e, c] : form.numerator.terms()) {
            Rational den = 1;
            for (int d : e) den *= Rational(d + 1);
            acc += c / den;
        }
        out.a0 = acc;
        return out;
    }

    SeriesTerm summand = series_summand(form);
    PoleClass klass = pole_class(summand);
    if (!summand.poly_part().is_zero() || klass.coord(1) != 0)
        throw InternalInconsistency("integrable form mapped to a divergent series");
    if (klass.max_order() > static_cast<unsigned>(form.n))
        throw InternalInconsistency("pole order exceeding the weight");

    out.a0 = telescoped_constant(summand);
    for (unsigned r = 2; r <= klass.max_order(); ++r)
        out.set_a(static_cast<int>(r), klass.coord(r));
    return out;
}

std::set<int> predict_vanishing(const ZetaIntegrand& form) {
    std::set<int> out;
    switch (inversion_symmetry(form)) {
        case Symmetry::plus:
            for (int r = 2; r <= form.n; r += 2) out.insert(r);
            break;
        case Symmetry::minus:
            for (int r = 3; r <= form.n; r += 2) out.insert(r);
            break;
        case Symmetry::none:
            break;
    }
    return out;
}

Rational top_coeff_residue(const ZetaIntegrand& form) {
    if (form.n < 2) throw std::domain_error("top coefficient needs n >= 2");
    if (!is_integrable(form)) throw NotIntegrable("divergent cube integral");
    unsigned N = form.pole_order;
    if (N == 0 || form.numerator.is_zero()) return 0;

    // (N-1)-fold derivative in the last variable, then x_n = 1/(x_1...x_{n-1}).
    MultiLaurent s = form.numerator;
    for (unsigned i = 0; i + 1 < N; ++i) s = s.partial_derivative(form.n);

    MultiLaurent substituted(form.n - 1);
    for (const auto& [e, c] : s.terms()) {
        MultiLaurent::ExponentVec reduced(e.begin(), e.end() - 1);
        int last = e.back();
        for (auto& d : reduced) d -= last;
        substituted.add_term(reduced, c);
    }

    // a_n = -(-1)^N/(N-1)! * [coefficient of (x_1...x_{n-1})^(N-1)],
    // the sign calibrated so the weight-n Eulerian form yields 1.
    MultiLaurent::ExponentVec target(static_cast<std::size_t>(form.n - 1),
                                     static_cast<int>(N) - 1);
    Rational value = substituted.coeff(target);
    value *= make_rational(Integer(N % 2 == 0 ? -1 : 1), factorial(N - 1));
    return value;
}

Rational even_zeta_rational(unsigned k) {
    if (k < 1) throw std::domain_error("even zeta index starts at 2");
    return -bernoulli(2 * k) / (Rational(2) * Rational(factorial(2 * k)));
}

Rational even_zeta_pi_coeff(unsigned k) {
    Rational q = even_zeta_rational(k) * rational_pow(4, static_cast<long>(k));
    return (k % 2 == 1) ? Rational(-q) : q;
}

GradedScalar odd_zeta_rewrite(const ZetaCoefficients& c) {
    GradedScalar out;
    out.add_t(0, c.a0);
    for (const auto& [r, value] : c.a) {
        if (r % 2 == 1) {
            out.add_zeta(static_cast<unsigned>(r), value);
        } else {
            out.add_t(static_cast<unsigned>(r),
                      value * even_zeta_rational(static_cast<unsigned>(r) / 2));
        }
    }
    return out;
}

HypergeometricSeries hypergeometric_params(const std::vector<long>& u,
                                           const std::vector<long>& v,
                                           unsigned N) {
    if (u.size() != v.size() || u.empty())
        throw std::domain_error("parameter lists must have equal nonzero length");
    HypergeometricSeries out;
    out.prefactor = 1;
    out.well_poised = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 1 || v[i] < 1) throw std::domain_error("parameters must be >= 1");
        out.upper.push_back(u[i]);
        out.lower.push_back(u[i] + v[i]);
        out.prefactor *= make_rational(
            factorial(static_cast<unsigned long>(u[i] - 1)) *
                factorial(static_cast<unsigned long>(v[i] - 1)),
            factorial(static_cast<unsigned long>(u[i] + v[i] - 1)));
        if (2 * u[i] + v[i] != static_cast<long>(N) + 1) out.well_poised = false;
    }
    out.upper.push_back(static_cast<long>(N));
    return out;
}

}  // namespace zetaform
