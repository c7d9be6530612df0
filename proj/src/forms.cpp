#include "zetaform/forms.hpp"

#include <stdexcept>

#include "zetaform/errors.hpp"
#include "zetaform/periods.hpp"

namespace zetaform {

ZetaIntegrand::ZetaIntegrand(int n_, MultiLaurent numerator_, unsigned pole_order_)
    : n(n_), numerator(std::move(numerator_)), pole_order(pole_order_) {
    if (n < 1) throw std::domain_error("forms need n >= 1");
    if (numerator.nvars() != n) throw std::domain_error("numerator nvars mismatch");
}

bool ZetaIntegrand::operator==(const ZetaIntegrand& rhs) const {
    return n == rhs.n && pole_order == rhs.pole_order && numerator == rhs.numerator;
}

ZetaIntegrand ZetaIntegrand::scaled(const Rational& c) const {
    return ZetaIntegrand(n, numerator.scaled(c), pole_order);
}

PartialForm::PartialForm(int n_, int omitted_index_, MultiLaurent numerator_,
                         unsigned pole_order_)
    : n(n_), omitted_index(omitted_index_), numerator(std::move(numerator_)),
      pole_order(pole_order_) {
    if (n < 2) throw std::domain_error("partial forms need n >= 2");
    if (omitted_index < 1 || omitted_index > n)
        throw std::domain_error("omitted index out of range");
    if (numerator.nvars() != n) throw std::domain_error("numerator nvars mismatch");
}

namespace {

// Is the degree-d homogeneous part of P(1-y) nonzero? The coefficient of
// y^s is (-1)^|s| sum_e coeff(e) prod_i C(e_i, s_i); enumerate |s| = d.
bool shifted_part_nonzero(const MultiLaurent& p, long d,
                          std::vector<int>& s, std::size_t pos, long left) {
    if (pos + 1 == s.size()) {
        s[pos] = static_cast<int>(left);
        Rational acc = 0;
        for (const auto& [e, c] : p.terms()) {
            Rational prod = c;
            for (std::size_t i = 0; i < e.size() && prod != 0; ++i) {
                if (s[i] > e[i]) {
                    prod = 0;
                    break;
                }
                if (s[i] > 0)
                    prod *= Rational(binomial(static_cast<unsigned long>(e[i]),
                                              static_cast<unsigned long>(s[i])));
            }
            acc += prod;
        }
        return acc != 0;
    }
    for (long v = 0; v <= left; ++v) {
        s[pos] = static_cast<int>(v);
        if (shifted_part_nonzero(p, d, s, pos + 1, left - v)) return true;
    }
    return false;
}

}  // namespace

long lowest_shifted_degree(const MultiLaurent& p, long limit) {
    if (!p.is_polynomial())
        throw NotPolynomial("degree probe needs a polynomial numerator");
    if (p.is_zero()) return limit + 1;
    std::vector<int> s(static_cast<std::size_t>(p.nvars()), 0);
    for (long d = 0; d <= limit; ++d)
        if (shifted_part_nonzero(p, d, s, 0, d)) return d;
    return limit + 1;
}

bool is_integrable(const ZetaIntegrand& form) {
    if (!form.numerator.is_polynomial())
        throw NotPolynomial("integrability is defined for polynomial numerators");
    if (form.numerator.is_zero()) return true;
    long limit = static_cast<long>(form.pole_order) - form.n;
    if (limit < 0) return true;
    return lowest_shifted_degree(form.numerator, limit) > limit;
}

ZetaIntegrand inversion_pullback(const ZetaIntegrand& form) {
    MultiLaurent num =
        invert_substitute(form.numerator, static_cast<int>(form.pole_order) - 2);
    if ((form.pole_order + static_cast<unsigned>(form.n)) % 2 == 1) num = -num;
    return ZetaIntegrand(form.n, std::move(num), form.pole_order);
}

Symmetry inversion_symmetry(const ZetaIntegrand& form) {
    MultiLaurent image = inversion_pullback(form).numerator;
    if (image == form.numerator) return Symmetry::plus;
    if (image == -form.numerator) return Symmetry::minus;
    return Symmetry::none;
}

const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::plus: return "plus";
        case Symmetry::minus: return "minus";
        default: return "none";
    }
}

ZetaIntegrand eulerian_form(int n, int k) {
    if (n < 2 || k < 2 || k > n)
        throw std::out_of_range("eulerian_form needs 2 <= k <= n");
    return ZetaIntegrand(
        n, MultiLaurent::unipoly_at_product(eulerian_poly(static_cast<unsigned>(n - k)), n),
        static_cast<unsigned>(n - k + 1));
}

ZetaIntegrand ball_rivoal_form(const std::vector<long>& u,
                               const std::vector<long>& v, unsigned N) {
    if (u.size() != v.size() || u.empty())
        throw std::domain_error("parameter lists must have equal nonzero length");
    int n = static_cast<int>(u.size());
    MultiLaurent num = MultiLaurent::constant(n, 1);
    for (int i = 1; i <= n; ++i) {
        long ui = u[static_cast<std::size_t>(i - 1)];
        long vi = v[static_cast<std::size_t>(i - 1)];
        if (ui < 1 || vi < 1) throw std::domain_error("parameters must be >= 1");
        MultiLaurent::ExponentVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = static_cast<int>(ui - 1);
        num *= MultiLaurent::monomial(n, e, 1);
        MultiLaurent one_minus(n);
        for (long s = 0; s <= vi - 1; ++s) {
            MultiLaurent::ExponentVec se(static_cast<std::size_t>(n), 0);
            se[static_cast<std::size_t>(i - 1)] = static_cast<int>(s);
            Rational c(binomial(static_cast<unsigned long>(vi - 1),
                                static_cast<unsigned long>(s)));
            if (s % 2 == 1) c = -c;
            one_minus.add_term(se, c);
        }
        num *= one_minus;
    }
    return ZetaIntegrand(n, std::move(num), N);
}

ZetaIntegrand exterior_derivative(const PartialForm& pf) {
    int j = pf.omitted_index;
    Rational sign = (j % 2 == 1) ? 1 : -1;  // (-1)^(j-1) from the wedge
    MultiLaurent dj = pf.numerator.partial_derivative(j);
    if (pf.pole_order == 0)
        return ZetaIntegrand(pf.n, dj.scaled(sign), 0);

    MultiLaurent product_all = MultiLaurent::monomial(
        pf.n, MultiLaurent::ExponentVec(static_cast<std::size_t>(pf.n), 1), 1);
    MultiLaurent::ExponentVec rest(static_cast<std::size_t>(pf.n), 1);
    rest[static_cast<std::size_t>(j - 1)] = 0;
    MultiLaurent product_rest = MultiLaurent::monomial(pf.n, rest, 1);

    MultiLaurent g = (MultiLaurent::constant(pf.n, 1) - product_all) * dj +
                     (pf.numerator * product_rest)
                         .scaled(Rational(static_cast<long>(pf.pole_order)));
    return ZetaIntegrand(pf.n, g.scaled(sign), pf.pole_order + 1);
}

ZetaIntegrand restrict_face(const PartialForm& pf, int value) {
    if (value != 0 && value != 1) throw std::domain_error("faces are x_j = 0 or 1");
    MultiLaurent num =
        pf.numerator.substitute_unit(pf.omitted_index, value).drop_variable(pf.omitted_index);
    unsigned pole = (value == 1) ? pf.pole_order : 0;
    return ZetaIntegrand(pf.n - 1, std::move(num), pole);
}

namespace {

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(1 / a.coeffs().back());
    return a;
}

// Rational function of t, just enough for the one-variable integration.
struct RatFn {
    UniPoly num, den;

    static RatFn of(UniPoly p) { return {std::move(p), UniPoly::constant(1)}; }

    void normalize() {
        if (num.is_zero()) {
            den = UniPoly::constant(1);
            return;
        }
        UniPoly g = poly_gcd(num, den);
        num = num.divmod(g).first;
        den = den.divmod(g).first;
        Rational lead = den.coeffs().back();
        num = num.scaled(1 / lead);
        den = den.scaled(1 / lead);
    }

    RatFn operator+(const RatFn& rhs) const {
        RatFn out{num * rhs.den + rhs.num * den, den * rhs.den};
        out.normalize();
        return out;
    }

    RatFn operator*(const RatFn& rhs) const {
        RatFn out{num * rhs.num, den * rhs.den};
        out.normalize();
        return out;
    }
};

}  // namespace

UniPoly integrate_factor(long u, long v, unsigned N) {
    if (u < 1 || v < 1) throw std::domain_error("parameters must be >= 1");
    if (u + v > static_cast<long>(N))
        throw LemmaInapplicable("needs u + v <= N");

    UniPoly t = UniPoly::monomial(1, 1);
    UniPoly one_minus_t({Rational(1), Rational(-1)});

    // x^(m-1) = t^(1-m) sum_s C(m-1,s)(-t x)^s ... expanded against the
    // antiderivative of (1-tx)^(s-N): each piece of
    // integral_0^1 x^(m-1)(1-tx)^-N dx is rational in t.
    auto power_integral = [&](long m) {
        RatFn acc = RatFn::of({});
        for (long s = 0; s <= m - 1; ++s) {
            long a = static_cast<long>(N) - 1 - s;  // >= 1 since s <= u+v-2 <= N-2
            Rational c(binomial(static_cast<unsigned long>(m - 1),
                                static_cast<unsigned long>(s)));
            if (s % 2 == 1) c = -c;
            c /= Rational(s - static_cast<long>(N) + 1);
            RatFn piece{(UniPoly::constant(1) - one_minus_t.pow(static_cast<unsigned>(a)))
                            .scaled(-c),
                        t.pow(static_cast<unsigned>(m)) *
                            one_minus_t.pow(static_cast<unsigned>(a))};
            piece.normalize();
            acc = acc + piece;
        }
        return acc;
    };

    RatFn total = RatFn::of({});
    for (long i = 0; i <= v - 1; ++i) {
        Rational c(binomial(static_cast<unsigned long>(v - 1),
                            static_cast<unsigned long>(i)));
        if (i % 2 == 1) c = -c;
        RatFn piece = power_integral(u + i);
        piece.num = piece.num.scaled(c);
        piece.normalize();
        total = total + piece;
    }

    RatFn result = total * RatFn::of(one_minus_t.pow(N - static_cast<unsigned>(v)));
    if (result.den.degree() != 0)
        throw InternalInconsistency("residual denominator in the integrated factor");
    return result.num.scaled(1 / result.den.coeff(0));
}

ZetaIntegrand reduce_dimension(const ZetaIntegrand& form, int i) {
    if (form.n < 2) throw std::domain_error("nothing to reduce for n = 1");
    if (i < 1 || i > form.n) throw std::out_of_range("variable index");
    if (form.numerator.is_zero())
        return ZetaIntegrand(form.n - 1, MultiLaurent(form.n - 1), 0);
    if (!form.numerator.is_polynomial())
        throw NotFactorable("Laurent numerators do not factor");

    long u = form.numerator.min_degree(i) + 1;
    long top = form.numerator.max_degree(i);
    long v = top - (u - 1) + 1;
    MultiLaurent cofactor = form.numerator.coefficient_of(i, static_cast<int>(u - 1));

    MultiLaurent check(form.n);
    for (long s = 0; s <= v - 1; ++s) {
        MultiLaurent::ExponentVec e(static_cast<std::size_t>(form.n), 0);
        e[static_cast<std::size_t>(i - 1)] = static_cast<int>(u - 1 + s);
        Rational c(binomial(static_cast<unsigned long>(v - 1),
                            static_cast<unsigned long>(s)));
        if (s % 2 == 1) c = -c;
        check += cofactor * MultiLaurent::monomial(form.n, e, c);
    }
    if (!(check == form.numerator))
        throw NotFactorable("numerator is not x^(u-1)(1-x)^(v-1) times a cofactor");

    UniPoly factor = integrate_factor(u, v, form.pole_order);
    MultiLaurent reduced = cofactor.drop_variable(i) *
                           MultiLaurent::unipoly_at_product(factor, form.n - 1);
    return ZetaIntegrand(form.n - 1, std::move(reduced),
                         form.pole_order - static_cast<unsigned>(v));
}

}  // namespace zetaform
