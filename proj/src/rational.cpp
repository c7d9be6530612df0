#include "zetaform/rational.hpp"

#include <stdexcept>

namespace zetaform {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational make_rational(Integer numerator, Integer denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    Rational q(std::move(numerator), std::move(denominator));
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (base == 0 && exponent < 0) throw std::domain_error("0 to a negative power");
    Rational r;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    if (exponent < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    return r;
}

namespace {

// Unreduced sum_{i=a}^{b-1} 1/i^r by balanced splitting; one gcd at the top.
struct RawFraction {
    Integer num, den;
};

RawFraction harmonic_range(unsigned r, unsigned long a, unsigned long b) {
    if (b - a == 1) {
        Integer d;
        mpz_ui_pow_ui(d.get_mpz_t(), a, r);
        return {1, std::move(d)};
    }
    unsigned long mid = a + (b - a) / 2;
    RawFraction left = harmonic_range(r, a, mid);
    RawFraction right = harmonic_range(r, mid, b);
    return {left.num * right.den + right.num * left.den, left.den * right.den};
}

}  // namespace

Rational harmonic(unsigned r, unsigned long m) {
    if (r < 1) throw std::domain_error("harmonic order must be >= 1");
    if (m == 0) return 0;
    RawFraction raw = harmonic_range(r, 1, m + 1);
    return make_rational(std::move(raw.num), std::move(raw.den));
}

std::vector<Rational> bernoulli_list(unsigned m) {
    // sum_{j=0..m} C(m+1,j) B_j = 0 for m >= 1, solved for B_m.
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        Rational acc = 0;
        for (unsigned j = 0; j < i; ++j) acc += Rational(binomial(i + 1, j)) * b[j];
        b[i] = -acc / Rational(binomial(i + 1, i));
    }
    return b;
}

Rational bernoulli(unsigned m) {
    if (m > 1 && m % 2 == 1) return 0;
    return bernoulli_list(m)[m];
}

}  // namespace zetaform
