#include "zetaform/series.hpp"

#include <sstream>
#include <stdexcept>

#include "zetaform/errors.hpp"

namespace zetaform {

PoleClass::PoleClass(std::vector<Rational> entries_from_order_one)
    : entries_(std::move(entries_from_order_one)) {
    trim();
}

void PoleClass::trim() {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

const Rational& PoleClass::coord(unsigned r) const {
    static const Rational zero(0);
    if (r < 1) throw std::domain_error("pole class order starts at 1");
    return r <= entries_.size() ? entries_[r - 1] : zero;
}

void PoleClass::set_coord(unsigned r, const Rational& value) {
    if (r < 1) throw std::domain_error("pole class order starts at 1");
    if (r > entries_.size()) entries_.resize(r, Rational(0));
    entries_[r - 1] = value;
    trim();
}

void PoleClass::add_coord(unsigned r, const Rational& value) {
    set_coord(r, coord(r) + value);
}

SeriesTerm::SeriesTerm(UniPoly poly_part, PoleMap pole_coeffs)
    : poly_part_(std::move(poly_part)) {
    for (auto& [key, c] : pole_coeffs) add_pole(key.first, key.second, c);
}

void SeriesTerm::add_pole(long shift, unsigned order, const Rational& c) {
    if (shift < 1) throw std::domain_error("pole shifts must be >= 1");
    if (order < 1) throw std::domain_error("pole orders must be >= 1");
    if (c == 0) return;
    auto [it, inserted] = pole_coeffs_.emplace(PoleKey{shift, order}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) pole_coeffs_.erase(it);
    }
}

SeriesTerm SeriesTerm::operator-() const {
    return scaled(-1);
}

SeriesTerm& SeriesTerm::operator+=(const SeriesTerm& rhs) {
    poly_part_ += rhs.poly_part_;
    for (const auto& [key, c] : rhs.pole_coeffs_) add_pole(key.first, key.second, c);
    return *this;
}

SeriesTerm SeriesTerm::operator+(const SeriesTerm& rhs) const {
    SeriesTerm r(*this);
    r += rhs;
    return r;
}

SeriesTerm SeriesTerm::operator-(const SeriesTerm& rhs) const {
    return *this + (-rhs);
}

SeriesTerm SeriesTerm::scaled(const Rational& c) const {
    SeriesTerm r;
    if (c == 0) return r;
    r.poly_part_ = poly_part_.scaled(c);
    r.pole_coeffs_ = pole_coeffs_;
    for (auto& [key, v] : r.pole_coeffs_) v *= c;
    return r;
}

bool SeriesTerm::operator==(const SeriesTerm& rhs) const {
    return poly_part_ == rhs.poly_part_ && pole_coeffs_ == rhs.pole_coeffs_;
}

Rational SeriesTerm::eval(const Rational& k) const {
    Rational acc = poly_part_.eval(k);
    for (const auto& [key, c] : pole_coeffs_) {
        Rational base = k + Rational(key.first);
        acc += c * rational_pow(base, -static_cast<long>(key.second));
    }
    return acc;
}

std::string SeriesTerm::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (!poly_part_.is_zero()) {
        out << poly_part_.to_string("k");
        first = false;
    }
    for (const auto& [key, c] : pole_coeffs_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1) out << zetaform::to_string(abs_c) << "*";
        out << "(k+" << key.first << ")^-" << key.second;
    }
    if (first) out << "0";
    return out.str();
}

SeriesTerm partial_fractions(const UniPoly& numerator,
                             const std::map<long, unsigned>& poles) {
    for (const auto& [shift, mult] : poles) {
        if (shift < 1) throw std::domain_error("pole shifts must be >= 1");
        if (mult < 1) throw std::domain_error("pole multiplicities must be >= 1");
    }
    SeriesTerm out;
    if (numerator.is_zero()) return out;

    UniPoly denominator = UniPoly::constant(1);
    for (const auto& [shift, mult] : poles)
        denominator *= UniPoly({Rational(shift), Rational(1)}).pow(mult);

    auto [quotient, remainder] = numerator.divmod(denominator);
    out.add_poly(quotient);
    if (remainder.is_zero()) return out;

    for (const auto& [shift, mult] : poles) {
        // Cofactor of this pole, then its reciprocal series at k = -shift:
        // remainder / cofactor = sum_i t_i (k+shift)^i gives the order-r
        // coefficient t_{mult-r}.
        UniPoly cofactor = UniPoly::constant(1);
        for (const auto& [other, omult] : poles) {
            if (other == shift) continue;
            cofactor *= UniPoly({Rational(other), Rational(1)}).pow(omult);
        }
        UniPoly local_num = remainder.shifted(Rational(-shift));
        UniPoly local_cof = cofactor.shifted(Rational(-shift));
        UniPoly series = local_num.mul_mod(local_cof.inverse_series(mult), mult);
        for (unsigned r = 1; r <= mult; ++r)
            out.add_pole(shift, r, series.coeff(mult - r));
    }
    return out;
}

SeriesTerm forward_difference(const SeriesTerm& r) {
    SeriesTerm out;
    out.add_poly(r.poly_part().shifted(1) - r.poly_part());
    for (const auto& [key, c] : r.pole_coeffs()) {
        out.add_pole(key.first + 1, key.second, c);
        out.add_pole(key.first, key.second, -c);
    }
    return out;
}

PoleClass pole_class(const SeriesTerm& r) {
    PoleClass out;
    for (const auto& [key, c] : r.pole_coeffs()) out.add_coord(key.second, c);
    return out;
}

bool same_pole_class(const SeriesTerm& r, const SeriesTerm& s) {
    return pole_class(r) == pole_class(s);
}

Rational telescoped_constant(const SeriesTerm& r) {
    if (!r.poly_part().is_zero())
        throw NotSummable("nonzero polynomial part");
    if (pole_class(r).coord(1) != 0)
        throw NotSummable("nonzero order-1 class");
    // (k+j)^-r = (k+1)^-r + difference of sum_{i=1..j-1} (k+i)^-r, so the
    // telescoped remainder evaluated at 0 collects harmonic numbers.
    Rational acc = 0;
    for (const auto& [key, c] : r.pole_coeffs()) {
        if (key.first < 2) continue;
        acc -= c * harmonic(key.second, static_cast<unsigned long>(key.first - 1));
    }
    return acc;
}

SeriesSum sum_series(const SeriesTerm& r) {
    SeriesSum out;
    out.constant = telescoped_constant(r);
    out.klass = pole_class(r);
    return out;
}

namespace {

// Integer-coefficient polynomial evaluation for the splitting leaves.
Integer eval_at(const std::vector<Integer>& coeffs, unsigned long k) {
    Integer acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc *= static_cast<unsigned long>(k);
        acc += coeffs[i];
    }
    return acc;
}

struct RawFraction {
    Integer num, den;
};

// Unreduced sum_{k=a}^{b-1} N(k)/D(k) by balanced splitting.
RawFraction split_rational_sum(const std::vector<Integer>& num,
                               const std::vector<Integer>& den,
                               unsigned long a, unsigned long b) {
    if (b - a == 1) return {eval_at(num, a), eval_at(den, a)};
    unsigned long mid = a + (b - a) / 2;
    RawFraction left = split_rational_sum(num, den, a, mid);
    RawFraction right = split_rational_sum(num, den, mid, b);
    return {left.num * right.den + right.num * left.den, left.den * right.den};
}

}  // namespace

Rational partial_sum(const SeriesTerm& r, unsigned long terms) {
    Rational acc = 0;
    if (!r.poly_part().is_zero()) {
        for (unsigned long k = 0; k < terms; ++k)
            acc += r.poly_part().eval(Rational(static_cast<long>(k)));
    }
    if (r.pole_coeffs().empty() || terms == 0) return acc;

    // Pole part over the common denominator D(k) = prod (k+j)^{max order},
    // with the numerator cleared to integer coefficients.
    std::map<long, unsigned> max_order;
    for (const auto& [key, c] : r.pole_coeffs())
        max_order[key.first] = std::max(max_order[key.first], key.second);

    UniPoly denominator = UniPoly::constant(1);
    for (const auto& [shift, mult] : max_order)
        denominator *= UniPoly({Rational(shift), Rational(1)}).pow(mult);

    UniPoly numerator;
    for (const auto& [key, c] : r.pole_coeffs()) {
        UniPoly cofactor = UniPoly::constant(c);
        for (const auto& [shift, mult] : max_order) {
            unsigned power = (shift == key.first) ? mult - key.second : mult;
            if (power > 0)
                cofactor *= UniPoly({Rational(shift), Rational(1)}).pow(power);
        }
        numerator += cofactor;
    }

    Integer common_den = 1;
    for (const auto& c : numerator.coeffs())
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> num_int(numerator.coeffs().size());
    for (std::size_t i = 0; i < num_int.size(); ++i) {
        Rational scaled = numerator.coeff(i) * Rational(common_den);
        num_int[i] = scaled.get_num();
    }
    std::vector<Integer> den_int(denominator.coeffs().size());
    for (std::size_t i = 0; i < den_int.size(); ++i)
        den_int[i] = denominator.coeff(i).get_num();

    RawFraction raw = split_rational_sum(num_int, den_int, 0, terms);
    acc += make_rational(std::move(raw.num), raw.den * common_den);
    return acc;
}

Rational tail_bound(const SeriesTerm& r, unsigned long from_index) {
    if (!r.poly_part().is_zero())
        throw NotSummable("nonzero polynomial part");
    PoleClass klass = pole_class(r);
    if (klass.coord(1) != 0)
        throw NotSummable("nonzero order-1 class");
    if (from_index < 1) throw std::domain_error("tail start must be >= 1");

    Rational bound = 0;
    // Order-1 coefficients cancel in total; pairing each against the lowest
    // active shift j0 telescopes the tail to at most |c|(j-j0)/K per term.
    long pivot = 0;
    for (const auto& [key, c] : r.pole_coeffs())
        if (key.second == 1) {
            pivot = key.first;
            break;
        }
    for (const auto& [key, c] : r.pole_coeffs()) {
        const auto& [shift, order] = key;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (order == 1) {
            bound += abs_c * Rational(shift - pivot) / Rational(static_cast<long>(from_index));
        } else {
            // Integral test: sum_{k>=K} (k+j)^-r <= (K+j-1)^{1-r} / (r-1).
            Rational base(static_cast<long>(from_index) + shift - 1);
            bound += abs_c /
                     (Rational(static_cast<long>(order) - 1) *
                      rational_pow(base, static_cast<long>(order) - 1));
        }
    }
    return bound;
}

}  // namespace zetaform
