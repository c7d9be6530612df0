#pragma once

#include <random>
#include <vector>

#include "zetaform/forms.hpp"
#include "zetaform/multilaurent.hpp"
#include "zetaform/rational.hpp"
#include "zetaform/series.hpp"

namespace zetaform::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_abs_num = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational q = random_rational(rng);
        if (q != 0) return q;
    }
}

inline MultiLaurent random_polynomial(Rng& rng, int nvars, int max_degree,
                                      int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_degree);
    MultiLaurent p(nvars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        MultiLaurent::ExponentVec e(static_cast<std::size_t>(nvars));
        for (auto& d : e) d = exponent(rng);
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline MultiLaurent random_laurent(Rng& rng, int nvars, int max_abs_degree,
                                   int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exponent(-max_abs_degree, max_abs_degree);
    MultiLaurent p(nvars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        MultiLaurent::ExponentVec e(static_cast<std::size_t>(nvars));
        for (auto& d : e) d = exponent(rng);
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline SeriesTerm random_series_term(Rng& rng, long max_shift = 6,
                                     unsigned max_order = 4, int max_terms = 5) {
    std::uniform_int_distribution<long> shift(1, max_shift);
    std::uniform_int_distribution<unsigned> order(1, max_order);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    SeriesTerm r;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t)
        r.add_pole(shift(rng), order(rng), random_rational(rng));
    return r;
}

/// Random form guaranteed integrable with pole order >= 1.
inline ZetaIntegrand random_integrable_form(Rng& rng, int nvars, int max_degree = 4,
                                            int max_terms = 5) {
    for (;;) {
        MultiLaurent p = random_polynomial(rng, nvars, max_degree, max_terms);
        if (p.is_zero()) continue;
        // Largest admissible pole order: shifted min degree + nvars - 1.
        long low = lowest_shifted_degree(p, max_degree * nvars + 1);
        long top = low + nvars - 1;
        if (top < 1) continue;
        std::uniform_int_distribution<long> pole(1, top);
        return ZetaIntegrand(nvars, std::move(p), static_cast<unsigned>(pole(rng)));
    }
}

inline PartialForm random_partial_form(Rng& rng, int max_nvars = 4, int max_degree = 4,
                                       unsigned max_pole = 4) {
    std::uniform_int_distribution<int> nv(2, max_nvars);
    int nvars = nv(rng);
    std::uniform_int_distribution<int> omit(1, nvars);
    std::uniform_int_distribution<unsigned> pole(0, max_pole);
    return PartialForm(nvars, omit(rng), random_polynomial(rng, nvars, max_degree, 4),
                       pole(rng));
}

}  // namespace zetaform::testing
