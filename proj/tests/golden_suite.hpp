#pragma once

#include <vector>

#include "zetaform/forms.hpp"

namespace zetaform::testing {

/// Fixed battery of integrable forms with n <= 5 used by the numeric
/// verification tests: Eulerian forms, the Beukers integrand, well-poised
/// and weight-dropping hypergeometric members, and plain monomials.
inline std::vector<ZetaIntegrand> golden_forms() {
    std::vector<ZetaIntegrand> forms;
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k) forms.push_back(eulerian_form(n, k));  // 10 forms

    forms.push_back(ball_rivoal_form({2, 2}, {2, 2}, 2));        // Beukers
    forms.push_back(ball_rivoal_form({1, 1}, {1, 1}, 1));
    forms.push_back(ball_rivoal_form({1, 1, 1}, {1, 1, 1}, 2));
    forms.push_back(ball_rivoal_form({1, 1, 1}, {2, 2, 2}, 3));  // well-poised, N = 3
    forms.push_back(ball_rivoal_form({2, 2, 2, 2, 2},
                                     {1, 1, 1, 1, 1}, 4));       // well-poised, N = 4
    forms.push_back(ball_rivoal_form({1, 2}, {3, 1}, 2));
    forms.push_back(ball_rivoal_form({1, 1, 1, 1}, {2, 1, 2, 1}, 3));
    forms.push_back(ball_rivoal_form({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, 3));

    forms.push_back(ZetaIntegrand(2, MultiLaurent::variable(2, 1), 1));
    MultiLaurent x1 = MultiLaurent::variable(2, 1);
    MultiLaurent x2 = MultiLaurent::variable(2, 2);
    forms.push_back(ZetaIntegrand(
        2, x1 * x2 * (MultiLaurent::constant(2, 1) - x2), 2));
    forms.push_back(ZetaIntegrand(
        3, MultiLaurent::monomial(3, {2, 1, 0}, make_rational(3, 7)), 2));
    forms.push_back(ZetaIntegrand(
        4, MultiLaurent::monomial(4, {1, 1, 2, 0}, 1) +
               MultiLaurent::monomial(4, {0, 0, 1, 1}, make_rational(-2, 3)),
        2));
    return forms;
}

}  // namespace zetaform::testing
