#pragma once

#include <optional>
#include <string>

#include "zetaform/forms.hpp"

namespace zetaform {

/// Parses "P(x1,...,xn)/(1 - x1*...*xn)^N" (or a bare polynomial for
/// N = 0). The number of variables is the largest index mentioned unless
/// forced; the denominator must carry the full product of x1..xn exactly
/// once each. Throws ParseError with position info, or DenominatorShape.
ZetaIntegrand parse_form(const std::string& text,
                         std::optional<int> force_nvars = std::nullopt);

/// Canonical rendering that parses back to the same form (lexicographic
/// term order, "p/q" coefficients). Inversion images print negative
/// powers, which are display-only.
std::string print_form(const ZetaIntegrand& form);

/// A parsed expression together with its source text.
struct FormExpression {
    std::string source;
    ZetaIntegrand form;
};

FormExpression parse_expression(const std::string& text,
                                std::optional<int> force_nvars = std::nullopt);

}  // namespace zetaform
