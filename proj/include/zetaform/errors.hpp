#pragma once

#include <stdexcept>
#include <string>

namespace zetaform {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Series sum does not converge absolutely (nonzero polynomial part or
/// nonzero simple-pole class).
class NotSummable : public Error {
public:
    explicit NotSummable(const std::string& what) : Error(what) {}
};

/// The cube integral of the form diverges.
class NotIntegrable : public Error {
public:
    explicit NotIntegrable(const std::string& what) : Error(what) {}
};

/// A Laurent numerator was passed where a polynomial is required.
class NotPolynomial : public Error {
public:
    explicit NotPolynomial(const std::string& what) : Error(what) {}
};

/// Numerator does not factor as x_i^(u-1)(1-x_i)^(v-1) * Q(rest).
class NotFactorable : public Error {
public:
    explicit NotFactorable(const std::string& what) : Error(what) {}
};

/// Parameters outside the range where the one-variable integration
/// identity produces a polynomial (requires u + v <= N).
class LemmaInapplicable : public Error {
public:
    explicit LemmaInapplicable(const std::string& what) : Error(what) {}
};

/// Exhaustive enumeration requested beyond the supported size.
class EnumerationBound : public Error {
public:
    explicit EnumerationBound(const std::string& what) : Error(what) {}
};

/// An internal identity that is guaranteed by theory failed to hold;
/// indicates an implementation bug, never a bad input.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

/// Expression text does not conform to the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Denominator is not (1 - x1*...*xn)^N with the full variable product.
class DenominatorShape : public Error {
public:
    explicit DenominatorShape(const std::string& what) : Error(what) {}
};

}  // namespace zetaform
