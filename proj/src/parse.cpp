#include "zetaform/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "zetaform/errors.hpp"

namespace zetaform {

namespace {

enum class Tok { integer, variable, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    unsigned long value = 0;  // integer value or variable index
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { tokenize(); }
    const std::vector<Token>& tokens() const { return tokens_; }

private:
    [[noreturn]] void fail(const std::string& what, int line, int col) const {
        throw ParseError(what, line, col);
    }

    void tokenize() {
        int line = 1, col = 1;
        std::size_t i = 0;
        auto advance = [&](std::size_t by) {
            for (std::size_t k = 0; k < by; ++k) {
                if (text_[i + k] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            i += by;
        };
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            int tl = line, tc = col;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                    ++j;
                tokens_.push_back({Tok::integer,
                                   std::stoul(text_.substr(i, j - i)), tl, tc});
                advance(j - i);
                continue;
            }
            if (c == 'x') {
                std::size_t j = i + 1;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                    ++j;
                if (j == i + 1) fail("variable needs an index, like x1", tl, tc);
                unsigned long idx = std::stoul(text_.substr(i + 1, j - i - 1));
                if (idx < 1) fail("variable indices start at x1", tl, tc);
                tokens_.push_back({Tok::variable, idx, tl, tc});
                advance(j - i);
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::plus; break;
                case '-': kind = Tok::minus; break;
                case '*': kind = Tok::star; break;
                case '/': kind = Tok::slash; break;
                case '^': kind = Tok::caret; break;
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                default:
                    fail(std::string("unexpected character '") + c + "'", tl, tc);
            }
            tokens_.push_back({kind, 0, tl, tc});
            advance(1);
        }
        tokens_.push_back({Tok::end, 0, line, col});
    }

    const std::string& text_;
    std::vector<Token> tokens_;
};

class Parser {
public:
    Parser(const std::vector<Token>& tokens, int nvars)
        : tokens_(tokens), nvars_(nvars) {}

    ZetaIntegrand parse() {
        MultiLaurent numerator = parse_poly();
        unsigned pole_order = 0;
        if (peek().kind == Tok::slash) {
            next();
            pole_order = parse_denominator();
        }
        expect(Tok::end, "end of expression");
        return {nvars_, std::move(numerator), pole_order};
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what, t.line, t.column);
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        next();
    }

    MultiLaurent parse_poly() {
        bool negate = false;
        if (peek().kind == Tok::minus) {
            next();
            negate = true;
        }
        MultiLaurent acc = parse_term();
        if (negate) acc = -acc;
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool minus = next().kind == Tok::minus;
            MultiLaurent term = parse_term();
            acc += minus ? -term : term;
        }
        return acc;
    }

    MultiLaurent parse_term() {
        MultiLaurent acc = parse_factor();
        while (peek().kind == Tok::star) {
            next();
            acc *= parse_factor();
        }
        return acc;
    }

    MultiLaurent parse_factor() {
        MultiLaurent base = parse_primary();
        while (peek().kind == Tok::caret) {
            next();
            if (peek().kind != Tok::integer) fail("expected an integer exponent");
            unsigned long e = next().value;
            MultiLaurent acc = MultiLaurent::constant(nvars_, 1);
            for (unsigned long i = 0; i < e; ++i) acc *= base;
            base = std::move(acc);
        }
        return base;
    }

    MultiLaurent parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            next();
            Rational value(static_cast<long>(t.value));
            // Two-token lookahead: "p/q" is a rational literal, while
            // "p/(..." starts the denominator of the whole form.
            if (peek().kind == Tok::slash && peek(1).kind == Tok::integer) {
                next();
                unsigned long den = next().value;
                if (den == 0) fail("zero denominator in rational literal");
                value /= Rational(static_cast<long>(den));
            }
            return MultiLaurent::constant(nvars_, value);
        }
        if (t.kind == Tok::variable) {
            next();
            return MultiLaurent::variable(nvars_, static_cast<int>(t.value));
        }
        if (t.kind == Tok::lparen) {
            next();
            MultiLaurent inner = parse_poly();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail("expected a number, a variable, or '('");
    }

    unsigned parse_denominator() {
        if (peek().kind != Tok::lparen)
            fail("expected '(' after '/'");
        next();
        if (peek().kind != Tok::integer) fail("expected '1' in the denominator");
        if (next().value != 1)
            throw DenominatorShape("denominator must be (1 - x1*...*xn)^N");
        expect(Tok::minus, "'-' in the denominator");
        std::set<unsigned long> seen;
        for (;;) {
            if (peek().kind != Tok::variable) fail("expected a variable in the product");
            unsigned long idx = next().value;
            if (!seen.insert(idx).second)
                throw DenominatorShape("repeated variable x" + std::to_string(idx) +
                                       " in the denominator product");
            if (peek().kind != Tok::star) break;
            next();
        }
        expect(Tok::rparen, "')'");
        for (int i = 1; i <= nvars_; ++i)
            if (!seen.count(static_cast<unsigned long>(i)))
                throw DenominatorShape("denominator product misses x" + std::to_string(i));
        if (seen.size() != static_cast<std::size_t>(nvars_))
            throw DenominatorShape("denominator product has extra variables");
        unsigned pole_order = 1;
        if (peek().kind == Tok::caret) {
            next();
            if (peek().kind != Tok::integer) fail("expected an integer exponent");
            pole_order = static_cast<unsigned>(next().value);
        }
        return pole_order;
    }

    const std::vector<Token>& tokens_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

ZetaIntegrand parse_form(const std::string& text, std::optional<int> force_nvars) {
    Lexer lexer(text);
    int max_index = 0;
    for (const Token& t : lexer.tokens())
        if (t.kind == Tok::variable)
            max_index = std::max(max_index, static_cast<int>(t.value));
    int nvars = std::max(max_index, 1);
    if (force_nvars) {
        if (*force_nvars < max_index)
            throw std::invalid_argument("forced variable count below x" +
                                        std::to_string(max_index));
        nvars = std::max(*force_nvars, 1);
    }
    return Parser(lexer.tokens(), nvars).parse();
}

std::string print_form(const ZetaIntegrand& form) {
    std::string numerator = form.numerator.to_string();
    if (form.pole_order == 0) return numerator;
    // Parenthesize multi-term numerators so the output reads unambiguously.
    if (form.numerator.terms().size() > 1) numerator = "(" + numerator + ")";
    std::ostringstream out;
    out << numerator << "/(1 - ";
    for (int i = 1; i <= form.n; ++i) {
        if (i > 1) out << "*";
        out << "x" << i;
    }
    out << ")";
    if (form.pole_order != 1) out << "^" << form.pole_order;
    return out.str();
}

FormExpression parse_expression(const std::string& text, std::optional<int> force_nvars) {
    return {text, parse_form(text, force_nvars)};
}

}  // namespace zetaform
