#include "rectline/parse.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace rectline {

namespace {

struct Token {
    enum Kind { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        int tcol = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                num += text[i++];
                ++col;
            }
            out.push_back({Token::Int, num, line, tcol});
            continue;
        }
        Token::Kind kind;
        switch (ch) {
            case 'x': case 'y': case 'z': kind = Token::Var; break;
            case '+': kind = Token::Plus; break;
            case '-': kind = Token::Minus; break;
            case '*': kind = Token::Star; break;
            case '/': kind = Token::Slash; break;
            case '^': kind = Token::Caret; break;
            case '(': kind = Token::LParen; break;
            case ')': kind = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", line, tcol);
        }
        out.push_back({kind, std::string(1, ch), line, tcol});
        ++col;
        ++i;
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | power
// power  := atom ('^' Int)?
// atom   := Int ('/' Int)? | Var | '(' expr ')'
struct PolyExpr {
    enum Kind { Literal, Variable, Neg, Add, Sub, Mul, Pow } kind;
    Rational value;                 // Literal
    char var = 0;                   // Variable
    int exponent = 0;               // Pow
    std::unique_ptr<PolyExpr> lhs;
    std::unique_ptr<PolyExpr> rhs;
};

using ExprPtr = std::unique_ptr<PolyExpr>;

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", got " + got, t.line, t.col);
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        take();
    }

    static ExprPtr node(PolyExpr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
        auto e = std::make_unique<PolyExpr>();
        e->kind = kind;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool plus = take().kind == Token::Plus;
            e = node(plus ? PolyExpr::Add : PolyExpr::Sub, std::move(e), term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek().kind == Token::Star) {
            take();
            e = node(PolyExpr::Mul, std::move(e), factor());
        }
        return e;
    }

    ExprPtr factor() {
        if (peek().kind == Token::Minus) {
            take();
            return node(PolyExpr::Neg, factor());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == Token::Caret) {
            take();
            if (peek().kind == Token::Minus)
                fail("exponent must be a non-negative integer literal");
            if (peek().kind != Token::Int)
                fail("exponent must be a non-negative integer literal");
            Token t = take();
            ExprPtr e = node(PolyExpr::Pow, std::move(base));
            e->exponent = std::stoi(t.text);
            return e;
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (t.kind == Token::Int) {
            Token num = take();
            Rational v(num.text);
            if (peek().kind == Token::Slash) {
                take();
                if (peek().kind != Token::Int) fail("expected integer denominator");
                Token den = take();
                if (Rational(den.text) == 0)
                    throw ParseError("zero denominator", den.line, den.col);
                v /= Rational(den.text);
            }
            v.canonicalize();
            ExprPtr e = node(PolyExpr::Literal);
            e->value = v;
            return e;
        }
        if (t.kind == Token::Var) {
            Token var = take();
            ExprPtr e = node(PolyExpr::Variable);
            e->var = var.text[0];
            return e;
        }
        if (t.kind == Token::LParen) {
            take();
            ExprPtr e = expr();
            expect(Token::RParen, "')'");
            return e;
        }
        fail("expected a number, variable or '('");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

TriPoly eval(const PolyExpr& e) {
    switch (e.kind) {
        case PolyExpr::Literal: return TriPoly::constant(e.value);
        case PolyExpr::Variable: return TriPoly::variable(e.var);
        case PolyExpr::Neg: return -eval(*e.lhs);
        case PolyExpr::Add: return eval(*e.lhs) + eval(*e.rhs);
        case PolyExpr::Sub: return eval(*e.lhs) - eval(*e.rhs);
        case PolyExpr::Mul: return eval(*e.lhs) * eval(*e.rhs);
        case PolyExpr::Pow: return eval(*e.lhs).pow(e.exponent);
    }
    throw std::logic_error("eval: bad node");
}

void append_factor(std::string& out, const std::string& factor) {
    if (!out.empty()) out += "*";
    out += factor;
}

std::string power_string(char var, int exp) {
    std::string s(1, var);
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
}

// Joins "<coeff>*<monomial>" terms with " + " / " - ", coefficient 1 elided.
class TermPrinter {
public:
    void add(const Rational& coeff, const std::string& monomial) {
        Rational mag = abs(coeff);
        bool negative = coeff < 0;
        std::string body;
        if (monomial.empty() || mag != 1) append_factor(body, rational_to_string(mag));
        if (!monomial.empty()) append_factor(body, monomial);
        if (out_.empty()) {
            if (negative) out_ += "-";
        } else {
            out_ += negative ? " - " : " + ";
        }
        out_ += body;
    }

    std::string str() const { return out_.empty() ? "0" : out_; }

private:
    std::string out_;
};

}  // namespace

TriPoly parse_tripoly(const std::string& text) {
    Parser parser(text);
    return eval(*parser.parse());
}

BiPoly parse_bipoly(const std::string& text) {
    TriPoly t = parse_tripoly(text);
    BiPoly r;
    for (const auto& [e, a] : t.terms()) {
        if (e.e > 0) throw ParseError("variable z is not permitted here", 1, 1);
        r.add_term(e.i, e.j, a);
    }
    return r;
}

UniPoly parse_unipoly(const std::string& text, char var) {
    TriPoly t = parse_tripoly(text);
    std::vector<Rational> coeffs;
    for (const auto& [e, a] : t.terms()) {
        int deg;
        if (var == 'x' && e.j == 0 && e.e == 0) deg = e.i;
        else if (var == 'y' && e.i == 0 && e.e == 0) deg = e.j;
        else if (var == 'z' && e.i == 0 && e.j == 0) deg = e.e;
        else throw ParseError(std::string("only variable ") + var + " is permitted here", 1, 1);
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<size_t>(deg) + 1, Rational(0));
        coeffs[static_cast<size_t>(deg)] = a;
    }
    return UniPoly(std::move(coeffs));
}

std::string to_string(const BiPoly& p) {
    TermPrinter tp;
    for (const auto& [e, a] : p.terms()) {
        std::string mono;
        if (e.i > 0) append_factor(mono, power_string('x', e.i));
        if (e.j > 0) append_factor(mono, power_string('y', e.j));
        tp.add(a, mono);
    }
    return tp.str();
}

std::string to_string(const TriPoly& p) {
    TermPrinter tp;
    for (const auto& [e, a] : p.terms()) {
        std::string mono;
        if (e.i > 0) append_factor(mono, power_string('x', e.i));
        if (e.j > 0) append_factor(mono, power_string('y', e.j));
        if (e.e > 0) append_factor(mono, power_string('z', e.e));
        tp.add(a, mono);
    }
    return tp.str();
}

std::string to_string(const UniPoly& p, char var) {
    TermPrinter tp;
    for (int d = p.degree(); d >= 0; --d) {
        Rational a = p.coeff(d);
        if (a == 0) continue;
        tp.add(a, d > 0 ? power_string(var, d) : std::string());
    }
    return tp.str();
}

}  // namespace rectline
