#include "cyclohecke/expr.hpp"

#include <cctype>
#include <vector>

namespace cyclohecke {

namespace {

enum class Tok { Number, GenX, GenS, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // digits for Number / generator index
    size_t offset;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) digits += src[i++];
            out.push_back({Tok::Number, digits, start});
            continue;
        }
        if (c == 'x' || c == 's') {
            ++i;
            std::string digits;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) digits += src[i++];
            if (digits.empty()) throw ParseError("generator needs an index", start);
            out.push_back({c == 'x' ? Tok::GenX : Tok::GenS, digits, start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", start}); break;
            case '-': out.push_back({Tok::Minus, "-", start}); break;
            case '*': out.push_back({Tok::Star, "*", start}); break;
            case '^': out.push_back({Tok::Caret, "^", start}); break;
            case '/': out.push_back({Tok::Slash, "/", start}); break;
            case '(': out.push_back({Tok::LParen, "(", start}); break;
            case ')': out.push_back({Tok::RParen, ")", start}); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

int checked_uint(const std::string& digits, size_t offset) {
    if (digits.size() > 6) throw ParseError("integer literal too large", offset);
    return std::stoi(digits);
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        if (peek().kind != Tok::End) throw ParseError("trailing input", peek().offset);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    static ExprPtr make(Expression e) { return std::make_shared<const Expression>(std::move(e)); }

    ExprPtr parse_expr() {
        ExprPtr lhs;
        if (peek().kind == Tok::Minus) {
            size_t off = next().offset;
            Expression neg;
            neg.kind = Expression::Kind::Neg;
            neg.lhs = parse_term();
            neg.offset = off;
            lhs = make(std::move(neg));
        } else {
            lhs = parse_term();
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = next();
            Expression e;
            e.kind = op.kind == Tok::Plus ? Expression::Kind::Sum : Expression::Kind::Diff;
            e.lhs = lhs;
            e.rhs = parse_term();
            e.offset = op.offset;
            lhs = make(std::move(e));
        }
        return lhs;
    }

    bool starts_factor() const {
        switch (peek().kind) {
            case Tok::Number:
            case Tok::GenX:
            case Tok::GenS:
            case Tok::LParen: return true;
            default: return false;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            if (peek().kind == Tok::Star) {
                Token op = next();
                Expression e;
                e.kind = Expression::Kind::Prod;
                e.lhs = lhs;
                e.rhs = parse_factor();
                e.offset = op.offset;
                lhs = make(std::move(e));
            } else if (starts_factor()) {
                Expression e;
                e.kind = Expression::Kind::Prod;
                e.lhs = lhs;
                e.offset = peek().offset;
                e.rhs = parse_factor();
                lhs = make(std::move(e));
            } else {
                break;
            }
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (peek().kind == Tok::Caret) {
            Token op = next();
            if (peek().kind != Tok::Number) throw ParseError("exponent must be an unsigned integer", peek().offset);
            Token exp = next();
            Expression e;
            e.kind = Expression::Kind::Pow;
            e.lhs = base;
            e.power = checked_uint(exp.text, exp.offset);
            e.offset = op.offset;
            return make(std::move(e));
        }
        return base;
    }

    ExprPtr parse_atom() {
        Token t = next();
        switch (t.kind) {
            case Tok::Number: {
                Expression e;
                e.kind = Expression::Kind::Rational;
                std::string text = t.text;
                if (peek().kind == Tok::Slash) {
                    next();
                    if (peek().kind != Tok::Number)
                        throw ParseError("denominator must be an unsigned integer", peek().offset);
                    text += "/" + next().text;
                }
                e.value = parse_rat(text);
                e.offset = t.offset;
                return make(std::move(e));
            }
            case Tok::GenX:
            case Tok::GenS: {
                Expression e;
                e.kind = t.kind == Tok::GenX ? Expression::Kind::GenX : Expression::Kind::GenS;
                e.index = checked_uint(t.text, t.offset);
                e.offset = t.offset;
                return make(std::move(e));
            }
            case Tok::LParen: {
                ExprPtr inner = parse_expr();
                if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().offset);
                next();
                return inner;
            }
            default: throw ParseError("expected a rational, generator, or '('", t.offset);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& source) { return Parser(source).parse_all(); }

HeckeElement evaluate(const ExprPtr& e, const SpecPtr& spec) {
    switch (e->kind) {
        case Expression::Kind::Rational: return HeckeElement::scalar(e->value, spec);
        case Expression::Kind::GenX:
            if (e->index < 1 || e->index > spec->d())
                throw EvalError("generator index out of range: x" + std::to_string(e->index));
            return HeckeElement::generator_x(e->index, spec);
        case Expression::Kind::GenS:
            if (e->index < 1 || e->index >= spec->d())
                throw EvalError("generator index out of range: s" + std::to_string(e->index));
            return HeckeElement::generator_s(e->index, spec);
        case Expression::Kind::Sum: return evaluate(e->lhs, spec) + evaluate(e->rhs, spec);
        case Expression::Kind::Diff: return evaluate(e->lhs, spec) - evaluate(e->rhs, spec);
        case Expression::Kind::Prod: return evaluate(e->lhs, spec) * evaluate(e->rhs, spec);
        case Expression::Kind::Neg: return evaluate(e->lhs, spec) * Rat(-1);
        case Expression::Kind::Pow: {
            HeckeElement base = evaluate(e->lhs, spec);
            HeckeElement acc = HeckeElement::one(spec);
            for (int k = 0; k < e->power; ++k) acc = acc * base;
            return acc;
        }
    }
    throw EvalError("corrupt expression node");
}

GradedElement evaluate_graded(const ExprPtr& e, int d, int l) {
    switch (e->kind) {
        case Expression::Kind::Rational: return GradedElement::one(d, l) * e->value;
        case Expression::Kind::GenX:
            if (e->index < 1 || e->index > d)
                throw EvalError("generator index out of range: x" + std::to_string(e->index));
            return GradedElement::variable(e->index, d, l);
        case Expression::Kind::GenS:
            if (e->index < 1 || e->index >= d)
                throw EvalError("generator index out of range: s" + std::to_string(e->index));
            return GradedElement::from_permutation(Permutation::transposition(e->index, d), l);
        case Expression::Kind::Sum: return evaluate_graded(e->lhs, d, l) + evaluate_graded(e->rhs, d, l);
        case Expression::Kind::Diff: return evaluate_graded(e->lhs, d, l) - evaluate_graded(e->rhs, d, l);
        case Expression::Kind::Prod: return evaluate_graded(e->lhs, d, l) * evaluate_graded(e->rhs, d, l);
        case Expression::Kind::Neg: return evaluate_graded(e->lhs, d, l) * Rat(-1);
        case Expression::Kind::Pow: {
            GradedElement base = evaluate_graded(e->lhs, d, l);
            GradedElement acc = GradedElement::one(d, l);
            for (int k = 0; k < e->power; ++k) acc = acc * base;
            return acc;
        }
    }
    throw EvalError("corrupt expression node");
}

}  // namespace cyclohecke
