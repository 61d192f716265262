#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "cyclohecke/graded.hpp"
#include "cyclohecke/hecke.hpp"

namespace cyclohecke {

/// Syntax error with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

/// Index out of range and friends, reported at evaluation time.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expression AST over rational literals and the generators x<i>, s<i>.
///
/// Grammar (whitespace insignificant, juxtaposition means product):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'x' uint | 's' uint | '(' expr ')'
struct Expression {
    enum class Kind { Rational, GenX, GenS, Sum, Diff, Prod, Pow, Neg };
    Kind kind;
    Rat value;       // Rational
    int index = 0;   // GenX / GenS
    int power = 0;   // Pow
    std::shared_ptr<const Expression> lhs, rhs;
    size_t offset = 0;  // byte offset in the source, for diagnostics
};

using ExprPtr = std::shared_ptr<const Expression>;

ExprPtr parse(const std::string& source);

/// PBW normal form of the expression in H_d^f.
HeckeElement evaluate(const ExprPtr& e, const SpecPtr& spec);

/// The same expression read in the graded algebra R_l[x] x| RS_d.
GradedElement evaluate_graded(const ExprPtr& e, int d, int l);

}  // namespace cyclohecke
