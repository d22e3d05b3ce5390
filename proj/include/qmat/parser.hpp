#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qmat/ring.hpp"

namespace qmat {

/// Abstract syntax for the expression language: scalar literals in Q(q)
/// syntax, generators x[i,j], det, sigma(i), minor({..},{..}), comm(a,b),
/// and the operators + - * / ^ with standard precedence.
struct Expr {
    enum class Kind {
        Scalar,    // integer literal or q
        Generator, // x[i,j]
        Det,
        Sigma,     // sigma(i)
        Minor,     // minor(I, J)
        Add,
        Sub,
        Mul,
        Div,
        Pow,       // child ^ exponent
        Neg,
        Comm       // comm(a, b)
    };

    Expr() = default;
    explicit Expr(Kind k) : kind(k) {}

    Kind kind = Kind::Scalar;
    QScalar scalar;               // Scalar
    int i = 0, j = 0;             // Generator / Sigma index
    std::vector<int> rows, cols;  // Minor
    long exponent = 0;            // Pow
    std::vector<Expr> children;
};

/// Parses an expression. Whitespace-insensitive; indices are validated
/// against n; `^` binds tighter than unary minus; `sl2_names` additionally
/// accepts the letters a,b,c,d for the generators of O_q(M_2) (n must be 2).
/// Throws parse_error with line/column on bad input.
Expr parse(const std::string& src, int n, bool sl2_names = false);

/// Evaluates through the engine; the result is in PBW normal form. Division
/// requires a scalar (degree-0) divisor; negative powers require a scalar
/// base.
NormalElement eval_expr(const Ring& ring, const Expr& e);

} // namespace qmat
