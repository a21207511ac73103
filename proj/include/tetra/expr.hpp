#pragma once

#include "tetra/lhat.hpp"
#include "tetra/presentation.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tetra {

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& expected, const std::string& got)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected + ", got " + got),
          position(position),
          expected(expected) {}
    size_t position;
    std::string expected;
};

struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Expression AST. Brackets take two Lie-element subtrees, T(,) takes an sl2
// subtree and an A subtree, scalars multiply anything; eval checks the types.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Rational, Symbol, GenRef, Pow, Product, Sum, Neg, Bracket, Tensor };
    Kind kind;

    Scalar rational;                  // Rational
    std::string symbol;               // Symbol
    std::string gen_domain;           // GenRef: "x", "Xh" or "Ch"
    int gen_i = 0, gen_j = 0;         // GenRef indices
    int exponent = 0;                 // Pow
    std::vector<ExprPtr> children;    // Pow(1), Product, Sum, Neg(1), Bracket(2), Tensor(2)
    std::vector<int> signs;           // Sum: +1/-1 per child
};

// Parses the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' int)*
//   base   := rational | symbol | name '[' int ',' int ']' | '[' expr ',' expr ']'
//           | 'T(' expr ',' expr ')' | '(' expr ')' | '-' factor
ExprPtr parse(const std::string& text);

enum class ImageSel { Sigma, SigmaHat };

struct EvalOptions {
    BracketModel model = BracketModel::Full;  // Full = lhat, Loop = l
    ImageSel images = ImageSel::SigmaHat;     // backing for x[i,j]
};

using Value = std::variant<Scalar, AElem, Sl2Vec, LHatElem>;

Value eval_expr(const ExprNode& node, const EvalOptions& opts);

std::string render(const Value& v);

}  // namespace tetra
