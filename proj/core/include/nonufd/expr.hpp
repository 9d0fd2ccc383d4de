#pragma once

// Surface syntax for polynomials over a registered semiring.
//
//   expr := term ("+" term)*
//   term := pow (("*" pow) | juxtaposed)*   juxtaposition only after a
//                                           parenthesized operand
//   pow  := atom ("^" natural)?
//   atom := "T" | literal | "(" expr ")"
//
// Literals are read by the semiring: decimal naturals everywhere, "p/q" for
// nonneg-rational, "t(r)" and "tinf" for tropical, "m(q)" for monoid-nat,
// and "x", "y" for s0.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nonufd/errors.hpp"
#include "nonufd/poly.hpp"

namespace nonufd {

struct ExprAst {
  enum class Kind { Literal, Var, Add, Mul, Pow, Paren };

  Kind kind = Kind::Literal;
  std::string text;               // Literal
  std::uint32_t exponent = 0;     // Pow
  std::vector<ExprAst> children;  // Add, Mul: operands; Pow, Paren: one child
  std::size_t offset = 0;         // byte offset of the node's first token
};

inline constexpr std::uint32_t kMaxExponent = 4096;
inline constexpr std::size_t kMaxDegree = 1 << 16;

ExprAst parse_ast(std::string_view src);
/// `src` is only used to turn offsets into line/column for literal errors.
Polynomial evaluate(const ExprAst& ast, const SemiringRef& r, std::string_view src);
Polynomial parse(std::string_view src, const SemiringRef& r);

/// Descending powers, "T^k", coefficients by the semiring's literal printer;
/// parse(render(p)) is Equal to p.
std::string render(const Polynomial& p);

}  // namespace nonufd
