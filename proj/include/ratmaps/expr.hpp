#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ratmaps/ratfunc.hpp"

namespace ratmaps {

/// Syntax tree of an input expression.
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow, Tuple };

  Kind kind = Kind::Number;
  std::string text;       // digits for Number, name for Variable
  unsigned exponent = 0;  // Pow only
  std::size_t offset = 0; // byte offset in the source
  std::vector<Expr> args;
};

/// expr   := term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := '-' factor | base ('^' uint)?
/// base   := number | ident | '(' expr (',' expr)* ')'
/// Throws SyntaxError carrying the byte offset.
Expr parse(std::string_view src);

/// Identifiers occurring in e.
std::set<std::string> variables_of(const Expr& e);
/// Largest k among identifiers "x<k>"; 0 if none.
std::size_t max_x_index(const Expr& e);

/// Variable names of a ring; position i names variable i.
using VarNames = std::vector<std::string>;
/// x1..xn.
VarNames x_names(std::size_t n);

/// Elaborates a non-tuple expression. Throws UnknownVariable, SyntaxError
/// (tuple where a scalar is expected) or DivisionByZero.
RatFunc elaborate(const Expr& e, const Field& field, const VarNames& names);
/// Elaborates a tuple; a non-tuple expression becomes a 1-tuple.
std::vector<RatFunc> elaborate_tuple(const Expr& e, const Field& field, const VarNames& names);
/// Elaborates a polynomial; throws InvalidArgument on a proper fraction.
Poly elaborate_poly(const Expr& e, const Field& field, const VarNames& names);

std::string print(const Poly& p, const VarNames& names);
std::string print(const Poly& p);
/// "(num)/(den)" for a proper fraction, the numerator otherwise.
std::string print(const RatFunc& r, const VarNames& names);
std::string print(const RatFunc& r);
std::string print(std::span<const Poly> tuple, const VarNames& names);
std::string print(std::span<const RatFunc> tuple, const VarNames& names);
std::string print(const RatMap& H);

/// Names used when printing univariate and bivariate auxiliary polynomials.
const VarNames& uni_names();
const VarNames& bi_names();

}  // namespace ratmaps
