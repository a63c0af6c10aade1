#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratmaps/coefficients.hpp"

namespace ratmaps {

/// An integer extended by -inf and +inf. Used for deg/lowdeg and valuations.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  /// Precondition: is_finite().
  constexpr long value() const { return value_; }

  /// Sum; mixing -inf and +inf is rejected with InvalidArgument.
  friend ExtInt operator+(ExtInt a, ExtInt b);
  friend ExtInt operator-(ExtInt a, ExtInt b);
  friend ExtInt operator*(long s, ExtInt a);

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

  std::string to_string() const;

 private:
  enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  long value_ = 0;
};

struct DegreePair {
  ExtInt deg = ExtInt::neg_inf();
  ExtInt lowdeg = ExtInt::pos_inf();
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order, greatest first; x1 > x2 > ... within a degree.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in K[x_1, ..., x_n]. Terms are kept in grlex-descending
/// order with no stored zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElem, GrlexGreater>;

  Poly() = default;
  Poly(const Field& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Poly zero(const Field& field, std::size_t nvars) { return Poly(field, nvars); }
  static Poly constant(const FieldElem& c, std::size_t nvars);
  static Poly constant(const Field& field, std::size_t nvars, long c) {
    return constant(FieldElem(field, c), nvars);
  }
  /// The variable x_{index+1} (0-based index).
  static Poly variable(const Field& field, std::size_t nvars, std::size_t index);
  static Poly monomial(const FieldElem& c, Monomial exps);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Constant value; zero for the zero polynomial. Precondition: is_constant().
  FieldElem constant_value() const;
  bool is_homogeneous() const noexcept;

  /// Grlex leading monomial/coefficient. Throws ZeroPolynomial on 0.
  const Monomial& leading_monomial() const;
  const FieldElem& leading_coeff() const;
  FieldElem coeff(const Monomial& m) const;

  /// Total degree (-inf for 0) and lowest total degree (+inf for 0).
  ExtInt degree() const;
  ExtInt lowdegree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  long degree_in(std::size_t var) const;
  bool uses(std::size_t var) const;
  /// Indices of variables that occur.
  std::vector<std::size_t> used_variables() const;

  /// Adds c * m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const FieldElem& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElem& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElem& c) { return a *= c; }
  friend Poly operator*(const FieldElem& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  /// Scalar multiple with grlex leading coefficient 1 (0 stays 0).
  Poly monic() const;
  Poly derivative(std::size_t var) const;

  /// Coefficients w.r.t. one variable: result[k] is the coefficient of var^k,
  /// a polynomial in the same ring not involving var.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  /// Leading coefficient w.r.t. var (same ring, var-free).
  Poly leading_coeff_in(std::size_t var) const;

  /// Dense coefficient vector of a polynomial that only involves var.
  std::vector<FieldElem> dense_in(std::size_t var) const;
  static Poly from_dense(const Field& field, std::size_t nvars, std::size_t var,
                         std::span<const FieldElem> coeffs);

  /// Moves variable i to position var_map[i] in a ring with new_nvars variables.
  Poly remap(std::size_t new_nvars, std::span<const std::size_t> var_map) const;
  /// Same polynomial in a ring with more (trailing) variables.
  Poly embed(std::size_t new_nvars) const;

  /// Evaluates at a point of K^n.
  FieldElem evaluate(std::span<const FieldElem> point) const;

 private:
  void check_ring(const Poly& o) const;

  Field field_;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul, DivExact };

/// Ring-checked arithmetic; DivExact throws NotDivisible on a nonzero remainder.
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Exact quotient a / b. Throws NotDivisible if b does not divide a.
Poly divexact(const Poly& a, const Poly& b);
/// The quotient if b divides a.
std::optional<Poly> try_divexact(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

DegreePair degrees(const Poly& a);
/// deg = max over components, lowdeg = min over nonzero components.
DegreePair degrees(std::span<const Poly> tuple);

/// Homogeneous components in ascending degree order.
std::vector<std::pair<unsigned, Poly>> homogeneous_parts(const Poly& a);
Poly leading_part(const Poly& a);
Poly trailing_part(const Poly& a);

/// Monic gcd; gcd(0, 0) = 0. Primitive PRS with recursive content extraction.
Poly gcd(const Poly& a, const Poly& b);
/// Monic gcd of a tuple; throws AllZero when every component is 0.
Poly gcd_many(std::span<const Poly> tuple);
/// Monic lcm.
Poly lcm(const Poly& a, const Poly& b);
/// Content with respect to var: monic gcd of the var-coefficients.
Poly content_in(const Poly& a, std::size_t var);
/// True iff the gcd of the components is a unit. All-zero tuples are not primitive.
bool is_primitive(std::span<const Poly> tuple);

/// Roots in K of a polynomial that only involves var.
std::vector<Root> roots_in_K(const Poly& f, std::size_t var = 0);

/// Composition a(images[0], ..., images[n-1]); images share a common target ring.
Poly compose(const Poly& a, std::span<const Poly> images);

}  // namespace ratmaps
