#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ratmaps {

/// The exact coefficient field K: either Q or F_p for a word-sized prime p.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws NotPrime unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return p_ == 0 ? Kind::Rationals : Kind::PrimeField; }
  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues live in [0, p).
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field& field, long value);
  FieldElem(const Field& field, const mpq_class& value);

  static FieldElem zero(const Field& field) { return FieldElem(field, 0L); }
  static FieldElem one(const Field& field) { return FieldElem(field, 1L); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only over Q.
  const mpq_class& rational() const noexcept { return q_; }
  /// Valid only over F_p.
  std::uint64_t residue() const noexcept { return r_; }

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Signed-looking scalar text: "-3/2" over Q, the residue over F_p.
  std::string to_string() const;
  /// True when to_string() starts with '-'; always false over F_p.
  bool is_negative() const noexcept;

 private:
  void check_same(const FieldElem& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact field arithmetic with explicit ring checks (DivisionByZero, FieldMismatch).
FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op);

/// A root of a univariate polynomial together with its exact multiplicity.
struct Root {
  FieldElem value;
  unsigned multiplicity = 0;
};

/// Roots in K of the dense univariate polynomial sum coeffs[k] y^k.
/// Over Q: rational-root candidates from the content-normalized integer form,
/// then deflation. Over F_p: exhaustive evaluation (small p) or distinct-degree
/// splitting (large p), then deflation. Roots are returned in ascending order.
/// Throws ZeroPolynomial when every coefficient vanishes.
std::vector<Root> roots_in_K(const Field& field, std::vector<FieldElem> coeffs);

/// Evaluates sum coeffs[k] y^k at y = at (Horner).
FieldElem evaluate_dense(const std::vector<FieldElem>& coeffs, const FieldElem& at);

}  // namespace ratmaps
