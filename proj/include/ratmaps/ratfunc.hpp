#pragma once

#include <span>
#include <vector>

#include "ratmaps/poly.hpp"

namespace ratmaps {

/// Reduced fraction num/den in K(x): gcd(num, den) = 1 and den has grlex
/// leading coefficient 1. Zero is stored as 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  /// Polynomial as a fraction over 1.
  RatFunc(Poly num);  // NOLINT(implicit)
  /// Throws DivisionByZero if den = 0.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const FieldElem& c, std::size_t nvars) { return RatFunc(Poly::constant(c, nvars)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const Field& field() const noexcept { return num_.field(); }
  std::size_t nvars() const noexcept { return num_.nvars(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  FieldElem constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(unsigned e) const;
  RatFunc inverse() const;
  RatFunc derivative(std::size_t var) const;
  RatFunc remap(std::size_t new_nvars, std::span<const std::size_t> var_map) const;
  RatFunc embed(std::size_t new_nvars) const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// An m-tuple of rational functions over one ring.
class RatMap {
 public:
  RatMap() = default;
  /// Throws RingMismatch when components disagree on field or variable count.
  explicit RatMap(std::vector<RatFunc> comps);
  static RatMap from_polys(std::span<const Poly> polys);

  std::size_t size() const noexcept { return comps_.size(); }
  const RatFunc& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<RatFunc>& comps() const noexcept { return comps_; }
  auto begin() const { return comps_.begin(); }
  auto end() const { return comps_.end(); }

  const Field& field() const;
  std::size_t nvars() const;
  bool is_zero() const;
  bool is_polynomial() const;
  /// Components as polynomials. Precondition: is_polynomial().
  std::vector<Poly> polys() const;

  RatMap scaled(const RatFunc& g) const;

  friend bool operator==(const RatMap& a, const RatMap& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<RatFunc> comps_;
};

using RatMatrix = std::vector<std::vector<RatFunc>>;
using RatVector = std::vector<RatFunc>;

/// Entry (i, j) = dH_i/dx_j.
RatMatrix jacobian(const RatMap& H);
RatMatrix jacobian(std::span<const Poly> H);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector mat_vec(const RatMatrix& a, std::span<const RatFunc> v);
RatFunc trace(const RatMatrix& a);
bool is_zero_matrix(const RatMatrix& a);

/// Rank over the fraction field. Rows are cleared of denominators, then
/// eliminated by cross-multiplication with every new row reduced to its
/// primitive part.
std::size_t matrix_rank(const RatMatrix& a);

/// Composition of a rational function with one rational image per variable.
/// Throws IndeterminateForm when the composed denominator vanishes.
RatFunc compose(const RatFunc& a, std::span<const RatFunc> images);
/// Composition of a polynomial with rational images.
RatFunc compose(const Poly& a, std::span<const RatFunc> images);

struct PrimitivePart {
  RatFunc g;
  std::vector<Poly> core;
};

/// H = g * core with core a primitive polynomial tuple whose first nonzero
/// component is monic. Throws ZeroMap for H = 0.
PrimitivePart primitive_part(const RatMap& H);

/// Monic lcm of the component denominators.
Poly common_denominator(std::span<const RatFunc> comps);

}  // namespace ratmaps
