#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "ratmaps/report.hpp"
#include "ratmaps/ratfunc.hpp"

namespace ratmaps {

/// A point of the projective line K u {inf}.
class ProjPoint {
 public:
  static ProjPoint finite(FieldElem theta) { return ProjPoint(std::move(theta)); }
  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const noexcept { return !theta_.has_value(); }
  /// Precondition: !is_infinity().
  const FieldElem& value() const { return *theta_; }
  std::string to_string() const { return is_infinity() ? "inf" : theta_->to_string(); }

 private:
  ProjPoint() = default;
  explicit ProjPoint(FieldElem t) : theta_(std::move(t)) {}
  std::optional<FieldElem> theta_;
};

/// Order of vanishing of univariate g at theta; -deg g at infinity; +inf for g = 0.
ExtInt valuation(const Poly& g, const ProjPoint& theta);
/// v(f1) - v(f2) for f2 != 0.
ExtInt valuation(const Poly& f1, const Poly& f2, const ProjPoint& theta);

/// f1/f2 in K(y1) with gcd(f1, f2) = 1 and f2 monic.
struct ReducedPair {
  Poly f1;
  Poly f2;

  /// Throws ZeroDenominator for f2 = 0 and RingMismatch outside K[y1].
  ReducedPair(Poly a, Poly b);
  bool is_constant() const { return f1.is_constant() && f2.is_constant(); }
};

/// Product law and ultrametric inequality for f1/f2 and g1/g2 at theta.
Report valuation_laws_check(const Poly& f1, const Poly& f2, const Poly& g1, const Poly& g2,
                            const ProjPoint& theta);

struct IntegralResult {
  bool integral = false;
  /// Monic relation in K[Y, g] (variables 0 and 1) vanishing at Y = p/q.
  std::optional<Poly> relation;
};

/// p/q integral over K[g] for g = f1(p/q)/f2(p/q): decided by deg f1 > deg f2.
IntegralResult integral_over_Kg(const Poly& p, const Poly& q, const ReducedPair& g);

struct PqTransMode {
  enum class Kind { Shift, Invert };
  Kind kind = Kind::Shift;
  FieldElem eps;
  FieldElem theta;
};

struct PqTransResult {
  Poly pstar;
  Poly qstar;
  Poly f1star;
  Poly f2star;
};

/// Shift: p* = p + eps q, q* = q, f* = f(y1 - eps).
/// Invert: p* = q + eps (p - theta q), q* = p - theta q,
///         f* = (y1 - eps)^s f(1/(y1 - eps) + theta), s = max deg f.
/// The identity f1*(p*/q*)/f2*(p*/q*) = f1(p/q)/f2(p/q) is checked.
PqTransResult pqtrans(const Poly& p, const Poly& q, const Poly& f1, const Poly& f2, const PqTransMode& mode);

struct Regenerated {
  Poly pstar;
  Poly qstar;
  ReducedPair g;
};

/// A generator of K(p/q) integral over K[g], if one exists.
std::optional<Regenerated> regenerate_integral(const Poly& p, const Poly& q, const ReducedPair& g);

/// First index i with p/q integral over K[G_i].
std::optional<std::size_t> integral_over_KG(const Poly& p, const Poly& q, std::span<const ReducedPair> G);

}  // namespace ratmaps
