#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratmaps/homog.hpp"
#include "ratmaps/report.hpp"

namespace ratmaps {

/// T in GL2(K) acting on pairs by (p, q) -> (T11 p + T12 q, T21 p + T22 q).
struct Mobius {
  FieldElem t11, t12, t21, t22;

  static Mobius identity(const Field& field);
  FieldElem det() const;
  /// Throws InvalidArgument when det = 0.
  Mobius inverse() const;
  std::pair<Poly, Poly> apply(const Poly& p, const Poly& q) const;
  bool is_scalar() const;
  /// Equal up to a nonzero scalar factor.
  bool projectively_equal(const Mobius& o) const;
  friend Mobius operator*(const Mobius& a, const Mobius& b);
  friend bool operator==(const Mobius& a, const Mobius& b) = default;
};

/// Generator data for H = g h(p, q); h = nullopt encodes the zero tuple.
struct LurothWitness {
  RatFunc g;
  std::optional<HomogTuple> h;
  Poly p;
  Poly q;
};

/// Rank of the Jacobian of H (or of tH with respect to (x, t)) over the
/// fraction field; the transcendence degree in characteristic 0.
/// Throws CharPUnsupported over F_p.
std::size_t trdeg_rank(const RatMap& H, bool adjoin_t);

struct DependenceEstimate {
  /// Size of a greedily chosen subset with no relation up to the bound.
  std::size_t value = 0;
  /// Always false: found relations only bound trdeg from above.
  bool certified = false;
  /// Relations found; variable i stands for component i (of tH when t is adjoined).
  std::vector<Poly> relations;
  std::vector<std::string> notes;
};

/// Searches for algebraic relations among the components of H (or tH) with
/// total degree at most degree_bound, by linear algebra on monomials.
DependenceEstimate trdeg_bounded_dependence(const RatMap& H, bool adjoin_t, unsigned degree_bound);

/// gcd(f)(p), checked against gcd(f_1(p), ..., f_m(p)).
Poly gcd_subst_uni(std::span<const Poly> f, const Poly& p);
/// gcd(h)(p, q), checked against gcd(h_1(p, q), ..., h_m(p, q)).
/// Throws NotPrimitivePair unless gcd(p, q) = 1.
Poly gcd_subst_homog(std::span<const Poly> h, const Poly& p, const Poly& q);

/// T with p*/q* = (T11 p + T12 q)/(T21 p + T22 q) when K(p/q) = K(p*/q*).
std::optional<Mobius> mobius_equiv(const Poly& p, const Poly& q, const Poly& pstar, const Poly& qstar);

/// (lambda, mu) with lambda p + mu q = 1, if any.
std::optional<std::pair<FieldElem, FieldElem>> unit_combination(const Poly& p, const Poly& q);

struct EnotherChain {
  bool has_unit_combo = false;
  bool contains_nonconstant_poly = false;
  bool field_equals_Kpq = false;
  std::optional<std::pair<FieldElem, FieldElem>> combo;
  /// Set when p and q were exhibited as polynomials in a nonconstant r in {p, q}.
  bool membership_verified = false;
  /// r with K(p/q) = K(r), and p = F(r), q = G(r).
  std::optional<Poly> generator;
  std::optional<Poly> p_in_r;
  std::optional<Poly> q_in_r;
};

EnotherChain enother_chain(const Poly& p, const Poly& q);

/// F in K[y1] with r = F(p), searched among degrees up to deg r / deg p.
std::optional<Poly> member_Kp(const Poly& r, const Poly& p);

/// (f1, f2) in K[y1] with r = f1(p/q)/f2(p/q) and max degree at most bound;
/// reduced with f2 monic. Empty means "not found within the bound".
std::optional<std::pair<Poly, Poly>> member_Kpq(const RatFunc& r, const Poly& p, const Poly& q, unsigned bound);

/// Reduced (p, q) in K[x1] with K(rs) = K(p/q).
std::pair<Poly, Poly> luroth_generator_1var(std::span<const RatFunc> rs);

/// Verifies H = g h(p, q) and checks the consequences that follow from it.
Report hmgrk2_verify(const RatMap& H, const LurothWitness& w);

/// True when every nonzero component is homogeneous of one common degree.
bool tuple_is_homogeneous(std::span<const Poly> tuple);

}  // namespace ratmaps
