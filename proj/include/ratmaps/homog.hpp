#pragma once

#include <cstddef>
#include <vector>

#include "ratmaps/ratfunc.hpp"

namespace ratmaps {

/// m bivariate polynomials in (y1, y2), every nonzero one homogeneous of degree s.
struct HomogTuple {
  std::vector<Poly> h;
  unsigned s = 0;

  /// Throws ZeroTuple, RingMismatch or NotHomogeneous on a malformed tuple.
  void validate() const;
};

/// m univariate polynomials in y1 with max degree at most bound.
struct UniTuple {
  std::vector<Poly> f;
  unsigned bound = 0;

  void validate() const;
  /// Tuple with bound = max component degree.
  static UniTuple tight(std::vector<Poly> f);
};

/// h_i = y2^s f_i(y1/y2).
HomogTuple homogenize(const UniTuple& f);
/// f_i = h_i(y1, 1), bound s.
UniTuple dehomogenize(const HomogTuple& h);

/// g~ = y2^deg(g) g(y1/y2); never divisible by y2.
Poly divisor_transport(const Poly& g);
/// g = g~(y1, 1) for homogeneous g~ with y2 not dividing g~ (else DivisibleByY2).
Poly divisor_transport_inverse(const Poly& gt);

/// h(p, q) as a polynomial tuple over the ring of p and q.
std::vector<Poly> evaluate_homog(std::span<const Poly> h, const Poly& p, const Poly& q);
/// f(p/q) for univariate f.
std::vector<RatFunc> evaluate_at_ratio(std::span<const Poly> f, const Poly& p, const Poly& q);

struct HfcDecomposition {
  UniTuple f;
  RatFunc g;
  HomogTuple h;
};

/// Checks H_i^-1 H = f_i(p/q)^-1 f(p/q) for the supplied witness f and returns
/// h = homogenize(f) at s = deg f with g = H_i / h_i(p, q), so H = g h(p, q).
/// index is 0-based.
HfcDecomposition hfc_decompose(const RatMap& H, std::size_t index, const Poly& p, const Poly& q,
                               const UniTuple& f);

/// True iff the homogeneous bivariate g has a linear factor over K:
/// y2 | g, or g(y1, 1) has a root in K.
bool has_linear_factor(const Poly& g);

struct DegreeFormula {
  long deg = 0;
  long lowdeg = 0;
};

/// (s deg(p,q), s lowdeg(p,q)) for h whose gcd has no linear factor, verified
/// against the expansion of h(p, q).
DegreeFormula degree_formula(const HomogTuple& h, const Poly& p, const Poly& q);

}  // namespace ratmaps
