#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "ratmaps/gordan_noether.hpp"
#include "ratmaps/homog.hpp"
#include "ratmaps/subfield.hpp"

namespace ratmaps::testing {

/// Seeded instance generator shared by the property suites.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Small coefficient; over Q a fraction with denominator up to 3.
  FieldElem coeff(const Field& K, bool nonzero = false) {
    for (;;) {
      FieldElem c = K.is_rationals()
                        ? FieldElem(K, mpq_class(mpz_class(integer(-5, 5)), mpz_class(integer(1, 3))))
                        : FieldElem(K, integer(0, static_cast<long>(std::min<std::uint64_t>(K.characteristic(), 1000)) - 1));
      if (!nonzero || !c.is_zero()) return c;
    }
  }

  /// Random sparse polynomial of total degree at most maxdeg.
  Poly poly(const Field& K, std::size_t nvars, unsigned maxdeg, unsigned terms) {
    Poly p(K, nvars);
    for (unsigned t = 0; t < terms; ++t) {
      Monomial m(nvars, 0);
      unsigned budget = static_cast<unsigned>(integer(0, maxdeg));
      for (std::size_t i = 0; i < nvars && budget > 0; ++i) {
        const auto e = static_cast<unsigned>(i + 1 == nvars ? budget : integer(0, budget));
        m[i] = e;
        budget -= e;
      }
      std::shuffle(m.begin(), m.end(), rng_);
      p.add_term(m, coeff(K, true));
    }
    return p;
  }

  Poly nonconstant_poly(const Field& K, std::size_t nvars, unsigned maxdeg, unsigned terms) {
    for (;;) {
      Poly p = poly(K, nvars, maxdeg, terms);
      if (!p.is_constant()) return p;
    }
  }

  /// Dense univariate polynomial of degree at most maxdeg (may be zero).
  Poly uni(const Field& K, unsigned maxdeg) {
    Poly p(K, 1);
    const auto d = static_cast<unsigned>(integer(0, maxdeg));
    for (unsigned k = 0; k <= d; ++k)
      if (coin(0.7)) p.add_term(Monomial{k}, coeff(K, true));
    return p;
  }

  Poly nonzero_uni(const Field& K, unsigned maxdeg) {
    for (;;) {
      Poly p = uni(K, maxdeg);
      if (!p.is_zero()) return p;
    }
  }

  Poly nonconstant_uni(const Field& K, unsigned maxdeg) {
    for (;;) {
      Poly p = uni(K, maxdeg);
      if (!p.is_constant()) return p;
    }
  }

  /// Homogeneous bivariate polynomial of degree s (may be zero).
  Poly homog(const Field& K, unsigned s) {
    Poly p(K, 2);
    for (unsigned k = 0; k <= s; ++k)
      if (coin(0.6)) p.add_term(Monomial{k, s - k}, coeff(K, true));
    return p;
  }

  RatFunc ratfunc(const Field& K, std::size_t nvars, unsigned maxdeg, unsigned terms) {
    Poly den = poly(K, nvars, maxdeg, terms);
    if (den.is_zero()) den = Poly::constant(K, nvars, 1);
    return RatFunc(poly(K, nvars, maxdeg, terms), den);
  }

  RatFunc nonzero_ratfunc(const Field& K, std::size_t nvars, unsigned maxdeg, unsigned terms) {
    for (;;) {
      RatFunc r = ratfunc(K, nvars, maxdeg, terms);
      if (!r.is_zero()) return r;
    }
  }

  /// Coprime (p, q) with p/q nonconstant.
  std::pair<Poly, Poly> coprime_pair(const Field& K, std::size_t nvars, unsigned maxdeg, unsigned terms) {
    for (;;) {
      Poly p = poly(K, nvars, maxdeg, terms);
      Poly q = poly(K, nvars, maxdeg, terms);
      if (q.is_zero()) continue;
      if (!gcd(p, q).is_one()) continue;
      if (RatFunc(p, q).is_constant()) continue;
      return {p, q};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// h(p, q) expanded term by term, independent of the library's composition.
inline Poly expand_homog(const Poly& h, const Poly& p, const Poly& q) {
  Poly out(p.field(), p.nvars());
  for (const auto& [m, c] : h.terms()) out += p.pow(m[0]) * q.pow(m[1]) * c;
  return out;
}

/// (max deg, min lowdeg) read directly off the terms.
inline std::pair<long, long> read_degrees(std::span<const Poly> v) {
  long hi = -1, lo = -1;
  for (const auto& p : v) {
    for (const auto& [m, c] : p.terms()) {
      const long d = total_degree(m);
      hi = std::max(hi, d);
      lo = lo < 0 ? d : std::min(lo, d);
    }
  }
  return {hi, lo};
}

/// y2^s f(y1/y2) via rational substitution.
inline Poly homogenize_oracle(const Poly& f, unsigned s) {
  const Field& K = f.field();
  const RatFunc y1(Poly::variable(K, 2, 0)), y2(Poly::variable(K, 2, 1));
  const std::vector<RatFunc> img{y1 / y2};
  const RatFunc r = compose(f, img) * y2.pow(s);
  return r.num() * r.den().constant_value().inverse();
}

}  // namespace ratmaps::testing
