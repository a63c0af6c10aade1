// Multivariate gcd by primitive pseudo-remainder sequences, recursing on the
// main variable and extracting contents in the remaining variables.

#include <algorithm>

#include "ratmaps/error.hpp"
#include "ratmaps/poly.hpp"

namespace ratmaps {

namespace {

long main_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = a.nvars(); v-- > 0;)
    if (a.uses(v) || b.uses(v)) return static_cast<long>(v);
  return -1;
}

Poly one_like(const Poly& a) { return Poly::constant(FieldElem::one(a.field()), a.nvars()); }

/// Pseudo-remainder of a by b w.r.t. var, up to a nonzero factor free of var.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const long db = b.degree_in(var);
  const Poly lb = b.leading_coeff_in(var);
  Poly var_poly = Poly::variable(a.field(), a.nvars(), var);
  while (!a.is_zero()) {
    const long da = a.degree_in(var);
    if (da < db) break;
    Poly la = a.leading_coeff_in(var);
    a = lb * a - la * var_poly.pow(static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

/// Over Q: the scalar multiple with coprime integer coefficients and positive
/// leading coefficient. Over F_p: the monic multiple.
Poly normalize_scalar(const Poly& a) {
  if (a.is_zero() || !a.field().is_rationals()) return a.monic();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : a.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.rational().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (a.leading_coeff().rational() < 0) scale = -scale;
  return a * FieldElem(a.field(), scale);
}

Poly primitive_part_in(const Poly& a, std::size_t var) {
  if (a.is_zero()) return a;
  return normalize_scalar(divexact(a, content_in(a, var)));
}

/// Images of integer-normalized a, b modulo word-sized primes. If some prime
/// keeps the leading coefficient of a and the gcd of the images is a unit, then
/// a and b are coprime over Q: the reduction of gcd(a, b) keeps its degree and
/// divides the modular gcd.
bool coprime_by_reduction(const Poly& a, const Poly& b) {
  static const std::uint64_t primes[] = {2147483647ULL, 2305843009213693951ULL};
  for (const std::uint64_t p : primes) {
    const Field fp = Field::prime(p);
    auto reduce = [&](const Poly& x) {
      Poly out(fp, x.nvars());
      for (const auto& [m, c] : x.terms()) out.add_term(m, FieldElem(fp, c.rational()));
      return out;
    };
    const Poly ap = reduce(a), bp = reduce(b);
    if (ap.is_zero() || ap.leading_monomial() != a.leading_monomial()) continue;
    if (bp.is_zero()) continue;
    return gcd(ap, bp).is_constant();
  }
  return false;
}

}  // namespace

Poly content_in(const Poly& a, std::size_t var) {
  if (a.is_zero()) return a;
  Poly g(a.field(), a.nvars());
  for (const auto& c : a.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly gcd(const Poly& a, const Poly& b) {
  require(a.field() == b.field() && a.nvars() == b.nvars(), ErrorCode::RingMismatch,
          "gcd across rings");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return a.monic();

  const long mv = main_variable(a, b);
  const auto var = static_cast<std::size_t>(mv);
  if (!a.uses(var)) return gcd(a, content_in(b, var));
  if (!b.uses(var)) return gcd(content_in(a, var), b);

  if (a.field().is_rationals() && coprime_by_reduction(normalize_scalar(a), normalize_scalar(b)))
    return one_like(a);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly c = gcd(ca, cb);
  Poly f = normalize_scalar(divexact(a, ca));
  Poly g = normalize_scalar(divexact(b, cb));
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  for (;;) {
    Poly r = pseudo_remainder(f, g, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      g = one_like(a);
      break;
    }
    f = std::move(g);
    g = primitive_part_in(r, var);
  }
  return (c * g).monic();
}

Poly gcd_many(std::span<const Poly> tuple) {
  require(!tuple.empty(), ErrorCode::AllZero, "gcd of an empty tuple");
  Poly g(tuple.front().field(), tuple.front().nvars());
  for (const auto& p : tuple) {
    if (p.is_zero()) continue;
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  require(!g.is_zero(), ErrorCode::AllZero, "gcd of an all-zero tuple");
  return g;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field(), a.nvars());
  return divexact(a * b, gcd(a, b)).monic();
}

bool is_primitive(std::span<const Poly> tuple) {
  if (std::all_of(tuple.begin(), tuple.end(), [](const Poly& p) { return p.is_zero(); })) return false;
  return gcd_many(tuple).is_one();
}

}  // namespace ratmaps
