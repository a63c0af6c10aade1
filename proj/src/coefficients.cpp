#include "ratmaps/coefficients.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ratmaps/error.hpp"

namespace ratmaps {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxModulus = u64{1} << 62;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 to_residue(const mpz_class& z, u64 p) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  require(p < kMaxModulus, ErrorCode::NotPrime, "modulus must be below 2^62");
  require(is_prime_u64(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

FieldElem::FieldElem(const Field& field, long value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
  } else {
    r_ = to_residue(mpz_class(value), field_.characteristic());
  }
}

FieldElem::FieldElem(const Field& field, const mpq_class& value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
    q_.canonicalize();
  } else {
    const u64 p = field_.characteristic();
    u64 den = to_residue(value.get_den(), p);
    require(den != 0, ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
    r_ = mulmod(to_residue(value.get_num(), p), powmod(den, p - 2, p), p);
  }
}

bool FieldElem::is_zero() const noexcept { return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0; }

bool FieldElem::is_one() const noexcept { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

bool FieldElem::is_negative() const noexcept { return field_.is_rationals() && sgn(q_) < 0; }

void FieldElem::check_same(const FieldElem& o) const {
  require(field_ == o.field_, ErrorCode::FieldMismatch,
          "operands over " + field_.to_string() + " and " + o.field_.to_string());
}

FieldElem FieldElem::inverse() const {
  require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero");
  FieldElem r(*this);
  if (field_.is_rationals()) {
    r.q_ = 1 / q_;
  } else {
    r.r_ = powmod(r_, field_.characteristic() - 2, field_.characteristic());
  }
  return r;
}

FieldElem FieldElem::pow(u64 e) const {
  FieldElem result = one(field_);
  FieldElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  if (field_.is_rationals()) {
    r.q_ = -q_;
  } else if (r_ != 0) {
    r.r_ = field_.characteristic() - r_;
  }
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  if (field_.is_rationals()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  if (field_.is_rationals()) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.characteristic() - o.r_;
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  if (field_.is_rationals()) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, field_.characteristic());
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldElem::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch,
          "operands over " + a.field().to_string() + " and " + b.field().to_string());
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      require(!b.is_zero(), ErrorCode::DivisionByZero, "division by zero");
      return a / b;
  }
  fail(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

FieldElem evaluate_dense(const std::vector<FieldElem>& coeffs, const FieldElem& at) {
  FieldElem acc = FieldElem::zero(at.field());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

namespace {

void trim(std::vector<FieldElem>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

/// Divides c by (y - theta) when theta is a root; returns false otherwise.
bool deflate(std::vector<FieldElem>& c, const FieldElem& theta) {
  if (c.size() < 2) return false;
  std::vector<FieldElem> q(c.size() - 1, FieldElem::zero(theta.field()));
  FieldElem carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * theta;
  }
  if (!carry.is_zero()) return false;
  c = std::move(q);
  return true;
}

// Integer factorization used to enumerate rational-root candidates.

mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  for (;;) {
    mpz_class y = rng.get_z_range(n - 1) + 1;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class g = 1, r = 1, q = 1, x, ys;
    const unsigned long m = 64;
    while (g == 1) {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
      mpz_class k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < m && k + i < r; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    ++seed;
    rng.seed(seed);
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n <= 1) return;
  for (unsigned long d = 2; d < 10000; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        n /= d;
        ++out[mpz_class(d)];
      }
    }
    if (mpz_class(d) * d > n) break;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class f = pollard_brent(n, 7);
  factor_into(f, out);
  factor_into(n / f, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> fac;
  factor_into(abs(n), fac);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, mult] : fac) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<FieldElem> rational_root_candidates(const std::vector<FieldElem>& c) {
  // Content-normalized integer form.
  mpz_class lcm_den = 1;
  for (const auto& e : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(c.size());
  for (const auto& e : c) {
    mpq_class scaled = e.rational() * lcm_den;
    ints.push_back(scaled.get_num());
  }
  const auto numerators = divisors(ints.front());
  const auto denominators = divisors(ints.back());
  const Field q = Field::rationals();
  std::vector<FieldElem> out;
  for (const auto& a : numerators) {
    for (const auto& b : denominators) {
      if (gcd(a, b) != 1) continue;
      mpq_class v(a, b);
      v.canonicalize();
      out.emplace_back(q, v);
      out.emplace_back(q, mpq_class(-v));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FieldElem& x, const FieldElem& y) { return x.rational() < y.rational(); });
  return out;
}

// Dense arithmetic mod p for large-p root isolation.
using ModPoly = std::vector<u64>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mmod(ModPoly a, const ModPoly& b, u64 p) {
  mtrim(a);
  const u64 inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const u64 f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(f, b[i], p)) % p;
    }
    mtrim(a);
  }
  return a;
}

ModPoly mmulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return mmod(std::move(r), m, p);
}

ModPoly mpowmod(ModPoly base, u64 e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = mmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mmulmod(r, base, m, p);
    e >>= 1;
    if (e) base = mmulmod(base, base, m, p);
  }
  return r;
}

ModPoly mgcd(ModPoly a, ModPoly b, u64 p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = powmod(a.back(), p - 2, p);
    for (auto& v : a) v = mulmod(v, inv, p);
  }
  return a;
}

ModPoly mdiv(ModPoly a, const ModPoly& b, u64 p) {
  ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const u64 inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size() && !a.empty()) {
    const u64 f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(f, b[i], p)) % p;
    mtrim(a);
  }
  return q;
}

/// Splits a monic squarefree product of distinct linear factors into its roots.
void split_linear(const ModPoly& g, u64 p, std::mt19937_64& rng, std::vector<u64>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back((p - g[0]) % p);
    return;
  }
  for (;;) {
    const u64 a = rng() % p;
    ModPoly shifted{a, 1};
    ModPoly w = mpowmod(shifted, (p - 1) / 2, g, p);
    if (w.empty()) w = {0};
    w[0] = (w[0] + p - 1) % p;
    ModPoly d = mgcd(g, w, p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, p, rng, roots);
      split_linear(mdiv(g, d, p), p, rng, roots);
      return;
    }
  }
}

std::vector<FieldElem> prime_field_candidates(const Field& field, const std::vector<FieldElem>& c) {
  const u64 p = field.characteristic();
  std::vector<FieldElem> out;
  if (p <= (u64{1} << 16)) {
    for (u64 v = 0; v < p; ++v) {
      FieldElem e(field, static_cast<long>(v));
      if (evaluate_dense(c, e).is_zero()) out.push_back(e);
    }
    return out;
  }
  ModPoly f;
  for (const auto& e : c) f.push_back(e.residue());
  // gcd(f, y^p - y) collects the distinct linear factors.
  ModPoly yp = mpowmod(ModPoly{0, 1}, p, f, p);
  if (yp.size() < 2) yp.resize(2, 0);
  yp[1] = (yp[1] + p - 1) % p;
  ModPoly g = mgcd(f, yp, p);
  std::vector<u64> roots;
  std::mt19937_64 rng(0x5eed);
  split_linear(g, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  for (u64 r : roots) out.emplace_back(field, mpq_class(mpz_class(static_cast<unsigned long>(r))));
  return out;
}

}  // namespace

std::vector<Root> roots_in_K(const Field& field, std::vector<FieldElem> coeffs) {
  trim(coeffs);
  require(!coeffs.empty(), ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  for (const auto& c : coeffs) require(c.field() == field, ErrorCode::FieldMismatch, "coefficient field");

  std::vector<Root> result;
  unsigned zero_mult = 0;
  while (coeffs.front().is_zero()) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) result.push_back({FieldElem::zero(field), zero_mult});
  if (coeffs.size() < 2) return result;

  const auto candidates =
      field.is_rationals() ? rational_root_candidates(coeffs) : prime_field_candidates(field, coeffs);
  for (const auto& theta : candidates) {
    if (theta.is_zero()) continue;
    unsigned mult = 0;
    while (deflate(coeffs, theta)) ++mult;
    if (mult > 0) result.push_back({theta, mult});
    if (coeffs.size() < 2) break;
  }
  std::sort(result.begin(), result.end(), [](const Root& a, const Root& b) {
    return a.value.field().is_rationals() ? a.value.rational() < b.value.rational()
                                          : a.value.residue() < b.value.residue();
  });
  return result;
}

}  // namespace ratmaps
