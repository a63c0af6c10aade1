#include "ratmaps/poly.hpp"

#include <algorithm>
#include <numeric>

#include "ratmaps/error.hpp"

namespace ratmaps {

ExtInt operator+(ExtInt a, ExtInt b) {
  if (a.is_finite() && b.is_finite()) return ExtInt(a.value_ + b.value_);
  require(!((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf())),
          ErrorCode::InvalidArgument, "-inf + +inf is undefined");
  return a.is_finite() ? b : a;
}

ExtInt operator-(ExtInt a, ExtInt b) {
  if (b.is_finite()) return a + ExtInt(-b.value_);
  return a + (b.is_pos_inf() ? ExtInt::neg_inf() : ExtInt::pos_inf());
}

ExtInt operator*(long s, ExtInt a) {
  if (a.is_finite()) return ExtInt(s * a.value_);
  require(s != 0, ErrorCode::InvalidArgument, "0 * inf is undefined");
  if (s > 0) return a;
  return a.is_pos_inf() ? ExtInt::neg_inf() : ExtInt::pos_inf();
}

std::string ExtInt::to_string() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return std::to_string(value_);
}

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(const FieldElem& c, std::size_t nvars) {
  Poly p(c.field(), nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(const Field& field, std::size_t nvars, std::size_t index) {
  require(index < nvars, ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(FieldElem::one(field), std::move(m));
}

Poly Poly::monomial(const FieldElem& c, Monomial exps) {
  Poly p(c.field(), exps.size());
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Poly::is_one() const noexcept { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

FieldElem Poly::constant_value() const {
  require(is_constant(), ErrorCode::InvalidArgument, "polynomial is not constant");
  return terms_.empty() ? FieldElem::zero(field_) : terms_.begin()->second;
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

const Monomial& Poly::leading_monomial() const {
  require(!terms_.empty(), ErrorCode::ZeroPolynomial, "leading monomial of 0");
  return terms_.begin()->first;
}

const FieldElem& Poly::leading_coeff() const {
  require(!terms_.empty(), ErrorCode::ZeroPolynomial, "leading coefficient of 0");
  return terms_.begin()->second;
}

FieldElem Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

ExtInt Poly::degree() const {
  if (terms_.empty()) return ExtInt::neg_inf();
  return static_cast<long>(total_degree(terms_.begin()->first));
}

ExtInt Poly::lowdegree() const {
  if (terms_.empty()) return ExtInt::pos_inf();
  return static_cast<long>(total_degree(terms_.rbegin()->first));
}

long Poly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
  return d;
}

bool Poly::uses(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] > 0; });
}

std::vector<std::size_t> Poly::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

void Poly::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_ring(const Poly& o) const {
  require(field_ == o.field_ && nvars_ == o.nvars_, ErrorCode::RingMismatch,
          "polynomials over different rings (" + field_.to_string() + "[" + std::to_string(nvars_) +
              "] vs " + o.field_.to_string() + "[" + std::to_string(o.nvars_) + "])");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.field_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FieldElem& c) {
  require(c.field() == field_, ErrorCode::FieldMismatch, "scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (m != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(FieldElem::one(field_), nvars_);
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

Poly Poly::derivative(std::size_t var) const {
  require(var < nvars_, ErrorCode::InvalidArgument, "variable index out of range");
  Poly r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    --dm[var];
    r.add_term(dm, c * FieldElem(field_, static_cast<long>(m[var])));
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  const long d = degree_in(var);
  std::vector<Poly> out(d < 0 ? 0 : static_cast<std::size_t>(d + 1), Poly(field_, nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].terms_.emplace(std::move(rest), c);
  }
  return out;
}

Poly Poly::leading_coeff_in(std::size_t var) const {
  const long d = degree_in(var);
  Poly out(field_, nvars_);
  if (d < 0) return out;
  for (const auto& [m, c] : terms_) {
    if (static_cast<long>(m[var]) != d) continue;
    Monomial rest = m;
    rest[var] = 0;
    out.terms_.emplace(std::move(rest), c);
  }
  return out;
}

std::vector<FieldElem> Poly::dense_in(std::size_t var) const {
  const long d = degree_in(var);
  std::vector<FieldElem> out(d < 0 ? 0 : static_cast<std::size_t>(d + 1), FieldElem::zero(field_));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      require(i == var || m[i] == 0, ErrorCode::InvalidArgument,
              "polynomial involves variables other than the requested one");
    }
    out[m[var]] = c;
  }
  return out;
}

Poly Poly::from_dense(const Field& field, std::size_t nvars, std::size_t var,
                      std::span<const FieldElem> coeffs) {
  Poly p(field, nvars);
  Monomial m(nvars, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    m[var] = static_cast<std::uint32_t>(k);
    p.add_term(m, coeffs[k]);
  }
  return p;
}

Poly Poly::remap(std::size_t new_nvars, std::span<const std::size_t> var_map) const {
  require(var_map.size() == nvars_, ErrorCode::InvalidArgument, "variable map has wrong length");
  Poly r(field_, new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      require(var_map[i] < new_nvars, ErrorCode::InvalidArgument, "variable map target out of range");
      nm[var_map[i]] += m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

Poly Poly::embed(std::size_t new_nvars) const {
  require(new_nvars >= nvars_, ErrorCode::InvalidArgument, "cannot embed into a smaller ring");
  std::vector<std::size_t> map(nvars_);
  std::iota(map.begin(), map.end(), 0);
  return remap(new_nvars, map);
}

FieldElem Poly::evaluate(std::span<const FieldElem> point) const {
  require(point.size() == nvars_, ErrorCode::InvalidArgument, "evaluation point has wrong dimension");
  FieldElem acc = FieldElem::zero(field_);
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) t *= point[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

std::optional<Poly> try_divexact(const Poly& a, const Poly& b) {
  require(a.field() == b.field() && a.nvars() == b.nvars(), ErrorCode::RingMismatch,
          "division across rings");
  require(!b.is_zero(), ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (b.is_constant()) return a * b.constant_value().inverse();
  Poly q(a.field(), a.nvars());
  Poly r = a;
  const Monomial& lb = b.leading_monomial();
  const FieldElem lcb_inv = b.leading_coeff().inverse();
  Monomial shift(a.nvars());
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      shift[i] = lr[i] - lb[i];
    }
    Poly t = Poly::monomial(r.leading_coeff() * lcb_inv, shift);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly divexact(const Poly& a, const Poly& b) {
  auto q = try_divexact(a, b);
  require(q.has_value(), ErrorCode::NotDivisible, "divisor does not divide dividend exactly");
  return *std::move(q);
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return try_divexact(a, b).has_value();
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  require(a.field() == b.field() && a.nvars() == b.nvars(), ErrorCode::RingMismatch,
          "operands over different rings");
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    case PolyOp::DivExact: return divexact(a, b);
  }
  fail(ErrorCode::InvalidArgument, "unknown polynomial operation");
}

DegreePair degrees(const Poly& a) { return {a.degree(), a.lowdegree()}; }

DegreePair degrees(std::span<const Poly> tuple) {
  DegreePair d;
  for (const auto& p : tuple) {
    if (p.is_zero()) continue;
    d.deg = std::max(d.deg, p.degree());
    d.lowdeg = std::min(d.lowdeg, p.lowdegree());
  }
  return d;
}

std::vector<std::pair<unsigned, Poly>> homogeneous_parts(const Poly& a) {
  std::map<unsigned, Poly> parts;
  for (const auto& [m, c] : a.terms()) {
    auto [it, _] = parts.try_emplace(total_degree(m), Poly(a.field(), a.nvars()));
    it->second.add_term(m, c);
  }
  return {parts.begin(), parts.end()};
}

Poly leading_part(const Poly& a) {
  require(!a.is_zero(), ErrorCode::ZeroPolynomial, "leading part of 0");
  return homogeneous_parts(a).back().second;
}

Poly trailing_part(const Poly& a) {
  require(!a.is_zero(), ErrorCode::ZeroPolynomial, "trailing part of 0");
  return homogeneous_parts(a).front().second;
}

std::vector<Root> roots_in_K(const Poly& f, std::size_t var) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  return roots_in_K(f.field(), f.dense_in(var));
}

Poly compose(const Poly& a, std::span<const Poly> images) {
  require(images.size() == a.nvars(), ErrorCode::InvalidArgument,
          "composition needs one image per variable");
  require(!images.empty(), ErrorCode::InvalidArgument, "composition into an empty ring");
  const Field& field = images.front().field();
  const std::size_t target = images.front().nvars();
  for (const auto& im : images) {
    require(im.field() == field && im.nvars() == target, ErrorCode::RingMismatch,
            "composition images over different rings");
  }
  require(field == a.field(), ErrorCode::FieldMismatch, "composition across fields");
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(FieldElem::one(field), target));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Poly result(field, target);
  for (const auto& [m, c] : a.terms()) {
    Poly t = Poly::constant(c, target);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= power(i, m[i]);
    result += t;
  }
  return result;
}

}  // namespace ratmaps
