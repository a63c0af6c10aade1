#include "ratmaps/homog.hpp"

#include <algorithm>

#include "ratmaps/error.hpp"

namespace ratmaps {

namespace {

bool all_zero(std::span<const Poly> v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

void check_common_ring(std::span<const Poly> v, std::size_t nvars, const char* what) {
  require(!v.empty(), ErrorCode::ZeroTuple, std::string(what) + " is empty");
  for (const auto& p : v) {
    require(p.nvars() == nvars && p.field() == v.front().field(), ErrorCode::RingMismatch,
            std::string(what) + " components must live in K[" + (nvars == 1 ? "y1" : "y1,y2") + "]");
  }
}

/// g(y1, 1) as a polynomial in K[y1].
Poly set_y2_to_one(const Poly& g) {
  Poly out(g.field(), 1);
  for (const auto& [m, c] : g.terms()) out.add_term(Monomial{m[0]}, c);
  return out;
}

}  // namespace

void UniTuple::validate() const {
  check_common_ring(f, 1, "univariate tuple");
  require(!all_zero(f), ErrorCode::ZeroTuple, "univariate tuple is zero");
  for (const auto& c : f) {
    require(c.degree() <= ExtInt(static_cast<long>(bound)), ErrorCode::InvalidArgument,
            "component degree exceeds the bound " + std::to_string(bound));
  }
}

UniTuple UniTuple::tight(std::vector<Poly> f) {
  const DegreePair d = degrees(f);
  const unsigned s = d.deg.is_finite() ? static_cast<unsigned>(d.deg.value()) : 0U;
  return UniTuple{std::move(f), s};
}

void HomogTuple::validate() const {
  check_common_ring(h, 2, "homogeneous tuple");
  require(!all_zero(h), ErrorCode::ZeroTuple, "homogeneous tuple is zero");
  for (const auto& c : h) {
    if (c.is_zero()) continue;
    require(c.is_homogeneous() && c.degree() == ExtInt(static_cast<long>(s)), ErrorCode::NotHomogeneous,
            "component is not homogeneous of degree " + std::to_string(s));
  }
}

HomogTuple homogenize(const UniTuple& f) {
  f.validate();
  HomogTuple out{{}, f.bound};
  for (const auto& c : f.f) {
    Poly h(c.field(), 2);
    for (const auto& [m, v] : c.terms()) h.add_term(Monomial{m[0], f.bound - m[0]}, v);
    out.h.push_back(std::move(h));
  }
  return out;
}

UniTuple dehomogenize(const HomogTuple& h) {
  h.validate();
  UniTuple out{{}, h.s};
  for (const auto& c : h.h) out.f.push_back(set_y2_to_one(c));
  return out;
}

Poly divisor_transport(const Poly& g) {
  require(g.nvars() == 1, ErrorCode::RingMismatch, "divisor transport expects g in K[y1]");
  require(!g.is_zero(), ErrorCode::ZeroPolynomial, "divisor transport of 0");
  const auto d = static_cast<std::uint32_t>(g.degree().value());
  Poly out(g.field(), 2);
  for (const auto& [m, v] : g.terms()) out.add_term(Monomial{m[0], d - m[0]}, v);
  return out;
}

Poly divisor_transport_inverse(const Poly& gt) {
  require(gt.nvars() == 2, ErrorCode::RingMismatch, "inverse transport expects g~ in K[y1,y2]");
  require(!gt.is_zero(), ErrorCode::ZeroPolynomial, "inverse transport of 0");
  require(gt.is_homogeneous(), ErrorCode::NotHomogeneous, "g~ must be homogeneous");
  const bool y2_divides =
      std::all_of(gt.terms().begin(), gt.terms().end(), [](const auto& t) { return t.first[1] > 0; });
  require(!y2_divides, ErrorCode::DivisibleByY2, "y2 divides g~");
  return set_y2_to_one(gt);
}

std::vector<Poly> evaluate_homog(std::span<const Poly> h, const Poly& p, const Poly& q) {
  require(p.field() == q.field() && p.nvars() == q.nvars(), ErrorCode::RingMismatch,
          "p and q over different rings");
  const std::vector<Poly> images{p, q};
  std::vector<Poly> out;
  out.reserve(h.size());
  for (const auto& c : h) {
    require(c.nvars() == 2, ErrorCode::RingMismatch, "h components must live in K[y1,y2]");
    out.push_back(compose(c, images));
  }
  return out;
}

std::vector<RatFunc> evaluate_at_ratio(std::span<const Poly> f, const Poly& p, const Poly& q) {
  const std::vector<RatFunc> image{RatFunc(p, q)};
  std::vector<RatFunc> out;
  out.reserve(f.size());
  for (const auto& c : f) {
    require(c.nvars() == 1, ErrorCode::RingMismatch, "f components must live in K[y1]");
    out.push_back(compose(c, image));
  }
  return out;
}

HfcDecomposition hfc_decompose(const RatMap& H, std::size_t index, const Poly& p, const Poly& q,
                               const UniTuple& f) {
  require(index < H.size(), ErrorCode::InvalidArgument, "component index out of range");
  require(!H[index].is_zero(), ErrorCode::InvalidArgument, "H_i must be nonzero");
  f.validate();
  require(f.f.size() == H.size(), ErrorCode::InvalidArgument, "witness f has the wrong length");

  const auto fpq = evaluate_at_ratio(f.f, p, q);
  require(!fpq[index].is_zero(), ErrorCode::WitnessRejected, "f_i(p/q) vanishes");
  for (std::size_t j = 0; j < H.size(); ++j) {
    require(H[j] * fpq[index] == H[index] * fpq[j], ErrorCode::WitnessRejected,
            "H_i^-1 H differs from f_i(p/q)^-1 f(p/q) in component " + std::to_string(j + 1));
  }
  require(is_primitive(f.f), ErrorCode::NotPrimitive, "witness f is not primitive");

  UniTuple tight = UniTuple::tight(f.f);
  HomogTuple h = homogenize(tight);
  const auto hpq = evaluate_homog(h.h, p, q);
  RatFunc g = H[index] / RatFunc(hpq[index]);
  for (std::size_t j = 0; j < H.size(); ++j) {
    require(g * RatFunc(hpq[j]) == H[j], ErrorCode::InternalAlarm,
            "H = g h(p,q) fails after an accepted witness");
  }
  return {std::move(tight), std::move(g), std::move(h)};
}

bool has_linear_factor(const Poly& g) {
  require(g.nvars() == 2, ErrorCode::RingMismatch, "expected a polynomial in K[y1,y2]");
  require(!g.is_zero(), ErrorCode::ZeroPolynomial, "linear factors of 0");
  require(g.is_homogeneous(), ErrorCode::NotHomogeneous, "expected a homogeneous polynomial");
  if (g.is_constant()) return false;
  const bool y2_divides =
      std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first[1] > 0; });
  if (y2_divides) return true;
  return !roots_in_K(set_y2_to_one(g)).empty();
}

DegreeFormula degree_formula(const HomogTuple& h, const Poly& p, const Poly& q) {
  require(p.field() == q.field() && p.nvars() == q.nvars(), ErrorCode::RingMismatch,
          "p and q over different rings");
  require(!(p.is_zero() && q.is_zero()), ErrorCode::BothZero, "p and q are both zero");
  h.validate();
  require(!has_linear_factor(gcd_many(h.h)), ErrorCode::LinearFactorPresent,
          "gcd of h has a linear factor over K");

  const std::vector<Poly> pq{p, q};
  const DegreePair d = degrees(pq);
  const auto s = static_cast<long>(h.s);
  DegreeFormula formula{s * d.deg.value(), s * d.lowdeg.value()};

  const auto hpq = evaluate_homog(h.h, p, q);
  const DegreePair actual = degrees(hpq);
  require(actual.deg.is_finite(), ErrorCode::InternalAlarm, "h(p,q) vanishes despite no linear factor");
  require(actual.deg == ExtInt(formula.deg) && actual.lowdeg == ExtInt(formula.lowdeg),
          ErrorCode::InternalAlarm,
          "degree formula disagrees with expansion: got (" + actual.deg.to_string() + ", " +
              actual.lowdeg.to_string() + ")");
  return formula;
}

}  // namespace ratmaps
