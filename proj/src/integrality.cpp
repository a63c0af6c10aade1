#include "ratmaps/integrality.hpp"

#include <algorithm>
#include <vector>

#include "ratmaps/error.hpp"
#include "ratmaps/expr.hpp"
#include "ratmaps/homog.hpp"

namespace ratmaps {

namespace {

void check_uni(const Poly& f, const char* what) {
  require(f.nvars() == 1, ErrorCode::RingMismatch, std::string(what) + " must live in K[y1]");
}

void check_ratio(const Poly& p, const Poly& q) {
  require(p.field() == q.field() && p.nvars() == q.nvars(), ErrorCode::RingMismatch,
          "p and q over different rings");
  require(!RatFunc(p, q).is_constant(), ErrorCode::ConstantRatio, "p/q is constant");
}

void check_field(const Poly& p, const ReducedPair& g) {
  require(g.f1.field() == p.field(), ErrorCode::FieldMismatch, "g and (p, q) over different fields");
  require(!g.is_constant(), ErrorCode::ConstantPart, "g = f1/f2 is constant");
}

Poly y_minus(const Field& K, const FieldElem& c) {
  return Poly::variable(K, 1, 0) - Poly::constant(c, 1);
}

/// f(image) for univariate f and univariate image.
Poly subst(const Poly& f, const Poly& image) { return compose(f, std::vector<Poly>{image}); }

/// z^s f(1/z).
Poly reverse_to(const Poly& f, unsigned s) {
  Poly out(f.field(), 1);
  for (const auto& [m, c] : f.terms()) out.add_term(Monomial{s - m[0]}, c);
  return out;
}

RatFunc ratio_value(const Poly& f1, const Poly& f2, const Poly& p, const Poly& q) {
  const std::vector<Poly> fs{f1, f2};
  const auto v = evaluate_at_ratio(fs, p, q);
  require(!v[1].is_zero(), ErrorCode::ZeroDenominator, "f2(p/q) vanishes");
  return v[0] / v[1];
}

}  // namespace

ExtInt valuation(const Poly& g, const ProjPoint& theta) {
  check_uni(g, "g");
  if (g.is_zero()) return ExtInt::pos_inf();
  if (theta.is_infinity()) return ExtInt(-g.degree().value());
  const Poly lin = y_minus(g.field(), theta.value());
  Poly rest = g;
  long k = 0;
  const std::vector<FieldElem> pt{theta.value()};
  while (rest.evaluate(pt).is_zero()) {
    rest = divexact(rest, lin);
    ++k;
  }
  return ExtInt(k);
}

ExtInt valuation(const Poly& f1, const Poly& f2, const ProjPoint& theta) {
  require(!f2.is_zero(), ErrorCode::ZeroDenominator, "valuation of a fraction with zero denominator");
  const ExtInt a = valuation(f1, theta);
  if (a.is_pos_inf()) return a;
  return a - valuation(f2, theta);
}

ReducedPair::ReducedPair(Poly a, Poly b) : f1(std::move(a)), f2(std::move(b)) {
  check_uni(f1, "f1");
  check_uni(f2, "f2");
  require(f1.field() == f2.field(), ErrorCode::FieldMismatch, "f1 and f2 over different fields");
  require(!f2.is_zero(), ErrorCode::ZeroDenominator, "f2 is zero");
  const Poly g = gcd(f1, f2);
  f1 = divexact(f1, g);
  f2 = divexact(f2, g);
  const FieldElem lc = f2.leading_coeff().inverse();
  f1 *= lc;
  f2 *= lc;
}

Report valuation_laws_check(const Poly& f1, const Poly& f2, const Poly& g1, const Poly& g2,
                            const ProjPoint& theta) {
  require(!(f2 * g2).is_zero(), ErrorCode::ZeroDenominator, "f2*g2 is zero");
  Report rep;
  rep.name = "valuation-laws";
  const ExtInt vf = valuation(f1, f2, theta);
  const ExtInt vg = valuation(g1, g2, theta);
  const ExtInt vprod = valuation(f1 * g1, f2 * g2, theta);
  const bool product_ok = (vf.is_pos_inf() || vg.is_pos_inf()) ? vprod.is_pos_inf() : vprod == vf + vg;
  rep.add("product law", product_ok,
          vprod.to_string() + " vs " + vf.to_string() + " + " + vg.to_string());
  const ExtInt vsum = valuation(f1 * g2 + g1 * f2, f2 * g2, theta);
  const ExtInt lo = std::min(vf, vg);
  rep.add("ultrametric inequality", lo <= vsum, "min = " + lo.to_string() + ", v(sum) = " + vsum.to_string());
  rep.value("theta", theta.to_string());
  return rep;
}

IntegralResult integral_over_Kg(const Poly& p, const Poly& q, const ReducedPair& g) {
  check_ratio(p, q);
  check_field(p, g);
  IntegralResult out;
  out.integral = g.f1.degree() > g.f2.degree();
  if (!out.integral) return out;

  // (f1 - z f2)(Y) in K[Y, z], made monic in Y.
  const std::vector<std::size_t> to_Y{0};
  const Poly z = Poly::variable(p.field(), 2, 1);
  Poly rel = g.f1.remap(2, to_Y) - z * g.f2.remap(2, to_Y);
  rel *= g.f1.leading_coeff().inverse();

  const std::vector<RatFunc> at{RatFunc(p, q), ratio_value(g.f1, g.f2, p, q)};
  require(compose(rel, at).is_zero(), ErrorCode::InternalAlarm,
          "integral relation does not vanish at Y = p/q");
  out.relation = std::move(rel);
  return out;
}

PqTransResult pqtrans(const Poly& p, const Poly& q, const Poly& f1, const Poly& f2, const PqTransMode& mode) {
  require(p.field() == q.field() && p.nvars() == q.nvars(), ErrorCode::RingMismatch,
          "p and q over different rings");
  check_uni(f1, "f1");
  check_uni(f2, "f2");
  require(!f2.is_zero(), ErrorCode::ZeroDenominator, "f2 is zero");
  const Field& K = p.field();
  PqTransResult out;
  if (mode.kind == PqTransMode::Kind::Shift) {
    out.pstar = p + q * mode.eps;
    out.qstar = q;
    const Poly img = y_minus(K, mode.eps);
    out.f1star = subst(f1, img);
    out.f2star = subst(f2, img);
  } else {
    out.qstar = p - q * mode.theta;
    require(!out.qstar.is_zero(), ErrorCode::DegenerateImage, "q* = p - theta*q is zero");
    out.pstar = q + out.qstar * mode.eps;
    const long s1 = f1.is_zero() ? 0 : f1.degree().value();
    const auto s = static_cast<unsigned>(std::max(s1, f2.degree().value()));
    const Poly shift = Poly::variable(K, 1, 0) + Poly::constant(mode.theta, 1);
    const Poly img = y_minus(K, mode.eps);
    out.f1star = subst(reverse_to(subst(f1, shift), s), img);
    out.f2star = subst(reverse_to(subst(f2, shift), s), img);
  }
  const RatFunc before = ratio_value(f1, f2, p, q);
  const RatFunc after = ratio_value(out.f1star, out.f2star, out.pstar, out.qstar);
  require(before == after, ErrorCode::InternalAlarm, "transformed generator changes the function");
  return out;
}

std::optional<Regenerated> regenerate_integral(const Poly& p, const Poly& q, const ReducedPair& g) {
  check_ratio(p, q);
  check_field(p, g);
  if (g.f1.degree() > g.f2.degree()) return Regenerated{p, q, g};
  if (g.f2.is_constant()) return std::nullopt;
  for (const auto& root : roots_in_K(g.f2)) {
    const ProjPoint theta = ProjPoint::finite(root.value);
    if (ExtInt(static_cast<long>(root.multiplicity)) <= valuation(g.f1, theta)) continue;
    const PqTransMode mode{PqTransMode::Kind::Invert, FieldElem::zero(p.field()), root.value};
    PqTransResult t = pqtrans(p, q, g.f1, g.f2, mode);
    ReducedPair gs(t.f1star, t.f2star);
    require(integral_over_Kg(t.pstar, t.qstar, gs).integral, ErrorCode::InternalAlarm,
            "regenerated generator is not integral");
    return Regenerated{std::move(t.pstar), std::move(t.qstar), std::move(gs)};
  }
  return std::nullopt;
}

std::optional<std::size_t> integral_over_KG(const Poly& p, const Poly& q, std::span<const ReducedPair> G) {
  check_ratio(p, q);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (integral_over_Kg(p, q, G[i]).integral) return i;
  }
  return std::nullopt;
}

}  // namespace ratmaps
