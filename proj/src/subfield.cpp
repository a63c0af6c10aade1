#include "ratmaps/subfield.hpp"

#include <algorithm>

#include "ratmaps/error.hpp"
#include "ratmaps/expr.hpp"
#include "ratmaps/linalg.hpp"

namespace ratmaps {

namespace {

void check_pair_ring(const Poly& a, const Poly& b) {
  require(a.field() == b.field() && a.nvars() == b.nvars(), ErrorCode::RingMismatch,
          "polynomials over different rings");
}

/// sum c_i y1^i.
Poly uni_from(const linalg::Vec& c, std::size_t offset, std::size_t count, const Field& field) {
  Poly f(field, 1);
  for (std::size_t i = 0; i < count; ++i) f.add_term(Monomial{static_cast<std::uint32_t>(i)}, c[offset + i]);
  return f;
}

/// Drops every variable except x1.
Poly only_x1(const Poly& a) {
  Poly out(a.field(), 1);
  for (const auto& [m, c] : a.terms()) out.add_term(Monomial{m[0]}, c);
  return out;
}

std::vector<Poly> clear_denominators(std::span<const RatFunc> v) {
  const Poly L = common_denominator(v);
  std::vector<Poly> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.num() * divexact(L, r.den()));
  return out;
}

/// All exponent vectors in k variables of total degree at most d.
void monomials_upto(std::size_t k, unsigned d, Monomial& cur, std::size_t at, std::vector<Monomial>& out) {
  if (at == k) {
    out.push_back(cur);
    return;
  }
  const unsigned used = total_degree(cur);
  for (unsigned e = 0; used + e <= d; ++e) {
    cur[at] = e;
    monomials_upto(k, d, cur, at + 1, out);
  }
  cur[at] = 0;
}

/// One nontrivial relation among the chosen components of degree at most d.
std::optional<Poly> find_relation(std::span<const RatFunc> comps, std::span<const std::size_t> chosen,
                                  unsigned d, std::size_t m) {
  const std::size_t k = chosen.size();
  std::vector<Monomial> monos;
  Monomial cur(k, 0);
  monomials_upto(k, d, cur, 0, monos);

  std::vector<std::vector<RatFunc>> powers(k);
  for (std::size_t i = 0; i < k; ++i) {
    const RatFunc& c = comps[chosen[i]];
    powers[i].push_back(RatFunc::constant(FieldElem::one(c.field()), c.nvars()));
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * c);
  }
  std::vector<RatFunc> values;
  values.reserve(monos.size());
  for (const auto& mono : monos) {
    RatFunc v = powers[0][0];
    for (std::size_t i = 0; i < k; ++i) v *= powers[i][mono[i]];
    values.push_back(std::move(v));
  }
  const auto cleared = clear_denominators(values);
  const auto rel = linalg::linear_relations(cleared);
  if (rel.empty()) return std::nullopt;
  Poly out(comps.front().field(), m);
  for (std::size_t j = 0; j < monos.size(); ++j) {
    Monomial full(m, 0);
    for (std::size_t i = 0; i < k; ++i) full[chosen[i]] = monos[j][i];
    out.add_term(full, rel.front()[j]);
  }
  return out;
}

bool all_zero(std::span<const Poly> v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

/// Monic gcd allowing an all-zero tuple (gcd 0).
Poly gcd_or_zero(std::span<const Poly> v) {
  if (all_zero(v)) return Poly::zero(v.front().field(), v.front().nvars());
  return gcd_many(v);
}

}  // namespace

// ---------------------------------------------------------------- Mobius

Mobius Mobius::identity(const Field& field) {
  const auto one = FieldElem::one(field);
  const auto zero = FieldElem::zero(field);
  return {one, zero, zero, one};
}

FieldElem Mobius::det() const { return t11 * t22 - t12 * t21; }

Mobius Mobius::inverse() const {
  const FieldElem d = det();
  require(!d.is_zero(), ErrorCode::InvalidArgument, "singular Mobius matrix");
  const FieldElem inv = d.inverse();
  return {t22 * inv, -t12 * inv, -t21 * inv, t11 * inv};
}

std::pair<Poly, Poly> Mobius::apply(const Poly& p, const Poly& q) const {
  return {p * t11 + q * t12, p * t21 + q * t22};
}

bool Mobius::is_scalar() const { return t12.is_zero() && t21.is_zero() && t11 == t22 && !t11.is_zero(); }

bool Mobius::projectively_equal(const Mobius& o) const {
  const FieldElem a[4] = {t11, t12, t21, t22};
  const FieldElem b[4] = {o.t11, o.t12, o.t21, o.t22};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return std::any_of(std::begin(a), std::end(a), [](const FieldElem& e) { return !e.is_zero(); }) &&
         std::any_of(std::begin(b), std::end(b), [](const FieldElem& e) { return !e.is_zero(); });
}

Mobius operator*(const Mobius& a, const Mobius& b) {
  return {a.t11 * b.t11 + a.t12 * b.t21, a.t11 * b.t12 + a.t12 * b.t22,
          a.t21 * b.t11 + a.t22 * b.t21, a.t21 * b.t12 + a.t22 * b.t22};
}

// ---------------------------------------------------------------- trdeg

std::size_t trdeg_rank(const RatMap& H, bool adjoin_t) {
  require(H.size() > 0, ErrorCode::InvalidArgument, "empty map");
  require(H.field().is_rationals(), ErrorCode::CharPUnsupported,
          "Jacobian rank equals the transcendence degree only in characteristic 0");
  RatMatrix J = jacobian(H);
  if (adjoin_t) {
    // d(t H_i)/dx_j = t dH_i/dx_j and d(t H_i)/dt = H_i; scaling columns by t keeps the rank.
    for (std::size_t i = 0; i < H.size(); ++i) J[i].push_back(H[i]);
  }
  return matrix_rank(J);
}

DependenceEstimate trdeg_bounded_dependence(const RatMap& H, bool adjoin_t, unsigned degree_bound) {
  require(degree_bound >= 1, ErrorCode::InvalidArgument, "degree bound must be at least 1");
  require(H.size() > 0, ErrorCode::InvalidArgument, "empty map");
  std::vector<RatFunc> comps = H.comps();
  if (adjoin_t) {
    const std::size_t n = H.nvars() + 1;
    const RatFunc t(Poly::variable(H.field(), n, n - 1));
    for (auto& c : comps) c = c.embed(n) * t;
  }
  DependenceEstimate out;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    chosen.push_back(i);
    if (auto rel = find_relation(comps, chosen, degree_bound, comps.size())) {
      out.relations.push_back(std::move(*rel));
      chosen.pop_back();
    }
  }
  out.value = chosen.size();
  if (out.relations.empty()) {
    out.notes.push_back("no relation found up to degree " + std::to_string(degree_bound) +
                        "; the value is only an upper estimate");
  }
  return out;
}

// ---------------------------------------------------------------- gcd under substitution

Poly gcd_subst_uni(std::span<const Poly> f, const Poly& p) {
  require(!f.empty() && !all_zero(f), ErrorCode::AllZero, "all components are zero");
  for (const auto& c : f)
    require(c.nvars() == 1 && c.field() == p.field(), ErrorCode::RingMismatch, "f must live in K[y1]");
  const std::vector<Poly> img{p};
  const Poly lhs = compose(gcd_many(f), img).monic();
  std::vector<Poly> subst;
  for (const auto& c : f) subst.push_back(compose(c, img));
  const Poly rhs = gcd_or_zero(subst);
  require(lhs == rhs, ErrorCode::InternalAlarm,
          "gcd(f)(p) = " + print(lhs) + " but gcd(f(p)) = " + print(rhs));
  return lhs;
}

Poly gcd_subst_homog(std::span<const Poly> h, const Poly& p, const Poly& q) {
  check_pair_ring(p, q);
  require(!h.empty() && !all_zero(h), ErrorCode::AllZero, "all components are zero");
  for (const auto& c : h) {
    require(c.nvars() == 2 && c.field() == p.field(), ErrorCode::RingMismatch, "h must live in K[y1,y2]");
    require(c.is_zero() || c.is_homogeneous(), ErrorCode::NotHomogeneous, "h components must be homogeneous");
  }
  const std::vector<Poly> pq{p, q};
  require(is_primitive(pq), ErrorCode::NotPrimitivePair, "(p, q) is not primitive");
  const Poly lhs = compose(gcd_many(h), pq).monic();
  const Poly rhs = gcd_or_zero(evaluate_homog(h, p, q));
  require(lhs == rhs, ErrorCode::InternalAlarm,
          "gcd(h)(p,q) = " + print(lhs) + " but gcd(h(p,q)) = " + print(rhs));
  return lhs;
}

// ---------------------------------------------------------------- Mobius equivalence

std::optional<Mobius> mobius_equiv(const Poly& p, const Poly& q, const Poly& pstar, const Poly& qstar) {
  check_pair_ring(p, q);
  check_pair_ring(p, pstar);
  check_pair_ring(p, qstar);
  require(!RatFunc(p, q).is_constant(), ErrorCode::ConstantRatio, "p/q is constant");
  if (RatFunc(pstar, qstar).is_constant()) return std::nullopt;

  const std::vector<Poly> cols{qstar * p, qstar * q, -(pstar * p), -(pstar * q)};
  const auto kernel = linalg::linear_relations(cols);
  if (kernel.empty()) return std::nullopt;
  // A nonzero solution of qstar*A = pstar*B with A, B in span(p, q) is
  // automatically invertible when both ratios are nonconstant.
  const auto& v = kernel.front();
  Mobius T{v[0], v[1], v[2], v[3]};
  require(!T.det().is_zero(), ErrorCode::InternalAlarm, "singular solution of the Mobius system");
  const auto [a, b] = T.apply(p, q);
  require(!b.is_zero() && RatFunc(a, b) == RatFunc(pstar, qstar), ErrorCode::InternalAlarm,
          "Mobius solution does not reproduce p*/q*");
  return T;
}

// ---------------------------------------------------------------- unit combinations

std::optional<std::pair<FieldElem, FieldElem>> unit_combination(const Poly& p, const Poly& q) {
  check_pair_ring(p, q);
  require(!(p.is_constant() && q.is_constant()), ErrorCode::BothConstant, "p and q are both constant");
  require(gcd(p, q).is_one(), ErrorCode::NotCoprime, "gcd(p, q) is not 1");
  const std::vector<Poly> basis{p, q};
  const auto sol = linalg::express_in(basis, Poly::constant(p.field(), p.nvars(), 1));
  if (!sol) return std::nullopt;
  const FieldElem lambda = (*sol)[0];
  const FieldElem mu = (*sol)[1];
  require((p * lambda + q * mu).is_one(), ErrorCode::InternalAlarm, "unit combination check failed");
  return std::make_pair(lambda, mu);
}

EnotherChain enother_chain(const Poly& p, const Poly& q) {
  EnotherChain out;
  out.combo = unit_combination(p, q);
  out.has_unit_combo = out.combo.has_value();
  out.contains_nonconstant_poly = out.has_unit_combo;
  out.field_equals_Kpq = out.has_unit_combo;
  if (!out.has_unit_combo) return out;

  const Poly& r = p.is_constant() ? q : p;
  out.p_in_r = member_Kp(p, r);
  out.q_in_r = member_Kp(q, r);
  out.membership_verified = out.p_in_r.has_value() && out.q_in_r.has_value();
  require(out.membership_verified, ErrorCode::InternalAlarm,
          "a unit combination exists but p, q are not polynomials in " + print(r));
  out.generator = r;
  return out;
}

// ---------------------------------------------------------------- membership

std::optional<Poly> member_Kp(const Poly& r, const Poly& p) {
  check_pair_ring(r, p);
  require(!p.is_constant(), ErrorCode::ConstantP, "p is constant");
  if (r.is_zero()) return Poly::zero(r.field(), 1);
  const long k = r.degree().value() / p.degree().value();
  std::vector<Poly> basis{Poly::constant(r.field(), r.nvars(), 1)};
  for (long i = 1; i <= k; ++i) basis.push_back(basis.back() * p);
  const auto sol = linalg::express_in(basis, r);
  if (!sol) return std::nullopt;
  Poly F = uni_from(*sol, 0, basis.size(), r.field());
  require(compose(F, std::vector<Poly>{p}) == r, ErrorCode::InternalAlarm, "membership check failed");
  return F;
}

std::optional<std::pair<Poly, Poly>> member_Kpq(const RatFunc& r, const Poly& p, const Poly& q, unsigned bound) {
  check_pair_ring(p, q);
  require(!q.is_zero(), ErrorCode::ZeroDenominator, "q is zero");
  require(r.field() == p.field() && r.nvars() == p.nvars(), ErrorCode::RingMismatch,
          "r and (p, q) over different rings");
  const Field& K = p.field();
  std::vector<Poly> pp{Poly::constant(K, p.nvars(), 1)}, qq{pp.front()};
  for (unsigned e = 1; e <= bound; ++e) {
    pp.push_back(pp.back() * p);
    qq.push_back(qq.back() * q);
  }
  for (unsigned d = 0; d <= bound; ++d) {
    // Columns a_0..a_d then b_0..b_d of den(r) F1 - num(r) F2 = 0 with
    // F_k = sum c_j p^j q^(d-j).
    std::vector<Poly> hom;
    for (unsigned j = 0; j <= d; ++j) hom.push_back(pp[j] * qq[d - j]);
    std::vector<Poly> cols;
    for (const auto& b : hom) cols.push_back(r.den() * b);
    for (const auto& b : hom) cols.push_back(-(r.num() * b));
    for (const auto& v : linalg::linear_relations(cols)) {
      Poly F2(K, p.nvars());
      for (unsigned j = 0; j <= d; ++j) F2 += hom[j] * v[d + 1 + j];
      if (F2.is_zero()) continue;
      Poly f1 = uni_from(v, 0, d + 1, K);
      Poly f2 = uni_from(v, d + 1, d + 1, K);
      const Poly g = gcd(f1, f2);
      f1 = divexact(f1, g);
      f2 = divexact(f2, g);
      const FieldElem lc = f2.leading_coeff().inverse();
      f1 *= lc;
      f2 *= lc;
      const std::vector<Poly> fs{f1, f2};
      const auto vals = evaluate_at_ratio(fs, p, q);
      require(!vals[1].is_zero() && vals[0] / vals[1] == r, ErrorCode::InternalAlarm,
              "membership solution does not reproduce r");
      return std::make_pair(std::move(f1), std::move(f2));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- univariate generator

std::pair<Poly, Poly> luroth_generator_1var(std::span<const RatFunc> rs) {
  require(!rs.empty(), ErrorCode::AllConstant, "no input functions");
  const Field K = rs.front().field();
  for (const auto& r : rs)
    require(r.nvars() == 1 && r.field() == K, ErrorCode::RingMismatch, "inputs must live in K(x1)");

  // Work in K[x1, y] with x1 as variable 0 and y as variable 1.
  const std::vector<std::size_t> to_y{1};
  std::vector<Poly> rels;
  unsigned bound = 0;
  for (const auto& r : rs) {
    if (r.is_constant()) continue;
    const Poly n_y = r.num().remap(2, to_y);
    const Poly d_y = r.den().remap(2, to_y);
    rels.push_back(n_y * r.den().embed(2) - r.num().embed(2) * d_y);
    bound = std::max<unsigned>(bound, static_cast<unsigned>(std::max(r.num().degree().value(),
                                                                     r.den().degree().value())));
  }
  require(!rels.empty(), ErrorCode::AllConstant, "every input is constant");

  Poly G = gcd_many(rels);
  G = divexact(G, content_in(G, 1));
  const auto coeffs = G.coefficients_in(1);
  const RatFunc lc(only_x1(coeffs.back()));

  std::optional<RatFunc> best;
  long best_size = 0;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
    const RatFunc c = RatFunc(only_x1(coeffs[k])) / lc;
    if (c.is_constant()) continue;
    const long size = c.num().degree().value() + c.den().degree().value();
    if (!best || size < best_size) {
      best = c;
      best_size = size;
    }
  }
  require(best.has_value(), ErrorCode::InternalAlarm, "minimal polynomial has only constant coefficients");

  Poly p = best->num();
  Poly q = best->den();
  if (q.is_constant()) {
    // Normalize a polynomial generator by an affine change: monic, no constant term.
    p = p * q.constant_value().inverse();
    p -= Poly::constant(p.coeff(Monomial{0}), 1);
    p = p.monic();
    q = Poly::constant(K, 1, 1);
  }
  for (const auto& r : rs) {
    require(member_Kpq(r, p, q, std::max(bound, 1U)).has_value(), ErrorCode::InternalAlarm,
            "input " + print(r) + " not found in K(" + print(RatFunc(p, q)) + ")");
  }
  return {p, q};
}

// ---------------------------------------------------------------- witness verification

bool tuple_is_homogeneous(std::span<const Poly> tuple) {
  std::optional<ExtInt> deg;
  for (const auto& c : tuple) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    if (deg && *deg != c.degree()) return false;
    deg = c.degree();
  }
  return true;
}

Report hmgrk2_verify(const RatMap& H, const LurothWitness& w) {
  require(H.size() > 0, ErrorCode::InvalidArgument, "empty map");
  check_pair_ring(w.p, w.q);
  require(w.p.field() == H.field() && w.p.nvars() == H.nvars(), ErrorCode::RingMismatch,
          "witness (p, q) and H over different rings");
  require(w.g.field() == H.field() && w.g.nvars() == H.nvars(), ErrorCode::RingMismatch,
          "witness g and H over different rings");
  require(!w.g.is_zero(), ErrorCode::ZeroScalar, "g is zero");
  require(!(w.p.is_constant() && w.q.is_constant()), ErrorCode::BothConstant, "p and q are both constant");
  const std::vector<Poly> pq{w.p, w.q};
  require(is_primitive(pq), ErrorCode::NotPrimitivePair, "(p, q) is not primitive");
  if (w.h) {
    w.h->validate();
    require(w.h->h.size() == H.size(), ErrorCode::InvalidArgument, "h has the wrong length");
  }

  Report rep;
  rep.name = "hmgrk2-verify";
  const std::vector<Poly> hpq =
      w.h ? evaluate_homog(w.h->h, w.p, w.q) : std::vector<Poly>(H.size(), Poly::zero(H.field(), H.nvars()));
  for (std::size_t j = 0; j < H.size(); ++j) {
    require(w.g * RatFunc(hpq[j]) == H[j], ErrorCode::WitnessRejected,
            "H differs from g*h(p,q) in component " + std::to_string(j + 1));
  }
  if (w.h) require(is_primitive(w.h->h), ErrorCode::NotPrimitive, "h is not primitive");
  rep.add("identity H = g*h(p,q)", true);
  rep.value("h(p,q)", print(std::span<const Poly>(hpq), x_names(H.nvars())));

  const bool char0 = H.field().is_rationals();
  std::size_t tH = 0;
  if (char0) {
    tH = trdeg_rank(H, true);
    const std::size_t tT = trdeg_rank(RatMap::from_polys(hpq), true);
    rep.value("trdeg K(tH)", std::to_string(tH));
    rep.value("trdeg K(t*h(p,q))", std::to_string(tT));
    rep.add("trdeg K(tH) = trdeg K(t*h(p,q))", tH == tT);
  } else {
    rep.skip("trdeg K(tH) = trdeg K(t*h(p,q))", "transcendence degree not certified in characteristic p");
  }

  if (w.h) {
    const bool lhs = is_primitive(hpq);
    const bool rhs = is_primitive(w.h->h);
    rep.add("h(p,q) primitive <=> h primitive", lhs == rhs,
            std::string("h(p,q) ") + (lhs ? "is" : "is not") + " primitive");
  } else {
    rep.skip("h(p,q) primitive <=> h primitive", "h is zero");
  }

  const bool h_constant =
      !w.h || std::all_of(w.h->h.begin(), w.h->h.end(), [](const Poly& c) { return c.is_constant(); });
  if (char0) {
    rep.add("trdeg K(tH) <= 1 <=> h constant", (tH <= 1) == h_constant,
            std::string("h ") + (h_constant ? "is" : "is not") + " constant");
  } else {
    rep.skip("trdeg K(tH) <= 1 <=> h constant", "transcendence degree not certified in characteristic p");
  }

  if (w.h) {
    try {
      const DegreeFormula d = degree_formula(*w.h, w.p, w.q);
      rep.add("degree formula", true);
      rep.value("deg h(p,q)", std::to_string(d.deg));
      rep.value("lowdeg h(p,q)", std::to_string(d.lowdeg));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InternalAlarm) throw;
      rep.add("degree formula", false, e.what());
    }
  } else {
    rep.skip("degree formula", "h is zero");
  }

  if (w.h && w.h->s > 0) {
    const bool lhs = tuple_is_homogeneous(hpq);
    const bool rhs = tuple_is_homogeneous(pq);
    rep.add("h(p,q) homogeneous <=> (p,q) homogeneous", lhs == rhs,
            std::string("(p,q) ") + (rhs ? "is" : "is not") + " homogeneous");
  } else {
    rep.skip("h(p,q) homogeneous <=> (p,q) homogeneous", "h is constant or zero");
  }

  rep.note("minimality of deg(p,q) among generators is assumed, not checked");
  rep.alarm = !rep.ok();
  return rep;
}

}  // namespace ratmaps
