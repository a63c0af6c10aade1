#include "ratmaps/gordan_noether.hpp"

#include <algorithm>

#include "ratmaps/error.hpp"
#include "ratmaps/expr.hpp"
#include "ratmaps/linalg.hpp"
#include "ratmaps/subfield.hpp"

namespace ratmaps {

namespace {

void check_square(const RatMap& H) {
  require(H.size() > 0 && H.size() == H.nvars(), ErrorCode::NotSquare,
          "expected n components in n variables, got " + std::to_string(H.size()) + " in " +
              std::to_string(H.size() ? H.nvars() : 0));
}

bool all_zero(std::span<const RatFunc> v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& r) { return r.is_zero(); });
}

bool is_zero_poly_vector(std::span<const Poly> v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

/// Row i of the result: sum_j a[i][j] v[j], polynomial entries.
std::vector<Poly> poly_mat_vec(const std::vector<std::vector<Poly>>& a, std::span<const Poly> v) {
  std::vector<Poly> out;
  for (const auto& row : a) {
    Poly s(v.front().field(), v.front().nvars());
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
    out.push_back(std::move(s));
  }
  return out;
}

/// Coefficient vectors v_k (over K^n) of f = sum_k v_k y1^k.
std::vector<std::vector<FieldElem>> coefficient_vectors(std::span<const Poly> f) {
  long D = -1;
  for (const auto& c : f) D = std::max(D, c.degree_in(0));
  std::vector<std::vector<FieldElem>> out;
  for (long k = 0; k <= D; ++k) {
    std::vector<FieldElem> v;
    for (const auto& c : f) v.push_back(c.coeff(Monomial{static_cast<std::uint32_t>(k)}));
    out.push_back(std::move(v));
  }
  return out;
}

/// grad(a) . v = 0 for every coefficient vector v of f.
bool gradient_kills(const Poly& a, std::span<const Poly> f) {
  for (const auto& v : coefficient_vectors(f)) {
    Poly s(a.field(), a.nvars());
    for (std::size_t j = 0; j < v.size(); ++j) s += a.derivative(j) * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

RatFunc gradient_dot(const RatFunc& a, std::span<const RatFunc> v) {
  RatFunc s = RatFunc::constant(FieldElem::zero(a.field()), a.nvars());
  for (std::size_t j = 0; j < v.size(); ++j) s += a.derivative(j) * v[j];
  return s;
}

std::vector<std::vector<Poly>> poly_jacobian(std::span<const Poly> h) {
  std::vector<std::vector<Poly>> J(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.front().nvars(); ++j) J[i].push_back(h[i].derivative(j));
  return J;
}

bool equals_scaled(const RatMap& H, const RatFunc& g, std::span<const RatFunc> v) {
  for (std::size_t j = 0; j < H.size(); ++j)
    if (g * v[j] != H[j]) return false;
  return true;
}

struct WitnessVerdict {
  bool ok = true;
  std::string why;
  void reject(std::string w) {
    if (ok) why = std::move(w);
    ok = false;
  }
};

WitnessVerdict verify_witness(const RatMap& H, const GNWitness& w) {
  const std::size_t n = H.size();
  require(w.p.field() == H.field() && w.p.nvars() == n && w.q.field() == H.field() && w.q.nvars() == n,
          ErrorCode::RingMismatch, "witness (p, q) and H over different rings");
  require(w.g.field() == H.field() && w.g.nvars() == n, ErrorCode::RingMismatch,
          "witness g and H over different rings");
  WitnessVerdict v;
  if (!gcd(w.p, w.q).is_one()) v.reject("gcd(p, q) is not 1");

  if (w.kind == GNWitness::Kind::Cond3) {
    std::vector<Poly> hpq(n, Poly::zero(H.field(), n));
    if (w.h) {
      w.h->validate();
      require(w.h->h.size() == n, ErrorCode::InvalidArgument, "h has the wrong length");
      const std::uint64_t c = H.field().characteristic();
      if (w.h->s > 0 && c != 0 && w.h->s % c == 0) v.reject("the characteristic divides deg h");
      hpq = evaluate_homog(w.h->h, w.p, w.q);
    }
    const auto hr = RatMap::from_polys(hpq);
    if (!equals_scaled(H, w.g, hr.comps())) v.reject("H differs from g*h(p,q)");
    if (!is_zero_poly_vector(poly_mat_vec(poly_jacobian(hpq), hpq))) v.reject("J(h(p,q))*h(p,q) is not zero");
    return v;
  }

  require(w.f.size() == n, ErrorCode::InvalidArgument, "f has the wrong length");
  for (const auto& c : w.f)
    require(c.nvars() == 1 && c.field() == H.field(), ErrorCode::RingMismatch, "f must live in K[y1]");
  const auto fpq = evaluate_at_ratio(w.f, w.p, w.q);
  if (!equals_scaled(H, w.g, fpq)) v.reject("H differs from g*f(p/q)");
  if (!gradient_kills(w.p, w.f)) v.reject("Jp*f is not zero");
  if (!gradient_kills(w.q, w.f)) v.reject("Jq*f is not zero");
  if (w.kind == GNWitness::Kind::Cond5) {
    if (is_zero_poly_vector(w.f) || !gcd_many(w.f).is_one()) v.reject("gcd of f is not 1");
  }
  return v;
}

}  // namespace

const char* witness_kind_name(GNWitness::Kind k) {
  switch (k) {
    case GNWitness::Kind::Cond3: return "cond3";
    case GNWitness::Kind::Cond4: return "cond4";
    case GNWitness::Kind::Cond5: return "cond5";
  }
  return "cond4";
}

bool qt_condition(const RatMap& H) {
  check_square(H);
  const RatMatrix J = jacobian(H);
  const RatVector lhs = mat_vec(J, H.comps());
  const RatFunc tr = trace(J);
  for (std::size_t k = 0; k < H.size(); ++k)
    if (lhs[k] != tr * H[k]) return false;
  return true;
}

bool jh_times_h_zero(const RatMap& H) {
  check_square(H);
  return all_zero(mat_vec(jacobian(H), H.comps()));
}

Report gquasi_invariance(const RatMap& H, const RatFunc& g) {
  check_square(H);
  require(!g.is_zero(), ErrorCode::ZeroScalar, "g is zero");
  require(g.field() == H.field() && g.nvars() == H.nvars(), ErrorCode::RingMismatch,
          "g and H over different rings");
  const bool a = qt_condition(H);
  const bool b = qt_condition(H.scaled(g));
  Report rep;
  rep.name = "gquasi-invariance";
  rep.value("condition for H", a ? "true" : "false");
  rep.value("condition for gH", b ? "true" : "false");
  rep.add("JH*H = trJH*H <=> J(gH)*gH = trJ(gH)*gH", a == b);
  rep.alarm = a != b;
  return rep;
}

bool translation_invariance(const RatMap& H) {
  check_square(H);
  const std::size_t n = H.size();
  const Field& K = H.field();
  const RatFunc t(Poly::variable(K, n + 1, n));
  std::vector<RatFunc> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(RatFunc(Poly::variable(K, n + 1, i)) + t * H[i].embed(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    RatFunc c;
    try {
      c = compose(H[k], images);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IndeterminateForm) throw;
      fail(ErrorCode::IndeterminateComposition, "H(x + tH) is undefined: " + std::string(e.what()));
    }
    if (c != H[k].embed(n + 1)) return false;
  }
  return true;
}

bool nilpotent_jacobian(const RatMap& H) {
  check_square(H);
  const RatMatrix J = jacobian(H);
  RatMatrix P = J;
  for (std::size_t e = 1; e < H.size(); ++e) {
    if (is_zero_matrix(P)) return true;
    P = mat_mul(P, J);
  }
  return is_zero_matrix(P);
}

bool bivariate_core_check(std::span<const Poly> core) {
  require(!core.empty() && core.size() == core.front().nvars(), ErrorCode::NotSquare,
          "core must have n components in n variables");
  const std::size_t n = core.size();
  std::vector<std::size_t> to_y(n);
  for (std::size_t i = 0; i < n; ++i) to_y[i] = n + i;
  std::vector<Poly> hy;
  for (const auto& c : core) {
    require(c.nvars() == n && c.field() == core.front().field(), ErrorCode::RingMismatch,
            "core components over different rings");
    hy.push_back(c.remap(2 * n, to_y));
  }
  std::vector<std::vector<Poly>> J(n);
  Poly tr(core.front().field(), 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) J[i].push_back(core[i].derivative(j).embed(2 * n));
    tr += J[i][i];
  }
  if (!is_zero_poly_vector(poly_mat_vec(J, hy))) return false;
  return std::all_of(hy.begin(), hy.end(), [&](const Poly& c) { return (tr * c).is_zero(); });
}

Report gn_classify(const RatMap& H, std::span<const GNWitness> witnesses) {
  check_square(H);
  Report rep;
  rep.name = "gn-classify";
  const bool char0 = H.field().is_rationals();
  if (char0) {
    const std::size_t tr = trdeg_rank(H, true);
    rep.value("trdeg K(tH)", std::to_string(tr));
    require(tr <= 2, ErrorCode::TrdegTooLarge, "trdeg K(tH) = " + std::to_string(tr) + " exceeds 2");
  } else {
    rep.note("trdeg K(tH) <= 2 is assumed in characteristic " + std::to_string(H.field().characteristic()));
  }

  const bool c1 = qt_condition(H);
  rep.add("(1) JH*H = trJH*H", c1);
  rep.value("JH*H = 0", jh_times_h_zero(H) ? "true" : "false");

  bool c2 = true;
  if (H.is_zero()) {
    rep.add("(2) JH~*H~(y) = trJH~*H~(y) = 0", true, "zero map");
    rep.add("(3) h = 0 branch", true, "zero map");
  } else {
    const PrimitivePart pp = primitive_part(H);
    c2 = bivariate_core_check(pp.core);
    rep.add("(2) JH~*H~(y) = trJH~*H~(y) = 0", c2);
    rep.value("g", print(pp.g));
    rep.value("H~", print(std::span<const Poly>(pp.core), x_names(H.nvars())));
    if (char0) {
      const bool zero = jh_times_h_zero(RatMap::from_polys(pp.core));
      rep.value("JH~*H~ = 0", zero ? "true" : "false");
      if (zero != c1) rep.note("JH~*H~ = 0 differs from condition (1) on this input");
    }
  }

  bool accepted = false;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& w = witnesses[i];
    const WitnessVerdict v = verify_witness(H, w);
    const std::string label = w.kind == GNWitness::Kind::Cond3   ? "(3)"
                              : w.kind == GNWitness::Kind::Cond4 ? "(4)"
                                                                 : "(5)";
    rep.add(label + " witness " + std::to_string(i + 1), v.ok, v.ok ? "verified" : v.why);
    accepted = accepted || v.ok;
  }

  if (c1 != c2 || (accepted && !c1)) {
    rep.alarm = true;
    rep.note("conditions disagree although they are equivalent for this input");
  }
  return rep;
}

bool flem_conclude(std::span<const Poly> f, const Poly& p, const Poly& q, FlemMode mode) {
  require(p.field() == q.field() && p.nvars() == q.nvars(), ErrorCode::RingMismatch,
          "p and q over different rings");
  require(gcd(p, q).is_one(), ErrorCode::NotCoprime, "gcd(p, q) is not 1");
  require(!(p.degree() > q.degree()), ErrorCode::DegreeOrder, "deg p exceeds deg q");
  require(f.size() == p.nvars(), ErrorCode::InvalidArgument, "f must have one component per variable");
  for (const auto& c : f)
    require(c.nvars() == 1 && c.field() == p.field(), ErrorCode::RingMismatch, "f must live in K[y1]");

  const RatFunc r(p, q);
  const auto fr = evaluate_at_ratio(f, p, q);
  bool hyp = gradient_dot(r, fr).is_zero();
  if (mode == FlemMode::I) {
    std::vector<Poly> df;
    for (const auto& c : f) df.push_back(c.derivative(0));
    hyp = hyp && gradient_dot(r, evaluate_at_ratio(df, p, q)).is_zero();
  } else {
    hyp = hyp && gradient_dot(RatFunc(q), fr).is_zero();
  }
  if (!hyp) return false;
  require(gradient_kills(p, f) && gradient_kills(q, f), ErrorCode::InternalAlarm,
          "hypothesis holds but Jp*f = Jq*f = 0 fails");
  return true;
}

Report constant_span_bound(const RatMap& H) {
  check_square(H);
  require(qt_condition(H), ErrorCode::PreconditionNotVerified, "JH*H = trJH*H does not hold");
  const std::size_t n = H.size();
  Report rep;
  rep.name = "span-bound";
  std::size_t d = 0;
  std::size_t rk = 0;
  std::vector<std::string> basis;
  if (!H.is_zero()) {
    const PrimitivePart pp = primitive_part(H);
    linalg::Matrix rows = linalg::coefficient_matrix(pp.core);
    linalg::rref(rows);
    for (const auto& row : rows) {
      if (std::all_of(row.begin(), row.end(), [](const FieldElem& e) { return e.is_zero(); })) continue;
      std::string s = "(";
      for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].to_string();
      basis.push_back(s + ")");
    }
    d = basis.size();
    rk = matrix_rank(jacobian(pp.core));
  }
  std::string vectors = "[";
  for (std::size_t i = 0; i < basis.size(); ++i) vectors += (i ? ", " : "") + basis[i];
  rep.value("spanning_vectors", vectors + "]");
  rep.value("span_dimension", std::to_string(d));
  rep.value("rank_core", std::to_string(rk));
  rep.add("span dimension <= n - rk JH~", d + rk <= n,
          std::to_string(d) + " <= " + std::to_string(n) + " - " + std::to_string(rk));
  return rep;
}

}  // namespace ratmaps
