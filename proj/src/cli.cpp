#include "ratmaps/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratmaps/error.hpp"
#include "ratmaps/expr.hpp"
#include "ratmaps/gordan_noether.hpp"
#include "ratmaps/homog.hpp"
#include "ratmaps/integrality.hpp"
#include "ratmaps/subfield.hpp"

namespace ratmaps::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field = "q";
  bool json = false;
  unsigned bound = 6;
  std::string in_file;
  std::size_t nvars = 0;
  // Per-command options; only the ones a command registers are meaningful.
  int s = -1;
  bool with_t = false;
  bool inverse = false;
  std::string theta = "inf";
  std::vector<std::string> g;
  std::string mode = "shift";
  std::string eps = "0";
  std::string witness;
  std::string flem_case = "i";
  std::vector<std::string> exprs;
};

struct Output {
  json j = json::object();
  std::optional<Report> report;
};

Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(s.substr(3), &used);
      if (used != s.size() - 3) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("--field expects q or fp:P, got '" + s + "'");
    }
    return Field::prime(p);
  }
  throw UsageError("--field expects q or fp:P, got '" + s + "'");
}

std::string field_label(const std::string& s) {
  try {
    return parse_field(s).to_string();
  } catch (const std::exception&) {
    return s;
  }
}

class Session {
 public:
  Session(Options opt, Field field) : opt_(std::move(opt)), field_(field) {
    inputs_ = opt_.exprs;
    if (!opt_.in_file.empty()) {
      std::ifstream in(opt_.in_file);
      if (!in) throw UsageError("cannot read '" + opt_.in_file + "'");
      std::string line;
      while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        inputs_.push_back(line);
      }
    }
  }

  const Field& field() const { return field_; }
  const Options& opt() const { return opt_; }
  std::size_t count() const { return inputs_.size(); }

  void expect(std::size_t lo, std::size_t hi, const std::string& usage) const {
    if (inputs_.size() < lo || inputs_.size() > hi)
      throw UsageError("expected " + usage + ", got " + std::to_string(inputs_.size()) + " expression(s)");
  }

  Expr expr(std::size_t i) const { return parse(inputs_.at(i)); }
  std::vector<Expr> exprs(std::size_t from = 0) const {
    std::vector<Expr> out;
    for (std::size_t i = from; i < inputs_.size(); ++i) out.push_back(parse(inputs_[i]));
    return out;
  }

  /// Number of x-variables for a set of expressions; square maps need at least min_n.
  VarNames x_ring(const std::vector<const Expr*>& es, std::size_t min_n = 1) const {
    std::size_t n = min_n;
    std::size_t used = 0;
    for (const Expr* e : es) used = std::max(used, max_x_index(*e));
    n = std::max(n, used);
    if (opt_.nvars) {
      if (opt_.nvars < used) throw UsageError("--nvars is smaller than the highest variable index used");
      n = std::max(opt_.nvars, min_n);
    }
    return x_names(n);
  }

 private:
  Options opt_;
  Field field_;
  std::vector<std::string> inputs_;
};

std::vector<Poly> polys_of(const std::vector<RatFunc>& v) {
  std::vector<Poly> out;
  for (const auto& r : v) {
    require(r.is_polynomial(), ErrorCode::InvalidArgument, "expected polynomial components");
    out.push_back(r.num());
  }
  return out;
}

std::vector<Poly> tuple_polys(const Expr& e, const Field& K, const VarNames& names) {
  return polys_of(elaborate_tuple(e, K, names));
}

FieldElem scalar(const std::string& s, const Field& K) {
  const RatFunc r = elaborate(parse(s), K, VarNames{});
  return r.constant_value();
}

std::string show(std::span<const Poly> v, const VarNames& names) { return print(v, names); }

HomogTuple homog_tuple(std::vector<Poly> h) {
  unsigned s = 0;
  for (const auto& c : h) {
    if (!c.is_zero()) {
      s = static_cast<unsigned>(c.degree().value());
      break;
    }
  }
  HomogTuple out{std::move(h), s};
  out.validate();
  return out;
}

ReducedPair pair_from(const std::string& text, const Field& K) {
  const auto cut = text.find(';');
  const Poly f1 = elaborate_poly(parse(text.substr(0, cut)), K, uni_names());
  const Poly f2 = cut == std::string::npos ? Poly::constant(K, 1, 1)
                                           : elaborate_poly(parse(text.substr(cut + 1)), K, uni_names());
  return ReducedPair(f1, f2);
}

std::string mobius_text(const Mobius& T) {
  return "[[" + T.t11.to_string() + ", " + T.t12.to_string() + "], [" + T.t21.to_string() + ", " +
         T.t22.to_string() + "]]";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("invalid JSON in '" + path + "': " + e.what());
  }
}

std::string field_str(const json& o, const char* key) {
  if (!o.contains(key) || !o[key].is_string()) throw UsageError(std::string("witness needs a string field '") + key + "'");
  return o[key].get<std::string>();
}

// ------------------------------------------------------------------ commands

using Handler = std::function<void(const Session&, Output&)>;

void cmd_gcd(const Session& S, Output& o) {
  S.expect(1, SIZE_MAX, "at least one polynomial");
  const auto es = S.exprs();
  std::vector<const Expr*> ptrs;
  for (const auto& e : es) ptrs.push_back(&e);
  const auto names = S.x_ring(ptrs);
  std::vector<Poly> ps;
  for (const auto& e : es) ps.push_back(elaborate_poly(e, S.field(), names));
  o.j["gcd"] = print(gcd_many(ps), names);
}

void cmd_primpart(const Session& S, Output& o) {
  S.expect(1, 1, "one tuple");
  const Expr e = S.expr(0);
  const auto names = S.x_ring({&e});
  const PrimitivePart pp = primitive_part(RatMap(elaborate_tuple(e, S.field(), names)));
  o.j["g"] = print(pp.g, names);
  o.j["core"] = show(pp.core, names);
}

void cmd_jacobian(const Session& S, Output& o) {
  S.expect(1, 1, "one tuple");
  const Expr e = S.expr(0);
  const auto names = S.x_ring({&e});
  const RatMatrix J = jacobian(RatMap(elaborate_tuple(e, S.field(), names)));
  json rows = json::array();
  for (const auto& row : J) rows.push_back(print(std::span<const RatFunc>(row), names));
  o.j["matrix"] = rows;
}

void cmd_homogenize(const Session& S, Output& o) {
  S.expect(1, 1, "one univariate tuple");
  std::vector<Poly> f = tuple_polys(S.expr(0), S.field(), uni_names());
  UniTuple u = S.opt().s >= 0 ? UniTuple{std::move(f), static_cast<unsigned>(S.opt().s)}
                              : UniTuple::tight(std::move(f));
  const HomogTuple h = homogenize(u);
  o.j["s"] = h.s;
  o.j["h"] = show(h.h, bi_names());
}

void cmd_dehomogenize(const Session& S, Output& o) {
  S.expect(1, 1, "one homogeneous tuple");
  const UniTuple f = dehomogenize(homog_tuple(tuple_polys(S.expr(0), S.field(), bi_names())));
  o.j["bound"] = f.bound;
  o.j["f"] = show(f.f, uni_names());
}

void cmd_divisor_transport(const Session& S, Output& o) {
  S.expect(1, 1, "one polynomial");
  if (S.opt().inverse) {
    o.j["g"] = print(divisor_transport_inverse(elaborate_poly(S.expr(0), S.field(), bi_names())), uni_names());
  } else {
    o.j["g~"] = print(divisor_transport(elaborate_poly(S.expr(0), S.field(), uni_names())), bi_names());
  }
}

void cmd_trdeg(const Session& S, Output& o) {
  S.expect(1, 1, "one tuple");
  const Expr e = S.expr(0);
  const auto names = S.x_ring({&e});
  const RatMap H(elaborate_tuple(e, S.field(), names));
  o.j["with_t"] = S.opt().with_t;
  if (S.field().is_rationals()) {
    o.j["method"] = "jacobian-rank";
    o.j["value"] = trdeg_rank(H, S.opt().with_t);
    o.j["certified"] = true;
    o.j["relations"] = json::array();
    o.j["notes"] = json::array();
    return;
  }
  const DependenceEstimate d = trdeg_bounded_dependence(H, S.opt().with_t, S.opt().bound);
  VarNames ys;
  for (std::size_t i = 1; i <= H.size(); ++i) ys.push_back("y" + std::to_string(i));
  o.j["method"] = "bounded-dependence";
  o.j["value"] = d.value;
  o.j["certified"] = d.certified;
  json rels = json::array();
  for (const auto& r : d.relations) rels.push_back(print(r, ys));
  o.j["relations"] = rels;
  o.j["notes"] = d.notes;
}

void cmd_gcd_subst(const Session& S, Output& o) {
  if (S.count() == 0) throw UsageError("expected uni or homog followed by expressions");
  const Expr mode = S.expr(0);
  if (mode.kind != Expr::Kind::Variable || (mode.text != "uni" && mode.text != "homog"))
    throw UsageError("first argument must be uni or homog");
  if (mode.text == "uni") {
    S.expect(3, 3, "uni f p");
    const Expr p = S.expr(2);
    const auto names = S.x_ring({&p});
    const auto f = tuple_polys(S.expr(1), S.field(), uni_names());
    o.j["mode"] = "uni";
    o.j["gcd"] = print(gcd_subst_uni(f, elaborate_poly(p, S.field(), names)), names);
  } else {
    S.expect(4, 4, "homog h p q");
    const Expr p = S.expr(2), q = S.expr(3);
    const auto names = S.x_ring({&p, &q});
    const auto h = tuple_polys(S.expr(1), S.field(), bi_names());
    o.j["mode"] = "homog";
    o.j["gcd"] = print(gcd_subst_homog(h, elaborate_poly(p, S.field(), names), elaborate_poly(q, S.field(), names)),
                       names);
  }
}

/// Elaborates all inputs as polynomials in one x-ring.
std::pair<std::vector<Poly>, VarNames> x_polys(const Session& S, std::size_t n, const std::string& usage) {
  S.expect(n, n, usage);
  const auto es = S.exprs();
  std::vector<const Expr*> ptrs;
  for (const auto& e : es) ptrs.push_back(&e);
  const auto names = S.x_ring(ptrs);
  std::vector<Poly> out;
  for (const auto& e : es) out.push_back(elaborate_poly(e, S.field(), names));
  return {out, names};
}

void cmd_mobius_equiv(const Session& S, Output& o) {
  const auto [v, names] = x_polys(S, 4, "p q p* q*");
  const auto T = mobius_equiv(v[0], v[1], v[2], v[3]);
  o.j["equivalent"] = T.has_value();
  o.j["T"] = T ? json(mobius_text(*T)) : json(nullptr);
}

void cmd_unit_combo(const Session& S, Output& o) {
  const auto [v, names] = x_polys(S, 2, "p q");
  const auto c = unit_combination(v[0], v[1]);
  o.j["exists"] = c.has_value();
  o.j["lambda"] = c ? json(c->first.to_string()) : json(nullptr);
  o.j["mu"] = c ? json(c->second.to_string()) : json(nullptr);
}

void cmd_enother(const Session& S, Output& o) {
  const auto [v, names] = x_polys(S, 2, "p q");
  const EnotherChain c = enother_chain(v[0], v[1]);
  o.j["has_unit_combo"] = c.has_unit_combo;
  o.j["contains_nonconstant_poly"] = c.contains_nonconstant_poly;
  o.j["field_equals_Kpq"] = c.field_equals_Kpq;
  o.j["membership_verified"] = c.membership_verified;
  o.j["lambda"] = c.combo ? json(c.combo->first.to_string()) : json(nullptr);
  o.j["mu"] = c.combo ? json(c.combo->second.to_string()) : json(nullptr);
  o.j["generator"] = c.generator ? json(print(*c.generator, names)) : json(nullptr);
  o.j["p_in_r"] = c.p_in_r ? json(print(*c.p_in_r, uni_names())) : json(nullptr);
  o.j["q_in_r"] = c.q_in_r ? json(print(*c.q_in_r, uni_names())) : json(nullptr);
}

void cmd_member_kp(const Session& S, Output& o) {
  const auto [v, names] = x_polys(S, 2, "r p");
  const auto F = member_Kp(v[0], v[1]);
  o.j["member"] = F.has_value();
  o.j["F"] = F ? json(print(*F, uni_names())) : json(nullptr);
}

void cmd_member_kpq(const Session& S, Output& o) {
  S.expect(3, 3, "r p q");
  const Expr r = S.expr(0), p = S.expr(1), q = S.expr(2);
  const auto names = S.x_ring({&r, &p, &q});
  const auto res = member_Kpq(elaborate(r, S.field(), names), elaborate_poly(p, S.field(), names),
                              elaborate_poly(q, S.field(), names), S.opt().bound);
  o.j["bound"] = S.opt().bound;
  o.j["found"] = res.has_value();
  o.j["f1"] = res ? json(print(res->first, uni_names())) : json(nullptr);
  o.j["f2"] = res ? json(print(res->second, uni_names())) : json(nullptr);
}

void cmd_luroth_gen(const Session& S, Output& o) {
  S.expect(1, SIZE_MAX, "at least one rational function in x1");
  std::vector<RatFunc> rs;
  for (const auto& e : S.exprs()) rs.push_back(elaborate(e, S.field(), x_names(1)));
  const auto [p, q] = luroth_generator_1var(rs);
  o.j["p"] = print(p, x_names(1));
  o.j["q"] = print(q, x_names(1));
  o.j["generator"] = print(RatFunc(p, q), x_names(1));
}

void cmd_hmgrk2(const Session& S, Output& o) {
  S.expect(1, 1, "one tuple");
  if (S.opt().witness.empty()) throw UsageError("hmgrk2-verify needs --witness FILE");
  const json w = read_json_file(S.opt().witness);
  const Expr H = S.expr(0);
  const Expr g = parse(field_str(w, "g")), p = parse(field_str(w, "p")), q = parse(field_str(w, "q"));
  const auto names = S.x_ring({&H, &g, &p, &q});
  LurothWitness lw{elaborate(g, S.field(), names), std::nullopt, elaborate_poly(p, S.field(), names),
                   elaborate_poly(q, S.field(), names)};
  if (w.contains("h") && !w["h"].is_null()) {
    auto h = tuple_polys(parse(w["h"].get<std::string>()), S.field(), bi_names());
    if (!std::all_of(h.begin(), h.end(), [](const Poly& c) { return c.is_zero(); }))
      lw.h = homog_tuple(std::move(h));
  }
  o.report = hmgrk2_verify(RatMap(elaborate_tuple(H, S.field(), names)), lw);
}

void cmd_valuation(const Session& S, Output& o) {
  S.expect(1, 2, "f1 [f2]");
  const Poly f1 = elaborate_poly(S.expr(0), S.field(), uni_names());
  const Poly f2 = S.count() == 2 ? elaborate_poly(S.expr(1), S.field(), uni_names())
                                 : Poly::constant(S.field(), 1, 1);
  const ProjPoint theta = S.opt().theta == "inf" ? ProjPoint::infinity()
                                                 : ProjPoint::finite(scalar(S.opt().theta, S.field()));
  o.j["theta"] = theta.to_string();
  o.j["valuation"] = valuation(f1, f2, theta).to_string();
}

std::pair<Poly, Poly> pq_args(const Session& S, VarNames& names) {
  S.expect(2, 2, "p q");
  const Expr p = S.expr(0), q = S.expr(1);
  names = S.x_ring({&p, &q});
  return {elaborate_poly(p, S.field(), names), elaborate_poly(q, S.field(), names)};
}

std::string pair_text(const ReducedPair& g) {
  return "(" + print(g.f1, uni_names()) + ")/(" + print(g.f2, uni_names()) + ")";
}

ReducedPair single_g(const Session& S) {
  if (S.opt().g.size() != 1) throw UsageError("expected exactly one --g \"f1;f2\"");
  return pair_from(S.opt().g.front(), S.field());
}

void cmd_integral(const Session& S, Output& o) {
  VarNames names;
  const auto [p, q] = pq_args(S, names);
  const ReducedPair g = single_g(S);
  const IntegralResult r = integral_over_Kg(p, q, g);
  o.j["g"] = pair_text(g);
  o.j["integral"] = r.integral;
  o.j["relation"] = r.relation ? json(print(*r.relation, VarNames{"Y", "g"})) : json(nullptr);
}

void cmd_integral_set(const Session& S, Output& o) {
  VarNames names;
  const auto [p, q] = pq_args(S, names);
  if (S.opt().g.empty()) throw UsageError("expected at least one --g \"f1;f2\"");
  std::vector<ReducedPair> G;
  for (const auto& s : S.opt().g) G.push_back(pair_from(s, S.field()));
  const auto i = integral_over_KG(p, q, G);
  o.j["integral"] = i.has_value();
  o.j["index"] = i ? json(*i) : json(nullptr);
}

void cmd_regen(const Session& S, Output& o) {
  VarNames names;
  const auto [p, q] = pq_args(S, names);
  const auto r = regenerate_integral(p, q, single_g(S));
  o.j["found"] = r.has_value();
  o.j["pstar"] = r ? json(print(r->pstar, names)) : json(nullptr);
  o.j["qstar"] = r ? json(print(r->qstar, names)) : json(nullptr);
  o.j["g"] = r ? json(pair_text(r->g)) : json(nullptr);
}

void cmd_pqtrans(const Session& S, Output& o) {
  VarNames names;
  const auto [p, q] = pq_args(S, names);
  if (S.opt().g.size() != 1) throw UsageError("expected exactly one --g \"f1;f2\"");
  const std::string& text = S.opt().g.front();
  const auto cut = text.find(';');
  const Poly f1 = elaborate_poly(parse(text.substr(0, cut)), S.field(), uni_names());
  const Poly f2 = cut == std::string::npos ? Poly::constant(S.field(), 1, 1)
                                           : elaborate_poly(parse(text.substr(cut + 1)), S.field(), uni_names());
  PqTransMode mode;
  if (S.opt().mode == "shift") {
    mode.kind = PqTransMode::Kind::Shift;
  } else if (S.opt().mode == "invert") {
    mode.kind = PqTransMode::Kind::Invert;
  } else {
    throw UsageError("--mode expects shift or invert");
  }
  mode.eps = scalar(S.opt().eps, S.field());
  mode.theta = scalar(S.opt().theta == "inf" ? "0" : S.opt().theta, S.field());
  const PqTransResult r = pqtrans(p, q, f1, f2, mode);
  o.j["mode"] = S.opt().mode;
  o.j["pstar"] = print(r.pstar, names);
  o.j["qstar"] = print(r.qstar, names);
  o.j["f1star"] = print(r.f1star, uni_names());
  o.j["f2star"] = print(r.f2star, uni_names());
}

RatMap square_map(const Session& S, std::vector<const Expr*> extra = {}) {
  S.expect(1, 1, "one tuple");
  const Expr e = S.expr(0);
  extra.push_back(&e);
  const std::size_t m = e.kind == Expr::Kind::Tuple ? e.args.size() : 1;
  return RatMap(elaborate_tuple(e, S.field(), S.x_ring(extra, m)));
}

void cmd_qt(const Session& S, Output& o) {
  const RatMap H = square_map(S);
  o.j["qt_condition"] = qt_condition(H);
  o.j["jh_times_h_zero"] = jh_times_h_zero(H);
}

void cmd_translation(const Session& S, Output& o) { o.j["translation_invariant"] = translation_invariance(square_map(S)); }

void cmd_nilpotent(const Session& S, Output& o) { o.j["nilpotent"] = nilpotent_jacobian(square_map(S)); }

void cmd_bivariate_core(const Session& S, Output& o) {
  o.j["core_identity"] = bivariate_core_check(polys_of(square_map(S).comps()));
}

void cmd_span_bound(const Session& S, Output& o) { o.report = constant_span_bound(square_map(S)); }

void cmd_gn_classify(const Session& S, Output& o) {
  if (S.opt().witness.empty()) {
    o.report = gn_classify(square_map(S), {});
    return;
  }
  json w = read_json_file(S.opt().witness);
  if (!w.is_array()) w = json::array({w});
  struct Raw {
    GNWitness::Kind kind;
    Expr g, p, q;
    std::string hf;
  };
  std::vector<Raw> raws;
  for (const auto& item : w) {
    const std::string kind = field_str(item, "kind");
    GNWitness::Kind k;
    if (kind == "cond3") {
      k = GNWitness::Kind::Cond3;
    } else if (kind == "cond4") {
      k = GNWitness::Kind::Cond4;
    } else if (kind == "cond5") {
      k = GNWitness::Kind::Cond5;
    } else {
      throw UsageError("witness kind must be cond3, cond4 or cond5");
    }
    const char* key = k == GNWitness::Kind::Cond3 ? "h" : "f";
    raws.push_back({k, parse(field_str(item, "g")), parse(field_str(item, "p")), parse(field_str(item, "q")),
                    field_str(item, key)});
  }
  std::vector<const Expr*> ptrs;
  for (const auto& r : raws) {
    ptrs.push_back(&r.g);
    ptrs.push_back(&r.p);
    ptrs.push_back(&r.q);
  }
  S.expect(1, 1, "one tuple");
  const Expr e = S.expr(0);
  ptrs.push_back(&e);
  const std::size_t m = e.kind == Expr::Kind::Tuple ? e.args.size() : 1;
  const auto names = S.x_ring(ptrs, m);
  const RatMap H(elaborate_tuple(e, S.field(), names));
  std::vector<GNWitness> ws;
  for (const auto& r : raws) {
    GNWitness gw;
    gw.kind = r.kind;
    gw.g = elaborate(r.g, S.field(), names);
    gw.p = elaborate_poly(r.p, S.field(), names);
    gw.q = elaborate_poly(r.q, S.field(), names);
    if (r.kind == GNWitness::Kind::Cond3) {
      auto h = tuple_polys(parse(r.hf), S.field(), bi_names());
      if (!std::all_of(h.begin(), h.end(), [](const Poly& c) { return c.is_zero(); }))
        gw.h = homog_tuple(std::move(h));
    } else {
      gw.f = tuple_polys(parse(r.hf), S.field(), uni_names());
    }
    ws.push_back(std::move(gw));
  }
  o.report = gn_classify(H, ws);
}

void cmd_flem(const Session& S, Output& o) {
  S.expect(3, 3, "f p q");
  const Expr p = S.expr(1), q = S.expr(2);
  const auto names = S.x_ring({&p, &q});
  const auto f = tuple_polys(S.expr(0), S.field(), uni_names());
  FlemMode mode;
  if (S.opt().flem_case == "i") {
    mode = FlemMode::I;
  } else if (S.opt().flem_case == "ii") {
    mode = FlemMode::II;
  } else {
    throw UsageError("--case expects i or ii");
  }
  o.j["case"] = S.opt().flem_case;
  o.j["hypothesis_holds"] =
      flem_conclude(f, elaborate_poly(p, S.field(), names), elaborate_poly(q, S.field(), names), mode);
}

struct CommandDef {
  const char* name;
  const char* help;
  Handler handler;
  std::function<void(CLI::App&, Options&)> extra;
};

std::vector<CommandDef> command_table() {
  auto none = [](CLI::App&, Options&) {};
  auto with_g = [](CLI::App& c, Options& o) { c.add_option("--g", o.g, "generator \"f1;f2\" in y1")->allow_extra_args(false); };
  return {
      {"gcd", "monic gcd of polynomials", cmd_gcd, none},
      {"primpart", "H = g * primitive core", cmd_primpart, none},
      {"jacobian", "Jacobian matrix", cmd_jacobian, none},
      {"homogenize", "y2^s f(y1/y2)", cmd_homogenize,
       [](CLI::App& c, Options& o) { c.add_option("--s", o.s, "common degree (default: max degree)"); }},
      {"dehomogenize", "h(y1, 1)", cmd_dehomogenize, none},
      {"divisor-transport", "y2^deg(g) g(y1/y2), or its inverse", cmd_divisor_transport,
       [](CLI::App& c, Options& o) { c.add_flag("--inverse", o.inverse, "map g~ back to g"); }},
      {"trdeg", "transcendence degree of K(H) or K(tH)", cmd_trdeg,
       [](CLI::App& c, Options& o) { c.add_flag("--with-t", o.with_t, "adjoin t"); }},
      {"gcd-subst", "gcd under substitution: uni f p | homog h p q", cmd_gcd_subst, none},
      {"mobius-equiv", "Mobius matrix relating p/q and p*/q*", cmd_mobius_equiv, none},
      {"unit-combo", "lambda p + mu q = 1", cmd_unit_combo, none},
      {"enother", "unit-combination chain for (p, q)", cmd_enother, none},
      {"member-kp", "r = F(p)", cmd_member_kp, none},
      {"member-kpq", "r = f1(p/q)/f2(p/q) within --bound", cmd_member_kpq, none},
      {"luroth-gen", "generator of K(r1, ..., rk) in K(x1)", cmd_luroth_gen, none},
      {"hmgrk2-verify", "verify H = g h(p,q) and its consequences", cmd_hmgrk2,
       [](CLI::App& c, Options& o) { c.add_option("--witness", o.witness, "witness JSON file"); }},
      {"valuation", "v_theta(f1/f2)", cmd_valuation,
       [](CLI::App& c, Options& o) { c.add_option("--theta", o.theta, "point of K or inf"); }},
      {"integral", "is p/q integral over K[g]", cmd_integral, with_g},
      {"integral-set", "is p/q integral over K[G]", cmd_integral_set, with_g},
      {"regen-integral", "generator integral over K[g]", cmd_regen, with_g},
      {"pqtrans", "transform (p, q) and g", cmd_pqtrans,
       [with_g](CLI::App& c, Options& o) {
         with_g(c, o);
         c.add_option("--mode", o.mode, "shift or invert");
         c.add_option("--eps", o.eps, "epsilon in K");
         c.add_option("--theta", o.theta, "theta in K");
       }},
      {"qt-check", "JH*H = trJH*H", cmd_qt, none},
      {"gn-classify", "evaluate the equivalent conditions", cmd_gn_classify,
       [](CLI::App& c, Options& o) { c.add_option("--witness", o.witness, "witness JSON file"); }},
      {"translation-check", "H(x + tH) = H", cmd_translation, none},
      {"nilpotent-check", "JH nilpotent", cmd_nilpotent, none},
      {"bivariate-core", "JH~(x) H~(y) = trJH~(x) H~(y) = 0", cmd_bivariate_core, none},
      {"span-bound", "span of constant coefficient vectors", cmd_span_bound, none},
      {"flem", "Jp f = Jq f = 0 from the hypotheses of case i or ii", cmd_flem,
       [](CLI::App& c, Options& o) { c.add_option("--case", o.flem_case, "i or ii"); }},
  };
}

void render(const json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    out << indent << it.key() << ":";
    if (v.is_object()) {
      out << '\n';
      render(v, indent + "  ", out);
      continue;
    }
    if (v.is_array()) {
      if (v.empty()) {
        out << " []\n";
        continue;
      }
      out << '\n';
      for (const auto& e : v) out << indent << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
      continue;
    }
    out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
      return kParseError;
    case ErrorCode::InternalAlarm:
      return kAlarm;
    default:
      return kPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with rational maps over Q and F_p", "ratmaps"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "structured output");
  app.add_option("--field", opt.field, "q (default) or fp:P");
  app.add_option("--bound", opt.bound, "search bound (default 6)");
  app.add_option("--in", opt.in_file, "read one expression per line");
  app.add_option("--nvars", opt.nvars, "number of x variables (default: inferred)");

  const auto table = command_table();
  std::map<const CLI::App*, const CommandDef*> by_app;
  for (const auto& def : table) {
    CLI::App* sub = app.add_subcommand(def.name, def.help);
    sub->add_option("exprs", opt.exprs, "expressions");
    def.extra(*sub, opt);
    by_app[sub] = &def;
  }

  // A leading space keeps expressions such as "-x1 + 1" from being read as
  // short options; the expression parser skips it.
  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (const auto& a : args)
    argv.push_back(a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h" ? " " + a : a);

  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDecided;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kDecided;
  } catch (const CLI::ParseError& e) {
    if (std::find(args.begin(), args.end(), "--json") != args.end()) {
      std::string cmd;
      for (const auto& a : args)
        for (const auto& def : table)
          if (cmd.empty() && a == def.name) cmd = a;
      json j;
      j["command"] = cmd;
      j["field"] = field_label(opt.field);
      j["error"] = {{"code", "UsageError"}, {"message", e.what()}};
      out << j.dump(2) << '\n';
    }
    err << "usage error: " << e.what() << '\n';
    return kParseError;
  }

  const CommandDef* def = nullptr;
  for (const auto* sub : app.get_subcommands()) def = by_app.at(sub);
  const std::string name = def->name;

  auto emit_error = [&](const std::string& code, const std::string& message, int rc) {
    if (opt.json) {
      json j;
      j["command"] = name;
      j["field"] = field_label(opt.field);
      j["error"] = {{"code", code}, {"message", message}};
      out << j.dump(2) << '\n';
    }
    err << "error: " << message << '\n';
    return rc;
  };

  try {
    const Field field = parse_field(opt.field);
    Session session(opt, field);
    Output o;
    def->handler(session, o);
    json j;
    j["command"] = name;
    j["field"] = field.to_string();
    bool alarm = false;
    if (o.report) {
      j["report"] = json::parse(o.report->to_json());
      alarm = o.report->alarm;
    } else {
      for (auto it = o.j.begin(); it != o.j.end(); ++it) j[it.key()] = it.value();
    }
    if (opt.json) {
      out << j.dump(2) << '\n';
    } else if (o.report) {
      out << o.report->to_text();
    } else {
      render(o.j, "", out);
    }
    return alarm ? kAlarm : kDecided;
  } catch (const UsageError& e) {
    return emit_error("UsageError", e.what(), kParseError);
  } catch (const Error& e) {
    return emit_error(std::string(error_code_name(e.code())), e.what(), exit_for(e.code()));
  }
}

}  // namespace ratmaps::cli
