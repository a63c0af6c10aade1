#include <doctest.h>

#include "ratmaps/error.hpp"
#include "ratmaps/integrality.hpp"
#include "support/expect.hpp"
#include "support/gen.hpp"
#include "support/parse.hpp"

using namespace ratmaps;
using namespace ratmaps::testing;

namespace {

/// Substitutes Y = p/q and g = f1(p/q)/f2(p/q) into a relation in K[Y, g].
RatFunc eval_relation(const Poly& rel, const Poly& p, const Poly& q, const ReducedPair& g) {
  const RatFunc y = RatFunc(p) / RatFunc(q);
  const auto fv = evaluate_at_ratio(std::vector<Poly>{g.f1, g.f2}, p, q);
  const std::vector<RatFunc> img{y, fv[0] / fv[1]};
  return compose(rel, img);
}

}  // namespace

TEST_CASE("valuations") {
  CHECK(valuation(py("(y1 - 1)^3"), ProjPoint::finite(q(1))) == ExtInt(3));
  CHECK(valuation(py("y1^2 + 3*y1"), ProjPoint::infinity()) == ExtInt(-2));
  CHECK(valuation(py("y1^2"), py("y1"), ProjPoint::finite(q(0))) == ExtInt(1));
  CHECK(valuation(py("0"), ProjPoint::finite(q(4))).is_pos_inf());
  CHECK(valuation(py("y1 + 2"), ProjPoint::finite(q(1))) == ExtInt(0));
}

TEST_CASE("valuation laws on examples") {
  const Report r = valuation_laws_check(py("y1"), py("y1 + 1"), py("y1"), py("y1 - 1"), ProjPoint::finite(q(0)));
  CHECK(r.ok());
  const Report s = valuation_laws_check(py("y1^2 + 1"), py("y1"), py("y1^2 + 1"), py("y1"), ProjPoint::infinity());
  CHECK(s.ok());
}

TEST_CASE("valuation laws on random data") {
  for (const Field& K : {Field::rationals(), Field::prime(5)}) {
    Gen gen(8 + K.characteristic());
    for (int i = 0; i < 150; ++i) {
      const Poly f1 = gen.uni(K, 4), f2 = gen.nonzero_uni(K, 4), g1 = gen.uni(K, 4), g2 = gen.nonzero_uni(K, 4);
      const ProjPoint th = gen.coin(0.2) ? ProjPoint::infinity() : ProjPoint::finite(gen.coeff(K));
      CHECK(valuation_laws_check(f1, f2, g1, g2, th).ok());
    }
  }
}

TEST_CASE("reduced pairs") {
  const ReducedPair a(py("2*y1^2 - 2"), py("2*y1 - 2"));
  CHECK(a.f1 == py("y1 + 1"));
  CHECK(a.f2.is_one());
  CHECK(code_of([] { (void)ReducedPair(py("1"), py("0")); }) == ErrorCode::ZeroDenominator);
  CHECK(ReducedPair(py("3"), py("6")).is_constant());
}

TEST_CASE("integrality over K[g] examples") {
  const Poly p = px("x1", 2), q2 = px("x2", 2);
  const ReducedPair g(py("y1^3"), py("y1 + 1"));
  const auto res = integral_over_Kg(p, q2, g);
  CHECK(res.integral);
  REQUIRE(res.relation.has_value());
  CHECK(*res.relation == pyy("y1^3 - y1*y2 - y2"));
  CHECK(eval_relation(*res.relation, p, q2, g).is_zero());

  const ReducedPair bav(py("y1"), py("y1^2 + 1"));
  const auto nb = integral_over_Kg(px("x1", 1), px("1", 1), bav);
  CHECK_FALSE(nb.integral);
  CHECK_FALSE(nb.relation.has_value());

  const ReducedPair h(py("y1^2 + y1"), py("y1 + 5"));
  const auto rh = integral_over_Kg(px("x1", 1), px("x1 + 2", 1), h);
  CHECK(rh.integral);
  REQUIRE(rh.relation.has_value());
  CHECK(eval_relation(*rh.relation, px("x1", 1), px("x1 + 2", 1), h).is_zero());
  CHECK(code_of([] { (void)integral_over_Kg(px("x1", 1), px("2*x1", 1), ReducedPair(py("y1^2"), py("1"))); }) ==
        ErrorCode::ConstantRatio);
}

TEST_CASE("integrality criterion agrees with the relation on random data") {
  Gen gen(555);
  const Field K = Field::rationals();
  for (int i = 0; i < 60; ++i) {
    const auto [p, q] = gen.coprime_pair(K, 2, 2, 2);
    const Poly f1 = gen.uni(K, 3), f2 = gen.nonzero_uni(K, 3);
    const ReducedPair g(f1, f2);
    if (g.is_constant()) continue;
    const auto res = integral_over_Kg(p, q, g);
    CHECK(res.integral == (g.f1.degree() > g.f2.degree()));
    if (res.integral) {
      REQUIRE(res.relation.has_value());
      CHECK(res.relation->leading_coeff_in(0).is_one());
      CHECK(eval_relation(*res.relation, p, q, g).is_zero());
    }
  }
}

TEST_CASE("pq transformations") {
  const Poly p = px("x1", 1), q1 = px("1", 1);
  const auto sh = pqtrans(p, q1, py("y1^2"), py("y1"), {PqTransMode::Kind::Shift, q(2), q(0)});
  CHECK(sh.f1star == py("(y1 - 2)^2"));
  CHECK(sh.f2star == py("y1 - 2"));
  CHECK(sh.pstar == px("x1 + 2", 1));
  const auto iv = pqtrans(p, q1, py("y1"), py("y1^2 + 1"), {PqTransMode::Kind::Invert, q(0), q(0)});
  CHECK(iv.f1star == py("y1"));
  CHECK(iv.f2star == py("1 + y1^2"));
  const auto iw = pqtrans(p, q1, py("1"), py("(y1 - 1)^2"), {PqTransMode::Kind::Invert, q(0), q(1)});
  CHECK(iw.f1star == py("y1^2"));
  CHECK(iw.f2star == py("1"));
  CHECK(iw.pstar == px("1", 1));
  CHECK(iw.qstar == px("x1 - 1", 1));
}

TEST_CASE("pq transformations preserve the function on random data") {
  Gen gen(31337);
  const Field K = Field::rationals();
  for (int i = 0; i < 60; ++i) {
    const auto [p, q] = gen.coprime_pair(K, 2, 2, 2);
    const Poly f1 = gen.uni(K, 3), f2 = gen.nonzero_uni(K, 3);
    const PqTransMode mode{gen.coin() ? PqTransMode::Kind::Shift : PqTransMode::Kind::Invert, gen.coeff(K),
                           gen.coeff(K)};
    PqTransResult r;
    try {
      r = pqtrans(p, q, f1, f2, mode);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateImage);
      continue;
    }
    const auto a = evaluate_at_ratio(std::vector<Poly>{f1, f2}, p, q);
    const auto b = evaluate_at_ratio(std::vector<Poly>{r.f1star, r.f2star}, r.pstar, r.qstar);
    if (a[1].is_zero() || b[1].is_zero()) continue;
    CHECK(a[0] / a[1] == b[0] / b[1]);
  }
}

TEST_CASE("regeneration") {
  const auto r = regenerate_integral(px("x1", 1), px("1", 1), ReducedPair(py("1"), py("(y1 - 1)^2")));
  REQUIRE(r.has_value());
  CHECK(r->pstar == px("1", 1));
  CHECK(r->qstar == px("x1 - 1", 1));
  CHECK(integral_over_Kg(r->pstar, r->qstar, r->g).integral);
  CHECK_FALSE(regenerate_integral(px("x1", 1), px("1", 1), ReducedPair(py("y1"), py("y1^2 + 1"))).has_value());
  const auto u = regenerate_integral(px("x1", 2), px("x2", 2), ReducedPair(py("y1^3"), py("y1 + 1")));
  REQUIRE(u.has_value());
  CHECK(u->pstar == px("x1", 2));
  CHECK(u->qstar == px("x2", 2));
}

TEST_CASE("integrality over a set of generators") {
  const std::vector<ReducedPair> G{ReducedPair(py("y1"), py("y1^2 + 1")), ReducedPair(py("y1^3"), py("y1 + 1"))};
  CHECK(integral_over_KG(px("x1", 2), px("x2", 2), G) == std::optional<std::size_t>(1));
  const std::vector<ReducedPair> B{ReducedPair(py("y1"), py("y1^2 + 1")), ReducedPair(py("y1^2"), py("y1^2 + 1"))};
  CHECK_FALSE(integral_over_KG(px("x1", 1), px("1", 1), B).has_value());
  const std::vector<ReducedPair> S{ReducedPair(py("y1^2"), py("y1 + 1"))};
  CHECK(integral_over_KG(px("x1", 1), px("1", 1), S) == std::optional<std::size_t>(0));
}

TEST_CASE("valuation laws on many triples") {
  for (const Field& K : {Field::rationals(), Field::prime(3)}) {
    Gen gen(1001 + K.characteristic());
    for (int i = 0; i < 250; ++i) {
      const Poly f1 = gen.uni(K, 3), f2 = gen.nonzero_uni(K, 3), g1 = gen.uni(K, 3), g2 = gen.nonzero_uni(K, 3);
      const ProjPoint th = gen.coin(0.25) ? ProjPoint::infinity() : ProjPoint::finite(gen.coeff(K));
      CHECK(valuation_laws_check(f1, f2, g1, g2, th).ok());
    }
  }
}

TEST_CASE("valuation ignores a common factor") {
  for (const Field& K : {Field::rationals(), Field::prime(5)}) {
    Gen gen(404 + K.characteristic());
    for (int i = 0; i < 200; ++i) {
      const Poly f1 = gen.uni(K, 3), f2 = gen.nonzero_uni(K, 3), c = gen.nonzero_uni(K, 3);
      const ProjPoint th = gen.coin(0.25) ? ProjPoint::infinity() : ProjPoint::finite(gen.coeff(K));
      CHECK(valuation(f1 * c, f2 * c, th) == valuation(f1, f2, th));
    }
  }
}

TEST_CASE("empty answer over a generator set means no element is integral") {
  const Field K = Field::rationals();
  Gen gen(5150);
  int empty = 0, found = 0;
  for (int i = 0; i < 60; ++i) {
    const auto [p, q] = gen.coprime_pair(K, 2, 2, 2);
    std::vector<ReducedPair> G;
    for (long k = gen.integer(1, 3); k > 0; --k) {
      const Poly a = gen.uni(K, 3), b = gen.nonzero_uni(K, 3);
      const ReducedPair g(a, b);
      if (!g.is_constant()) G.push_back(g);
    }
    if (G.empty()) continue;
    const auto idx = integral_over_KG(p, q, G);
    if (!idx) {
      ++empty;
      for (const auto& g : G) CHECK_FALSE(integral_over_Kg(p, q, g).integral);
    } else {
      ++found;
      REQUIRE(*idx < G.size());
      CHECK(integral_over_Kg(p, q, G[*idx]).integral);
    }
  }
  CHECK(empty > 0);
  CHECK(found > 0);
}
