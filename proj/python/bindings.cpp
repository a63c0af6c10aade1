#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratmaps/cli.hpp"
#include "ratmaps/error.hpp"
#include "ratmaps/expr.hpp"
#include "ratmaps/gordan_noether.hpp"
#include "ratmaps/homog.hpp"
#include "ratmaps/subfield.hpp"

namespace py = pybind11;
using namespace ratmaps;

namespace {

Field field_of(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.rfind("fp:", 0) == 0) return Field::prime(std::stoull(s.substr(3)));
  throw Error(ErrorCode::InvalidArgument, "field must be q or fp:P, got '" + s + "'");
}

/// Variables x1..xn with n covering every input (and the tuple length for square maps).
std::size_t infer_nvars(const std::vector<Expr>& es, std::size_t at_least = 1) {
  std::size_t n = at_least;
  for (const auto& e : es) n = std::max(n, max_x_index(e));
  return n;
}

std::size_t tuple_len(const Expr& e) { return e.kind == Expr::Kind::Tuple ? e.args.size() : 1; }

RatMap square_map(const std::string& src, const Field& K) {
  const Expr e = parse(src);
  const std::size_t n = infer_nvars({e}, tuple_len(e));
  auto comps = elaborate_tuple(e, K, x_names(n));
  for (std::size_t i = comps.size(); i < n; ++i) comps.emplace_back(Poly::zero(K, n));
  return RatMap(std::move(comps));
}

RatMap any_map(const std::string& src, const Field& K) {
  const Expr e = parse(src);
  return RatMap(elaborate_tuple(e, K, x_names(infer_nvars({e}))));
}

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string gcd_str(const std::vector<std::string>& polys, const std::string& field) {
  const Field K = field_of(field);
  std::vector<Expr> es;
  for (const auto& s : polys) es.push_back(parse(s));
  const std::size_t n = infer_nvars(es);
  std::vector<Poly> ps;
  for (const auto& e : es) ps.push_back(elaborate_poly(e, K, x_names(n)));
  return print(gcd_many(ps), x_names(n));
}

std::string homogenize_str(const std::string& f, unsigned s, const std::string& field) {
  const Field K = field_of(field);
  const auto comps = RatMap(elaborate_tuple(parse(f), K, uni_names())).polys();
  const HomogTuple h = homogenize(UniTuple{comps, s});
  return print(std::span<const Poly>(h.h), bi_names());
}

std::string dehomogenize_str(const std::string& h, unsigned s, const std::string& field) {
  const Field K = field_of(field);
  const auto comps = RatMap(elaborate_tuple(parse(h), K, bi_names())).polys();
  const UniTuple f = dehomogenize(HomogTuple{comps, s});
  return print(std::span<const Poly>(f.f), uni_names());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with rational maps over Q and F_p";

  // Messages start with the error code, e.g. "ZeroTuple: ...".
  py::register_exception<Error>(m, "Error");

  m.def("run", &run, py::arg("args"), "Run one command line; returns (exit_code, stdout, stderr).");
  m.def("gcd", &gcd_str, py::arg("polys"), py::arg("field") = "q", "Monic gcd of polynomials in x1..xn.");
  m.def("homogenize", &homogenize_str, py::arg("f"), py::arg("s"), py::arg("field") = "q",
        "y2^s f(y1/y2) for a tuple in y1.");
  m.def("dehomogenize", &dehomogenize_str, py::arg("h"), py::arg("s"), py::arg("field") = "q",
        "h(y1, 1) for a homogeneous tuple in y1, y2.");
  m.def(
      "trdeg",
      [](const std::string& H, bool with_t) { return trdeg_rank(any_map(H, Field::rationals()), with_t); },
      py::arg("H"), py::arg("with_t") = false, "Transcendence degree of K(H) or K(tH) over Q.");
  m.def(
      "qt_condition", [](const std::string& H, const std::string& field) {
        return qt_condition(square_map(H, field_of(field)));
      },
      py::arg("H"), py::arg("field") = "q", "JH*H = trJH*H.");
  m.def(
      "translation_invariance",
      [](const std::string& H, const std::string& field) {
        return translation_invariance(square_map(H, field_of(field)));
      },
      py::arg("H"), py::arg("field") = "q", "H(x + tH) = H.");
  m.def(
      "nilpotent_jacobian",
      [](const std::string& H, const std::string& field) { return nilpotent_jacobian(square_map(H, field_of(field))); },
      py::arg("H"), py::arg("field") = "q", "JH nilpotent.");
}
