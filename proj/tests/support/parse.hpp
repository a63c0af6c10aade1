#pragma once

#include <string>
#include <vector>

#include "ratmaps/expr.hpp"

namespace ratmaps::testing {

inline Poly px(const std::string& s, std::size_t n, const Field& K = Field::rationals()) {
  return elaborate_poly(parse(s), K, x_names(n));
}
inline Poly py(const std::string& s, const Field& K = Field::rationals()) {
  return elaborate_poly(parse(s), K, uni_names());
}
inline Poly pyy(const std::string& s, const Field& K = Field::rationals()) {
  return elaborate_poly(parse(s), K, bi_names());
}
inline RatFunc rx(const std::string& s, std::size_t n, const Field& K = Field::rationals()) {
  return elaborate(parse(s), K, x_names(n));
}
inline RatMap mx(const std::string& s, std::size_t n, const Field& K = Field::rationals()) {
  return RatMap(elaborate_tuple(parse(s), K, x_names(n)));
}
inline std::vector<Poly> tx(const std::string& s, std::size_t n, const Field& K = Field::rationals()) {
  return RatMap(elaborate_tuple(parse(s), K, x_names(n))).polys();
}
inline std::vector<Poly> tyy(const std::string& s, const Field& K = Field::rationals()) {
  return RatMap(elaborate_tuple(parse(s), K, bi_names())).polys();
}
inline std::vector<Poly> ty(const std::string& s, const Field& K = Field::rationals()) {
  return RatMap(elaborate_tuple(parse(s), K, uni_names())).polys();
}
inline FieldElem q(long a, long b = 1) { return FieldElem(Field::rationals(), mpq_class(mpz_class(a), mpz_class(b))); }

}  // namespace ratmaps::testing
