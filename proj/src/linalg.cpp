#include "ratmaps/linalg.hpp"

#include <map>

#include "ratmaps/error.hpp"

namespace ratmaps::linalg {

std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t ncols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    const FieldElem inv = a[row][col].inverse();
    for (auto& e : a[row]) e *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const FieldElem f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix a) { return rref(a).size(); }

std::vector<Vec> nullspace(Matrix a, const Field& field, std::size_t ncols) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, FieldElem::zero(field));
    v[free] = FieldElem::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(Matrix a, const Vec& b, const Field& field, std::size_t ncols) {
  require(a.size() == b.size(), ErrorCode::InvalidArgument, "right-hand side has wrong length");
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  Vec x(ncols, FieldElem::zero(field));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return x;
}

Matrix coefficient_matrix(std::span<const Poly> polys) {
  std::map<Monomial, std::size_t, GrlexGreater> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
  std::size_t k = 0;
  for (auto& [m, i] : index) i = k++;
  Matrix a;
  if (polys.empty()) return a;
  const Field field = polys.front().field();
  a.assign(index.size(), Vec(polys.size(), FieldElem::zero(field)));
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [m, c] : polys[j].terms()) a[index.at(m)][j] = c;
  return a;
}

std::vector<Vec> linear_relations(std::span<const Poly> polys) {
  if (polys.empty()) return {};
  return nullspace(coefficient_matrix(polys), polys.front().field(), polys.size());
}

std::optional<Vec> express_in(std::span<const Poly> basis, const Poly& target) {
  std::vector<Poly> all(basis.begin(), basis.end());
  all.push_back(target);
  Matrix a = coefficient_matrix(all);
  Vec b;
  b.reserve(a.size());
  for (auto& row : a) {
    b.push_back(row.back());
    row.pop_back();
  }
  return solve(std::move(a), b, target.field(), basis.size());
}

}  // namespace ratmaps::linalg
