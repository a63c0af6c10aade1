#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratmaps/poly.hpp"

namespace ratmaps::linalg {

using Vec = std::vector<FieldElem>;
using Matrix = std::vector<Vec>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& a);
std::size_t rank(Matrix a);
/// Basis of {v : a v = 0}; ncols is needed when a has no rows.
std::vector<Vec> nullspace(Matrix a, const Field& field, std::size_t ncols);
/// Some v with a v = b, if one exists.
std::optional<Vec> solve(Matrix a, const Vec& b, const Field& field, std::size_t ncols);

/// Matrix whose column j holds the coefficients of polys[j] (rows indexed by
/// the union of their monomials, grlex-descending).
Matrix coefficient_matrix(std::span<const Poly> polys);
/// Basis of the K-linear relations sum c_j polys[j] = 0.
std::vector<Vec> linear_relations(std::span<const Poly> polys);
/// Coefficients c with sum c_j basis[j] = target, if any.
std::optional<Vec> express_in(std::span<const Poly> basis, const Poly& target);

}  // namespace ratmaps::linalg
