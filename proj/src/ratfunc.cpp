#include "ratmaps/ratfunc.hpp"

#include <algorithm>

#include "ratmaps/error.hpp"

namespace ratmaps {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(FieldElem::one(num_.field()), num_.nvars())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require(num_.field() == den_.field() && num_.nvars() == den_.nvars(), ErrorCode::RingMismatch,
          "numerator and denominator over different rings");
  require(!den_.is_zero(), ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(FieldElem::one(num_.field()), num_.nvars());
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  const FieldElem lc = den_.leading_coeff();
  if (!lc.is_one()) {
    const FieldElem inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

FieldElem RatFunc::constant_value() const {
  require(is_constant(), ErrorCode::InvalidArgument, "rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const Poly g = gcd(den_, o.den_);
  const Poly d1 = divexact(den_, g);
  const Poly d2 = divexact(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying; the result is already reduced.
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  Poly n = divexact(num_, g1) * divexact(o.num_, g2);
  Poly d = divexact(den_, g2) * divexact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (num_.is_zero()) {
    den_ = Poly::constant(FieldElem::one(num_.field()), num_.nvars());
    return *this;
  }
  const FieldElem inv = den_.leading_coeff().inverse();
  num_ *= inv;
  den_ *= inv;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc r(*this);
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RatFunc RatFunc::derivative(std::size_t var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::remap(std::size_t new_nvars, std::span<const std::size_t> var_map) const {
  return RatFunc(num_.remap(new_nvars, var_map), den_.remap(new_nvars, var_map));
}

RatFunc RatFunc::embed(std::size_t new_nvars) const { return RatFunc(num_.embed(new_nvars), den_.embed(new_nvars)); }

RatMap::RatMap(std::vector<RatFunc> comps) : comps_(std::move(comps)) {
  for (const auto& c : comps_) {
    require(c.field() == comps_.front().field() && c.nvars() == comps_.front().nvars(),
            ErrorCode::RingMismatch, "map components over different rings");
  }
}

RatMap RatMap::from_polys(std::span<const Poly> polys) {
  return RatMap(std::vector<RatFunc>(polys.begin(), polys.end()));
}

const Field& RatMap::field() const {
  require(!comps_.empty(), ErrorCode::InvalidArgument, "empty map");
  return comps_.front().field();
}

std::size_t RatMap::nvars() const {
  require(!comps_.empty(), ErrorCode::InvalidArgument, "empty map");
  return comps_.front().nvars();
}

bool RatMap::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const RatFunc& r) { return r.is_zero(); });
}

bool RatMap::is_polynomial() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const RatFunc& r) { return r.is_polynomial(); });
}

std::vector<Poly> RatMap::polys() const {
  std::vector<Poly> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) {
    require(c.is_polynomial(), ErrorCode::InvalidArgument, "map has non-polynomial components");
    out.push_back(c.num());
  }
  return out;
}

RatMap RatMap::scaled(const RatFunc& g) const {
  std::vector<RatFunc> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(g * c);
  return RatMap(std::move(out));
}

RatMatrix jacobian(const RatMap& H) {
  RatMatrix J;
  J.reserve(H.size());
  for (const auto& h : H) {
    std::vector<RatFunc> row;
    row.reserve(h.nvars());
    for (std::size_t j = 0; j < h.nvars(); ++j) row.push_back(h.derivative(j));
    J.push_back(std::move(row));
  }
  return J;
}

RatMatrix jacobian(std::span<const Poly> H) { return jacobian(RatMap::from_polys(H)); }

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  require(!a.empty() && !b.empty() && a.front().size() == b.size(), ErrorCode::InvalidArgument,
          "matrix dimensions do not match");
  RatMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      RatFunc acc = RatFunc::constant(FieldElem::zero(a[i][0].field()), a[i][0].nvars());
      for (std::size_t k = 0; k < b.size(); ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) acc += a[i][k] * b[k][j];
      c[i].push_back(std::move(acc));
    }
  }
  return c;
}

RatVector mat_vec(const RatMatrix& a, std::span<const RatFunc> v) {
  RatVector out;
  out.reserve(a.size());
  for (const auto& row : a) {
    require(row.size() == v.size(), ErrorCode::InvalidArgument, "matrix/vector dimensions differ");
    RatFunc acc = RatFunc::constant(FieldElem::zero(v.front().field()), v.front().nvars());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!row[k].is_zero() && !v[k].is_zero()) acc += row[k] * v[k];
    out.push_back(std::move(acc));
  }
  return out;
}

RatFunc trace(const RatMatrix& a) {
  require(!a.empty() && a.size() == a.front().size(), ErrorCode::NotSquare, "trace of a non-square matrix");
  RatFunc acc = RatFunc::constant(FieldElem::zero(a[0][0].field()), a[0][0].nvars());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i][i];
  return acc;
}

bool is_zero_matrix(const RatMatrix& a) {
  return std::all_of(a.begin(), a.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const RatFunc& r) { return r.is_zero(); });
  });
}

Poly common_denominator(std::span<const RatFunc> comps) {
  require(!comps.empty(), ErrorCode::InvalidArgument, "common denominator of nothing");
  Poly l = Poly::constant(FieldElem::one(comps.front().field()), comps.front().nvars());
  for (const auto& c : comps)
    if (!c.den().is_one()) l = lcm(l, c.den());
  return l;
}

std::size_t matrix_rank(const RatMatrix& a) {
  if (a.empty() || a.front().empty()) return 0;
  const std::size_t ncols = a.front().size();
  std::vector<std::vector<Poly>> rows;
  rows.reserve(a.size());
  for (const auto& row : a) {
    require(row.size() == ncols, ErrorCode::InvalidArgument, "ragged matrix");
    const Poly d = common_denominator(row);
    std::vector<Poly> prow;
    prow.reserve(ncols);
    for (const auto& e : row) prow.push_back(divexact(e.num() * d, e.den()));
    rows.push_back(std::move(prow));
  }
  // Bareiss elimination: every entry stays a minor of the cleared matrix, so
  // dividing by the previous pivot is exact and no gcds are needed.
  std::size_t rank = 0;
  Poly prev = Poly::constant(FieldElem::one(rows.front().front().field()), rows.front().front().nvars());
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const auto& prow = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const Poly factor = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j) {
        Poly e = prow[col] * rows[i][j] - factor * prow[j];
        rows[i][j] = prev.is_one() ? std::move(e) : divexact(e, prev);
      }
    }
    prev = prow[col];
    ++rank;
  }
  return rank;
}

RatFunc compose(const Poly& a, std::span<const RatFunc> images) {
  require(images.size() == a.nvars(), ErrorCode::InvalidArgument,
          "composition needs one image per variable");
  require(!images.empty(), ErrorCode::InvalidArgument, "composition into an empty ring");
  const Field& field = images.front().field();
  const std::size_t target = images.front().nvars();
  for (const auto& im : images)
    require(im.field() == field && im.nvars() == target, ErrorCode::RingMismatch,
            "composition images over different rings");
  if (a.is_zero()) return RatFunc(Poly(field, target));

  // Images r_i = a_i / D over a common denominator D; then
  // a(r) = (sum c * prod a_i^e_i * D^(d - |e|)) / D^d with d = deg a.
  const Poly D = common_denominator(images);
  std::vector<Poly> nums;
  nums.reserve(images.size());
  for (const auto& im : images) nums.push_back(divexact(im.num() * D, im.den()));
  const auto d = static_cast<unsigned>(a.degree().value());

  std::vector<std::vector<Poly>> powers(images.size());
  std::vector<Poly> dpow{Poly::constant(FieldElem::one(field), target)};
  auto power = [&](std::vector<Poly>& cache, const Poly& base, unsigned k) -> const Poly& {
    if (cache.empty()) cache.push_back(Poly::constant(FieldElem::one(field), target));
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  Poly N(field, target);
  for (const auto& [m, c] : a.terms()) {
    Poly t = Poly::constant(c, target);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= power(powers[i], nums[i], m[i]);
    const unsigned rest = d - total_degree(m);
    if (rest && !D.is_one()) t *= power(dpow, D, rest);
    N += t;
  }
  return RatFunc(std::move(N), D.is_one() ? Poly::constant(FieldElem::one(field), target) : D.pow(d));
}

RatFunc compose(const RatFunc& a, std::span<const RatFunc> images) {
  const RatFunc n = compose(a.num(), images);
  const RatFunc d = compose(a.den(), images);
  require(!d.is_zero(), ErrorCode::IndeterminateForm, "composed denominator vanishes identically");
  return n / d;
}

PrimitivePart primitive_part(const RatMap& H) {
  require(H.size() > 0 && !H.is_zero(), ErrorCode::ZeroMap, "primitive part of the zero map");
  const Poly L = common_denominator(H.comps());
  std::vector<Poly> cleared;
  cleared.reserve(H.size());
  for (const auto& c : H) cleared.push_back(divexact(c.num() * L, c.den()));
  const Poly G = gcd_many(cleared);
  for (auto& c : cleared) c = divexact(c, G);
  // Make the first nonzero component monic; the scalar moves into g.
  FieldElem lc = FieldElem::one(H.field());
  for (const auto& c : cleared) {
    if (!c.is_zero()) {
      lc = c.leading_coeff();
      break;
    }
  }
  const FieldElem inv = lc.inverse();
  for (auto& c : cleared) c *= inv;
  return {RatFunc(G * lc, L), std::move(cleared)};
}

}  // namespace ratmaps
