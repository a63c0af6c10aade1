#include "ratmaps/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "ratmaps/error.hpp"

namespace ratmaps {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SyntaxError, "at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr node(Expr::Kind k, std::size_t at, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.offset = at;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, at, {std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = node(Expr::Kind::Sub, at, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = node(Expr::Kind::Mul, at, {std::move(lhs), factor()});
      } else if (accept('/')) {
        lhs = node(Expr::Kind::Div, at, {std::move(lhs), factor()});
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Neg, at, {factor()});
    Expr b = base();
    skip_ws();
    const std::size_t hat = pos_;
    if (!accept('^')) return b;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) error("exponent must be a non-negative integer literal");
    unsigned e = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, e);
    if (ec != std::errc() || e > 100000) {
      pos_ = start;
      error("exponent too large");
    }
    Expr p = node(Expr::Kind::Pow, hat, {std::move(b)});
    p.exponent = e;
    return p;
  }

  Expr base() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) error("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      Expr e = node(Expr::Kind::Number, at, {});
      e.text = std::string(src_.substr(at, pos_ - at));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      Expr e = node(Expr::Kind::Variable, at, {});
      e.text = std::string(src_.substr(at, pos_ - at));
      return e;
    }
    if (accept('(')) {
      std::vector<Expr> items;
      items.push_back(expr());
      while (accept(',')) items.push_back(expr());
      if (!accept(')')) error("expected ')'");
      if (items.size() == 1) return std::move(items.front());
      return node(Expr::Kind::Tuple, at, std::move(items));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Variable) out.insert(e.text);
  for (const auto& a : e.args) collect(a, out);
}

std::size_t name_index(const VarNames& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::string name_of(const VarNames& names, std::size_t i) {
  return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
}

std::string monomial_text(const Monomial& m, const VarNames& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += name_of(names, i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Expr parse(std::string_view src) { return Parser(src).run(); }

std::set<std::string> variables_of(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

std::size_t max_x_index(const Expr& e) {
  std::size_t best = 0;
  for (const auto& name : variables_of(e)) {
    if (name.size() < 2 || name[0] != 'x') continue;
    if (!std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc() && k > 0) best = std::max(best, k);
  }
  return best;
}

VarNames x_names(std::size_t n) {
  VarNames out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

const VarNames& uni_names() {
  static const VarNames names{"y1"};
  return names;
}

const VarNames& bi_names() {
  static const VarNames names{"y1", "y2"};
  return names;
}

RatFunc elaborate(const Expr& e, const Field& field, const VarNames& names) {
  const std::size_t n = names.size();
  switch (e.kind) {
    case Expr::Kind::Number:
      return RatFunc::constant(FieldElem(field, mpq_class(e.text)), n);
    case Expr::Kind::Variable:
      return RatFunc(Poly::variable(field, n, name_index(names, e.text)));
    case Expr::Kind::Neg:
      return -elaborate(e.args[0], field, names);
    case Expr::Kind::Add:
      return elaborate(e.args[0], field, names) + elaborate(e.args[1], field, names);
    case Expr::Kind::Sub:
      return elaborate(e.args[0], field, names) - elaborate(e.args[1], field, names);
    case Expr::Kind::Mul:
      return elaborate(e.args[0], field, names) * elaborate(e.args[1], field, names);
    case Expr::Kind::Div: {
      RatFunc d = elaborate(e.args[1], field, names);
      require(!d.is_zero(), ErrorCode::DivisionByZero,
              "division by zero at offset " + std::to_string(e.offset));
      return elaborate(e.args[0], field, names) / d;
    }
    case Expr::Kind::Pow:
      return elaborate(e.args[0], field, names).pow(e.exponent);
    case Expr::Kind::Tuple:
      break;
  }
  fail(ErrorCode::SyntaxError, "at offset " + std::to_string(e.offset) + ": tuple where a scalar is expected");
}

std::vector<RatFunc> elaborate_tuple(const Expr& e, const Field& field, const VarNames& names) {
  std::vector<RatFunc> out;
  if (e.kind != Expr::Kind::Tuple) {
    out.push_back(elaborate(e, field, names));
    return out;
  }
  for (const auto& a : e.args) out.push_back(elaborate(a, field, names));
  return out;
}

Poly elaborate_poly(const Expr& e, const Field& field, const VarNames& names) {
  RatFunc r = elaborate(e, field, names);
  require(r.is_polynomial(), ErrorCode::InvalidArgument, "expected a polynomial, got a fraction");
  return r.num();
}

std::string print(const Poly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c.is_negative();
    const FieldElem mag = neg ? -c : c;
    const std::string mono = monomial_text(m, names);
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string print(const Poly& p) { return print(p, x_names(p.nvars())); }

std::string print(const RatFunc& r, const VarNames& names) {
  if (r.is_polynomial()) return print(r.num(), names);
  return "(" + print(r.num(), names) + ")/(" + print(r.den(), names) + ")";
}

std::string print(const RatFunc& r) { return print(r, x_names(r.nvars())); }

std::string print(std::span<const Poly> tuple, const VarNames& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += print(tuple[i], names);
  }
  return out + ")";
}

std::string print(std::span<const RatFunc> tuple, const VarNames& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += print(tuple[i], names);
  }
  return out + ")";
}

std::string print(const RatMap& H) {
  const VarNames names = x_names(H.size() ? H.nvars() : 0);
  return print(std::span<const RatFunc>(H.comps()), names);
}

}  // namespace ratmaps
