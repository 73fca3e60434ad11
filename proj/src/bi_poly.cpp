#include "unicrit/bi_poly.hpp"

#include <algorithm>
#include <sstream>

#include "unicrit/errors.hpp"

namespace unicrit {

BiPoly::BiPoly(std::string outer, std::string inner, std::vector<IntPoly> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
  for (auto& r : rows_) r = r.with_var(inner_);
  trim();
}

BiPoly BiPoly::from_inner(const IntPoly& p, std::string outer) {
  std::vector<IntPoly> rows;
  if (!p.is_zero()) rows.push_back(p);
  return BiPoly(std::move(outer), p.var(), std::move(rows));
}

BiPoly BiPoly::from_outer(const IntPoly& p, std::string inner) {
  std::vector<IntPoly> rows;
  rows.reserve(p.size());
  for (const auto& v : p.coeffs()) rows.push_back(IntPoly::constant(v, inner));
  return BiPoly(p.var(), std::move(inner), std::move(rows));
}

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BiPoly::degree_inner() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BiPoly::degree_in(const std::string& var) const {
  if (var == outer_) return degree_outer();
  if (var == inner_) return degree_inner();
  throw InvalidArgument("variable '" + var + "' does not occur in a polynomial over (" + outer_ + ", " + inner_ + ")");
}

const IntPoly& BiPoly::row(std::size_t i) const {
  static const IntPoly zero;
  return i < rows_.size() ? rows_[i] : zero;
}

BigInt BiPoly::coeff(std::size_t outer_deg, std::size_t inner_deg) const { return row(outer_deg).coeff(inner_deg); }

BiPoly BiPoly::transposed() const {
  const int di = degree_inner();
  std::vector<std::vector<BigInt>> t(di + 1, std::vector<BigInt>(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& c = rows_[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) t[j][i] = c[j];
  }
  std::vector<IntPoly> rows;
  rows.reserve(t.size());
  for (auto& v : t) rows.emplace_back(std::move(v), outer_);
  return BiPoly(inner_, outer_, std::move(rows));
}

BiPoly BiPoly::with_outer(const std::string& var) const {
  if (var == outer_) return *this;
  if (var == inner_) return transposed();
  throw InvalidArgument("variable '" + var + "' does not occur in a polynomial over (" + outer_ + ", " + inner_ + ")");
}

IntPoly BiPoly::eval_outer(const BigInt& v) const {
  IntPoly r({}, inner_);
  for (std::size_t i = rows_.size(); i-- > 0;) {
    r *= v;
    r += rows_[i];
  }
  return r;
}

IntPoly BiPoly::eval_inner(const BigInt& v) const {
  std::vector<BigInt> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r(v));
  return IntPoly(std::move(out), outer_);
}

IntPoly BiPoly::leading_outer() const { return rows_.empty() ? IntPoly({}, inner_) : rows_.back(); }

BigInt BiPoly::operator()(const BigInt& outer_value, const BigInt& inner_value) const {
  return eval_outer(outer_value)(inner_value);
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size(), IntPoly({}, inner_));
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size(), IntPoly({}, inner_));
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly(a.outer_, a.inner_, {});
  // Kronecker substitution: outer^i inner^j -> X^(i*W + j).
  const std::size_t w = static_cast<std::size_t>(a.degree_inner() + b.degree_inner() + 1);
  auto pack = [w](const BiPoly& p) {
    std::vector<BigInt> c(p.rows_.size() * w);
    for (std::size_t i = 0; i < p.rows_.size(); ++i) {
      const auto& rc = p.rows_[i].coeffs();
      std::copy(rc.begin(), rc.end(), c.begin() + i * w);
    }
    return IntPoly(std::move(c));
  };
  IntPoly prod = pack(a) * pack(b);
  const std::size_t nrows = a.rows_.size() + b.rows_.size() - 1;
  std::vector<IntPoly> rows;
  rows.reserve(nrows);
  const auto& pc = prod.coeffs();
  for (std::size_t i = 0; i < nrows; ++i) {
    std::size_t lo = std::min(pc.size(), i * w);
    std::size_t hi = std::min(pc.size(), (i + 1) * w);
    rows.emplace_back(std::vector<BigInt>(pc.begin() + lo, pc.begin() + hi), a.inner_);
  }
  return BiPoly(a.outer_, a.inner_, std::move(rows));
}

BiPoly operator*(BiPoly a, const BigInt& k) {
  for (auto& r : a.rows_) r *= k;
  a.trim();
  return a;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(outer_, inner_, {IntPoly::constant(1, inner_)});
  BiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BiPoly BiPoly::derivative_outer() const {
  std::vector<IntPoly> rows;
  for (std::size_t i = 1; i < rows_.size(); ++i) rows.push_back(rows_[i] * BigInt(static_cast<unsigned long>(i)));
  return BiPoly(outer_, inner_, std::move(rows));
}

BiPoly BiPoly::derivative_inner() const {
  std::vector<IntPoly> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.derivative());
  return BiPoly(outer_, inner_, std::move(rows));
}

BigInt BiPoly::content() const {
  BigInt g = 0;
  for (const auto& r : rows_) g = gcd(g, r.content());
  return g;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    if (rows_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rows_[i].to_string() << ")";
    if (i > 0) os << "*" << outer_ << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

BiPoly divide_exact_monic(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const IntPoly lead = b.leading_outer();
  if (lead.degree() != 0 || (lead[0] != 1 && lead[0] != -1)) {
    throw InvalidArgument("divide_exact_monic: divisor is not monic in " + b.outer());
  }
  const bool neg = lead[0] == -1;
  if (a.is_zero()) return a;
  if (a.degree_outer() < b.degree_outer()) throw InconsistencyError("inexact bivariate division");
  const std::size_t db = b.degree_outer();
  std::vector<IntPoly> r = a.rows();
  std::vector<IntPoly> q(a.degree_outer() - db + 1, IntPoly({}, a.inner()));
  for (std::size_t i = q.size(); i-- > 0;) {
    if (r[i + db].is_zero()) continue;
    q[i] = neg ? -r[i + db] : r[i + db];
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.row(j).is_zero()) r[i + j] -= q[i] * b.row(j);
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (!r[i].is_zero()) throw InconsistencyError("inexact bivariate division");
  }
  return BiPoly(a.outer(), a.inner(), std::move(q));
}

}  // namespace unicrit
