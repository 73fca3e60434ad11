#include "unicrit/rat_poly.hpp"

#include <sstream>

#include "unicrit/errors.hpp"

namespace unicrit {

namespace {
const BigRational kZeroQ = 0;
}

RatPoly::RatPoly(std::vector<BigRational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) : var_(p.var()) {
  c_.reserve(p.size());
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

const BigRational& RatPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZeroQ; }

RatPoly RatPoly::with_var(std::string var) const {
  RatPoly r = *this;
  r.var_ = std::move(var);
  return r;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly({}, a.var());
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(r), a.var());
}

RatPoly operator*(RatPoly a, const BigRational& k) {
  if (k == 0) return RatPoly({}, a.var());
  for (auto& v : a.c_) v *= k;
  return a;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * BigRational(1 / c_.back());
}

bool RatPoly::has_integer_coeffs() const {
  for (const auto& v : c_) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

IntPoly RatPoly::clear_denominators(BigInt* scale) const {
  BigInt l = 1;
  for (const auto& v : c_) l = lcm(l, BigInt(v.get_den()));
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(BigInt(v.get_num()) * divexact(l, BigInt(v.get_den())));
  if (scale) *scale = l;
  return IntPoly(std::move(out), var_);
}

BigRational RatPoly::operator()(const BigRational& x) const {
  BigRational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigRational mag = abs(c_[i]);
    os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly({}, a.var()), a};
  const std::size_t db = b.degree();
  std::vector<BigRational> r = a.coeffs();
  std::vector<BigRational> q(a.degree() - db + 1);
  const BigRational inv = 1 / b.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    if (r[i + db] == 0) continue;
    q[i] = r[i + db] * inv;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] -= q[i] * b.coeff(j);
  }
  r.resize(db);
  return {RatPoly(std::move(q), a.var()), RatPoly(std::move(r), a.var())};
}

}  // namespace unicrit
