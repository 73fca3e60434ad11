#include "unicrit/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "unicrit/errors.hpp"

namespace unicrit {

namespace {

const BigInt kZero = 0;

constexpr std::size_t kKroneckerThreshold = 24;

// Writes the nonnegative value v into dst starting at bit offset `bit`. Fields are disjoint.
void write_bits(std::vector<mp_limb_t>& dst, std::size_t bit, const mpz_t v) {
  const std::size_t n = mpz_size(v);
  const std::size_t word = bit / GMP_NUMB_BITS;
  const unsigned shift = bit % GMP_NUMB_BITS;
  for (std::size_t j = 0; j < n; ++j) {
    mp_limb_t limb = mpz_getlimbn(v, j);
    dst[word + j] |= limb << shift;
    if (shift != 0) dst[word + j + 1] |= limb >> (GMP_NUMB_BITS - shift);
  }
}

// Reads the B-bit field starting at `bit` as a nonnegative integer.
void read_bits(const mp_limb_t* src, std::size_t nlimbs, std::size_t bit, std::size_t width,
               std::vector<mp_limb_t>& scratch, mpz_t out) {
  const std::size_t nout = (width + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  scratch.assign(nout + 1, 0);
  const std::size_t word = bit / GMP_NUMB_BITS;
  const unsigned shift = bit % GMP_NUMB_BITS;
  for (std::size_t j = 0; j < nout; ++j) {
    std::size_t w = word + j;
    mp_limb_t lo = w < nlimbs ? src[w] : 0;
    mp_limb_t hi = (w + 1) < nlimbs ? src[w + 1] : 0;
    scratch[j] = shift == 0 ? lo : (lo >> shift) | (hi << (GMP_NUMB_BITS - shift));
  }
  const unsigned rem = width % GMP_NUMB_BITS;
  if (rem != 0) scratch[nout - 1] &= (mp_limb_t(1) << rem) - 1;
  mpz_import(out, nout, -1, sizeof(mp_limb_t), 0, 0, scratch.data());
}

// Packs coefficients at stride `width` bits; positive and negative parts separately.
BigInt pack(const std::vector<BigInt>& c, std::size_t width) {
  const std::size_t nlimbs = (c.size() * width) / GMP_NUMB_BITS + 2;
  std::vector<mp_limb_t> pos(nlimbs, 0), neg(nlimbs, 0);
  bool any_neg = false;
  BigInt tmp;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int s = sgn(c[i]);
    if (s > 0) {
      write_bits(pos, i * width, c[i].get_mpz_t());
    } else if (s < 0) {
      tmp = -c[i];
      write_bits(neg, i * width, tmp.get_mpz_t());
      any_neg = true;
    }
  }
  BigInt p, q;
  mpz_import(p.get_mpz_t(), nlimbs, -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (any_neg) {
    mpz_import(q.get_mpz_t(), nlimbs, -1, sizeof(mp_limb_t), 0, 0, neg.data());
    p -= q;
  }
  return p;
}

// Inverse of pack for balanced digits |d| < 2^(width-1).
std::vector<BigInt> unpack(const BigInt& value, std::size_t width, std::size_t count) {
  std::vector<BigInt> out(count);
  const bool negative = sgn(value) < 0;
  BigInt mag = abs(value);
  const mp_limb_t* limbs = mpz_limbs_read(mag.get_mpz_t());
  const std::size_t nl = mpz_size(mag.get_mpz_t());
  std::vector<mp_limb_t> scratch;
  BigInt half, full;
  mpz_setbit(half.get_mpz_t(), width - 1);
  mpz_setbit(full.get_mpz_t(), width);
  int carry = 0;
  for (std::size_t k = 0; k < count; ++k) {
    read_bits(limbs, nl, k * width, width, scratch, out[k].get_mpz_t());
    if (carry) out[k] += 1;
    if (out[k] >= half) {
      out[k] -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (negative) out[k] = -out[k];
  }
  return out;
}

std::size_t bit_length(std::size_t v) {
  std::size_t b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs, std::string var) : var_(std::move(var)) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c, std::string var) { return IntPoly(std::vector<BigInt>{c}, std::move(var)); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree, std::string var) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v), std::move(var));
}

IntPoly IntPoly::variable(std::string var) { return monomial(1, 1, std::move(var)); }

const BigInt& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

IntPoly IntPoly::with_var(std::string var) const {
  IntPoly r = *this;
  r.var_ = std::move(var);
  return r;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly({}, a.var());
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r), a.var());
}

IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly({}, a.var());
  const std::size_t terms = std::min(a.size(), b.size());
  const std::size_t width = a.max_coeff_bits() + b.max_coeff_bits() + bit_length(terms) + 2;
  BigInt pa = pack(a.coeffs(), width);
  BigInt pb = &a == &b ? pa : pack(b.coeffs(), width);
  BigInt prod = pa * pb;
  return IntPoly(unpack(prod, width, a.size() + b.size() - 1), a.var());
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (std::min(a.size(), b.size()) >= kKroneckerThreshold) return multiply_kronecker(a, b);
  return multiply_schoolbook(a, b);
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (sgn(c_.back()) < 0) g = -g;
  if (g == 1) return *this;
  return divexact_scalar(g);
}

IntPoly IntPoly::divexact_scalar(const BigInt& k) const {
  IntPoly r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntPoly IntPoly::mod_scalar(const BigInt& m) const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = symmetric_mod(v, m);
  r.trim();
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly({}, var_);
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d), var_);
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<BigInt> d(c_.size() + k);
  std::copy(c_.begin(), c_.end(), d.begin() + k);
  return IntPoly(std::move(d), var_);
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = IntPoly::constant(1, var_);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly r({}, inner.var());
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * inner;
    r += IntPoly::constant(c_[i], inner.var());
  }
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> d(c_.rbegin(), c_.rend());
  return IntPoly(std::move(d), var_);
}

IntPoly IntPoly::inflate(unsigned k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<BigInt> d((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) d[i * k] = c_[i];
  return IntPoly(std::move(d), var_);
}

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

BigRational IntPoly::operator()(const BigRational& x) const {
  // sum a_i p^i q^(d-i) / q^d
  if (is_zero()) return 0;
  const BigInt p = x.get_num();
  const BigInt q = x.get_den();
  BigInt num = 0, qpow = 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    num = num * p + c_[i] * qpow;
    qpow *= q;
  }
  BigRational r(num, unicrit::pow(q, c_.size() - 1));
  r.canonicalize();
  return r;
}

std::size_t IntPoly::max_coeff_bits() const {
  std::size_t b = 0;
  for (const auto& v : c_) b = std::max<std::size_t>(b, mpz_sizeinbase(v.get_mpz_t(), 2));
  return b;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    BigInt mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
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

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return IntPoly({}, a.var());
  if (a.degree() < b.degree()) return std::nullopt;
  const std::size_t db = b.degree();
  const BigInt& lc = b.leading();
  const bool unit = lc == 1 || lc == -1;
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - db + 1);
  const auto& bc = b.coeffs();
  // Cheap rejection on the constant term when b(0) != 0.
  if (bc[0] != 0 && !divides(bc[0], r[0])) return std::nullopt;
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = r[i + db];
    if (top == 0) continue;
    if (unit) {
      q[i] = lc == 1 ? top : BigInt(-top);
    } else {
      if (!divides(lc, top)) return std::nullopt;
      mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    }
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q), a.var());
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw InconsistencyError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

std::pair<IntPoly, IntPoly> divmod_unit(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const BigInt& lc = b.leading();
  if (lc != 1 && lc != -1) throw InvalidArgument("divmod_unit needs a unit leading coefficient");
  if (a.degree() < b.degree()) return {IntPoly({}, a.var()), a};
  const std::size_t db = b.degree();
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - db + 1);
  const auto& bc = b.coeffs();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = r[i + db];
    if (top == 0) continue;
    q[i] = lc == 1 ? top : BigInt(-top);
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  r.resize(db);
  return {IntPoly(std::move(q), a.var()), IntPoly(std::move(r), a.var())};
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.degree() < b.degree()) return {IntPoly({}, a.var()), a};
  const std::size_t db = b.degree();
  const BigInt& lc = b.leading();
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - db + 1);
  const auto& bc = b.coeffs();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt top = r[i + db];
    for (auto& v : q) v *= lc;
    for (auto& v : r) v *= lc;
    q[i] = top;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
  }
  r.resize(db);
  return {IntPoly(std::move(q), a.var()), IntPoly(std::move(r), a.var())};
}

}  // namespace unicrit
