#include "unicrit/bigint.hpp"

#include "unicrit/errors.hpp"

namespace unicrit {

BigInt parse_bigint(const std::string& text) {
  BigInt v;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw InvalidArgument("not a decimal integer: '" + text + "'");
  return v;
}

BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace unicrit
