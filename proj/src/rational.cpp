#include "rmatrix/rational.hpp"

namespace rmatrix {

std::string rat_to_string(const BigRat& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_canonical_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') {
    if (s.size() == 1) return false;
    i = 1;
  }
  if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  if (s == "-0") return false;
  return true;
}

}  // namespace

BigRat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_canonical_integer(s)) throw ParseError("malformed rational: '" + s + "'");
    return BigRat(BigInt(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!is_canonical_integer(num) || !is_canonical_integer(den))
    throw ParseError("malformed rational: '" + s + "'");
  if (!den.empty() && den[0] == '-') throw ParseError("negative denominator in '" + s + "'");
  BigInt p(num), q(den);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  if (q == 1) throw ParseError("non-canonical rational '" + s + "': denominator 1 must be omitted");
  if (gcd(abs(p), q) != 1) throw ParseError("non-canonical rational '" + s + "': not reduced");
  BigRat r(p, q);
  return r;
}

}  // namespace rmatrix
