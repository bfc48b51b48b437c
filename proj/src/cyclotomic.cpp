#include "rmatrix/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace rmatrix {

namespace {

void strip(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  strip(out);
  return out;
}

// Division with remainder; the divisor must be nonzero.
void poly_divmod(QPoly num, const QPoly& den, QPoly& quot, QPoly& rem) {
  if (den.empty()) throw DivisionByZero("polynomial division by zero");
  quot.assign(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, BigRat(0));
  const BigRat& lead = den.back();
  while (num.size() >= den.size()) {
    BigRat c = num.back() / lead;
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    strip(num);
    if (num.empty()) break;
    if (num.size() < den.size()) break;
  }
  strip(quot);
  rem = std::move(num);
}

QPoly poly_mod(QPoly num, const QPoly& den) {
  QPoly q, r;
  poly_divmod(std::move(num), den, q, r);
  return r;
}

struct CycloTable {
  QPoly phi;  // the cyclotomic polynomial, monic
};

const CycloTable& table_for(unsigned n) {
  static std::mutex mtx;
  static std::map<unsigned, CycloTable> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CycloTable t;
  t.phi = cyclotomic_poly(n);
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

QPoly cyclotomic_poly(unsigned n) {
  if (n == 0) throw Error("cyclotomic_poly: n must be positive");
  if (n == 1) return {BigRat(-1), BigRat(1)};  // t - 1
  // t^n - 1 divided by the product of Phi_d over proper divisors d | n.
  QPoly num(n + 1, BigRat(0));
  num[0] = -1;
  num[n] = 1;
  QPoly den{BigRat(1)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_poly(d));
  QPoly quot, rem;
  poly_divmod(std::move(num), den, quot, rem);
  if (!rem.empty()) throw Error("cyclotomic_poly: inexact division (internal)");
  return quot;
}

Cyclotomic::Cyclotomic(const BigRat& r) : order_(1) {
  if (r != 0) coeffs_.push_back(r);
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<BigRat> reduced)
    : order_(order), coeffs_(std::move(reduced)) {
  canonicalize();
}

void Cyclotomic::canonicalize() {
  strip(coeffs_);
  if (coeffs_.size() <= 1) order_ = 1;  // rational constants demote to order 1
}

Cyclotomic Cyclotomic::from_poly(unsigned n, QPoly coeffs) {
  if (n == 0) throw Error("Cyclotomic: order must be positive");
  strip(coeffs);
  if (n == 1) {
    BigRat v = coeffs.empty() ? BigRat(0) : coeffs[0];  // zeta_1 = 1
    for (std::size_t k = 1; k < coeffs.size(); ++k) v += coeffs[k];
    return Cyclotomic(v);
  }
  return Cyclotomic(n, poly_mod(std::move(coeffs), table_for(n).phi));
}

Cyclotomic Cyclotomic::zeta(unsigned n, long j) {
  if (n == 0) throw Error("zeta: order must be positive");
  long jm = j % static_cast<long>(n);
  if (jm < 0) jm += n;
  QPoly p(static_cast<std::size_t>(jm) + 1, BigRat(0));
  p.back() = 1;
  return from_poly(n, std::move(p));
}

BigRat Cyclotomic::rational_value() const {
  if (order_ != 1) throw IncompatibleOrders("rational_value: element is not rational");
  return coeffs_.empty() ? BigRat(0) : coeffs_[0];
}

unsigned Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.order_;
  if (a.order_ == 1) return b.order_;
  if (b.order_ == 1) return a.order_;
  std::ostringstream os;
  os << "incompatible cyclotomic orders " << a.order_ << " and " << b.order_;
  throw IncompatibleOrders(os.str());
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned n = common_order(*this, o);
  std::vector<BigRat> a = coeffs_, b = o.coeffs_;
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  *this = Cyclotomic(n, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  unsigned n = common_order(*this, o);
  QPoly prod = poly_mul(coeffs_, o.coeffs_);
  if (n == 1) {
    *this = Cyclotomic(1, std::move(prod));
    return *this;
  }
  *this = Cyclotomic(n, poly_mod(std::move(prod), table_for(n).phi));
  return *this;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero("cyclotomic inverse of zero");
  if (order_ == 1) return Cyclotomic(BigRat(1) / coeffs_[0]);
  // Extended Euclid: u*a + v*phi = 1, so u is the inverse of a mod phi.
  QPoly r0 = table_for(order_).phi, r1 = coeffs_;
  QPoly s0{}, s1{BigRat(1)};  // coefficients of a
  while (!r1.empty()) {
    QPoly q, r2;
    poly_divmod(r0, r1, q, r2);
    QPoly s2 = s0;
    {
      QPoly qs = poly_mul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), BigRat(0));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      strip(s2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; phi is irreducible so it must be a nonzero constant.
  if (r0.size() != 1) throw Error("cyclotomic inverse: gcd not constant (internal)");
  BigRat scale = BigRat(1) / r0[0];
  for (auto& c : s0) c *= scale;
  return Cyclotomic(order_, poly_mod(std::move(s0), table_for(order_).phi));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    if (a.order_ != 1 && b.order_ != 1) {
      std::ostringstream os;
      os << "equality between cyclotomic orders " << a.order_ << " and " << b.order_;
      throw IncompatibleOrders(os.str());
    }
    return false;  // canonical form demotes rationals, so orders differ => unequal
  }
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  if (order_ == 1) return rat_to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(coeffs_[k]);
    if (k > 0) os << "*z" << order_ << "^" << k;
  }
  return os.str();
}

}  // namespace rmatrix
