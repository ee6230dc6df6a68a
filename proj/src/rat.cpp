#include "tdopt/rat.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "tdopt/errors.hpp"

namespace tdopt {

namespace mp = boost::multiprecision;

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw Error("rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = mp::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw Error("division by zero rational");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  Int lhs = num_ * o.den_;
  Int rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat Rat::inverse() const {
  if (num_ == 0) throw Error("inverse of zero rational");
  return Rat(den_, num_);
}

Rat Rat::parse(const std::string& s) {
  auto bad = [&] { throw ParseError("bad rational: '" + s + "'"); };
  auto parse_int = [&](const std::string& t) -> Int {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (std::size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) bad();
    return Int(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) bad();
  return Rat(p, q);
}

std::string Rat::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

long ceil_log2(const Int& n) {
  if (n <= 1) return 0;
  Int m = n - 1;
  return static_cast<long>(mp::msb(m)) + 1;
}

long entry_complexity(const Rat& r) {
  Int p = r.num() < 0 ? Int(-r.num()) : r.num();
  return ceil_log2(p) + ceil_log2(r.den()) + 1;
}

Int lcm_positive(const Int& a, const Int& b) {
  Int g = mp::gcd(a, b);
  return a / g * b;
}

}  // namespace tdopt
