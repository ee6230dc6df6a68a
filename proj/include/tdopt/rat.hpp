#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace tdopt {

using Int = boost::multiprecision::cpp_int;

// Exact rational kept in lowest terms with positive denominator; zero is 0/1.
// Every operation renormalizes, so num()/den() are always canonical.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(Int n) : num_(std::move(n)), den_(1) {}
  Rat(Int n, Int d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // division by zero raises Error

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rat& o) const;

  Rat abs() const { return num_ < 0 ? -*this : *this; }
  Rat inverse() const;  // raises Error on zero

  // Accepts "p", "-p", "p/q" with an optional sign on p; q must be nonzero.
  static Rat parse(const std::string& s);

  std::string str() const;  // "p" or "p/q"

 private:
  void normalize();
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Smallest k with 2^k >= n, for n >= 1; 0 for n <= 1.
long ceil_log2(const Int& n);

// Encoding length of a single rational entry: with p/q in lowest terms,
// ceil(log2 |p|) + ceil(log2 q) + 1, sign ignored, zero counting as 0/1.
long entry_complexity(const Rat& r);

Int lcm_positive(const Int& a, const Int& b);

}  // namespace tdopt
