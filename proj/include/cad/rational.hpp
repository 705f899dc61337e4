#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cad {

using Int = mpz_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number. Always stored canonically: gcd(num, den) = 1,
/// den > 0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& n, const Int& d) : v_(n, d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }
  Rat(long n, long d) : Rat(Int(n), Int(d)) {}

  /// Parses "n", "-n" or "n/d".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat pow(unsigned e) const {
    Rat r(1);
    Rat base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Closed interval with rational endpoints; lo == hi is a point.
struct Interval {
  Rat lo;
  Rat hi;

  Interval() = default;
  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("interval with lo > hi");
  }
  static Interval point(const Rat& q) { return Interval(q, q); }

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
  bool contains(const Rat& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }

  std::string to_string() const {
    if (is_point()) return lo.to_string();
    return "[" + lo.to_string() + ", " + hi.to_string() + "]";
  }
};

/// Interval arithmetic helpers, exact over Q.
inline Interval iv_add(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}
inline Interval iv_neg(const Interval& a) { return Interval(-a.hi, -a.lo); }
inline Interval iv_mul(const Interval& a, const Interval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Interval(rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                  rat_max(rat_max(p1, p2), rat_max(p3, p4)));
}
inline Interval iv_pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(Rat(1));
  Interval r = a;
  for (unsigned i = 1; i < e; ++i) r = iv_mul(r, a);
  return r;
}

}  // namespace cad
