#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cad/rational.hpp"
#include "cad/varorder.hpp"

namespace cad {

/// Exponent vector; one entry per variable of the ambient order.
using Expvec = std::vector<uint32_t>;

/// Compares exponent vectors with the highest variable most significant.
struct ExpCmp {
  bool operator()(const Expvec& a, const Expvec& b) const {
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Sparse multivariate polynomial over Q under a fixed variable ordering.
/// Canonical form: no zero coefficients stored.
class MPoly {
 public:
  using TermMap = std::map<Expvec, Rat, ExpCmp>;

  MPoly() = default;
  explicit MPoly(VarOrderPtr order) : order_(std::move(order)) {}
  MPoly(VarOrderPtr order, const Rat& c) : order_(std::move(order)) {
    if (!c.is_zero()) terms_.emplace(Expvec(order_->size(), 0), c);
  }

  static MPoly variable(const VarOrderPtr& order, Var v);
  static MPoly constant(const VarOrderPtr& order, const Rat& c) {
    return MPoly(order, c);
  }

  const VarOrderPtr& order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  int nvars() const { return order_ ? order_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_const_term(terms_.begin()->first));
  }
  /// Value of a constant polynomial (zero if empty).
  Rat constant_value() const;

  /// Highest-ordered variable with positive degree; nullopt for constants.
  std::optional<Var> mvar() const;
  int degree(Var v) const;
  int total_degree() const;

  /// Coefficient of v^k, as a polynomial with zero exponent in v.
  MPoly coeff_of(Var v, int k) const;
  /// Dense coefficient list in v: index k holds the coefficient of v^k.
  std::vector<MPoly> coeffs_wrt(Var v) const;
  static MPoly from_coeffs_wrt(const VarOrderPtr& order, Var v,
                               const std::vector<MPoly>& coeffs);
  /// Leading coefficient with respect to v.
  MPoly lc(Var v) const { return coeff_of(v, degree(v)); }

  MPoly derivative(Var v) const;
  MPoly subst_rational(Var v, const Rat& q) const;
  Rat eval(const std::vector<Rat>& point) const;
  /// Evaluates over a box given per-variable intervals (entries for all
  /// variables that occur must be present; index = Var).
  Interval interval_eval(const std::vector<std::optional<Interval>>& box) const;

  std::vector<Var> vars_present() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rat& c) const;
  MPoly pow(unsigned e) const;

  /// Multiplies by v^k.
  MPoly shifted(Var v, int k) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Total order for deterministic containers: by term map, lexicographic.
  static int compare(const MPoly& a, const MPoly& b);
  friend bool operator<(const MPoly& a, const MPoly& b) {
    return compare(a, b) < 0;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    return os << p.to_string();
  }

  /// Direct term insertion; accumulates and drops zeros.
  void add_term(const Expvec& e, const Rat& c);

 private:
  static bool is_const_term(const Expvec& e) {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  void check_same_order(const MPoly& o) const;

  VarOrderPtr order_;
  TermMap terms_;
};

}  // namespace cad
