#include "cad/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cad {

MPoly MPoly::variable(const VarOrderPtr& order, Var v) {
  if (v < 0 || v >= order->size()) throw Error("variable index out of range");
  MPoly p(order);
  Expvec e(order->size(), 0);
  e[v] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw Error("constant_value on nonconstant polynomial");
  return terms_.begin()->second;
}

std::optional<Var> MPoly::mvar() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    for (int i = static_cast<int>(e.size()) - 1; i > best; --i) {
      if (e[i] > 0) {
        best = i;
        break;
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

int MPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (auto x : e) t += static_cast<int>(x);
    d = std::max(d, t);
  }
  return d;
}

MPoly MPoly::coeff_of(Var v, int k) const {
  MPoly r(order_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e[v]) == k) {
      Expvec e2 = e;
      e2[v] = 0;
      r.terms_.emplace(std::move(e2), c);
    }
  }
  return r;
}

std::vector<MPoly> MPoly::coeffs_wrt(Var v) const {
  std::vector<MPoly> out(static_cast<size_t>(degree(v)) + 1, MPoly(order_));
  for (const auto& [e, c] : terms_) {
    Expvec e2 = e;
    int k = static_cast<int>(e2[v]);
    e2[v] = 0;
    out[k].add_term(e2, c);
  }
  return out;
}

MPoly MPoly::from_coeffs_wrt(const VarOrderPtr& order, Var v,
                             const std::vector<MPoly>& coeffs) {
  MPoly r(order);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Expvec e2 = e;
      e2[v] += static_cast<uint32_t>(k);
      r.add_term(e2, c);
    }
  }
  return r;
}

MPoly MPoly::derivative(Var v) const {
  MPoly r(order_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Expvec e2 = e;
    e2[v] -= 1;
    r.add_term(e2, c * Rat(static_cast<long>(e[v])));
  }
  return r;
}

MPoly MPoly::subst_rational(Var v, const Rat& q) const {
  MPoly r(order_);
  for (const auto& [e, c] : terms_) {
    Expvec e2 = e;
    unsigned k = e2[v];
    e2[v] = 0;
    r.add_term(e2, c * q.pow(k));
  }
  return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw Error("eval: point dimension mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Interval MPoly::interval_eval(
    const std::vector<std::optional<Interval>>& box) const {
  Interval acc = Interval::point(Rat(0));
  for (const auto& [e, c] : terms_) {
    Interval t = Interval::point(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!box[i]) throw Error("interval_eval: missing box entry");
      t = iv_mul(t, iv_pow(*box[i], e[i]));
    }
    acc = iv_add(acc, t);
  }
  return acc;
}

std::vector<Var> MPoly::vars_present() const {
  std::vector<Var> out;
  for (int v = 0; v < nvars(); ++v) {
    for (const auto& [e, c] : terms_) {
      if (e[v]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r(order_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

void MPoly::check_same_order(const MPoly& o) const {
  if (!order_ || !o.order_) {
    if (!terms_.empty() && !o.terms_.empty()) throw Error("mixed null orders");
    return;
  }
  if (order_ != o.order_ && !(*order_ == *o.order_))
    throw Error("polynomials over different variable orders");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same_order(o);
  if (!order_) order_ = o.order_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same_order(o);
  if (!order_) order_ = o.order_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_order(b);
  MPoly r(a.order_ ? a.order_ : b.order_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Expvec e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rat& c) const {
  MPoly r(order_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(order_, Rat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::shifted(Var v, int k) const {
  MPoly r(order_);
  for (const auto& [e, c] : terms_) {
    Expvec e2 = e;
    e2[v] += static_cast<uint32_t>(k);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

int MPoly::compare(const MPoly& a, const MPoly& b) {
  auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
  ExpCmp cmp;
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (cmp(ia->first, ib->first)) return -1;
    if (cmp(ib->first, ia->first)) return 1;
    if (ia->second < ib->second) return -1;
    if (ib->second < ia->second) return 1;
  }
  if (ia != a.terms_.rend()) return 1;
  if (ib != b.terms_.rend()) return -1;
  return 0;
}

void MPoly::add_term(const Expvec& e, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool has_vars = !is_const_term(e);
    if (!has_vars || a != Rat(1)) {
      os << a.to_string();
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (size_t i = e.size(); i-- > 0;) {
      if (!e[i]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << order_->name(static_cast<Var>(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace cad
