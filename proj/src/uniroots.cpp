#include "cad/uniroots.hpp"

#include <algorithm>

namespace cad {

UniPoly uni_trim(UniPoly u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

UniPoly uni_from_mpoly(const MPoly& p, Var v) {
  UniPoly u(static_cast<size_t>(p.degree(v)) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] && static_cast<Var>(i) != v)
        throw Error("polynomial is not univariate in the requested variable");
    }
    u[e[v]] = c;
  }
  return uni_trim(std::move(u));
}

int uni_degree(const UniPoly& u) { return static_cast<int>(u.size()) - 1; }

Rat uni_eval(const UniPoly& u, const Rat& x) {
  Rat acc(0);
  for (size_t i = u.size(); i-- > 0;) acc = acc * x + u[i];
  return acc;
}

int uni_sign_at(const UniPoly& u, const Rat& x) { return uni_eval(u, x).sign(); }

UniPoly uni_derivative(const UniPoly& u) {
  UniPoly d;
  for (size_t i = 1; i < u.size(); ++i)
    d.push_back(u[i] * Rat(static_cast<long>(i)));
  return uni_trim(std::move(d));
}

namespace {

UniPoly uni_monic(UniPoly u) {
  if (u.empty()) return u;
  Rat inv = u.back().reciprocal();
  for (auto& c : u) c *= inv;
  return u;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  // b monic and nonzero; leading terms cancel exactly each pass.
  a = uni_trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = uni_trim(std::move(a));
  }
  return a;
}

}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    UniPoly m = uni_monic(b);
    UniPoly r = uni_rem(std::move(a), m);
    a = std::move(m);
    b = std::move(r);
  }
  return a.empty() ? a : uni_monic(std::move(a));
}

UniPoly uni_squarefree(const UniPoly& u) {
  if (uni_degree(u) < 1) return u;
  UniPoly g = uni_gcd(u, uni_derivative(u));
  if (uni_degree(g) < 1) return u;
  // exact division u / g
  UniPoly a = u;
  UniPoly q(a.size() - g.size() + 1, Rat(0));
  while (static_cast<int>(a.size()) >= static_cast<int>(g.size()) &&
         !a.empty()) {
    Rat c = a.back() / g.back();
    size_t shift = a.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) a[shift + i] -= c * g[i];
    a = uni_trim(std::move(a));
  }
  return uni_trim(std::move(q));
}

Rat uni_root_bound(const UniPoly& u) {
  if (u.empty()) throw Error("root bound of zero polynomial");
  Rat lead = u.back().abs();
  Rat mx(0);
  for (size_t i = 0; i + 1 < u.size(); ++i) mx = rat_max(mx, u[i].abs());
  return Rat(1) + mx / lead;
}

namespace {

void taylor_shift_inplace(UniPoly& u, const Rat& a) {
  if (a.is_zero()) return;
  int d = uni_degree(u);
  for (int k = 0; k < d; ++k)
    for (int j = d - 1; j >= k; --j) u[j] += a * u[j + 1];
}

}  // namespace

int descartes_variations(const UniPoly& u, const Rat& a, const Rat& b) {
  // (1+x)^d u((ax+b)/(x+1)) via shift, scale, reverse, shift.
  UniPoly t = u;
  taylor_shift_inplace(t, a);
  Rat s = b - a;
  Rat pw(1);
  for (size_t i = 1; i < t.size(); ++i) {
    pw *= s;
    t[i] *= pw;
  }
  std::reverse(t.begin(), t.end());
  t = uni_trim(std::move(t));
  taylor_shift_inplace(t, Rat(1));
  int var = 0, last = 0;
  for (const auto& c : t) {
    int sg = c.sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++var;
    last = sg;
  }
  return var;
}

namespace {

struct Isolator {
  const UniPoly& p;  // squarefree
  std::vector<Interval> out;

  void run(const Rat& a, const Rat& b) {
    int v = descartes_variations(p, a, b);
    if (v == 0) return;
    if (v == 1) {
      out.emplace_back(a, b);
      return;
    }
    Rat m = (a + b) / Rat(2);
    run(a, m);
    if (uni_sign_at(p, m) == 0) out.push_back(Interval::point(m));
    run(m, b);
  }
};

/// Shrinks an isolating interval so its endpoints are not roots of p.
Interval fix_endpoints(const UniPoly& p, Interval iv) {
  if (iv.is_point()) return iv;
  while (uni_sign_at(p, iv.hi) == 0) {
    Rat c = iv.midpoint();
    if (uni_sign_at(p, c) == 0) return Interval::point(c);
    if (descartes_variations(p, iv.lo, c) & 1)
      iv = Interval(iv.lo, c);
    else
      iv = Interval(c, iv.hi);
  }
  while (uni_sign_at(p, iv.lo) == 0) {
    Rat c = iv.midpoint();
    if (uni_sign_at(p, c) == 0) return Interval::point(c);
    if (descartes_variations(p, c, iv.hi) & 1)
      iv = Interval(c, iv.hi);
    else
      iv = Interval(iv.lo, c);
  }
  return iv;
}

}  // namespace

Interval uni_narrow(const UniPoly& p, const Interval& iv) {
  if (iv.is_point()) return iv;
  Rat c = iv.midpoint();
  if (uni_sign_at(p, c) == 0) return Interval::point(c);
  if (descartes_variations(p, iv.lo, c) & 1) return Interval(iv.lo, c);
  return Interval(c, iv.hi);
}

std::vector<Interval> uni_isolate(const UniPoly& u) {
  UniPoly t = uni_trim(u);
  if (t.empty()) throw Error("identically zero");
  if (uni_degree(t) == 0) return {};
  UniPoly p = uni_squarefree(t);
  Rat bound = uni_root_bound(p);
  Isolator iso{p, {}};
  iso.run(-bound, bound);
  auto& ivs = iso.out;
  for (auto& iv : ivs) iv = fix_endpoints(p, iv);
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  // Make closed intervals strictly disjoint.
  for (size_t i = 0; i + 1 < ivs.size(); ++i) {
    while (ivs[i + 1].lo <= ivs[i].hi) {
      if (!ivs[i].is_point())
        ivs[i] = uni_narrow(p, ivs[i]);
      else
        ivs[i + 1] = uni_narrow(p, ivs[i + 1]);
    }
  }
  return ivs;
}

std::vector<Interval> isolate_real_roots_univariate(const MPoly& p, Var v) {
  if (p.is_zero()) throw Error("identically zero");
  return uni_isolate(uni_from_mpoly(p, v));
}

Interval refine_interval(const MPoly& p, Var v, const Interval& iv,
                         const Rat& target_width) {
  if (p.is_zero()) throw Error("identically zero");
  UniPoly u = uni_squarefree(uni_from_mpoly(p, v));
  if (iv.is_point()) {
    if (uni_sign_at(u, iv.lo) != 0)
      throw Error("interval does not isolate a root");
    return iv;
  }
  bool lo_root = uni_sign_at(u, iv.lo) == 0;
  bool hi_root = uni_sign_at(u, iv.hi) == 0;
  if (lo_root && hi_root) throw Error("interval does not isolate a root");
  if (lo_root || hi_root) {
    if (descartes_variations(u, iv.lo, iv.hi) != 0)
      throw Error("interval does not isolate a root");
    return Interval::point(lo_root ? iv.lo : iv.hi);
  }
  if (descartes_variations(u, iv.lo, iv.hi) == 0)
    throw Error("interval does not isolate a root");
  Interval cur = iv;
  while (cur.width() > target_width) cur = uni_narrow(u, cur);
  return cur;
}

}  // namespace cad
