#include "cad/arith.hpp"

#include <algorithm>

namespace cad {

PseudoDiv pseudo_divide(const MPoly& p, const MPoly& q, Var v) {
  if (q.is_zero()) throw Error("pseudo-division by zero");
  int m = p.degree(v), n = q.degree(v);
  PseudoDiv out;
  out.quo = MPoly(p.order());
  out.rem = p;
  if (p.is_zero() || m < n) return out;
  MPoly d = q.lc(v);
  int e = m - n + 1;
  MPoly r = p;
  MPoly quo(p.order());
  while (!r.is_zero() && r.degree(v) >= n) {
    MPoly t = r.lc(v).shifted(v, r.degree(v) - n);
    quo = quo * d + t;
    r = r * d - t * q;
    --e;
  }
  MPoly scale = d.pow(static_cast<unsigned>(e));
  out.quo = quo * scale;
  out.rem = r * scale;
  return out;
}

MPoly prem(const MPoly& p, const MPoly& q, Var v) {
  return pseudo_divide(p, q, v).rem;
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return MPoly(p.order() ? p.order() : q.order());
  if (q.is_constant())
    return p.scaled(q.constant_value().reciprocal());
  Var v = *q.mvar();
  int n = q.degree(v);
  MPoly lq = q.lc(v);
  MPoly r = p;
  MPoly quo(p.order());
  while (!r.is_zero() && r.degree(v) >= n) {
    auto c = divide_exact(r.lc(v), lq);
    if (!c) return std::nullopt;
    MPoly t = c->shifted(v, r.degree(v) - n);
    quo += t;
    r -= t * q;
  }
  if (!r.is_zero()) return std::nullopt;
  return quo;
}

MPoly divide_exact_or_throw(const MPoly& p, const MPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw Error("exact division failed");
  return *r;
}

MPoly int_primitive(const MPoly& p) {
  if (p.is_zero()) return p;
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  return p.scaled(Rat(den_lcm, num_gcd));
}

MPoly canonical(const MPoly& p) {
  if (p.is_zero()) return p;
  MPoly r = int_primitive(p);
  if (r.terms().rbegin()->second.sign() < 0) r = -r;
  return r;
}

namespace {

/// Subresultant-PRS gcd of polynomials primitive and of positive degree in v.
MPoly prs_gcd_primitive(MPoly a, MPoly b, Var v) {
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  MPoly one = MPoly::constant(a.order(), Rat(1));
  MPoly g = one, h = one;
  for (;;) {
    int delta = a.degree(v) - b.degree(v);
    MPoly r = prem(a, b, v);
    if (r.is_zero()) return primitive_part_wrt(b, v);
    if (r.degree(v) == 0) return one;
    a = b;
    b = divide_exact_or_throw(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.lc(v);
    if (delta >= 1) {
      h = divide_exact_or_throw(g.pow(static_cast<unsigned>(delta)),
                                h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  if (a.is_constant() || b.is_constant())
    return MPoly::constant(a.order() ? a.order() : b.order(), Rat(1));
  Var va = *a.mvar(), vb = *b.mvar();
  Var v = std::max(va, vb);
  if (a.degree(v) == 0) return gcd(a, content_wrt(b, v));
  if (b.degree(v) == 0) return gcd(content_wrt(a, v), b);
  MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
  MPoly c = gcd(ca, cb);
  MPoly pa = divide_exact_or_throw(a, ca);
  MPoly pb = divide_exact_or_throw(b, cb);
  MPoly g = prs_gcd_primitive(pa, pb, v);
  return canonical(c * g);
}

MPoly content_wrt(const MPoly& p, Var v) {
  MPoly acc(p.order());
  for (const auto& c : p.coeffs_wrt(v)) {
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? canonical(c) : gcd(acc, c);
    if (acc.is_constant()) break;
  }
  if (acc.is_zero()) return acc;
  return acc.is_constant() ? MPoly::constant(p.order(), Rat(1)) : acc;
}

MPoly primitive_part_wrt(const MPoly& p, Var v) {
  if (p.is_zero()) return p;
  return divide_exact_or_throw(p, content_wrt(p, v));
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw Error("not a resultant operand");
  int m = p.degree(v), n = q.degree(v);
  if (m == 0 && n == 0) throw Error("not a resultant operand");
  if (m == 0) return p.pow(static_cast<unsigned>(n));
  if (n == 0) return q.pow(static_cast<unsigned>(m));
  MPoly A = p, B = q;
  int s = 1;
  if (m < n) {
    std::swap(A, B);
    std::swap(m, n);
    if ((m & 1) && (n & 1)) s = -s;
  }
  MPoly ca = content_wrt(A, v), cb = content_wrt(B, v);
  A = divide_exact_or_throw(A, ca);
  B = divide_exact_or_throw(B, cb);
  MPoly mult = ca.pow(static_cast<unsigned>(n)) * cb.pow(static_cast<unsigned>(m));
  MPoly one = MPoly::constant(p.order(), Rat(1));
  MPoly g = one, h = one;
  for (;;) {
    int da = A.degree(v), db = B.degree(v);
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    MPoly r = prem(A, B, v);
    if (r.is_zero()) return MPoly(p.order());
    A = B;
    B = divide_exact_or_throw(r, g * h.pow(static_cast<unsigned>(delta)));
    g = A.lc(v);
    if (delta >= 1) {
      h = divide_exact_or_throw(g.pow(static_cast<unsigned>(delta)),
                                h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.degree(v) == 0) break;
  }
  int da = A.degree(v);
  MPoly res = divide_exact_or_throw(B.pow(static_cast<unsigned>(da)),
                                    h.pow(static_cast<unsigned>(da - 1)));
  res = res * mult;
  return s < 0 ? -res : res;
}

MPoly discriminant(const MPoly& p, Var v) {
  int d = p.degree(v);
  if (d < 2) throw Error("discriminant requires degree >= 2");
  MPoly res = resultant(p, p.derivative(v), v);
  MPoly out = divide_exact_or_throw(res, p.lc(v));
  long twists = static_cast<long>(d) * (d - 1) / 2;
  return (twists & 1) ? -out : out;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m,
                          const VarOrderPtr& order) {
  size_t n = m.size();
  if (n == 0) return MPoly::constant(order, Rat(1));
  int sign = 1;
  MPoly prev = MPoly::constant(order, Rat(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MPoly(order);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact_or_throw(m[k][k] * m[i][j] - m[i][k] * m[k][j],
                                        prev);
      }
      m[i][k] = MPoly(order);
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::vector<MPoly> subresultant_prs(const MPoly& p, const MPoly& q, Var v) {
  if (p.is_zero() || q.is_zero())
    throw Error("zero polynomial in subresultant chain");
  int m = p.degree(v), n = q.degree(v);
  if (m < n) throw Error("subresultant chain requires deg p >= deg q");
  auto pc = p.coeffs_wrt(v);
  auto qc = q.coeffs_wrt(v);
  auto coeff = [&](const std::vector<MPoly>& c, int k) -> MPoly {
    if (k < 0 || k >= static_cast<int>(c.size())) return MPoly(p.order());
    return c[k];
  };
  std::vector<MPoly> out;
  for (int j = 0; j < n; ++j) {
    // Rows: p*v^(n-j-1) ... p, then q*v^(m-j-1) ... q; leading square block.
    int size = m + n - 2 * j;
    int top = m + n - j - 1;
    std::vector<std::vector<MPoly>> mat(
        static_cast<size_t>(size),
        std::vector<MPoly>(static_cast<size_t>(size), MPoly(p.order())));
    for (int r = 0; r < n - j; ++r) {
      int shift = n - j - 1 - r;
      for (int col = 0; col < size; ++col)
        mat[r][col] = coeff(pc, top - col - shift);
    }
    for (int r = 0; r < m - j; ++r) {
      int shift = m - j - 1 - r;
      for (int col = 0; col < size; ++col)
        mat[n - j + r][col] = coeff(qc, top - col - shift);
    }
    out.push_back(bareiss_determinant(std::move(mat), p.order()));
  }
  // psc_n: determinant of the q-only block, triangular with lc(q) diagonal.
  out.push_back(m == n ? MPoly::constant(p.order(), Rat(1))
                       : q.lc(v).pow(static_cast<unsigned>(m - n)));
  return out;
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw Error("squarefree part of zero");
  if (p.is_constant()) return canonical(p);
  MPoly g(p.order());
  for (Var v : p.vars_present()) {
    MPoly d = p.derivative(v);
    g = g.is_zero() ? gcd(p, d) : gcd(g, d);
    if (g.is_constant()) break;
  }
  if (g.is_zero() || g.is_constant()) return canonical(p);
  return canonical(divide_exact_or_throw(int_primitive(p), g));
}

std::vector<MPoly> squarefree_coprime_basis(const std::vector<MPoly>& F) {
  std::vector<MPoly> work;
  for (const auto& f : F) {
    if (f.is_zero()) throw Error("zero polynomial in basis input");
    if (f.is_constant()) continue;
    work.push_back(squarefree_part(f));
  }
  std::vector<MPoly> basis;
  while (!work.empty()) {
    MPoly g = work.back();
    work.pop_back();
    if (g.is_constant()) continue;
    size_t i = 0;
    while (i < basis.size() && !g.is_constant()) {
      MPoly d = gcd(g, basis[i]);
      if (d.is_constant()) {
        ++i;
        continue;
      }
      MPoly b = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      work.push_back(divide_exact_or_throw(b, d));
      work.push_back(d);
      g = divide_exact_or_throw(g, d);
    }
    if (!g.is_constant()) basis.push_back(canonical(g));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace cad
