#pragma once

#include <optional>
#include <vector>

#include "cad/mpoly.hpp"

namespace cad {

/// Pseudo-division in v: lc(q,v)^(deg p - deg q + 1) * p = quo*q + rem,
/// deg_v(rem) < deg_v(q). Requires q nonzero in v when deg p >= deg q.
struct PseudoDiv {
  MPoly quo;
  MPoly rem;
};
PseudoDiv pseudo_divide(const MPoly& p, const MPoly& q, Var v);
MPoly prem(const MPoly& p, const MPoly& q, Var v);

/// Exact division in the polynomial ring; nullopt when q does not divide p.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);
/// Exact division that must succeed.
MPoly divide_exact_or_throw(const MPoly& p, const MPoly& q);

/// Scales p by a positive rational so coefficients are integers with gcd 1.
MPoly int_primitive(const MPoly& p);
/// int_primitive with positive leading (term-order) coefficient.
MPoly canonical(const MPoly& p);

/// Multivariate gcd over Q; result canonical (or zero).
MPoly gcd(const MPoly& a, const MPoly& b);

/// gcd of the coefficients of p with respect to v (canonical).
MPoly content_wrt(const MPoly& p, Var v);
MPoly primitive_part_wrt(const MPoly& p, Var v);

/// res_v(p, q). Errors when both inputs are constant in v or either is zero.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

/// disc_v(p) = (-1)^(d(d-1)/2) res_v(p, p') / lc_v(p), d = deg_v(p) >= 2.
MPoly discriminant(const MPoly& p, Var v);

/// Principal subresultant coefficients psc_0 ... psc_min of (p, q) in v,
/// following the determinantal definition. Requires deg p >= deg q >= 0 and
/// both nonzero.
std::vector<MPoly> subresultant_prs(const MPoly& p, const MPoly& q, Var v);

/// Product of the distinct irreducible factors of p (canonical).
MPoly squarefree_part(const MPoly& p);

/// Pairwise-coprime squarefree canonical polynomials with the same combined
/// zero set as F; constants dropped.
std::vector<MPoly> squarefree_coprime_basis(const std::vector<MPoly>& F);

/// Determinant by fraction-free (Bareiss) elimination; entries consumed.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m,
                          const VarOrderPtr& order);

}  // namespace cad
