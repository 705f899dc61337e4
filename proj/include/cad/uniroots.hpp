#pragma once

#include <vector>

#include "cad/mpoly.hpp"

namespace cad {

/// Dense univariate polynomial over Q; index = degree. No trailing zeros;
/// empty vector is the zero polynomial.
using UniPoly = std::vector<Rat>;

UniPoly uni_trim(UniPoly u);
UniPoly uni_from_mpoly(const MPoly& p, Var v);
int uni_degree(const UniPoly& u);
Rat uni_eval(const UniPoly& u, const Rat& x);
int uni_sign_at(const UniPoly& u, const Rat& x);
UniPoly uni_derivative(const UniPoly& u);
UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_squarefree(const UniPoly& u);

/// Upper bound B with all real roots strictly inside (-B, B).
Rat uni_root_bound(const UniPoly& u);

/// Number of sign variations of (1+x)^d u((a+bx)/(1+x)); bounds the root
/// count in the open interval (a, b) and matches it modulo 2.
int descartes_variations(const UniPoly& u, const Rat& a, const Rat& b);

/// Disjoint isolating intervals for the real roots of u (squarefree or not),
/// sorted ascending. Exact rational roots may come back as point intervals.
/// Non-point intervals have non-root endpoints.
std::vector<Interval> uni_isolate(const UniPoly& u);

/// Halves an isolating interval of squarefree u, keeping its root. Returns a
/// point interval when the midpoint is the root.
Interval uni_narrow(const UniPoly& squarefree_u, const Interval& iv);

/// Spec operations over MPoly (univariate in v).
std::vector<Interval> isolate_real_roots_univariate(const MPoly& p, Var v);
Interval refine_interval(const MPoly& p, Var v, const Interval& iv,
                         const Rat& target_width);

}  // namespace cad
