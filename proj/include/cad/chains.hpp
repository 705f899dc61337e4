#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cad/arith.hpp"
#include "cad/mpoly.hpp"
#include "cad/uniroots.hpp"

namespace cad {

/// Triangular system: polynomials with strictly increasing main variables,
/// each initial nonzero modulo the preceding subchain.
class RegularChain {
 public:
  RegularChain() = default;
  explicit RegularChain(std::vector<MPoly> polys);

  bool empty() const { return polys_.empty(); }
  int size() const { return static_cast<int>(polys_.size()); }
  const std::vector<MPoly>& polys() const { return polys_; }
  const MPoly& poly(int i) const { return polys_.at(static_cast<size_t>(i)); }

  std::vector<Var> main_vars() const;
  std::optional<int> index_of_var(Var v) const;
  /// Entries with main variable strictly below v.
  RegularChain below(Var v) const;

  std::string to_string() const;

 private:
  std::vector<MPoly> polys_;
};

/// One interval per chain entry; jointly isolates a single real solution.
struct BoundingBox {
  std::vector<Interval> boxes;
};

/// An exact algebraic point in R^level: the unique root of a regular chain
/// inside a bounding box. Rational coordinates appear as linear entries
/// x_i - q with point intervals.
struct SamplePoint {
  RegularChain chain;
  BoundingBox box;
  int level = 0;

  /// Box entry for variable v, when the chain constrains v.
  std::optional<Interval> interval_of(Var v) const;
  bool coordinate_rational(Var v) const;
  Rat rational_coordinate(Var v) const;
};

/// A regular chain together with an inequation regular w.r.t. the chain.
struct RegularSystem {
  RegularChain chain;
  MPoly inequation;
};

enum class Regularity { Regular, ZeroDivisorOrZero };

/// Whether the initial of p is invertible modulo the (saturated) chain.
Regularity regularity_test(const MPoly& p, const RegularChain& rc);

/// p minus its leading term w.r.t. mvar(p); error on constants.
MPoly tail(const MPoly& p);

/// Monic gcd of p and q modulo a zero-dimensional chain. Throws
/// Error("requires split: ...") when the computation needs a case split on a
/// zero divisor; the caller decides how to branch.
MPoly gcd_mod_chain(const MPoly& p, const MPoly& q, const RegularChain& rc);

using SquarefreeFactors = std::vector<std::pair<MPoly, int>>;

/// Musser-style squarefree factorization modulo a chain. Output chains
/// decompose rc; on each, p is congruent to the product of the factors with
/// multiplicity (a degree-zero unit factor carries the initial when needed).
std::vector<std::pair<RegularChain, SquarefreeFactors>>
squarefree_factorization_mod_chain(const MPoly& p, const RegularChain& rc);

/// Restricted triangular decomposition: zeros of the single equation over the
/// chain's zero set, minus the zeros of the inequations.
std::vector<RegularSystem> triangularize(const std::vector<MPoly>& eqs,
                                         const std::vector<MPoly>& ineqs,
                                         const RegularChain& rc);

/// Isolates all real solutions of a zero-dimensional chain with contiguous
/// variables x_1..x_k; optionally restricted to a box.
std::vector<SamplePoint> real_root_isolate(
    const RegularChain& rc,
    const std::optional<BoundingBox>& within = std::nullopt);

/// Whether some real solution of the component's lower part (top dimension
/// excluded) refines into the sample's box.
bool compatible_with_sample(const RegularSystem& component,
                            const SamplePoint& sp);
bool compatible_with_sample(const RegularChain& component,
                            const SamplePoint& sp);

// ---------------------------------------------------------------------------
// Engine: normalized algebraic points.
// ---------------------------------------------------------------------------

/// A zero-dimensional algebraic point in normalized form: triangular entries
/// monic in their main variable, coefficients fully reduced modulo the lower
/// entries (a lex Groebner basis), one isolating interval per entry. Interval
/// refinement and chain splits keep designating the same point, so the public
/// surface is const; internal representation is mutable.
class AlgPoint {
 public:
  AlgPoint() = default;

  int levels() const { return static_cast<int>(vars_.size()); }
  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<MPoly>& entries() const { return entries_; }
  const std::vector<Interval>& boxes() const { return boxes_; }
  bool constrains(Var v) const;
  std::optional<Interval> interval_of(Var v) const;

  /// Builds from a sample point (normalizes; resolves splits by the box).
  static AlgPoint from_sample(const SamplePoint& sp, const VarOrderPtr& order);
  SamplePoint to_sample() const;

  /// Canonical normal form of p modulo the point's chain ideal.
  MPoly reduce(const MPoly& p) const;

  /// Exact sign of h at the point; h's variables must be constrained.
  int sign_at(const MPoly& h) const;
  bool vanishes(const MPoly& h) const { return sign_at(h) == 0; }

  struct FiberRoot {
    Interval box;
    std::optional<Rat> exact;
  };
  struct FiberRoots {
    bool null_fiber = false;  // fiber polynomial identically zero here
    std::vector<FiberRoot> roots;
  };
  /// Isolates the real roots of f(point, v); disjoint certified intervals.
  FiberRoots isolate_fiber(const MPoly& f, Var v,
                           const std::optional<Interval>& within =
                               std::nullopt) const;

  /// Monic squarefree-at-the-point fiber polynomial of f in v (zero when the
  /// fiber vanishes identically).
  MPoly fiber_squarefree(const MPoly& f, Var v) const;

  /// New point with an extra coordinate: root of `defining` in v inside box.
  AlgPoint extended(Var v, const MPoly& defining, const Interval& box,
                    const std::optional<Rat>& exact) const;

  /// Halves every coordinate interval once.
  void refine_once() const;

  /// Restriction to a subset of levels (those with vars in keep).
  AlgPoint restricted(const std::vector<Var>& keep) const;

  const VarOrderPtr& order() const { return order_; }

  std::string to_string() const;

 private:
  friend class PointOps;
  VarOrderPtr order_;
  mutable std::vector<Var> vars_;
  mutable std::vector<MPoly> entries_;
  mutable std::vector<Interval> boxes_;
};

}  // namespace cad
