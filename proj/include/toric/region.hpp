#ifndef TORIC_REGION_HPP
#define TORIC_REGION_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "toric/rational.hpp"
#include "toric/torus.hpp"

namespace toric {

// The simplex region of T^n cut out by
//   x_i = 0 for i in zero_set,  x_i > 0 otherwise,  sum x_i < eps
// (<= eps when strict is false).  An empty zero_set gives the full-torus
// region; a nonempty one gives the region inside the corresponding face.
struct Region {
  std::size_t ambient_dim = 0;
  Rational eps;
  bool strict = true;                // true: sum < eps, false: sum <= eps
  std::set<std::size_t> zero_set;    // 0-based coordinate indices

  static Region simplex(std::size_t n, Rational eps, bool strict) {
    return Region{n, std::move(eps), strict, {}};
  }
};

// Same threshold and strictness, zero sets united.
Region face_region(const Region& reg, const std::set<std::size_t>& zero_set);

bool region_contains(const Region& reg, const TorusPoint& x);

struct AvoidanceReport {
  bool avoids = false;
  std::optional<TorusPoint> witness;  // a subgroup point inside the region
};

// Scans the materialized elements in canonical order.
AvoidanceReport finite_avoids(const FiniteSubgroup& g, const Region& reg);

// Decides V `intersect` region = empty exactly.  Lifting T^n to the unit
// cube turns membership in V into finitely many integer right-hand sides for
// the character rows; each candidate becomes a rational feasibility problem.
AvoidanceReport closed_avoids(const CharLattice& v, const Region& reg);

struct AvoiderSearch {
  std::vector<CharLattice> avoiders;  // antichain, sorted (dim desc, basis)
  long height_bound = 0;              // certification flags: the search is
  long prime_bound = 0;               // complete only within these bounds
};

// Height-bounded search for the closed subgroups maximal among those
// avoiding the region: enumerates all canonical HNF character lattices with
// entries bounded by `height`, keeps the avoiders, reduces to containment
// maximals, and discards any survivor with a prime-index enlargement (prime
// <= prime_bound) that still avoids.  Completeness beyond the bounds is not
// claimed; results carry the bounds as certification flags.
AvoiderSearch maximal_avoiders(std::size_t n, const Rational& eps, bool strict,
                               long height, long prime_bound,
                               unsigned jobs = 1);

// Same search restricted to closed subgroups of `ambient`, with enlargement
// probes confined to subgroups of `ambient`.
AvoiderSearch maximal_avoiders_within(const CharLattice& ambient,
                                      const Region& reg, long height,
                                      long prime_bound, unsigned jobs = 1);

// All canonical HNF matrices with n columns, pivots in [1, height], entries
// above pivots in [0, pivot), and remaining entries in [-height, height],
// over all ranks 0..n.  Exposed for oracle-style exhaustive checks.
std::vector<CharLattice> hnf_candidates(std::size_t n, long height);

// Character lattices of the index-p enlargements of V (one per maximal
// sublattice of V's character lattice).
std::vector<CharLattice> prime_enlargements(const CharLattice& v, long p);

}  // namespace toric

#endif
