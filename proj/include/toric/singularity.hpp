#ifndef TORIC_SINGULARITY_HPP
#define TORIC_SINGULARITY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "toric/rational.hpp"
#include "toric/torus.hpp"

namespace toric {

// The cyclic quotient 1/r (a_1, ..., a_n): the subgroup of T^n generated by
// (a_1/r, ..., a_n/r).  Weights are stored reduced mod r.
struct CyclicQuotient {
  Integer index;                 // r >= 1
  std::vector<Integer> weights;  // n entries in [0, r)

  CyclicQuotient(Integer r, std::vector<Integer> w);

  std::size_t dim() const { return weights.size(); }
  // r / gcd(r, a_1, ..., a_n): the order of the generator.
  Integer group_order() const;
  TorusPoint generator() const;

  auto operator<=>(const CyclicQuotient&) const = default;
};

struct MldResult {
  Rational value;
  // A nonzero group element whose coordinate sum equals `value`; absent for
  // the trivial subgroup (smooth point).
  std::optional<TorusPoint> witness;
};

FiniteSubgroup from_cyclic(const CyclicQuotient& q,
                           std::uint64_t cap = kDefaultElementCap);

// The axis condition: no nonzero element is supported on a single
// coordinate axis.
bool defines_toric_singularity(const FiniteSubgroup& g);

// Minimal coordinate sum over the nonzero elements; n for the trivial group
// (smooth-point convention).  Callers must have checked the axis condition.
MldResult mld(const FiniteSubgroup& g);

// Same quantity computed directly from the weight scan, without
// materializing torus points.  Throws InvalidSingularity if the axis
// condition fails.
MldResult mld_cyclic(const CyclicQuotient& q);

bool is_eps_log_terminal(const FiniteSubgroup& g, const Rational& eps,
                         bool strict);

// Representative of the equivalence class under coordinate permutations and
// unit rescaling of the generator, after reducing to a faithful
// presentation: the lexicographically smallest sorted weight tuple.
CyclicQuotient canonical_form(const CyclicQuotient& q);

}  // namespace toric

#endif
