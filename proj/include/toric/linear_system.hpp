#ifndef TORIC_LINEAR_SYSTEM_HPP
#define TORIC_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// One inequality: coeffs . x < rhs (strict) or <= rhs (non-strict).
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
};

struct LinearSystem {
  std::size_t vars = 0;

  // coeffs . x == rhs
  std::vector<std::pair<std::vector<Rational>, Rational>> equalities;
  std::vector<LinearConstraint> inequalities;

  explicit LinearSystem(std::size_t n) : vars(n) {}

  void add_equality(std::vector<Rational> coeffs, Rational rhs);
  void add_inequality(std::vector<Rational> coeffs, Rational rhs, bool strict);
};

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> witness;  // satisfies every constraint exactly
};

// Exact Fourier-Motzkin elimination.  Strictness propagates through derived
// constraints (strict combined with anything is strict).  On success the
// witness is rebuilt by back-substituting the midpoint of the admissible
// interval at each elimination level, so the result is deterministic.
Feasibility fm_feasible(const LinearSystem& sys);

}  // namespace toric

#endif
