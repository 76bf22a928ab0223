#include "toric/linear_system.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace toric {

void LinearSystem::add_equality(std::vector<Rational> coeffs, Rational rhs) {
  if (coeffs.size() != vars) {
    throw std::invalid_argument("equality coefficient vector has wrong length");
  }
  equalities.emplace_back(std::move(coeffs), std::move(rhs));
}

void LinearSystem::add_inequality(std::vector<Rational> coeffs, Rational rhs,
                                  bool strict) {
  if (coeffs.size() != vars) {
    throw std::invalid_argument(
        "inequality coefficient vector has wrong length");
  }
  inequalities.push_back({std::move(coeffs), std::move(rhs), strict});
}

namespace {

// Scales a constraint by a positive rational so all entries are coprime
// integers; used for deduplication and trivial-constraint detection.
struct NormalForm {
  std::vector<Integer> coeffs;
  Integer rhs;
  bool strict;
  auto operator<=>(const NormalForm&) const = default;
};

// nullopt means the constraint is trivially true and can be dropped.
// Trivially false constraints set *contradiction.
std::optional<NormalForm> normalize(const LinearConstraint& c,
                                    bool* contradiction) {
  bool all_zero = true;
  for (const auto& q : c.coeffs) {
    if (q != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    const bool ok = c.strict ? (c.rhs > 0) : (c.rhs >= 0);
    if (!ok) *contradiction = true;
    return std::nullopt;
  }
  Integer scale = rat_den(c.rhs);
  for (const auto& q : c.coeffs) scale = lcm(scale, rat_den(q));
  std::vector<Integer> coeffs;
  coeffs.reserve(c.coeffs.size());
  Integer g = 0;
  for (const auto& q : c.coeffs) {
    Integer v = rat_num(q) * (scale / rat_den(q));
    g = gcd(g, v);
    coeffs.push_back(std::move(v));
  }
  Integer rhs = rat_num(c.rhs) * (scale / rat_den(c.rhs));
  g = gcd(g, rhs);
  if (g > 1) {
    for (auto& v : coeffs) v /= g;
    rhs /= g;
  }
  return NormalForm{std::move(coeffs), std::move(rhs), c.strict};
}

}  // namespace

Feasibility fm_feasible(const LinearSystem& sys) {
  const std::size_t n = sys.vars;
  bool contradiction = false;

  // Everything becomes a <= / < constraint; equalities become pairs.
  std::set<NormalForm> current;
  auto push = [&](const LinearConstraint& c) {
    if (auto nf = normalize(c, &contradiction)) current.insert(std::move(*nf));
  };
  for (const auto& [coeffs, rhs] : sys.equalities) {
    push({coeffs, rhs, false});
    std::vector<Rational> neg(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) neg[j] = -coeffs[j];
    push({std::move(neg), Rational(-rhs), false});
  }
  for (const auto& c : sys.inequalities) push(c);
  if (contradiction) return {};

  // levels[v] holds the system before variable v is eliminated; variables
  // are eliminated in index order, so levels[v] constrains vars v..n-1.
  std::vector<std::vector<NormalForm>> levels(n);
  for (std::size_t v = 0; v < n; ++v) {
    levels[v].assign(current.begin(), current.end());
    std::set<NormalForm> reduced;
    for (const auto& low : levels[v]) {
      if (low.coeffs[v] >= 0) {
        if (low.coeffs[v] == 0) reduced.insert(low);
        continue;
      }
      for (const auto& up : levels[v]) {
        if (up.coeffs[v] <= 0) continue;
        // up.coeffs[v] * low + (-low.coeffs[v]) * up eliminates v.
        LinearConstraint combo;
        combo.coeffs.resize(n, Rational(0));
        const Integer a = up.coeffs[v];
        const Integer b = -low.coeffs[v];
        for (std::size_t j = 0; j < n; ++j) {
          combo.coeffs[j] = Rational(a * low.coeffs[j] + b * up.coeffs[j]);
        }
        combo.rhs = Rational(a * low.rhs + b * up.rhs);
        combo.strict = low.strict || up.strict;
        if (auto nf = normalize(combo, &contradiction)) {
          reduced.insert(std::move(*nf));
        }
        if (contradiction) return {};
      }
    }
    current = std::move(reduced);
  }

  // Back-substitute midpoints from the innermost level outward.
  std::vector<Rational> witness(n, Rational(0));
  for (std::size_t vi = n; vi-- > 0;) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : levels[vi]) {
      if (c.coeffs[vi] == 0) continue;
      Rational rest(c.rhs);
      for (std::size_t j = vi + 1; j < n; ++j) {
        if (c.coeffs[j] != 0) rest -= Rational(c.coeffs[j]) * witness[j];
      }
      Rational bound = rest / Rational(c.coeffs[vi]);
      if (c.coeffs[vi] > 0) {  // x_vi <= bound
        if (!hi || bound < *hi) {
          hi = bound;
          hi_strict = c.strict;
        } else if (bound == *hi) {
          hi_strict = hi_strict || c.strict;
        }
      } else {  // x_vi >= bound
        if (!lo || bound > *lo) {
          lo = bound;
          lo_strict = c.strict;
        } else if (bound == *lo) {
          lo_strict = lo_strict || c.strict;
        }
      }
    }
    if (lo && hi) {
      witness[vi] = (*lo + *hi) / 2;
    } else if (lo) {
      witness[vi] = lo_strict ? Rational(*lo + 1) : *lo;
    } else if (hi) {
      witness[vi] = hi_strict ? Rational(*hi - 1) : *hi;
    } else {
      witness[vi] = 0;
    }
  }
  return {true, std::move(witness)};
}

}  // namespace toric
