#ifndef TORIC_TORUS_HPP
#define TORIC_TORUS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "toric/int_matrix.hpp"
#include "toric/rational.hpp"

namespace toric {

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

// A point of T^n = R^n / Z^n, stored as the representative with every
// coordinate in [0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  static TorusPoint zero(std::size_t n);
  // Reduces arbitrary rational coordinates to their fractional parts.
  static TorusPoint reduce(std::vector<Rational> coords);

  std::size_t dim() const { return coords_.size(); }
  const Rational& coord(std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  Rational coordinate_sum() const;
  std::size_t nonzero_count() const;
  Integer order() const;  // lcm of coordinate denominators

  TorusPoint add(const TorusPoint& other) const;
  TorusPoint negate() const;

  auto operator<=>(const TorusPoint&) const = default;

 private:
  std::vector<Rational> coords_;
};

TorusPoint reduce_mod1(const std::vector<Rational>& coords);

// A finite subgroup of T^n with its full element list materialized and kept
// in lexicographic order.  Values are immutable once built.
class FiniteSubgroup {
 public:
  FiniteSubgroup() = default;
  FiniteSubgroup(std::size_t dim, std::vector<TorusPoint> generators,
                 std::vector<TorusPoint> sorted_elements);

  std::size_t dim() const { return dim_; }
  const std::vector<TorusPoint>& generators() const { return generators_; }
  const std::vector<TorusPoint>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  bool contains(const TorusPoint& p) const;

  bool operator==(const FiniteSubgroup& other) const {
    return dim_ == other.dim_ && elements_ == other.elements_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<TorusPoint> generators_;
  std::vector<TorusPoint> elements_;  // sorted, closed under + and -
};

// Closure of the generators under addition mod 1 (breadth-first saturation).
// Throws CapExceeded if the subgroup would outgrow `cap` elements.
FiniteSubgroup span_elements(const std::vector<TorusPoint>& generators,
                             std::uint64_t cap = kDefaultElementCap);

// A closed subgroup V of T^n, encoded dually by its character lattice
// Lambda, kept in canonical HNF:  V = { x : <m, x> in Z for all rows m }.
// An empty lattice encodes the whole torus; the full lattice Z^n encodes
// the trivial subgroup {0}.
class CharLattice {
 public:
  CharLattice() = default;
  // Any generating rows; the basis is canonicalized on construction.
  CharLattice(std::size_t ambient_dim, const IntMatrix& rows);

  static CharLattice whole_torus(std::size_t n);
  static CharLattice trivial_subgroup(std::size_t n);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  auto operator<=>(const CharLattice&) const = default;

 private:
  std::size_t ambient_dim_ = 0;
  IntMatrix basis_;
};

bool closed_membership(const CharLattice& v, const TorusPoint& x);
bool closed_contains_finite(const CharLattice& v, const FiniteSubgroup& g);
// True iff the subgroup of `inner` is contained in the subgroup of `outer`
// (containment of subgroups reverses containment of character lattices).
bool closed_contains_closed(const CharLattice& outer, const CharLattice& inner);
CharLattice intersect_closed(const CharLattice& a, const CharLattice& b);
// The face { x : x_i = 0 for all i in I } as a closed subgroup (0-based I).
CharLattice face_subgroup(std::size_t n, const std::set<std::size_t>& zero_set);

struct DimComponents {
  std::size_t dim = 0;
  Integer components = 1;
};

DimComponents subgroup_dim_components(const CharLattice& v);

// Integer-coefficient polynomial indexed by degree.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  static HilbertPolynomial monomial(Integer coeff, std::size_t degree);
  static HilbertPolynomial constant(Integer c) { return monomial(std::move(c), 0); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer eval(const Integer& x) const;
  std::string str() const;

  HilbertPolynomial& operator+=(const HilbertPolynomial& other);
  HilbertPolynomial& operator-=(const HilbertPolynomial& other);
  friend HilbertPolynomial operator+(HilbertPolynomial a,
                                     const HilbertPolynomial& b) {
    a += b;
    return a;
  }
  friend HilbertPolynomial operator-(HilbertPolynomial a,
                                     const HilbertPolynomial& b) {
    a -= b;
    return a;
  }
  bool operator==(const HilbertPolynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// r * x^d for a closed subgroup with r components of dimension d.
HilbertPolynomial hilbert_poly(const CharLattice& v);

// Materializes the points of a finite (dimension-zero) closed subgroup by
// walking the Smith normal form of its character lattice.  Throws
// std::invalid_argument on positive-dimensional input and CapExceeded when
// the component count exceeds `cap`.
std::vector<TorusPoint> closed_elements(const CharLattice& v,
                                        std::uint64_t cap = kDefaultElementCap);

}  // namespace toric

#endif
