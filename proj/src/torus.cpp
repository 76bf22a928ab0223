#include "toric/torus.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

TorusPoint TorusPoint::zero(std::size_t n) {
  TorusPoint p;
  p.coords_.assign(n, Rational(0));
  return p;
}

TorusPoint TorusPoint::reduce(std::vector<Rational> coords) {
  TorusPoint p;
  p.coords_ = std::move(coords);
  for (auto& c : p.coords_) c = frac_part(c);
  return p;
}

bool TorusPoint::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Rational TorusPoint::coordinate_sum() const {
  Rational s(0);
  for (const auto& c : coords_) s += c;
  return s;
}

std::size_t TorusPoint::nonzero_count() const {
  std::size_t k = 0;
  for (const auto& c : coords_)
    if (c != 0) ++k;
  return k;
}

Integer TorusPoint::order() const {
  Integer o = 1;
  for (const auto& c : coords_) o = lcm(o, rat_den(c));
  return o;
}

TorusPoint TorusPoint::add(const TorusPoint& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("torus point dimensions differ");
  }
  TorusPoint out;
  out.coords_.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational s = coords_[i] + other.coords_[i];
    if (s >= 1) s -= 1;  // both inputs live in [0,1)
    out.coords_.push_back(std::move(s));
  }
  return out;
}

TorusPoint TorusPoint::negate() const {
  TorusPoint out;
  out.coords_.reserve(dim());
  for (const auto& c : coords_) {
    out.coords_.push_back(c == 0 ? Rational(0) : Rational(1 - c));
  }
  return out;
}

TorusPoint reduce_mod1(const std::vector<Rational>& coords) {
  return TorusPoint::reduce(coords);
}

FiniteSubgroup::FiniteSubgroup(std::size_t dim,
                               std::vector<TorusPoint> generators,
                               std::vector<TorusPoint> sorted_elements)
    : dim_(dim),
      generators_(std::move(generators)),
      elements_(std::move(sorted_elements)) {}

bool FiniteSubgroup::contains(const TorusPoint& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

FiniteSubgroup span_elements(const std::vector<TorusPoint>& generators,
                             std::uint64_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("span_elements needs at least one generator");
  }
  const std::size_t n = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != n) {
      throw std::invalid_argument("generators have mixed dimensions");
    }
  }
  const TorusPoint zero = TorusPoint::zero(n);

  if (generators.size() == 1) {
    // Single generator: walk the cycle until it returns to zero.
    std::vector<TorusPoint> elements{zero};
    TorusPoint cur = generators.front();
    while (!cur.is_zero()) {
      if (elements.size() >= cap) throw CapExceeded(elements.size(), cap);
      elements.push_back(cur);
      cur = cur.add(generators.front());
    }
    std::sort(elements.begin(), elements.end());
    return FiniteSubgroup(n, generators, std::move(elements));
  }

  std::set<TorusPoint> seen{zero};
  std::deque<TorusPoint> work{zero};
  while (!work.empty()) {
    TorusPoint p = std::move(work.front());
    work.pop_front();
    for (const auto& g : generators) {
      TorusPoint q = p.add(g);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw CapExceeded(seen.size(), cap);
        work.push_back(std::move(q));
      }
    }
  }
  std::vector<TorusPoint> elements(seen.begin(), seen.end());
  return FiniteSubgroup(n, generators, std::move(elements));
}

CharLattice::CharLattice(std::size_t ambient_dim, const IntMatrix& rows)
    : ambient_dim_(ambient_dim), basis_(hnf(rows)) {
  if (rows.cols() != ambient_dim && !(rows.rows() == 0 && rows.cols() == 0)) {
    throw std::invalid_argument("character rows do not match ambient dim");
  }
  if (basis_.cols() != ambient_dim) {
    basis_ = IntMatrix(ambient_dim);  // empty lattice in the right width
  }
}

CharLattice CharLattice::whole_torus(std::size_t n) {
  return CharLattice(n, IntMatrix(n));
}

CharLattice CharLattice::trivial_subgroup(std::size_t n) {
  return CharLattice(n, IntMatrix::identity(n));
}

namespace {

Rational pairing(const std::vector<Integer>& row, const TorusPoint& x) {
  Rational s(0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) s += Rational(row[i]) * x.coord(i);
  }
  return s;
}

}  // namespace

bool closed_membership(const CharLattice& v, const TorusPoint& x) {
  if (v.ambient_dim() != x.dim()) {
    throw std::invalid_argument("closed_membership: dimension mismatch");
  }
  for (std::size_t i = 0; i < v.basis().rows(); ++i) {
    if (!is_integral(pairing(v.basis().row(i), x))) return false;
  }
  return true;
}

bool closed_contains_finite(const CharLattice& v, const FiniteSubgroup& g) {
  if (v.ambient_dim() != g.dim()) {
    throw std::invalid_argument("closed_contains_finite: dimension mismatch");
  }
  // Membership of all generators suffices: the condition cuts out a subgroup.
  for (const auto& gen : g.generators()) {
    if (!closed_membership(v, gen)) return false;
  }
  return true;
}

bool closed_contains_closed(const CharLattice& outer,
                            const CharLattice& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) {
    throw std::invalid_argument("closed_contains_closed: dimension mismatch");
  }
  return lattice_contains(inner.basis(), outer.basis());
}

CharLattice intersect_closed(const CharLattice& a, const CharLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("intersect_closed: dimension mismatch");
  }
  IntMatrix rows(a.ambient_dim());
  rows.append_rows(a.basis());
  rows.append_rows(b.basis());
  return CharLattice(a.ambient_dim(), rows);
}

CharLattice face_subgroup(std::size_t n, const std::set<std::size_t>& zero_set) {
  IntMatrix rows(n);
  for (std::size_t i : zero_set) {
    if (i >= n) throw std::invalid_argument("face index out of range");
    std::vector<Integer> e(n, Integer(0));
    e[i] = 1;
    rows.append_row(std::move(e));
  }
  return CharLattice(n, rows);
}

DimComponents subgroup_dim_components(const CharLattice& v) {
  SaturationData s = saturation_data(v.basis());
  return DimComponents{v.ambient_dim() - s.rank, s.torsion_order};
}

HilbertPolynomial HilbertPolynomial::monomial(Integer coeff,
                                              std::size_t degree) {
  HilbertPolynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, Integer(0));
    p.coeffs_[degree] = std::move(coeff);
  }
  return p;
}

Integer HilbertPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t d = coeffs_.size(); d-- > 0;) acc = acc * x + coeffs_[d];
  return acc;
}

std::string HilbertPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    const Integer a = abs(c);
    if (d == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + "*";
      out += (d == 1) ? "x" : "x^" + std::to_string(d);
    }
  }
  return out;
}

HilbertPolynomial& HilbertPolynomial::operator+=(
    const HilbertPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Integer(0));
  }
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) {
    coeffs_[d] += other.coeffs_[d];
  }
  trim();
  return *this;
}

HilbertPolynomial& HilbertPolynomial::operator-=(
    const HilbertPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Integer(0));
  }
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) {
    coeffs_[d] -= other.coeffs_[d];
  }
  trim();
  return *this;
}

void HilbertPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPolynomial hilbert_poly(const CharLattice& v) {
  DimComponents dc = subgroup_dim_components(v);
  return HilbertPolynomial::monomial(dc.components, dc.dim);
}

std::vector<TorusPoint> closed_elements(const CharLattice& v,
                                        std::uint64_t cap) {
  const std::size_t n = v.ambient_dim();
  SmithResult s = snf(v.basis());
  if (s.diagonal.size() != n) {
    throw std::invalid_argument(
        "closed_elements: subgroup has positive dimension");
  }
  Integer count = 1;
  for (const auto& d : s.diagonal) count *= d;
  if (count > cap) {
    throw CapExceeded(count.convert_to<std::uint64_t>(), cap);
  }
  // With U*B*W = D, a point x lies in the subgroup iff y = W^{-1} x has
  // y_i in (1/d_i) Z; enumerate y and map back through x = W y.
  std::set<TorusPoint> pts;
  std::vector<Integer> counter(n, Integer(0));
  for (;;) {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (counter[j] == 0) continue;
      const Rational yj(counter[j], s.diagonal[j]);
      for (std::size_t i = 0; i < n; ++i) {
        if (s.right.at(i, j) != 0) x[i] += Rational(s.right.at(i, j)) * yj;
      }
    }
    pts.insert(TorusPoint::reduce(std::move(x)));
    std::size_t j = 0;
    while (j < n) {
      if (++counter[j] < s.diagonal[j]) break;
      counter[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return std::vector<TorusPoint>(pts.begin(), pts.end());
}

}  // namespace toric
