#include "toric/singularity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

Integer positive_mod(const Integer& a, const Integer& m) {
  Integer v = a % m;
  if (v < 0) v += m;
  return v;
}

constexpr std::int64_t kInt64Guard = std::int64_t{1} << 31;

}  // namespace

CyclicQuotient::CyclicQuotient(Integer r, std::vector<Integer> w)
    : index(std::move(r)), weights(std::move(w)) {
  if (index < 1) throw std::invalid_argument("cyclic quotient index must be >= 1");
  for (auto& a : weights) a = positive_mod(a, index);
}

Integer CyclicQuotient::group_order() const {
  Integer g = index;
  for (const auto& a : weights) g = gcd(g, a);
  return index / g;
}

TorusPoint CyclicQuotient::generator() const {
  std::vector<Rational> coords;
  coords.reserve(weights.size());
  for (const auto& a : weights) coords.emplace_back(a, index);
  return TorusPoint::reduce(std::move(coords));
}

FiniteSubgroup from_cyclic(const CyclicQuotient& q, std::uint64_t cap) {
  return span_elements({q.generator()}, cap);
}

bool defines_toric_singularity(const FiniteSubgroup& g) {
  for (const auto& p : g.elements()) {
    const std::size_t nz = p.nonzero_count();
    if (nz == 1) return false;
  }
  return true;
}

MldResult mld(const FiniteSubgroup& g) {
  if (g.order() <= 1) {
    return MldResult{Rational(g.dim()), std::nullopt};
  }
  const TorusPoint* best = nullptr;
  Rational best_sum;
  for (const auto& p : g.elements()) {
    if (p.is_zero()) continue;
    Rational s = p.coordinate_sum();
    if (best == nullptr || s < best_sum) {
      best = &p;
      best_sum = std::move(s);
    }
  }
  return MldResult{best_sum, *best};
}

namespace {

// Shared scan over k * generator, k = 1 .. ord-1: tracks validity (axis
// condition) and the minimal coordinate sum.  Weights and index fit I.
template <typename I>
MldResult mld_cyclic_scan(const I& r, const std::vector<I>& weights,
                          const I& ord) {
  const std::size_t n = weights.size();
  std::vector<I> cur(n, I(0));
  I best_sum(0);
  bool have_best = false;
  I best_k(0);
  for (I k(1); k < ord; ++k) {
    I sum(0);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] += weights[i];
      if (cur[i] >= r) cur[i] -= r;
      if (cur[i] != 0) ++nonzero;
      sum += cur[i];
    }
    if (nonzero == 1) {
      throw InvalidSingularity(
          "cyclic quotient has a nonzero element on a coordinate axis");
    }
    if (!have_best || sum < best_sum) {
      have_best = true;
      best_sum = sum;
      best_k = k;
    }
  }
  if (!have_best) {
    return MldResult{Rational(n), std::nullopt};  // trivial group
  }
  std::vector<Rational> coords;
  coords.reserve(n);
  const Integer rr(r);
  for (std::size_t i = 0; i < n; ++i) {
    coords.emplace_back(positive_mod(Integer(best_k) * Integer(weights[i]), rr),
                        rr);
  }
  return MldResult{Rational(Integer(best_sum), rr),
                   TorusPoint::reduce(std::move(coords))};
}

}  // namespace

MldResult mld_cyclic(const CyclicQuotient& q) {
  const Integer ord = q.group_order();
  if (q.index < kInt64Guard) {
    const std::int64_t r = q.index.convert_to<std::int64_t>();
    std::vector<std::int64_t> w;
    w.reserve(q.weights.size());
    for (const auto& a : q.weights) w.push_back(a.convert_to<std::int64_t>());
    return mld_cyclic_scan<std::int64_t>(r, w, ord.convert_to<std::int64_t>());
  }
  return mld_cyclic_scan<Integer>(q.index, q.weights, ord);
}

bool is_eps_log_terminal(const FiniteSubgroup& g, const Rational& eps,
                         bool strict) {
  const Rational value = mld(g).value;
  return strict ? value > eps : value >= eps;
}

CyclicQuotient canonical_form(const CyclicQuotient& q) {
  // Faithful presentation first: divide out gcd(r, weights).
  Integer g = q.index;
  for (const auto& a : q.weights) g = gcd(g, a);
  const Integer r = q.index / g;
  std::vector<Integer> base;
  base.reserve(q.weights.size());
  for (const auto& a : q.weights) base.push_back(positive_mod(a / g, r));

  std::vector<Integer> best;
  for (Integer u = 1; u < r || (r == 1 && u == 1); ++u) {
    if (gcd(u, r) != 1) continue;
    std::vector<Integer> cand;
    cand.reserve(base.size());
    for (const auto& a : base) cand.push_back(positive_mod(u * a, r));
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
    if (r == 1) break;
  }
  if (best.empty()) best.assign(base.size(), Integer(0));  // r == 1
  return CyclicQuotient(r, std::move(best));
}

}  // namespace toric
