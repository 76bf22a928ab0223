#include "toric/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

void check_rectangular(std::size_t cols,
                       const std::vector<std::vector<Integer>>& rows) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("matrix rows must share a common length");
    }
  }
}

// rows[i] -= q * rows[p]
void row_axpy(std::vector<Integer>& target, const std::vector<Integer>& src,
              const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

bool row_is_zero(const std::vector<Integer>& r) {
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t cols, std::vector<std::vector<Integer>> rows)
    : cols_(cols), rows_(std::move(rows)) {
  check_rectangular(cols_, rows_);
}

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<long long>> rows) {
  for (const auto& r : rows) {
    std::vector<Integer> row;
    row.reserve(r.size());
    for (long long x : r) row.emplace_back(x);
    if (rows_.empty()) cols_ = row.size();
    rows_.push_back(std::move(row));
  }
  check_rectangular(cols_, rows_);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(n, Integer(0));
    row[i] = 1;
    m.append_row(std::move(row));
  }
  return m;
}

void IntMatrix::append_row(std::vector<Integer> r) {
  if (r.size() != cols_) {
    throw std::invalid_argument("appended row has wrong length");
  }
  rows_.push_back(std::move(r));
}

void IntMatrix::append_rows(const IntMatrix& other) {
  if (other.cols() != cols_) {
    throw std::invalid_argument("appended rows have wrong length");
  }
  for (const auto& r : other.row_data()) rows_.push_back(r);
}

bool IntMatrix::operator<(const IntMatrix& other) const {
  if (cols_ != other.cols_) return cols_ < other.cols_;
  if (rows_.size() != other.rows_.size())
    return rows_.size() < other.rows_.size();
  return rows_ < other.rows_;
}

IntMatrix hnf(const IntMatrix& m) {
  std::vector<std::vector<Integer>> rows = m.row_data();
  const std::size_t nc = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < nc && pivot_row < rows.size(); ++col) {
    // Reduce column `col` below pivot_row to a single nonzero entry by
    // repeated division steps against the smallest nonzero entry.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            abs(rows[i][col]) < abs(rows[best][col])) {
          best = i;
        }
      }
      if (best == rows.size()) break;  // column is zero below pivot_row
      std::swap(rows[best], rows[pivot_row]);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = rows[i][col] / rows[pivot_row][col];  // truncated
        row_axpy(rows[i], rows[pivot_row], q);
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    // Entries above the pivot land in [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(rows[i][col], rows[pivot_row][col]);
      row_axpy(rows[i], rows[pivot_row], q);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  // Rows below the last pivot are zero by construction; assert cheaply.
  for (const auto& r : rows) {
    if (row_is_zero(r)) throw std::logic_error("hnf produced a zero pivot row");
  }
  return IntMatrix(nc, std::move(rows));
}

SmithResult snf(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<std::vector<Integer>> a = m.row_data();
  IntMatrix left = IntMatrix::identity(nr);
  IntMatrix right = IntMatrix::identity(nc);

  auto row_op = [&](std::size_t i, std::size_t p, const Integer& q) {
    row_axpy(a[i], a[p], q);
    for (std::size_t j = 0; j < nr; ++j) left.at(i, j) -= q * left.at(p, j);
  };
  auto col_op = [&](std::size_t j, std::size_t p, const Integer& q) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i][j] -= q * a[i][p];
    for (std::size_t i = 0; i < nc; ++i) right.at(i, j) -= q * right.at(i, p);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (std::size_t c = 0; c < nr; ++c) std::swap(left.at(i, c), left.at(j, c));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (std::size_t c = 0; c < nc; ++c)
      std::swap(right.at(c, i), right.at(c, j));
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (std::size_t c = 0; c < nr; ++c) left.at(i, c) = -left.at(i, c);
  };

  std::vector<Integer> diag;
  const std::size_t bound = std::min(nr, nc);
  for (std::size_t t = 0; t < bound; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix to (t, t).
      std::size_t bi = nr, bj = nc;
      for (std::size_t i = t; i < nr; ++i) {
        for (std::size_t j = t; j < nc; ++j) {
          if (a[i][j] == 0) continue;
          if (bi == nr || abs(a[i][j]) < abs(a[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == nr) goto done;  // trailing submatrix vanished
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        row_op(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; if not, fold the
      // offending row in and restart with a smaller pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i) {
        for (std::size_t j = t + 1; j < nc && divides; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            row_op(t, i, Integer(-1));
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) row_negate(t);
    diag.push_back(a[t][t]);
  }
done:
  return SmithResult{std::move(diag), std::move(left), std::move(right)};
}

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("lattice_contains: ambient dimensions differ");
  }
  const IntMatrix h = hnf(a);
  // Pivot column of each HNF row = first nonzero entry.
  std::vector<std::size_t> pivot_col(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h.at(i, c) == 0) ++c;
    pivot_col[i] = c;
  }
  for (std::size_t bi = 0; bi < b.rows(); ++bi) {
    std::vector<Integer> v = b.row(bi);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      const std::size_t c = pivot_col[i];
      if (v[c] == 0) continue;
      if (v[c] % h.at(i, c) != 0) return false;
      row_axpy(v, h.row(i), v[c] / h.at(i, c));
    }
    if (!row_is_zero(v)) return false;
  }
  return true;
}

SaturationData saturation_data(const IntMatrix& m) {
  SmithResult s = snf(m);
  SaturationData out;
  out.rank = s.diagonal.size();
  for (const auto& d : s.diagonal) out.torsion_order *= d;
  return out;
}

Integer det(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det: matrix is not square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a = m.row_data();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  IntMatrix out(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Integer> row(b.cols(), Integer(0));
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        row[j] += a.at(i, k) * b.at(k, j);
      }
    }
    out.append_row(std::move(row));
  }
  return out;
}

}  // namespace toric
