#ifndef TORIC_INT_MATRIX_HPP
#define TORIC_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Rectangular integer matrix whose rows generate a sublattice of Z^n.
// A matrix may have zero rows (the zero lattice in ambient dimension n).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t cols) : cols_(cols) {}
  IntMatrix(std::size_t cols, std::vector<std::vector<Integer>> rows);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  const std::vector<Integer>& row(std::size_t i) const { return rows_[i]; }
  const Integer& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Integer& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<std::vector<Integer>>& row_data() const { return rows_; }

  void append_row(std::vector<Integer> r);
  void append_rows(const IntMatrix& other);

  bool operator==(const IntMatrix& other) const {
    return cols_ == other.cols_ && rows_ == other.rows_;
  }
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }
  // Total order: ambient width, then row count, then row-major entries.
  bool operator<(const IntMatrix& other) const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Integer>> rows_;
};

// Canonical row Hermite normal form of the lattice generated by the rows:
// row echelon, positive pivots, entries above each pivot reduced into
// [0, pivot), zero rows dropped.  Idempotent and generation-invariant.
IntMatrix hnf(const IntMatrix& m);

struct SmithResult {
  // d_1 | d_2 | ... | d_k, all positive; k = rank.
  std::vector<Integer> diagonal;
  IntMatrix left;   // unimodular, rows() x rows()
  IntMatrix right;  // unimodular, cols() x cols()
};

// Smith normal form: left * m * right is diagonal(diagonal) padded with
// zeros, and the diagonal entries divide in sequence.
SmithResult snf(const IntMatrix& m);

// True iff every row of b lies in the lattice generated by the rows of a.
// Requires a.cols() == b.cols().
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);

struct SaturationData {
  std::size_t rank = 0;
  // Index of the lattice in its saturation = product of the Smith diagonal
  // = number of connected components of the dual closed subgroup of T^n.
  Integer torsion_order = 1;
};

SaturationData saturation_data(const IntMatrix& m);

// Determinant of a square matrix (Bareiss fraction-free elimination).
Integer det(const IntMatrix& m);

// left * m * right for dimension-compatible matrices.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace toric

#endif
