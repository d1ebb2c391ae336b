#pragma once

#include <optional>
#include <vector>

#include "resonance/field.hpp"

namespace resonance {

using Vec = std::vector<Fe>;

// Dense matrix over a shared Field, row-major. Elimination uses
// lexicographic pivot selection (leftmost column, topmost row), so rref(),
// kernel_basis() and friends are deterministic functions of the entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, int rows, int cols)
      : f_(std::move(f)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, Fe(0)) {}
  static Matrix from_rows(FieldPtr f, const std::vector<Vec>& rows);
  static Matrix identity(FieldPtr f, int n);

  const FieldPtr& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fe get(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, Fe v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
  Vec row(int r) const;
  void set_row(int r, const Vec& v);

  Matrix transpose() const;
  // Vertical concatenation; column counts must match.
  Matrix stack(const Matrix& below) const;

  int rank() const;
  // Reduced row echelon form with zero rows dropped: exactly rank() rows,
  // one per pivot. If pivots is non-null it receives the pivot column
  // indices in row order.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  // Basis of {x : M x^T = 0}, one vector per row. Each basis vector has a 1
  // in one free column (ascending) and the negated rref entries in the pivot
  // columns; this is the standard free-column construction and is
  // deterministic.
  Matrix kernel_basis() const;

  // x * M for a row vector x of length rows().
  Vec mul_left(const Vec& x) const;
  // M * y^T for a vector y of length cols().
  Vec mul_right(const Vec& y) const;

  bool row_space_contains(const Vec& v) const;
  // Rows spanning rowspace(*this) intersected with rowspace(other), in rref.
  Matrix row_space_intersection(const Matrix& other) const;
  bool row_space_equals(const Matrix& other) const;
  // Coefficients x with x * (*this) == v, if v lies in the row space. When
  // the rows are independent the answer is unique.
  std::optional<Vec> coords_in_row_space(const Vec& v) const;

 private:
  FieldPtr f_;
  int rows_ = 0, cols_ = 0;
  std::vector<Fe> a_;
};

// Scales v so its first nonzero entry is 1; zero vectors pass through.
void canonicalize_projective(const FieldPtr& f, Vec& v);
// All canonical representatives of projective points of F^k: first nonzero
// coordinate is 1; ordered by position of that coordinate, then by the
// mixed-radix value of the remaining coordinates, ascending. Count is
// (q^k - 1) / (q - 1); throws CapExceeded beyond cap.
std::vector<Vec> projective_points(const FieldPtr& f, int k,
                                   uint64_t cap = 10000000);
uint64_t projective_point_count(const FieldPtr& f, int k);

}  // namespace resonance
