#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jw/gf/field.hpp"

namespace jw::exactla {

using gf::Elem;
using gf::FieldPtr;
using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  Matrix operator*(const Matrix& rhs) const;
  Vec operator*(std::span<const Elem> v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix scaled(Elem s) const;
  Matrix transposed() const;
  /// Stacks `below` under this matrix.
  Matrix vstack(const Matrix& below) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Row-list sparse matrix; each row holds (column, nonzero value) pairs.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Elem>;

  SparseMatrix(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }

  /// Entries may repeat a column; they are summed and zeros dropped.
  void add_row(std::vector<Entry> entries);

  Matrix to_dense() const;
  static SparseMatrix from_dense(const Matrix& m);

 private:
  FieldPtr field_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

/// A subspace held as its reduced row-echelon basis. Two subspaces are equal
/// iff their echelon forms are identical.
class SubspaceBasis {
 public:
  SubspaceBasis(FieldPtr field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<Vec>& vectors() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Wraps rows already in reduced row-echelon form (nonzero, pivots increasing).
  static SubspaceBasis from_echelon(FieldPtr field, std::size_t ambient, std::vector<Vec> rows);

  bool contains(std::span<const Elem> v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v in this basis; empty optional when v is outside.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.field_->same_as(*b.field_) && a.rows_ == b.rows_;
  }

 private:
  FieldPtr field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Affine solution set of M x = b: one particular solution plus the kernel.
struct Solution {
  Vec particular;
  SubspaceBasis kernel;
};

/// Reduces `m` in place to reduced row-echelon form; returns pivot columns.
/// Pivot rule: first nonzero entry in column order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);
/// Empty optional when m is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);
std::size_t rank(const SparseMatrix& m);

/// Dispatches to the sparse path when cols > 500 and density < 10%.
SubspaceBasis kernel(const Matrix& m);
SubspaceBasis kernel(const SparseMatrix& m);
/// Forced paths; both yield the identical echelon basis.
SubspaceBasis kernel_dense(const Matrix& m);
SubspaceBasis kernel_sparse(const SparseMatrix& m);

/// Empty optional means the system is inconsistent.
std::optional<Solution> solve(const Matrix& m, std::span<const Elem> b);

SubspaceBasis span_of(const FieldPtr& field, std::size_t ambient, std::span<const Vec> vectors);
SubspaceBasis sum(const SubspaceBasis& u, const SubspaceBasis& v);
SubspaceBasis intersect(const SubspaceBasis& u, const SubspaceBasis& v);
bool subspace_equal(const SubspaceBasis& u, const SubspaceBasis& v);

/// Dense path threshold for the sparse dispatcher.
inline constexpr std::size_t kSparseMinCols = 500;
inline constexpr double kSparseMaxDensity = 0.10;

}  // namespace jw::exactla
