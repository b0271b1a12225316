#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sheafres/field.hpp"

namespace sheafres {

using Index = std::size_t;

/// Sparse vector stored as (index, value) pairs sorted by index, never
/// holding an explicit zero.
template <Field K>
class SparseVector {
 public:
  using Scalar = typename K::Scalar;
  using Entry = std::pair<Index, Scalar>;

  SparseVector() = default;
  /// Entries may arrive in any order; duplicate indices are summed and zeros dropped.
  explicit SparseVector(std::vector<Entry> entries);

  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Index of the leftmost nonzero entry. Requires !is_zero().
  Index leading() const { return entries_.front().first; }
  const Scalar& leading_value() const { return entries_.front().second; }
  /// Largest stored index plus one (0 for the zero vector).
  Index extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  /// Pointer to the stored value at `index`, or nullptr for a zero entry.
  const Scalar* find(Index index) const;

  /// this += factor * other
  void axpy(const Scalar& factor, const SparseVector& other);
  void scale(const Scalar& factor);
  /// Appends an entry with index larger than every stored index.
  void push_back(Index index, Scalar value);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

template <Field K>
typename K::Scalar dot(const K& field, const SparseVector<K>& a, const SparseVector<K>& b);

/// Row-wise sparse matrix over K.
template <Field K>
class SparseMatrix {
 public:
  using Scalar = typename K::Scalar;
  using Row = SparseVector<K>;

  SparseMatrix(K field, Index rows, Index cols);

  static SparseMatrix identity(const K& field, Index n);
  /// Throws DomainError if a row has an entry at column >= cols.
  static SparseMatrix from_rows(const K& field, Index cols, std::vector<Row> rows);
  static SparseMatrix from_dense(const K& field, Index rows, Index cols,
                                 const std::vector<std::vector<Scalar>>& dense);

  const K& field() const { return field_; }
  Index rows() const { return rows_.size(); }
  Index cols() const { return cols_; }
  const Row& row(Index i) const { return rows_[i]; }
  const std::vector<Row>& row_list() const { return rows_; }
  std::size_t nnz() const;
  bool is_zero() const;

  Scalar at(Index i, Index j) const;
  void set(Index i, Index j, const Scalar& value);
  void set_row(Index i, Row row);
  void append_row(Row row);

  SparseMatrix transpose() const;
  /// Submatrix on the given rows and columns, renumbered in the given order.
  SparseMatrix select(std::span<const Index> rows, std::span<const Index> cols) const;
  /// Rows only; columns untouched.
  SparseMatrix select_rows(std::span<const Index> rows) const;
  /// Matrix-vector product with x as a column vector.
  Row apply(const Row& x) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  K field_;
  Index cols_;
  std::vector<Row> rows_;
};

/// Throws DomainError on a shape mismatch.
template <Field K>
SparseMatrix<K> operator*(const SparseMatrix<K>& a, const SparseMatrix<K>& b);

template <Field K>
SparseMatrix<K> operator+(const SparseMatrix<K>& a, const SparseMatrix<K>& b);

extern template class SparseVector<RationalField>;
extern template class SparseVector<PrimeField>;
extern template class SparseMatrix<RationalField>;
extern template class SparseMatrix<PrimeField>;

}  // namespace sheafres
