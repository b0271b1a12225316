#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sheafres/sparse.hpp"

namespace sheafres {

/// Result of top-to-bottom row reduction with transform tracking.
///
/// `reduced == transform * M` exactly. Rows are listed in echelon order:
/// nonzero rows by strictly increasing leading column, then zero rows in
/// their original order. `source_rows[r]` is the row of M that output row r
/// was reduced from; the transform row r is supported on rows of M with
/// index <= source_rows[r] and has coefficient one there, so the transform is
/// lower-triangular (hence invertible) in the original row order.
template <Field K>
struct RowEchelon {
  SparseMatrix<K> reduced;
  SparseMatrix<K> transform;
  std::vector<Index> source_rows;
  std::size_t rank = 0;
};

/// Rows are processed top to bottom; each row is reduced by adding
/// multiples of earlier pivot rows until its leading entry sits in a column
/// no earlier row leads in.
template <Field K>
RowEchelon<K> rref_with_transform(const SparseMatrix<K>& m);

/// Basis of { v : v^T M = 0 }: the transform rows aligned with zero rows of
/// the reduction, in original row order.
template <Field K>
std::vector<SparseVector<K>> left_null_basis(const SparseMatrix<K>& m);

/// True iff v (of length m.cols()) lies in the row span of m.
/// Throws DomainError when `length != m.cols()` or v does not fit.
template <Field K>
bool row_membership(const SparseVector<K>& v, Index length, const SparseMatrix<K>& m);

template <Field K>
std::size_t rank(const SparseMatrix<K>& m);

/// Basis of { u : M u = 0 }, each vector of length m.cols().
template <Field K>
std::vector<SparseVector<K>> kernel_basis(const SparseMatrix<K>& m);

/// Throws DomainError when m is not square and invertible.
template <Field K>
SparseMatrix<K> inverse(const SparseMatrix<K>& m);

/// Incrementally grown echelon basis of a row space.
///
/// Every inserted independent vector becomes a "generator"; `coordinates`
/// expresses a vector of the span as a combination of the generators.
template <Field K>
class EchelonBasis {
 public:
  using Scalar = typename K::Scalar;
  using Vector = SparseVector<K>;

  explicit EchelonBasis(K field) : field_(std::move(field)) {}

  std::size_t size() const { return generators_.size(); }
  const std::vector<Vector>& generators() const { return generators_; }

  /// Remainder of v after eliminating every pivot column it meets.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  /// Adds v when it is independent of the current span; returns whether it was added.
  bool insert(const Vector& v);
  /// Coefficients c with v = sum_i c_i generators()[i], or nullopt when v is
  /// outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  K field_;
  std::vector<Vector> generators_;
  // pivot column -> (reduced row, combination of generators giving that row)
  std::map<Index, std::pair<Vector, Vector>> pivots_;
};

#define SHEAFRES_LINALG_EXTERN(K)                                                      \
  extern template RowEchelon<K> rref_with_transform(const SparseMatrix<K>&);           \
  extern template std::vector<SparseVector<K>> left_null_basis(const SparseMatrix<K>&); \
  extern template bool row_membership(const SparseVector<K>&, Index, const SparseMatrix<K>&); \
  extern template std::size_t rank(const SparseMatrix<K>&);                            \
  extern template std::vector<SparseVector<K>> kernel_basis(const SparseMatrix<K>&);   \
  extern template SparseMatrix<K> inverse(const SparseMatrix<K>&);                     \
  extern template class EchelonBasis<K>;

SHEAFRES_LINALG_EXTERN(RationalField)
SHEAFRES_LINALG_EXTERN(PrimeField)
#undef SHEAFRES_LINALG_EXTERN

}  // namespace sheafres
