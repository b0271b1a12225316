#include "sheafres/linalg.hpp"

#include <string>

#include "sheafres/errors.hpp"

namespace sheafres {

template <Field K>
RowEchelon<K> rref_with_transform(const SparseMatrix<K>& m) {
  const K& field = m.field();
  const Index n = m.rows();
  std::vector<SparseVector<K>> reduced(n);
  std::vector<SparseVector<K>> transform(n);
  std::map<Index, Index> pivot_row;  // leading column -> processed row

  for (Index i = 0; i < n; ++i) {
    SparseVector<K> r = m.row(i);
    SparseVector<K> u;
    u.push_back(i, field.one());
    while (!r.is_zero()) {
      auto it = pivot_row.find(r.leading());
      if (it == pivot_row.end()) break;
      const auto& pr = reduced[it->second];
      auto factor = -(r.leading_value() / pr.leading_value());
      r.axpy(factor, pr);
      u.axpy(factor, transform[it->second]);
    }
    if (!r.is_zero()) pivot_row.emplace(r.leading(), i);
    reduced[i] = std::move(r);
    transform[i] = std::move(u);
  }

  RowEchelon<K> out{SparseMatrix<K>(field, 0, m.cols()), SparseMatrix<K>(field, 0, n), {}, pivot_row.size()};
  out.source_rows.reserve(n);
  for (const auto& [col, row] : pivot_row) out.source_rows.push_back(row);
  for (Index i = 0; i < n; ++i) {
    if (reduced[i].is_zero()) out.source_rows.push_back(i);
  }
  for (Index src : out.source_rows) {
    out.reduced.append_row(std::move(reduced[src]));
    out.transform.append_row(std::move(transform[src]));
  }
  return out;
}

template <Field K>
std::vector<SparseVector<K>> left_null_basis(const SparseMatrix<K>& m) {
  auto ech = rref_with_transform(m);
  std::vector<SparseVector<K>> basis;
  for (Index r = ech.rank; r < ech.reduced.rows(); ++r) basis.push_back(ech.transform.row(r));
  return basis;
}

template <Field K>
bool row_membership(const SparseVector<K>& v, Index length, const SparseMatrix<K>& m) {
  if (length != m.cols() || v.extent() > length) {
    throw DomainError("row_membership: vector of length " + std::to_string(length) + " against matrix with " +
                      std::to_string(m.cols()) + " columns");
  }
  EchelonBasis<K> basis(m.field());
  for (const auto& r : m.row_list()) basis.insert(r);
  return basis.contains(v);
}

template <Field K>
std::size_t rank(const SparseMatrix<K>& m) {
  return rref_with_transform(m).rank;
}

template <Field K>
std::vector<SparseVector<K>> kernel_basis(const SparseMatrix<K>& m) {
  return left_null_basis(m.transpose());
}

template <Field K>
SparseMatrix<K> inverse(const SparseMatrix<K>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  EchelonBasis<K> basis(m.field());
  for (const auto& r : m.row_list()) {
    if (!basis.insert(r)) throw DomainError("inverse of a singular matrix");
  }
  // Row i of the inverse expresses e_i in terms of the rows of m.
  SparseMatrix<K> inv(m.field(), 0, m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    SparseVector<K> e;
    e.push_back(i, m.field().one());
    auto c = basis.coordinates(e);
    if (!c) throw InternalError("inverse: unit vector outside a full-rank row space");
    inv.append_row(std::move(*c));
  }
  return inv;
}

template <Field K>
SparseVector<K> EchelonBasis<K>::reduce(Vector v) const {
  while (!v.is_zero()) {
    auto it = pivots_.find(v.leading());
    if (it == pivots_.end()) break;
    const Vector& row = it->second.first;
    v.axpy(-(v.leading_value() / row.leading_value()), row);
  }
  return v;
}

template <Field K>
bool EchelonBasis<K>::insert(const Vector& v) {
  Vector r = v;
  Vector comb;
  comb.push_back(generators_.size(), field_.one());
  while (!r.is_zero()) {
    auto it = pivots_.find(r.leading());
    if (it == pivots_.end()) break;
    const auto& [row, row_comb] = it->second;
    auto factor = -(r.leading_value() / row.leading_value());
    r.axpy(factor, row);
    comb.axpy(factor, row_comb);
  }
  if (r.is_zero()) return false;
  Index lead = r.leading();
  pivots_.emplace(lead, std::make_pair(std::move(r), std::move(comb)));
  generators_.push_back(v);
  return true;
}

template <Field K>
std::optional<SparseVector<K>> EchelonBasis<K>::coordinates(const Vector& v) const {
  Vector r = v;
  Vector coeff;
  while (!r.is_zero()) {
    auto it = pivots_.find(r.leading());
    if (it == pivots_.end()) return std::nullopt;
    const auto& [row, row_comb] = it->second;
    auto factor = r.leading_value() / row.leading_value();
    r.axpy(-factor, row);
    coeff.axpy(factor, row_comb);
  }
  return coeff;
}

#define SHEAFRES_LINALG_INSTANTIATE(K)                                          \
  template RowEchelon<K> rref_with_transform(const SparseMatrix<K>&);           \
  template std::vector<SparseVector<K>> left_null_basis(const SparseMatrix<K>&); \
  template bool row_membership(const SparseVector<K>&, Index, const SparseMatrix<K>&); \
  template std::size_t rank(const SparseMatrix<K>&);                            \
  template std::vector<SparseVector<K>> kernel_basis(const SparseMatrix<K>&);   \
  template SparseMatrix<K> inverse(const SparseMatrix<K>&);                     \
  template class EchelonBasis<K>;

SHEAFRES_LINALG_INSTANTIATE(RationalField)
SHEAFRES_LINALG_INSTANTIATE(PrimeField)

}  // namespace sheafres
