#include "sheafres/sparse.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sheafres/errors.hpp"

namespace sheafres {

template <Field K>
SparseVector<K>::SparseVector(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [index, value] : entries) {
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second += value;
      if (entries_.back().second.is_zero()) entries_.pop_back();
    } else if (!value.is_zero()) {
      entries_.emplace_back(index, std::move(value));
    }
  }
}

template <Field K>
const typename K::Scalar* SparseVector<K>::find(Index index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, Index i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

template <Field K>
void SparseVector<K>::axpy(const Scalar& factor, const SparseVector& other) {
  if (factor.is_zero() || other.entries_.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar v = a->second + factor * b->second;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

template <Field K>
void SparseVector<K>::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

template <Field K>
void SparseVector<K>::push_back(Index index, Scalar value) {
  if (!entries_.empty() && entries_.back().first >= index) {
    throw InternalError("SparseVector::push_back out of order");
  }
  if (!value.is_zero()) entries_.emplace_back(index, std::move(value));
}

template <Field K>
typename K::Scalar dot(const K& field, const SparseVector<K>& a, const SparseVector<K>& b) {
  auto sum = field.zero();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

template <Field K>
SparseMatrix<K>::SparseMatrix(K field, Index rows, Index cols)
    : field_(std::move(field)), cols_(cols), rows_(rows) {}

template <Field K>
SparseMatrix<K> SparseMatrix<K>::identity(const K& field, Index n) {
  SparseMatrix m(field, n, n);
  for (Index i = 0; i < n; ++i) m.rows_[i].push_back(i, field.one());
  return m;
}

template <Field K>
SparseMatrix<K> SparseMatrix<K>::from_rows(const K& field, Index cols, std::vector<Row> rows) {
  for (const auto& r : rows) {
    if (r.extent() > cols) {
      throw DomainError("row entry at column " + std::to_string(r.extent() - 1) + " exceeds column count " +
                        std::to_string(cols));
    }
  }
  SparseMatrix m(field, 0, cols);
  m.rows_ = std::move(rows);
  return m;
}

template <Field K>
SparseMatrix<K> SparseMatrix<K>::from_dense(const K& field, Index rows, Index cols,
                                            const std::vector<std::vector<Scalar>>& dense) {
  if (dense.size() != rows) throw DomainError("dense matrix row count mismatch");
  SparseMatrix m(field, rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (dense[i].size() != cols) throw DomainError("dense matrix column count mismatch");
    for (Index j = 0; j < cols; ++j) m.rows_[i].push_back(j, dense[i][j]);
  }
  return m;
}

template <Field K>
std::size_t SparseMatrix<K>::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

template <Field K>
bool SparseMatrix<K>::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.is_zero(); });
}

template <Field K>
typename K::Scalar SparseMatrix<K>::at(Index i, Index j) const {
  const Scalar* v = rows_.at(i).find(j);
  return v ? *v : field_.zero();
}

template <Field K>
void SparseMatrix<K>::set(Index i, Index j, const Scalar& value) {
  if (j >= cols_) throw DomainError("column index out of range");
  std::vector<typename Row::Entry> entries;
  for (const auto& e : rows_.at(i)) {
    if (e.first != j) entries.push_back(e);
  }
  entries.emplace_back(j, value);
  rows_[i] = Row(std::move(entries));
}

template <Field K>
void SparseMatrix<K>::set_row(Index i, Row row) {
  if (row.extent() > cols_) throw DomainError("row exceeds column count");
  rows_.at(i) = std::move(row);
}

template <Field K>
void SparseMatrix<K>::append_row(Row row) {
  if (row.extent() > cols_) throw DomainError("row exceeds column count");
  rows_.push_back(std::move(row));
}

template <Field K>
SparseMatrix<K> SparseMatrix<K>::transpose() const {
  SparseMatrix t(field_, cols_, rows_.size());
  for (Index i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, v] : rows_[i]) t.rows_[j].push_back(i, v);
  }
  return t;
}

template <Field K>
SparseMatrix<K> SparseMatrix<K>::select(std::span<const Index> rows, std::span<const Index> cols) const {
  constexpr Index kAbsent = static_cast<Index>(-1);
  std::vector<Index> new_col(cols_, kAbsent);
  for (Index k = 0; k < cols.size(); ++k) new_col.at(cols[k]) = k;
  SparseMatrix m(field_, rows.size(), cols.size());
  for (Index k = 0; k < rows.size(); ++k) {
    std::vector<typename Row::Entry> entries;
    for (const auto& [j, v] : rows_.at(rows[k])) {
      if (new_col[j] != kAbsent) entries.emplace_back(new_col[j], v);
    }
    m.rows_[k] = Row(std::move(entries));
  }
  return m;
}

template <Field K>
SparseMatrix<K> SparseMatrix<K>::select_rows(std::span<const Index> rows) const {
  SparseMatrix m(field_, 0, cols_);
  m.rows_.reserve(rows.size());
  for (Index r : rows) m.rows_.push_back(rows_.at(r));
  return m;
}

template <Field K>
SparseVector<K> SparseMatrix<K>::apply(const Row& x) const {
  if (x.extent() > cols_) throw DomainError("vector length exceeds column count");
  Row y;
  for (Index i = 0; i < rows_.size(); ++i) y.push_back(i, dot(field_, rows_[i], x));
  return y;
}

template <Field K>
std::vector<std::vector<typename K::Scalar>> SparseMatrix<K>::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_.size(), std::vector<Scalar>(cols_, field_.zero()));
  for (Index i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, v] : rows_[i]) d[i][j] = v;
  }
  return d;
}

template <Field K>
SparseMatrix<K> operator*(const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<SparseVector<K>> rows(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    for (const auto& [k, v] : a.row(i)) rows[i].axpy(v, b.row(k));
  }
  return SparseMatrix<K>::from_rows(a.field(), b.cols(), std::move(rows));
}

template <Field K>
SparseMatrix<K> operator+(const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum shape mismatch");
  std::vector<SparseVector<K>> rows(a.row_list());
  for (Index i = 0; i < a.rows(); ++i) rows[i].axpy(a.field().one(), b.row(i));
  return SparseMatrix<K>::from_rows(a.field(), a.cols(), std::move(rows));
}

template class SparseVector<RationalField>;
template class SparseVector<PrimeField>;
template class SparseMatrix<RationalField>;
template class SparseMatrix<PrimeField>;
template Rational dot(const RationalField&, const SparseVector<RationalField>&, const SparseVector<RationalField>&);
template ModP dot(const PrimeField&, const SparseVector<PrimeField>&, const SparseVector<PrimeField>&);
template SparseMatrix<RationalField> operator*(const SparseMatrix<RationalField>&, const SparseMatrix<RationalField>&);
template SparseMatrix<PrimeField> operator*(const SparseMatrix<PrimeField>&, const SparseMatrix<PrimeField>&);
template SparseMatrix<RationalField> operator+(const SparseMatrix<RationalField>&, const SparseMatrix<RationalField>&);
template SparseMatrix<PrimeField> operator+(const SparseMatrix<PrimeField>&, const SparseMatrix<PrimeField>&);

}  // namespace sheafres
