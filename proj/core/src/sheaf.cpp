#include "sheafres/sheaf.hpp"

#include <algorithm>

#include "sheafres/errors.hpp"

namespace sheafres {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

template <Field K>
Sheaf<K>::Sheaf(std::shared_ptr<const Poset> poset, K field, std::vector<std::size_t> dims, std::map<Cover, Matrix> maps)
    : poset_(std::move(poset)),
      field_(std::move(field)),
      dims_(std::move(dims)),
      maps_(std::move(maps)),
      cache_(std::make_shared<CompositeCache>()) {
  if (dims_.size() != poset_->size()) {
    throw ValidationError("sheaf has " + std::to_string(dims_.size()) + " stalk dimensions for a poset with " +
                          std::to_string(poset_->size()) + " elements");
  }
  for (const auto& [cover, m] : maps_) {
    auto [a, b] = cover;
    if (a >= poset_->size() || b >= poset_->size() || !poset_->is_cover(a, b)) {
      throw ValidationError("sheaf map given on a pair that is not a cover relation");
    }
    if (m.rows() != dims_[b] || m.cols() != dims_[a]) {
      throw ValidationError("sheaf map on '" + poset_->name(a) + "' < '" + poset_->name(b) + "' has shape " +
                            shape(m.rows(), m.cols()) + ", expected " + shape(dims_[b], dims_[a]));
    }
  }
  for (auto [a, b] : poset_->covers()) {
    if (!maps_.count({a, b})) maps_.emplace(Cover{a, b}, Matrix(field_, dims_[b], dims_[a]));
  }
}

template <Field K>
std::size_t Sheaf<K>::total_dimension() const {
  std::size_t total = 0;
  for (auto d : dims_) total += d;
  return total;
}

template <Field K>
const SparseMatrix<K>& Sheaf<K>::cover_map(ElementId a, ElementId b) const {
  auto it = maps_.find({a, b});
  if (it == maps_.end()) throw DomainError("no cover relation between the given elements");
  return it->second;
}

template <Field K>
SparseMatrix<K> Sheaf<K>::composite(ElementId a, ElementId b) const {
  if (a >= poset_->size() || b >= poset_->size()) throw LookupError("composite: unknown element");
  if (a == b) return Matrix::identity(field_, dims_[a]);
  if (!poset_->leq(a, b)) {
    throw DomainError("composite: '" + poset_->name(a) + "' is not below '" + poset_->name(b) + "'");
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->table.find({a, b});
    if (it != cache_->table.end()) return it->second;
  }
  ElementId step = 0;
  bool found = false;
  for (ElementId t : poset_->coboundary(a)) {
    if (poset_->leq(t, b) && (!found || poset_->position(t) < poset_->position(step))) {
      step = t;
      found = true;
    }
  }
  if (!found) throw InternalError("composite: no cover path");
  Matrix result = composite(step, b) * cover_map(a, step);
  std::lock_guard lock(cache_->mutex);
  cache_->table.emplace(Cover{a, b}, result);
  return result;
}

template <Field K>
SheafValidation validate(const Sheaf<K>& sheaf) {
  const Poset& p = sheaf.poset();
  for (ElementId s = 0; s < p.size(); ++s) {
    for (ElementId t : p.star(s)) {
      for (ElementId g : p.coboundary(t)) {
        auto lhs = sheaf.cover_map(t, g) * sheaf.composite(s, t);
        if (!(lhs == sheaf.composite(s, g))) {
          SheafValidation v;
          v.valid = false;
          v.triple = std::array<ElementId, 3>{s, t, g};
          v.message = "maps do not commute on '" + p.name(s) + "' <= '" + p.name(t) + "' <= '" + p.name(g) + "'";
          return v;
        }
      }
    }
  }
  return {};
}

template <Field K>
Sheaf<K> constant_sheaf(std::shared_ptr<const Poset> poset, const K& field) {
  std::vector<std::size_t> dims(poset->size(), 1);
  std::map<Cover, SparseMatrix<K>> maps;
  for (const auto& c : poset->covers()) maps.emplace(c, SparseMatrix<K>::identity(field, 1));
  return Sheaf<K>(std::move(poset), field, std::move(dims), std::move(maps));
}

template <Field K>
Sheaf<K> zero_sheaf(std::shared_ptr<const Poset> poset, const K& field) {
  std::vector<std::size_t> dims(poset->size(), 0);
  return Sheaf<K>(std::move(poset), field, std::move(dims));
}

template <Field K>
bool is_constant(const Sheaf<K>& sheaf) {
  for (auto d : sheaf.dims()) {
    if (d != 1) return false;
  }
  auto id = SparseMatrix<K>::identity(sheaf.field(), 1);
  for (const auto& [cover, m] : sheaf.cover_maps()) {
    if (!(m == id)) return false;
  }
  return true;
}

template <Field K>
std::vector<SparseVector<K>> maximal_vectors(const Sheaf<K>& sheaf, ElementId p) {
  const auto& up = sheaf.poset().coboundary(p);
  SparseMatrix<K> stacked(sheaf.field(), 0, sheaf.dim(p));
  for (ElementId s : up) {
    for (const auto& row : sheaf.cover_map(p, s).row_list()) stacked.append_row(row);
  }
  return kernel_basis(stacked);
}

template <Field K>
Sheaf<K> restrict(const Sheaf<K>& sheaf, std::span<const ElementId> open_set) {
  const Poset& p = sheaf.poset();
  if (!p.is_up_closed(open_set)) throw DomainError("restrict: the set is not up-closed");
  std::vector<ElementId> members(open_set.begin(), open_set.end());
  std::sort(members.begin(), members.end());
  auto sub = std::make_shared<const Poset>(p.induced(members));
  std::vector<std::size_t> dims;
  for (ElementId e : members) dims.push_back(sheaf.dim(e));
  std::map<Cover, SparseMatrix<K>> maps;
  for (auto [a, b] : sub->covers()) maps.emplace(Cover{a, b}, sheaf.cover_map(members[a], members[b]));
  return Sheaf<K>(std::move(sub), sheaf.field(), std::move(dims), std::move(maps));
}

template <Field K>
Sheaf<K> extend_by_zero(const Sheaf<K>& sheaf, std::shared_ptr<const Poset> ambient,
                        std::span<const ElementId> embedding) {
  const Poset& sub = sheaf.poset();
  if (embedding.size() != sub.size()) throw DomainError("extend_by_zero: embedding has the wrong size");
  std::vector<ElementId> local(ambient->size(), static_cast<ElementId>(-1));
  for (ElementId i = 0; i < embedding.size(); ++i) {
    if (embedding[i] >= ambient->size()) throw DomainError("extend_by_zero: embedding leaves the ambient poset");
    if (local[embedding[i]] != static_cast<ElementId>(-1)) throw DomainError("extend_by_zero: embedding not injective");
    local[embedding[i]] = i;
  }
  if (!ambient->is_up_closed(embedding)) throw DomainError("extend_by_zero: the set is not open (up-closed)");
  for (ElementId i = 0; i < sub.size(); ++i) {
    for (ElementId j = 0; j < sub.size(); ++j) {
      if (sub.leq(i, j) != ambient->leq(embedding[i], embedding[j])) {
        throw DomainError("extend_by_zero: embedding is not an order embedding");
      }
    }
  }
  std::vector<std::size_t> dims(ambient->size(), 0);
  for (ElementId i = 0; i < sub.size(); ++i) dims[embedding[i]] = sheaf.dim(i);
  std::map<Cover, SparseMatrix<K>> maps;
  for (auto [a, b] : ambient->covers()) {
    if (local[a] != static_cast<ElementId>(-1) && local[b] != static_cast<ElementId>(-1)) {
      maps.emplace(Cover{a, b}, sheaf.cover_map(local[a], local[b]));
    }
  }
  return Sheaf<K>(std::move(ambient), sheaf.field(), std::move(dims), std::move(maps));
}

template <Field K>
std::optional<Cover> naturality_violation(const Sheaf<K>& source, const Sheaf<K>& target, const NatTrans<K>& eta) {
  const Poset& p = source.poset();
  if (!(p == target.poset()) || eta.components.size() != p.size()) {
    throw DomainError("natural transformation between sheaves on different posets");
  }
  for (ElementId e = 0; e < p.size(); ++e) {
    const auto& m = eta.components[e];
    if (m.rows() != target.dim(e) || m.cols() != source.dim(e)) {
      throw DomainError("natural transformation component at '" + p.name(e) + "' has shape " +
                        shape(m.rows(), m.cols()) + ", expected " + shape(target.dim(e), source.dim(e)));
    }
  }
  for (auto [a, b] : p.covers()) {
    if (!(target.cover_map(a, b) * eta.components[a] == eta.components[b] * source.cover_map(a, b))) {
      return Cover{a, b};
    }
  }
  return std::nullopt;
}

#define SHEAFRES_SHEAF_INSTANTIATE(K)                                                                   \
  template class Sheaf<K>;                                                                              \
  template SheafValidation validate(const Sheaf<K>&);                                                   \
  template Sheaf<K> constant_sheaf(std::shared_ptr<const Poset>, const K&);                             \
  template Sheaf<K> zero_sheaf(std::shared_ptr<const Poset>, const K&);                                 \
  template bool is_constant(const Sheaf<K>&);                                                           \
  template std::vector<SparseVector<K>> maximal_vectors(const Sheaf<K>&, ElementId);                    \
  template Sheaf<K> restrict(const Sheaf<K>&, std::span<const ElementId>);                              \
  template Sheaf<K> extend_by_zero(const Sheaf<K>&, std::shared_ptr<const Poset>, std::span<const ElementId>); \
  template std::optional<Cover> naturality_violation(const Sheaf<K>&, const Sheaf<K>&, const NatTrans<K>&);

SHEAFRES_SHEAF_INSTANTIATE(RationalField)
SHEAFRES_SHEAF_INSTANTIATE(PrimeField)

}  // namespace sheafres
