#include "sheafres/injective.hpp"

#include <algorithm>

#include "sheafres/errors.hpp"

namespace sheafres {

InjectiveSheaf::InjectiveSheaf(std::shared_ptr<const Poset> poset, std::vector<ElementId> generators)
    : poset_(std::move(poset)), generators_(std::move(generators)), stalks_(poset_->size()) {
  for (Index g = 0; g < generators_.size(); ++g) {
    if (generators_[g] >= poset_->size()) throw LookupError("injective sheaf: generator label is not a poset element");
    for (ElementId s : poset_->down_set(generators_[g])) stalks_[s].push_back(g);
  }
}

const std::vector<Index>& InjectiveSheaf::stalk_generators(ElementId s) const {
  if (s >= stalks_.size()) throw LookupError("injective sheaf: unknown element");
  return stalks_[s];
}

std::vector<Index> InjectiveSheaf::generators_in(std::span<const ElementId> subset) const {
  std::vector<bool> member(poset_->size(), false);
  for (ElementId e : subset) member.at(e) = true;
  std::vector<Index> out;
  for (Index g = 0; g < generators_.size(); ++g) {
    if (member[generators_[g]]) out.push_back(g);
  }
  return out;
}

std::size_t InjectiveSheaf::multiplicity(ElementId s) const {
  return static_cast<std::size_t>(std::count(generators_.begin(), generators_.end(), s));
}

template <Field K>
SparseMatrix<K> restriction_matrix(const InjectiveSheaf& sheaf, ElementId s, ElementId t, const K& field) {
  if (!sheaf.poset().leq(s, t)) throw DomainError("restriction_matrix: elements are not related");
  const auto& from = sheaf.stalk_generators(s);
  const auto& to = sheaf.stalk_generators(t);
  SparseMatrix<K> m(field, to.size(), from.size());
  // stalk_generators(t) is a subsequence of stalk_generators(s)
  std::size_t j = 0;
  for (std::size_t i = 0; i < to.size(); ++i) {
    while (from[j] != to[i]) ++j;
    m.set(i, j, field.one());
  }
  return m;
}

template <Field K>
LabeledMatrix<K>::LabeledMatrix(InjectiveSheaf domain, InjectiveSheaf codomain, SparseMatrix<K> matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!(domain_.poset() == codomain_.poset())) throw ValidationError("labeled matrix: sheaves live on different posets");
  if (matrix_.rows() != codomain_.size() || matrix_.cols() != domain_.size()) {
    throw ValidationError("labeled matrix: shape " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " does not match " + std::to_string(codomain_.size()) +
                          " codomain and " + std::to_string(domain_.size()) + " domain generators");
  }
  const Poset& p = domain_.poset();
  for (Index r = 0; r < matrix_.rows(); ++r) {
    for (const auto& [c, v] : matrix_.row(r)) {
      if (!p.leq(codomain_.label(r), domain_.label(c))) {
        throw ValidationError("labeled matrix: nonzero entry at row " + std::to_string(r) + " ('" +
                              p.name(codomain_.label(r)) + "'), column " + std::to_string(c) + " ('" +
                              p.name(domain_.label(c)) + "') violates the support condition");
      }
    }
  }
}

template <Field K>
LabeledMatrix<K> LabeledMatrix<K>::zero(const K& field, InjectiveSheaf domain, InjectiveSheaf codomain) {
  SparseMatrix<K> m(field, codomain.size(), domain.size());
  return LabeledMatrix(std::move(domain), std::move(codomain), std::move(m));
}

template <Field K>
SparseMatrix<K> eval_at(const LabeledMatrix<K>& eta, ElementId s) {
  return eta.matrix().select(eta.codomain().stalk_generators(s), eta.domain().stalk_generators(s));
}

template <Field K>
SparseMatrix<K> eval_on(const LabeledMatrix<K>& eta, std::span<const ElementId> open_set) {
  auto rows = eta.codomain().generators_in(open_set);
  auto cols = eta.domain().generators_in(open_set);
  return eta.matrix().select(rows, cols);
}

template <Field K>
Sheaf<K> as_sheaf(const InjectiveSheaf& sheaf, const K& field) {
  const Poset& p = sheaf.poset();
  std::vector<std::size_t> dims(p.size());
  for (ElementId s = 0; s < p.size(); ++s) dims[s] = sheaf.stalk_dim(s);
  std::map<Cover, SparseMatrix<K>> maps;
  for (auto [a, b] : p.covers()) maps.emplace(Cover{a, b}, restriction_matrix(sheaf, a, b, field));
  return Sheaf<K>(sheaf.poset_ptr(), field, std::move(dims), std::move(maps));
}

template <Field K>
NatTrans<K> nat_trans_of(const LabeledMatrix<K>& eta) {
  NatTrans<K> out;
  const Poset& p = eta.domain().poset();
  out.components.reserve(p.size());
  for (ElementId s = 0; s < p.size(); ++s) out.components.push_back(eval_at(eta, s));
  return out;
}

#define SHEAFRES_INJECTIVE_INSTANTIATE(K)                                                           \
  template SparseMatrix<K> restriction_matrix(const InjectiveSheaf&, ElementId, ElementId, const K&); \
  template class LabeledMatrix<K>;                                                                  \
  template SparseMatrix<K> eval_at(const LabeledMatrix<K>&, ElementId);                             \
  template SparseMatrix<K> eval_on(const LabeledMatrix<K>&, std::span<const ElementId>);            \
  template Sheaf<K> as_sheaf(const InjectiveSheaf&, const K&);                                      \
  template NatTrans<K> nat_trans_of(const LabeledMatrix<K>&);

SHEAFRES_INJECTIVE_INSTANTIATE(RationalField)
SHEAFRES_INJECTIVE_INSTANTIATE(PrimeField)

}  // namespace sheafres
