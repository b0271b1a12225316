#pragma once

#include <memory>
#include <span>
#include <vector>

#include "sheafres/sheaf.hpp"

namespace sheafres {

/// Direct sum of indecomposable injectives [label(g)], one per generator g.
/// Generator order is part of the value: it fixes the row/column order of
/// every labeled matrix touching this sheaf.
class InjectiveSheaf {
 public:
  /// Throws LookupError when a label is not an element of the poset.
  InjectiveSheaf(std::shared_ptr<const Poset> poset, std::vector<ElementId> generators);

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  ElementId label(Index g) const { return generators_.at(g); }

  /// Number of generators with label >= s.
  std::size_t stalk_dim(ElementId s) const { return stalk_generators(s).size(); }
  /// Generators with label >= s, in tuple order; these index the stalk at s.
  const std::vector<Index>& stalk_generators(ElementId s) const;
  /// Generators whose label lies in `subset`, in tuple order.
  std::vector<Index> generators_in(std::span<const ElementId> subset) const;
  /// Number of generators labeled exactly s.
  std::size_t multiplicity(ElementId s) const;

  friend bool operator==(const InjectiveSheaf& a, const InjectiveSheaf& b) {
    return a.generators_ == b.generators_ && *a.poset_ == *b.poset_;
  }

 private:
  std::shared_ptr<const Poset> poset_;
  std::vector<ElementId> generators_;
  std::vector<std::vector<Index>> stalks_;
};

/// 0/1 projection I(s) -> I(t) for s <= t. Throws DomainError otherwise.
template <Field K>
SparseMatrix<K> restriction_matrix(const InjectiveSheaf& sheaf, ElementId s, ElementId t, const K& field);

/// Natural transformation between injective sheaves: rows follow the
/// codomain's generators, columns the domain's. Entry (r, c) may be nonzero
/// only when label(r) <= label(c).
template <Field K>
class LabeledMatrix {
 public:
  /// Throws ValidationError on a shape mismatch, a poset mismatch or a
  /// support violation.
  LabeledMatrix(InjectiveSheaf domain, InjectiveSheaf codomain, SparseMatrix<K> matrix);

  /// The zero map.
  static LabeledMatrix zero(const K& field, InjectiveSheaf domain, InjectiveSheaf codomain);

  const InjectiveSheaf& domain() const { return domain_; }
  const InjectiveSheaf& codomain() const { return codomain_; }
  const SparseMatrix<K>& matrix() const { return matrix_; }

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

 private:
  InjectiveSheaf domain_;
  InjectiveSheaf codomain_;
  SparseMatrix<K> matrix_;
};

/// The linear map eta(s): rows and columns labeled in star(s).
template <Field K>
SparseMatrix<K> eval_at(const LabeledMatrix<K>& eta, ElementId s);

/// Rows and columns labeled in an up-closed set V: the map on sections over V.
template <Field K>
SparseMatrix<K> eval_on(const LabeledMatrix<K>& eta, std::span<const ElementId> open_set);

template <Field K>
Sheaf<K> as_sheaf(const InjectiveSheaf& sheaf, const K& field);

template <Field K>
NatTrans<K> nat_trans_of(const LabeledMatrix<K>& eta);

/// m^j(s) for each degree j and element s.
struct Multiplicities {
  std::vector<std::vector<std::size_t>> table;  // [degree][element]

  std::size_t degrees() const { return table.size(); }
  /// Zero outside the stored range.
  std::size_t at(std::size_t degree, ElementId s) const {
    return degree < table.size() && s < table[degree].size() ? table[degree][s] : 0;
  }
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

#define SHEAFRES_INJECTIVE_EXTERN(K)                                                                       \
  extern template SparseMatrix<K> restriction_matrix(const InjectiveSheaf&, ElementId, ElementId, const K&); \
  extern template class LabeledMatrix<K>;                                                                  \
  extern template SparseMatrix<K> eval_at(const LabeledMatrix<K>&, ElementId);                             \
  extern template SparseMatrix<K> eval_on(const LabeledMatrix<K>&, std::span<const ElementId>);            \
  extern template Sheaf<K> as_sheaf(const InjectiveSheaf&, const K&);                                      \
  extern template NatTrans<K> nat_trans_of(const LabeledMatrix<K>&);

SHEAFRES_INJECTIVE_EXTERN(RationalField)
SHEAFRES_INJECTIVE_EXTERN(PrimeField)
#undef SHEAFRES_INJECTIVE_EXTERN

}  // namespace sheafres
