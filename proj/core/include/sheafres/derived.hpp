#pragma once

#include <span>
#include <vector>

#include "sheafres/poset_map.hpp"
#include "sheafres/resolution.hpp"
#include "sheafres/simplicial.hpp"

namespace sheafres {

/// R^j f_* F as a sheaf on the target: at lambda, the degree-j cohomology of
/// the resolution's sections over f^{-1}(St lambda); along a cover the map
/// induced by restricting sections. Throws DomainError when the map's source
/// is not the resolved sheaf's poset, or when a truncated resolution does not
/// reach degree j.
template <Field K>
Sheaf<K> pushforward(const Resolution<K>& resolution, const PosetMap& map, std::size_t degree);

/// R^j f_* F for every degree j < resolution.length().
template <Field K>
std::vector<Sheaf<K>> pushforward_all(const Resolution<K>& resolution, const PosetMap& map);

/// R^j f_! F = R^j f_*(i_! F) for F on an open subset of the source complex's
/// face poset (no empty simplex); embedding[i] is the simplex index of F's
/// element i. Throws DomainError unless the subset is open.
template <Field K>
std::vector<Sheaf<K>> compact_pushforward_all(const Sheaf<K>& sheaf, std::span<const ElementId> embedding,
                                              const SimplicialMap& map);
template <Field K>
Sheaf<K> compact_pushforward(const Sheaf<K>& sheaf, std::span<const ElementId> embedding, const SimplicialMap& map,
                             std::size_t degree);
/// Face-poset map variant; throws DomainError unless the map is induced by a
/// simplicial map between the two complexes.
template <Field K>
Sheaf<K> compact_pushforward(const Sheaf<K>& sheaf, std::span<const ElementId> embedding, const PosetMap& map,
                             std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, std::size_t degree);

/// dim H_c^d of the open star of simplex `sigma` (an index into the complex),
/// from the cochains on simplices containing sigma with vertex-order signs.
/// Indexed by d = 0..dim S. Throws LookupError for an unknown simplex.
template <Field K>
std::vector<std::size_t> oracle_star_cohomology_c(const SimplicialComplex& complex, std::size_t sigma, const K& field);

/// Same for an arbitrary open (up-closed) set of simplex indices.
template <Field K>
std::vector<std::size_t> oracle_open_cohomology_c(const SimplicialComplex& complex, std::span<const std::size_t> open_set,
                                                  const K& field);

/// Simplicial cohomology of the order complex of an up-closed set V.
/// Indexed by degree 0..height. Throws DomainError unless V is up-closed.
template <Field K>
std::vector<std::size_t> oracle_order_complex_cohomology(const Poset& poset, std::span<const ElementId> open_set,
                                                         const K& field);

/// H^j(K(V), K(V \ U)) for up-closed V and U: cochains on the chains of V
/// whose top element lies in U.
template <Field K>
std::vector<std::size_t> oracle_relative_cohomology(const Poset& poset, std::span<const ElementId> open_set,
                                                    std::span<const ElementId> support, const K& field);

struct MultiplicityRow {
  std::size_t simplex = 0;
  std::size_t degree = 0;
  std::size_t computed = 0;
  std::size_t oracle = 0;
};

struct MultiplicityCheck {
  bool ok = true;
  /// Every (simplex, degree) where either side is nonzero.
  std::vector<MultiplicityRow> rows;
};

/// Compares m^j(s) of the constant sheaf's minimal resolution on the face
/// poset (no empty simplex) with dim H_c^{j + dim s} of the open star of s.
template <Field K>
MultiplicityCheck verify_multiplicity_theorem(const SimplicialComplex& complex, const K& field);

#define SHEAFRES_DERIVED_EXTERN(K)                                                                            \
  extern template Sheaf<K> pushforward(const Resolution<K>&, const PosetMap&, std::size_t);                   \
  extern template std::vector<Sheaf<K>> pushforward_all(const Resolution<K>&, const PosetMap&);               \
  extern template std::vector<Sheaf<K>> compact_pushforward_all(const Sheaf<K>&, std::span<const ElementId>,  \
                                                                const SimplicialMap&);                        \
  extern template Sheaf<K> compact_pushforward(const Sheaf<K>&, std::span<const ElementId>, const SimplicialMap&, \
                                               std::size_t);                                                  \
  extern template Sheaf<K> compact_pushforward(const Sheaf<K>&, std::span<const ElementId>, const PosetMap&,  \
                                               std::shared_ptr<const SimplicialComplex>,                      \
                                               std::shared_ptr<const SimplicialComplex>, std::size_t);        \
  extern template std::vector<std::size_t> oracle_star_cohomology_c(const SimplicialComplex&, std::size_t,    \
                                                                    const K&);                                \
  extern template std::vector<std::size_t> oracle_open_cohomology_c(const SimplicialComplex&,                 \
                                                                    std::span<const std::size_t>, const K&);  \
  extern template std::vector<std::size_t> oracle_order_complex_cohomology(const Poset&,                      \
                                                                           std::span<const ElementId>, const K&); \
  extern template std::vector<std::size_t> oracle_relative_cohomology(                                        \
      const Poset&, std::span<const ElementId>, std::span<const ElementId>, const K&);                        \
  extern template MultiplicityCheck verify_multiplicity_theorem(const SimplicialComplex&, const K&);

SHEAFRES_DERIVED_EXTERN(RationalField)
SHEAFRES_DERIVED_EXTERN(PrimeField)
#undef SHEAFRES_DERIVED_EXTERN

}  // namespace sheafres
