#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sheafres/linalg.hpp"
#include "sheafres/poset.hpp"

namespace sheafres {

/// Sheaf of finite-dimensional vector spaces on a finite poset.
///
/// Stalks are k^dim(e) in standard coordinates. Maps are stored only on cover
/// relations, as dim(upper) x dim(lower) matrices; composites along longer
/// relations are derived on demand and memoized. A missing cover map is the
/// zero map.
template <Field K>
class Sheaf {
 public:
  using Matrix = SparseMatrix<K>;

  /// Throws ValidationError on a map for a non-cover pair or a shape mismatch.
  Sheaf(std::shared_ptr<const Poset> poset, K field, std::vector<std::size_t> dims, std::map<Cover, Matrix> maps = {});

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const K& field() const { return field_; }
  std::size_t dim(ElementId e) const { return dims_.at(e); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dimension() const;

  /// F(a <_1 b). Throws DomainError when (a, b) is not a cover.
  const Matrix& cover_map(ElementId a, ElementId b) const;
  const std::map<Cover, Matrix>& cover_maps() const { return maps_; }

  /// F(a <= b), composed along the cover path that always steps to the
  /// earliest element (in the poset's linear extension) still below b.
  /// Identity when a == b; throws DomainError when a is not below b.
  Matrix composite(ElementId a, ElementId b) const;

  friend bool operator==(const Sheaf& x, const Sheaf& y) {
    return x.field_ == y.field_ && *x.poset_ == *y.poset_ && x.dims_ == y.dims_ && x.maps_ == y.maps_;
  }

 private:
  struct CompositeCache {
    std::mutex mutex;
    std::map<Cover, Matrix> table;
  };

  std::shared_ptr<const Poset> poset_;
  K field_;
  std::vector<std::size_t> dims_;
  std::map<Cover, Matrix> maps_;
  std::shared_ptr<CompositeCache> cache_;
};

/// Outcome of a functoriality check.
struct SheafValidation {
  bool valid = true;
  /// (s, t, g) with s <= t <_1 g where F(t <_1 g) F(s <= t) != F(s <= g).
  std::optional<std::array<ElementId, 3>> triple;
  std::string message;
};

/// Checks F(t <_1 g) * F(s <= t) == F(s <= g) for every s <= t <_1 g, which
/// by induction on chain length gives path independence of all composites.
template <Field K>
SheafValidation validate(const Sheaf<K>& sheaf);

template <Field K>
Sheaf<K> constant_sheaf(std::shared_ptr<const Poset> poset, const K& field);

template <Field K>
Sheaf<K> zero_sheaf(std::shared_ptr<const Poset> poset, const K& field);

/// True when every stalk is one-dimensional and every cover map is the identity.
template <Field K>
bool is_constant(const Sheaf<K>& sheaf);

/// Basis of M_F(p), the intersection of ker F(p <_1 s) over the covers of p.
template <Field K>
std::vector<SparseVector<K>> maximal_vectors(const Sheaf<K>& sheaf, ElementId p);

/// F restricted to an up-closed set V. Element i of the result's poset is
/// sorted(V)[i]. Throws DomainError unless V is up-closed.
template <Field K>
Sheaf<K> restrict(const Sheaf<K>& sheaf, std::span<const ElementId> open_set);

/// i_! F for F on an open subset U of `ambient`; embedding[i] is the ambient
/// element corresponding to element i of F's poset. Throws DomainError
/// unless the embedding is an order-embedding onto an up-closed set.
template <Field K>
Sheaf<K> extend_by_zero(const Sheaf<K>& sheaf, std::shared_ptr<const Poset> ambient,
                        std::span<const ElementId> embedding);

/// Natural transformation given by one matrix per element,
/// components[e] : F(e) -> G(e).
template <Field K>
struct NatTrans {
  std::vector<SparseMatrix<K>> components;
};

/// First cover (s, t) whose naturality square fails, or nullopt when the
/// transformation is natural. Throws DomainError on a shape mismatch.
template <Field K>
std::optional<Cover> naturality_violation(const Sheaf<K>& source, const Sheaf<K>& target, const NatTrans<K>& eta);

#define SHEAFRES_SHEAF_EXTERN(K)                                                                        \
  extern template class Sheaf<K>;                                                                       \
  extern template SheafValidation validate(const Sheaf<K>&);                                            \
  extern template Sheaf<K> constant_sheaf(std::shared_ptr<const Poset>, const K&);                      \
  extern template Sheaf<K> zero_sheaf(std::shared_ptr<const Poset>, const K&);                          \
  extern template bool is_constant(const Sheaf<K>&);                                                    \
  extern template std::vector<SparseVector<K>> maximal_vectors(const Sheaf<K>&, ElementId);             \
  extern template Sheaf<K> restrict(const Sheaf<K>&, std::span<const ElementId>);                       \
  extern template Sheaf<K> extend_by_zero(const Sheaf<K>&, std::shared_ptr<const Poset>,                \
                                          std::span<const ElementId>);                                  \
  extern template std::optional<Cover> naturality_violation(const Sheaf<K>&, const Sheaf<K>&, const NatTrans<K>&);

SHEAFRES_SHEAF_EXTERN(RationalField)
SHEAFRES_SHEAF_EXTERN(PrimeField)
#undef SHEAFRES_SHEAF_EXTERN

}  // namespace sheafres
