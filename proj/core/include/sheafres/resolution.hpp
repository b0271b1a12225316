#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheafres/injective.hpp"

namespace sheafres {

/// The injection F -> I^0, one matrix per element: components[s] is
/// dim I^0(s) x dim F(s), rows in I^0's stalk-generator order.
template <Field K>
struct Augmentation {
  std::vector<SparseMatrix<K>> components;

  friend bool operator==(const Augmentation&, const Augmentation&) = default;
};

/// 0 -> F -> I^0 -> I^1 -> ... with every I^k a generator tuple.
///
/// `terms` holds the nonzero terms only. For a complete resolution there is
/// one differential per term, the last one mapping into the empty sheaf; a
/// truncated resolution lacks that final differential.
template <Field K>
struct Resolution {
  Sheaf<K> sheaf;
  Augmentation<K> augmentation;
  std::vector<InjectiveSheaf> terms;
  std::vector<LabeledMatrix<K>> differentials;
  bool minimal = false;
  bool complete = true;

  std::size_t length() const { return terms.size(); }
};

template <Field K>
struct Hull {
  InjectiveSheaf injective;
  Augmentation<K> augmentation;
};

/// Minimal injective hull: dim M_F(p) generators labeled p, in id order,
/// with the augmentation assembled per element from an adapted basis.
/// Constant sheaves take a shortcut (maximal elements, all-ones columns)
/// that yields the same result.
template <Field K>
Hull<K> minimal_hull(const Sheaf<K>& sheaf);

/// Same as minimal_hull but never takes the constant-sheaf shortcut.
template <Field K>
Hull<K> minimal_hull_general(const Sheaf<K>& sheaf);

template <Field K>
struct Step {
  InjectiveSheaf next;
  LabeledMatrix<K> differential;
};

/// One step of the minimal resolution: from prev : X -> I^k build
/// eta^k : I^k -> I^{k+1}, visiting elements in reverse of `order` (a linear
/// extension). Throws DomainError when prev does not land in `term`.
template <Field K>
Step<K> resolution_step(const InjectiveSheaf& term, const LabeledMatrix<K>& prev, std::span<const ElementId> order);
template <Field K>
Step<K> resolution_step(const InjectiveSheaf& term, const Augmentation<K>& prev, std::span<const ElementId> order);

struct ResolutionOptions {
  /// Maximum number of nonzero terms; defaults to height + 2.
  std::optional<std::size_t> max_len;
  /// Linear extension driving the steps; defaults to the poset's own.
  std::optional<std::vector<ElementId>> linear_extension;
};

/// Throws ValidationError for an invalid sheaf, DomainError for a bad
/// linear extension and InternalError if max_len is exceeded.
template <Field K>
Resolution<K> minimal_resolution(const Sheaf<K>& sheaf, const ResolutionOptions& options = {});

/// The chain-indexed resolution: degree k has one generator per (strict
/// chain p_0 < ... < p_k, basis vector of F(p_k)), labeled p_0. Degrees
/// above max_degree (default: the poset height) are dropped, which makes the
/// result incomplete when chains remain.
template <Field K>
Resolution<K> order_complex_resolution(const Sheaf<K>& sheaf, std::optional<std::size_t> max_degree = std::nullopt);

struct CertificateReport {
  bool ok = true;
  std::optional<ElementId> element;
  /// Term index the failure refers to.
  std::optional<std::size_t> degree;
  std::string message;
};

/// alpha(s) injective, im alpha(s) = ker eta^0(s), im eta^{k-1}(s) = ker eta^k(s)
/// at every element, and eta^{k+1} eta^k = 0 globally.
template <Field K>
CertificateReport verify_exactness(const Resolution<K>& resolution);

/// Every diagonal block (rows and columns labeled p) of every differential is
/// zero, and the generators labeled p lie in im alpha(p).
template <Field K>
CertificateReport verify_minimality(const Resolution<K>& resolution);

template <Field K>
Multiplicities multiplicities(const Resolution<K>& resolution);

/// m^j summed over star(s), divided by #star(s).
template <Field K>
Rational star_complexity(const Resolution<K>& resolution, ElementId s, std::size_t degree);

#define SHEAFRES_RESOLUTION_EXTERN(K)                                                                           \
  extern template Hull<K> minimal_hull(const Sheaf<K>&);                                                        \
  extern template Hull<K> minimal_hull_general(const Sheaf<K>&);                                                \
  extern template Step<K> resolution_step(const InjectiveSheaf&, const LabeledMatrix<K>&, std::span<const ElementId>); \
  extern template Step<K> resolution_step(const InjectiveSheaf&, const Augmentation<K>&, std::span<const ElementId>);  \
  extern template Resolution<K> minimal_resolution(const Sheaf<K>&, const ResolutionOptions&);                  \
  extern template Resolution<K> order_complex_resolution(const Sheaf<K>&, std::optional<std::size_t>);          \
  extern template CertificateReport verify_exactness(const Resolution<K>&);                                     \
  extern template CertificateReport verify_minimality(const Resolution<K>&);                                    \
  extern template Multiplicities multiplicities(const Resolution<K>&);                                          \
  extern template Rational star_complexity(const Resolution<K>&, ElementId, std::size_t);

SHEAFRES_RESOLUTION_EXTERN(RationalField)
SHEAFRES_RESOLUTION_EXTERN(PrimeField)
#undef SHEAFRES_RESOLUTION_EXTERN

}  // namespace sheafres
