#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sheafres/poset.hpp"

namespace sheafres {

using Chain = std::vector<ElementId>;  // strictly increasing

/// Strict chains of a poset up to a given degree, with the signed incidence
/// [c : d] = (-1)^i when d is c with one element inserted at position i.
struct OrderComplex {
  /// chains[i] lists the chains with i+1 elements, lexicographic in ids.
  std::vector<std::vector<Chain>> chains;
  /// cofaces[i][c] lists (index into chains[i+1], sign) for every one-element
  /// extension of chains[i][c]. Empty for the top degree.
  std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> cofaces;

  std::size_t degree_count() const { return chains.size(); }
  std::optional<std::size_t> index_of(const Chain& c) const;
  /// The incidence number [c : d].
  int incidence(const Chain& c, const Chain& d) const;
};

/// All chains with at most max_degree + 1 elements drawn from `members`
/// (every element when empty).
OrderComplex order_complex(const Poset& poset, std::size_t max_degree, std::span<const ElementId> members = {});

}  // namespace sheafres
