#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sheafres {

using ElementId = std::uint32_t;
using Cover = std::pair<ElementId, ElementId>;

/// Finite poset stored as a transitive reduction (cover relations).
///
/// Elements are dense ids 0..size()-1 with a name table. Reachability,
/// stars, boundaries, coboundaries, height and a linear extension are cached
/// eagerly at construction, so a Poset is immutable and safe for concurrent
/// reads.
class Poset {
 public:
  /// Builds from cover pairs (lower, upper). Throws ValidationError on a
  /// cycle, a self-loop, a duplicate or redundant (non-cover) pair, or a
  /// repeated name.
  static Poset from_covers(std::vector<std::string> names, const std::vector<Cover>& covers);
  /// Builds from arbitrary relations a < b, keeping only the transitive reduction.
  static Poset from_relations(std::vector<std::string> names, const std::vector<Cover>& relations);
  /// Antichain with elements named "0", "1", ...
  static Poset antichain(std::size_t n);
  /// Chain 0 < 1 < ... < n-1.
  static Poset chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId e) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws LookupError for an unknown name.
  ElementId id(std::string_view name) const;

  bool leq(ElementId a, ElementId b) const { return reach_[a][b]; }
  bool less(ElementId a, ElementId b) const { return a != b && reach_[a][b]; }
  bool is_cover(ElementId a, ElementId b) const;
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

  /// {t : s <= t}, ascending ids. Throws LookupError for an unknown element.
  const std::vector<ElementId>& star(ElementId s) const;
  /// {t : t <_1 s}
  const std::vector<ElementId>& boundary(ElementId s) const;
  /// {t : s <_1 t}
  const std::vector<ElementId>& coboundary(ElementId s) const;
  /// {t : t <= s}
  std::vector<ElementId> down_set(ElementId s) const;

  /// Cover pairs, sorted.
  const std::vector<Cover>& covers() const { return covers_; }
  std::vector<ElementId> maximal_elements() const;

  /// Length of the longest chain minus one.
  std::size_t height() const { return height_; }

  /// Topological order with ties broken by ascending id.
  const std::vector<ElementId>& linear_extension() const { return linear_extension_; }
  /// Position of each element in linear_extension().
  std::size_t position(ElementId e) const { return position_[e]; }
  bool is_linear_extension(std::span<const ElementId> order) const;

  bool is_up_closed(std::span<const ElementId> subset) const;
  /// Upward closure of a subset, ascending ids.
  std::vector<ElementId> up_closure(std::span<const ElementId> subset) const;

  /// Induced subposet on `subset` (any order, no duplicates). Element i of
  /// the result is sorted(subset)[i]; names are kept.
  Poset induced(std::span<const ElementId> subset) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.covers_ == b.covers_;
  }

 private:
  Poset(std::vector<std::string> names, std::vector<Cover> covers);

  void check(ElementId e) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<bool>> reach_;
  std::vector<std::vector<ElementId>> star_;
  std::vector<std::vector<ElementId>> boundary_;
  std::vector<std::vector<ElementId>> coboundary_;
  std::vector<ElementId> linear_extension_;
  std::vector<std::size_t> position_;
  std::size_t height_ = 0;
};

}  // namespace sheafres
