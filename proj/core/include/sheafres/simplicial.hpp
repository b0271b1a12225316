#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sheafres/poset.hpp"

namespace sheafres {

using VertexId = std::uint32_t;
using Simplex = std::vector<VertexId>;  // sorted, nonempty

/// Finite abstract simplicial complex, closed under taking nonempty faces.
///
/// Simplices are indexed 0..size()-1 in (dimension, lexicographic) order.
class SimplicialComplex {
 public:
  /// All faces of the given facets. Vertex ids index `vertex_labels`.
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels, const std::vector<Simplex>& facets);
  /// Exactly the given simplices; throws ValidationError unless downward closed.
  static SimplicialComplex from_simplices(std::vector<std::string> vertex_labels, const std::vector<Simplex>& simplices);
  /// The k-skeleton of the n-simplex on vertices labeled 0..n.
  static SimplicialComplex skeleton_of_simplex(std::size_t n, std::size_t k);

  std::size_t size() const { return simplices_.size(); }
  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const Simplex& simplex(std::size_t i) const { return simplices_.at(i); }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  int dimension() const;
  int dim(std::size_t i) const { return static_cast<int>(simplices_.at(i).size()) - 1; }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Throws LookupError.
  std::size_t index_by_name(const std::string& name) const;
  std::vector<std::size_t> facets() const;

  /// Vertex labels concatenated (comma-separated unless all labels are single
  /// characters); "∅" for the empty simplex.
  std::string simplex_name(const Simplex& s) const;
  std::string simplex_name(std::size_t i) const { return simplex_name(simplices_.at(i)); }

  /// Face poset with covers the codimension-one inclusions. Without the empty
  /// simplex, element i is simplex i; with it, element 0 is ∅ and element
  /// i+1 is simplex i.
  Poset face_poset(bool include_empty) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.simplices_ == b.simplices_;
  }

 private:
  SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> simplices);

  std::vector<std::string> labels_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
};

inline constexpr const char* kEmptySimplexName = "∅";

}  // namespace sheafres
