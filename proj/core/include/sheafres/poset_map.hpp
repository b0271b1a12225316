#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sheafres/poset.hpp"
#include "sheafres/simplicial.hpp"

namespace sheafres {

/// Monotone (Alexandrov-continuous) map between finite posets.
class PosetMap {
 public:
  /// Throws DomainError unless s <= t implies f(s) <= f(t), and
  /// ValidationError when the image table has the wrong size or refers to
  /// unknown elements.
  PosetMap(std::shared_ptr<const Poset> source, std::shared_ptr<const Poset> target, std::vector<ElementId> images);

  static PosetMap identity(std::shared_ptr<const Poset> poset);
  /// Map onto the one-element poset.
  static PosetMap to_point(std::shared_ptr<const Poset> source);

  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }
  const std::shared_ptr<const Poset>& source_ptr() const { return source_; }
  const std::shared_ptr<const Poset>& target_ptr() const { return target_; }
  ElementId operator()(ElementId s) const { return images_.at(s); }
  const std::vector<ElementId>& images() const { return images_; }

  /// f^{-1}(St lambda), an up-closed subset of the source, ascending ids.
  /// Throws LookupError for an unknown lambda.
  std::vector<ElementId> preimage_star(ElementId lambda) const;

 private:
  std::shared_ptr<const Poset> source_;
  std::shared_ptr<const Poset> target_;
  std::vector<ElementId> images_;
};

/// Simplicial map given by a vertex map; its face-poset map sends a simplex
/// to the simplex spanned by its vertex images.
class SimplicialMap {
 public:
  /// Throws ValidationError unless every simplex maps onto a simplex of the target.
  SimplicialMap(std::shared_ptr<const SimplicialComplex> source, std::shared_ptr<const SimplicialComplex> target,
                std::vector<VertexId> vertex_images);

  /// Recovers the vertex map of a face-poset map, if it is simplicial.
  /// Face posets are taken without the empty simplex.
  static std::optional<SimplicialMap> from_poset_map(std::shared_ptr<const SimplicialComplex> source,
                                                     std::shared_ptr<const SimplicialComplex> target,
                                                     const PosetMap& map);

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const std::vector<VertexId>& vertex_images() const { return vertex_images_; }
  std::size_t image_of(std::size_t simplex) const { return simplex_images_.at(simplex); }

  /// The induced map of face posets (no empty simplex). The returned map
  /// owns freshly built face posets.
  PosetMap poset_map() const;
  PosetMap poset_map(std::shared_ptr<const Poset> source_faces, std::shared_ptr<const Poset> target_faces) const;

 private:
  std::shared_ptr<const SimplicialComplex> source_;
  std::shared_ptr<const SimplicialComplex> target_;
  std::vector<VertexId> vertex_images_;
  std::vector<std::size_t> simplex_images_;
};

}  // namespace sheafres
