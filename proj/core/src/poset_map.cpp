#include "sheafres/poset_map.hpp"

#include <algorithm>

#include "sheafres/errors.hpp"

namespace sheafres {

PosetMap::PosetMap(std::shared_ptr<const Poset> source, std::shared_ptr<const Poset> target,
                   std::vector<ElementId> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw ValidationError("poset map: image table has the wrong size");
  for (ElementId img : images_) {
    if (img >= target_->size()) throw ValidationError("poset map: image is not a target element");
  }
  for (auto [a, b] : source_->covers()) {
    if (!target_->leq(images_[a], images_[b])) {
      throw DomainError("poset map is not monotone: '" + source_->name(a) + "' <= '" + source_->name(b) +
                        "' but '" + target_->name(images_[a]) + "' is not <= '" + target_->name(images_[b]) + "'");
    }
  }
}

PosetMap PosetMap::identity(std::shared_ptr<const Poset> poset) {
  std::vector<ElementId> images(poset->size());
  for (ElementId e = 0; e < images.size(); ++e) images[e] = e;
  auto target = poset;
  return PosetMap(std::move(poset), std::move(target), std::move(images));
}

PosetMap PosetMap::to_point(std::shared_ptr<const Poset> source) {
  auto point = std::make_shared<const Poset>(Poset::from_covers({"pt"}, {}));
  std::vector<ElementId> images(source->size(), 0);
  return PosetMap(std::move(source), std::move(point), std::move(images));
}

std::vector<ElementId> PosetMap::preimage_star(ElementId lambda) const {
  if (lambda >= target_->size()) throw LookupError("preimage_star: unknown target element");
  std::vector<ElementId> out;
  for (ElementId s = 0; s < images_.size(); ++s) {
    if (target_->leq(lambda, images_[s])) out.push_back(s);
  }
  return out;
}

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, std::vector<VertexId> vertex_images)
    : source_(std::move(source)), target_(std::move(target)), vertex_images_(std::move(vertex_images)) {
  if (vertex_images_.size() != source_->vertex_count()) {
    throw ValidationError("simplicial map: vertex table has the wrong size");
  }
  simplex_images_.reserve(source_->size());
  for (const auto& s : source_->simplices()) {
    Simplex img;
    for (VertexId v : s) {
      if (vertex_images_[v] >= target_->vertex_count()) throw ValidationError("simplicial map: unknown target vertex");
      img.push_back(vertex_images_[v]);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto idx = target_->index_of(img);
    if (!idx) {
      throw ValidationError("simplicial map: image of " + source_->simplex_name(s) + " is not a simplex of the target");
    }
    simplex_images_.push_back(*idx);
  }
}

std::optional<SimplicialMap> SimplicialMap::from_poset_map(std::shared_ptr<const SimplicialComplex> source,
                                                           std::shared_ptr<const SimplicialComplex> target,
                                                           const PosetMap& map) {
  if (map.source().size() != source->size() || map.target().size() != target->size()) return std::nullopt;
  std::vector<VertexId> vertex_images(source->vertex_count());
  for (std::size_t i = 0; i < source->size(); ++i) {
    if (source->dim(i) != 0) continue;
    std::size_t img = map(static_cast<ElementId>(i));
    if (target->dim(img) != 0) return std::nullopt;
    vertex_images[source->simplex(i)[0]] = target->simplex(img)[0];
  }
  try {
    SimplicialMap sm(std::move(source), std::move(target), std::move(vertex_images));
    for (std::size_t i = 0; i < sm.source().size(); ++i) {
      if (sm.image_of(i) != map(static_cast<ElementId>(i))) return std::nullopt;
    }
    return sm;
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

PosetMap SimplicialMap::poset_map() const {
  return poset_map(std::make_shared<const Poset>(source_->face_poset(false)),
                   std::make_shared<const Poset>(target_->face_poset(false)));
}

PosetMap SimplicialMap::poset_map(std::shared_ptr<const Poset> source_faces,
                                  std::shared_ptr<const Poset> target_faces) const {
  if (source_faces->size() != source_->size() || target_faces->size() != target_->size()) {
    throw DomainError("simplicial map: face posets do not match the complexes");
  }
  std::vector<ElementId> images(simplex_images_.begin(), simplex_images_.end());
  return PosetMap(std::move(source_faces), std::move(target_faces), std::move(images));
}

}  // namespace sheafres
