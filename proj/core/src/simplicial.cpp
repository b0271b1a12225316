#include "sheafres/simplicial.hpp"

#include <algorithm>
#include <set>

#include "sheafres/errors.hpp"

namespace sheafres {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Simplex normalized(Simplex s, std::size_t vertex_count) {
  std::sort(s.begin(), s.end());
  if (s.empty()) throw ValidationError("empty simplex listed explicitly");
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError("simplex with a repeated vertex");
  if (s.back() >= vertex_count) throw ValidationError("simplex refers to an unknown vertex");
  return s;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> simplices)
    : labels_(std::move(labels)), simplices_(std::move(simplices)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw ValidationError("duplicate vertex label '" + l + "'");
  }
  std::sort(simplices_.begin(), simplices_.end(), simplex_order);
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], i);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_labels,
                                                 const std::vector<Simplex>& facets) {
  std::set<Simplex> faces;
  for (const auto& f : facets) {
    Simplex s = normalized(f, vertex_labels.size());
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::uint64_t{1} << b)) face.push_back(s[b]);
      }
      faces.insert(std::move(face));
    }
  }
  return SimplicialComplex(std::move(vertex_labels), {faces.begin(), faces.end()});
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertex_labels,
                                                    const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (const auto& s : simplices) all.insert(normalized(s, vertex_labels.size()));
  for (const auto& s : all) {
    if (s.size() == 1) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (b != drop) face.push_back(s[b]);
      }
      if (!all.count(face)) {
        SimplicialComplex tmp(vertex_labels, {});
        throw ValidationError("not downward closed: face " + tmp.simplex_name(face) + " of " + tmp.simplex_name(s) +
                              " is missing");
      }
    }
  }
  return SimplicialComplex(std::move(vertex_labels), {all.begin(), all.end()});
}

SimplicialComplex SimplicialComplex::skeleton_of_simplex(std::size_t n, std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v <= n; ++v) labels.push_back(std::to_string(v));
  std::vector<Simplex> facets;
  // all (k+1)-subsets of {0..n}; for k >= n the full simplex
  const std::size_t size = std::min(k, n) + 1;
  Simplex s(size);
  for (std::size_t i = 0; i < size; ++i) s[i] = static_cast<VertexId>(i);
  while (true) {
    facets.push_back(s);
    std::size_t i = size;
    while (i > 0 && s[i - 1] == static_cast<VertexId>(n + 1 - size + (i - 1))) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < size; ++j) s[j] = s[j - 1] + 1;
  }
  return from_facets(std::move(labels), facets);
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  auto it = index_.find(sorted);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (simplex_name(i) == name) return i;
  }
  throw LookupError("unknown simplex '" + name + "'");
}

std::vector<std::size_t> SimplicialComplex::facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < simplices_.size() && maximal; ++j) {
      if (simplices_[j].size() == simplices_[i].size() + 1 &&
          std::includes(simplices_[j].begin(), simplices_[j].end(), simplices_[i].begin(), simplices_[i].end())) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::string SimplicialComplex::simplex_name(const Simplex& s) const {
  if (s.empty()) return kEmptySimplexName;
  bool short_labels = std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && !short_labels) out += ',';
    out += labels_.at(s[i]);
  }
  return out;
}

Poset SimplicialComplex::face_poset(bool include_empty) const {
  const ElementId offset = include_empty ? 1 : 0;
  std::vector<std::string> names;
  std::vector<Cover> covers;
  if (include_empty) names.push_back(kEmptySimplexName);
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    const Simplex& s = simplices_[i];
    names.push_back(simplex_name(s));
    if (s.size() == 1) {
      if (include_empty) covers.emplace_back(0, static_cast<ElementId>(i + offset));
      continue;
    }
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (b != drop) face.push_back(s[b]);
      }
      covers.emplace_back(static_cast<ElementId>(index_.at(face) + offset), static_cast<ElementId>(i + offset));
    }
  }
  return Poset::from_covers(std::move(names), covers);
}

}  // namespace sheafres
