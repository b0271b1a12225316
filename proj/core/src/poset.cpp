#include "sheafres/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "sheafres/errors.hpp"

namespace sheafres {

Poset::Poset(std::vector<std::string> names, std::vector<Cover> covers)
    : names_(std::move(names)), covers_(std::move(covers)) {
  const std::size_t n = names_.size();
  for (ElementId e = 0; e < n; ++e) {
    if (!index_.emplace(names_[e], e).second) throw ValidationError("duplicate element name '" + names_[e] + "'");
  }

  std::sort(covers_.begin(), covers_.end());
  boundary_.assign(n, {});
  coboundary_.assign(n, {});
  for (std::size_t k = 0; k < covers_.size(); ++k) {
    auto [a, b] = covers_[k];
    if (a >= n || b >= n) throw ValidationError("cover relation refers to an unknown element");
    if (a == b) throw ValidationError("cycle: element '" + names_[a] + "' covers itself");
    if (k > 0 && covers_[k - 1] == covers_[k]) {
      throw ValidationError("duplicate cover '" + names_[a] + "' < '" + names_[b] + "'");
    }
    coboundary_[a].push_back(b);
    boundary_[b].push_back(a);
  }

  // Kahn's algorithm; ties broken by smallest id.
  std::vector<std::size_t> indegree(n);
  for (ElementId e = 0; e < n; ++e) indegree[e] = boundary_[e].size();
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (ElementId e = 0; e < n; ++e) {
    if (indegree[e] == 0) ready.push(e);
  }
  while (!ready.empty()) {
    ElementId e = ready.top();
    ready.pop();
    linear_extension_.push_back(e);
    for (ElementId t : coboundary_[e]) {
      if (--indegree[t] == 0) ready.push(t);
    }
  }
  if (linear_extension_.size() != n) {
    std::string where;
    for (ElementId e = 0; e < n; ++e) {
      if (indegree[e] > 0) {
        where = names_[e];
        break;
      }
    }
    throw ValidationError("cycle in cover relations through element '" + where + "'");
  }
  position_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) position_[linear_extension_[i]] = i;

  reach_.assign(n, std::vector<bool>(n, false));
  std::vector<std::size_t> longest(n, 0);  // longest chain starting at e, in covers
  for (auto it = linear_extension_.rbegin(); it != linear_extension_.rend(); ++it) {
    ElementId e = *it;
    reach_[e][e] = true;
    for (ElementId t : coboundary_[e]) {
      for (ElementId x = 0; x < n; ++x) {
        if (reach_[t][x]) reach_[e][x] = true;
      }
      longest[e] = std::max(longest[e], longest[t] + 1);
    }
    height_ = std::max(height_, longest[e]);
  }

  for (auto [a, b] : covers_) {
    for (ElementId c : coboundary_[a]) {
      if (c != b && reach_[c][b]) {
        throw ValidationError("'" + names_[a] + "' < '" + names_[b] + "' is not a cover relation (passes through '" +
                              names_[c] + "')");
      }
    }
  }

  star_.assign(n, {});
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (reach_[a][b]) star_[a].push_back(b);
    }
  }
}

Poset Poset::from_covers(std::vector<std::string> names, const std::vector<Cover>& covers) {
  return Poset(std::move(names), covers);
}

Poset Poset::from_relations(std::vector<std::string> names, const std::vector<Cover>& relations) {
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw ValidationError("relation refers to an unknown element");
    if (a == b) throw ValidationError("cycle: element '" + names[a] + "' below itself");
    rel[a][b] = true;
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  std::vector<Cover> covers;
  for (ElementId a = 0; a < n; ++a) {
    if (rel[a][a]) throw ValidationError("cycle through element '" + names[a] + "'");
    for (ElementId b = 0; b < n; ++b) {
      if (!rel[a][b]) continue;
      bool direct = true;
      for (ElementId c = 0; c < n && direct; ++c) {
        if (rel[a][c] && rel[c][b]) direct = false;
      }
      if (direct) covers.emplace_back(a, b);
    }
  }
  return Poset(std::move(names), std::move(covers));
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Poset(std::move(names), {});
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<ElementId>(i - 1), static_cast<ElementId>(i));
  }
  return Poset(std::move(names), std::move(covers));
}

void Poset::check(ElementId e) const {
  if (e >= names_.size()) throw LookupError("unknown poset element #" + std::to_string(e));
}

const std::string& Poset::name(ElementId e) const {
  check(e);
  return names_[e];
}

std::optional<ElementId> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Poset::id(std::string_view name) const {
  auto e = find(name);
  if (!e) throw LookupError("unknown poset element '" + std::string(name) + "'");
  return *e;
}

bool Poset::is_cover(ElementId a, ElementId b) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{a, b});
}

const std::vector<ElementId>& Poset::star(ElementId s) const {
  check(s);
  return star_[s];
}

const std::vector<ElementId>& Poset::boundary(ElementId s) const {
  check(s);
  return boundary_[s];
}

const std::vector<ElementId>& Poset::coboundary(ElementId s) const {
  check(s);
  return coboundary_[s];
}

std::vector<ElementId> Poset::down_set(ElementId s) const {
  check(s);
  std::vector<ElementId> out;
  for (ElementId t = 0; t < size(); ++t) {
    if (reach_[t][s]) out.push_back(t);
  }
  return out;
}

std::vector<ElementId> Poset::maximal_elements() const {
  std::vector<ElementId> out;
  for (ElementId e = 0; e < size(); ++e) {
    if (coboundary_[e].empty()) out.push_back(e);
  }
  return out;
}

bool Poset::is_linear_extension(std::span<const ElementId> order) const {
  if (order.size() != size()) return false;
  std::vector<std::size_t> pos(size(), size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= size() || pos[order[i]] != size()) return false;
    pos[order[i]] = i;
  }
  return std::all_of(covers_.begin(), covers_.end(), [&](const Cover& c) { return pos[c.first] < pos[c.second]; });
}

bool Poset::is_up_closed(std::span<const ElementId> subset) const {
  std::vector<bool> member(size(), false);
  for (ElementId e : subset) {
    check(e);
    member[e] = true;
  }
  for (ElementId e : subset) {
    for (ElementId t : coboundary_[e]) {
      if (!member[t]) return false;
    }
  }
  return true;
}

std::vector<ElementId> Poset::up_closure(std::span<const ElementId> subset) const {
  std::vector<bool> member(size(), false);
  for (ElementId e : subset) {
    for (ElementId t : star(e)) member[t] = true;
  }
  std::vector<ElementId> out;
  for (ElementId e = 0; e < size(); ++e) {
    if (member[e]) out.push_back(e);
  }
  return out;
}

Poset Poset::induced(std::span<const ElementId> subset) const {
  std::vector<ElementId> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("induced subposet: duplicate element");
  }
  std::vector<std::string> names;
  std::vector<Cover> relations;
  for (ElementId i = 0; i < sorted.size(); ++i) {
    check(sorted[i]);
    names.push_back(names_[sorted[i]]);
    for (ElementId j = 0; j < sorted.size(); ++j) {
      if (i != j && reach_[sorted[i]][sorted[j]]) relations.emplace_back(i, j);
    }
  }
  return from_relations(std::move(names), relations);
}

}  // namespace sheafres
