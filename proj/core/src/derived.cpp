#include "sheafres/derived.hpp"

#include <algorithm>

#include "sheafres/errors.hpp"
#include "sheafres/order_complex.hpp"

namespace sheafres {

namespace {

constexpr Index kNone = static_cast<Index>(-1);

// Sections of I^j over an open set V, with a basis of cohomology classes.
template <Field K>
struct LocalCohomology {
  std::vector<Index> generators;  // I^j generators labeled in V
  EchelonBasis<K> span;           // image generators first, then the classes
  std::size_t image_size = 0;
  std::vector<SparseVector<K>> classes;
};

template <Field K>
LocalCohomology<K> local_cohomology(const Resolution<K>& r, std::span<const ElementId> open_set, std::size_t j) {
  const K& field = r.sheaf.field();
  LocalCohomology<K> out{r.terms[j].generators_in(open_set), EchelonBasis<K>(field), 0, {}};
  auto kernel = kernel_basis(eval_on(r.differentials[j], open_set));
  if (j > 0) {
    auto image = eval_on(r.differentials[j - 1], open_set).transpose();
    for (const auto& col : image.row_list()) out.span.insert(col);
  }
  out.image_size = out.span.size();
  for (auto& v : kernel) {
    if (out.span.insert(v)) out.classes.push_back(std::move(v));
  }
  return out;
}

template <Field K>
std::vector<std::size_t> cohomology_dims(const K& field, const std::vector<std::size_t>& counts,
                                         const std::vector<std::vector<std::vector<std::pair<Index, int>>>>& cofaces) {
  // cofaces[d][c] = (index of a degree d+1 cell, incidence)
  std::vector<std::size_t> ranks(counts.size(), 0);
  for (std::size_t d = 0; d + 1 < counts.size(); ++d) {
    std::vector<std::vector<typename SparseVector<K>::Entry>> rows(counts[d + 1]);
    for (std::size_t c = 0; c < counts[d]; ++c) {
      for (auto [t, sign] : cofaces[d][c]) rows[t].emplace_back(c, field.from_int(sign));
    }
    std::vector<SparseVector<K>> vectors;
    vectors.reserve(rows.size());
    for (auto& entries : rows) vectors.emplace_back(std::move(entries));
    ranks[d] = rank(SparseMatrix<K>::from_rows(field, counts[d], std::move(vectors)));
  }
  std::vector<std::size_t> dims(counts.size());
  for (std::size_t d = 0; d < counts.size(); ++d) dims[d] = counts[d] - ranks[d] - (d > 0 ? ranks[d - 1] : 0);
  return dims;
}

bool contains_face(const Simplex& outer, const Simplex& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::vector<std::size_t> degree_counts_padded(std::vector<std::size_t> dims, std::size_t size) {
  dims.resize(std::max(dims.size(), size), 0);
  return dims;
}

}  // namespace

template <Field K>
Sheaf<K> pushforward(const Resolution<K>& r, const PosetMap& map, std::size_t degree) {
  if (!(r.sheaf.poset() == map.source())) throw DomainError("pushforward: map source is not the sheaf's poset");
  const K& field = r.sheaf.field();
  const Poset& target = map.target();
  if (degree >= r.differentials.size()) {
    if (r.complete && degree >= r.terms.size()) return zero_sheaf(map.target_ptr(), field);
    throw DomainError("pushforward: resolution is truncated before degree " + std::to_string(degree));
  }

  std::vector<LocalCohomology<K>> local;
  local.reserve(target.size());
  std::vector<std::size_t> dims;
  for (ElementId lambda = 0; lambda < target.size(); ++lambda) {
    auto open_set = map.preimage_star(lambda);
    local.push_back(local_cohomology(r, open_set, degree));
    dims.push_back(local.back().classes.size());
  }

  std::map<Cover, SparseMatrix<K>> maps;
  std::vector<Index> position(r.terms[degree].size(), kNone);
  for (auto [kappa, lambda] : target.covers()) {
    const auto& from = local[kappa];
    const auto& to = local[lambda];
    for (Index k = 0; k < to.generators.size(); ++k) position[to.generators[k]] = k;
    std::vector<std::vector<typename SparseVector<K>::Entry>> rows(to.classes.size());
    for (Index c = 0; c < from.classes.size(); ++c) {
      // restrict the section to f^{-1}(St lambda) and read off its class
      std::vector<typename SparseVector<K>::Entry> restricted;
      for (const auto& [k, v] : from.classes[c]) {
        Index g = position[from.generators[k]];
        if (g != kNone) restricted.emplace_back(g, v);
      }
      auto coords = to.span.coordinates(SparseVector<K>(std::move(restricted)));
      if (!coords) throw InternalError("pushforward: restricted section is not a cocycle");
      for (const auto& [i, v] : *coords) {
        if (i >= to.image_size) rows[i - to.image_size].emplace_back(c, v);
      }
    }
    for (Index g : to.generators) position[g] = kNone;
    std::vector<SparseVector<K>> vectors;
    vectors.reserve(rows.size());
    for (auto& entries : rows) vectors.emplace_back(std::move(entries));
    maps.emplace(Cover{kappa, lambda}, SparseMatrix<K>::from_rows(field, from.classes.size(), std::move(vectors)));
  }

  Sheaf<K> out(map.target_ptr(), field, std::move(dims), std::move(maps));
  auto report = validate(out);
  if (!report.valid) throw InternalError("pushforward produced a non-functorial result: " + report.message);
  return out;
}

template <Field K>
std::vector<Sheaf<K>> pushforward_all(const Resolution<K>& r, const PosetMap& map) {
  std::vector<Sheaf<K>> out;
  for (std::size_t j = 0; j < r.differentials.size(); ++j) out.push_back(pushforward(r, map, j));
  return out;
}

template <Field K>
std::vector<Sheaf<K>> compact_pushforward_all(const Sheaf<K>& sheaf, std::span<const ElementId> embedding,
                                              const SimplicialMap& map) {
  auto faces = map.poset_map();
  auto extended = extend_by_zero(sheaf, faces.source_ptr(), embedding);
  return pushforward_all(minimal_resolution(extended), faces);
}

template <Field K>
Sheaf<K> compact_pushforward(const Sheaf<K>& sheaf, std::span<const ElementId> embedding, const SimplicialMap& map,
                             std::size_t degree) {
  auto faces = map.poset_map();
  auto extended = extend_by_zero(sheaf, faces.source_ptr(), embedding);
  return pushforward(minimal_resolution(extended), faces, degree);
}

template <Field K>
Sheaf<K> compact_pushforward(const Sheaf<K>& sheaf, std::span<const ElementId> embedding, const PosetMap& map,
                             std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, std::size_t degree) {
  if (!SimplicialMap::from_poset_map(std::move(source), std::move(target), map)) {
    throw DomainError("compact pushforward: the poset map is not induced by a simplicial map");
  }
  auto extended = extend_by_zero(sheaf, map.source_ptr(), embedding);
  return pushforward(minimal_resolution(extended), map, degree);
}

template <Field K>
std::vector<std::size_t> oracle_open_cohomology_c(const SimplicialComplex& complex, std::span<const std::size_t> open_set,
                                                  const K& field) {
  std::vector<bool> member(complex.size(), false);
  for (std::size_t s : open_set) {
    if (s >= complex.size()) throw LookupError("oracle: unknown simplex");
    member[s] = true;
  }
  for (std::size_t s : open_set) {
    for (std::size_t t = 0; t < complex.size(); ++t) {
      if (!member[t] && contains_face(complex.simplex(t), complex.simplex(s))) {
        throw DomainError("oracle: simplex set is not open");
      }
    }
  }
  const int top = complex.dimension();
  if (top < 0) return {};
  std::vector<std::vector<std::size_t>> cells(static_cast<std::size_t>(top) + 1);
  std::vector<Index> local(complex.size(), kNone);
  for (std::size_t s = 0; s < complex.size(); ++s) {
    if (!member[s]) continue;
    auto& level = cells[static_cast<std::size_t>(complex.dim(s))];
    local[s] = level.size();
    level.push_back(s);
  }
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::vector<std::pair<Index, int>>>> cofaces(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d) {
    counts.push_back(cells[d].size());
    cofaces[d].resize(cells[d].size());
    if (d + 1 == cells.size()) continue;
    for (std::size_t c = 0; c < cells[d].size(); ++c) {
      const Simplex& face = complex.simplex(cells[d][c]);
      for (std::size_t t : cells[d + 1]) {
        const Simplex& coface = complex.simplex(t);
        if (!contains_face(coface, face)) continue;
        std::size_t omitted = 0;
        while (omitted < face.size() && face[omitted] == coface[omitted]) ++omitted;
        cofaces[d][c].emplace_back(local[t], omitted % 2 == 0 ? 1 : -1);
      }
    }
  }
  return cohomology_dims(field, counts, cofaces);
}

template <Field K>
std::vector<std::size_t> oracle_star_cohomology_c(const SimplicialComplex& complex, std::size_t sigma, const K& field) {
  if (sigma >= complex.size()) throw LookupError("oracle: unknown simplex");
  std::vector<std::size_t> star;
  for (std::size_t t = 0; t < complex.size(); ++t) {
    if (contains_face(complex.simplex(t), complex.simplex(sigma))) star.push_back(t);
  }
  return oracle_open_cohomology_c(complex, star, field);
}

template <Field K>
std::vector<std::size_t> oracle_relative_cohomology(const Poset& poset, std::span<const ElementId> open_set,
                                                    std::span<const ElementId> support, const K& field) {
  if (!poset.is_up_closed(open_set) || !poset.is_up_closed(support)) {
    throw DomainError("oracle: set is not up-closed");
  }
  const std::size_t levels = poset.height() + 1;
  if (open_set.empty()) return std::vector<std::size_t>(levels, 0);
  std::vector<bool> in_support(poset.size(), false);
  for (ElementId e : support) in_support[e] = true;

  OrderComplex oc = order_complex(poset, poset.height(), open_set);
  std::vector<std::vector<Index>> local(oc.chains.size());
  std::vector<std::size_t> counts(oc.chains.size(), 0);
  for (std::size_t d = 0; d < oc.chains.size(); ++d) {
    local[d].assign(oc.chains[d].size(), kNone);
    for (std::size_t c = 0; c < oc.chains[d].size(); ++c) {
      if (in_support[oc.chains[d][c].back()]) local[d][c] = counts[d]++;
    }
  }
  std::vector<std::vector<std::vector<std::pair<Index, int>>>> cofaces(oc.chains.size());
  for (std::size_t d = 0; d < oc.chains.size(); ++d) {
    cofaces[d].resize(counts[d]);
    for (std::size_t c = 0; c < oc.chains[d].size(); ++c) {
      if (local[d][c] == kNone) continue;
      for (auto [t, sign] : oc.cofaces[d][c]) cofaces[d][local[d][c]].emplace_back(local[d + 1][t], sign);
    }
  }
  return degree_counts_padded(cohomology_dims(field, counts, cofaces), levels);
}

template <Field K>
std::vector<std::size_t> oracle_order_complex_cohomology(const Poset& poset, std::span<const ElementId> open_set,
                                                         const K& field) {
  return oracle_relative_cohomology(poset, open_set, open_set, field);
}

template <Field K>
MultiplicityCheck verify_multiplicity_theorem(const SimplicialComplex& complex, const K& field) {
  auto faces = std::make_shared<const Poset>(complex.face_poset(false));
  auto m = multiplicities(minimal_resolution(constant_sheaf(faces, field)));
  MultiplicityCheck check;
  const std::size_t top = static_cast<std::size_t>(std::max(complex.dimension(), 0));
  for (std::size_t s = 0; s < complex.size(); ++s) {
    auto oracle = oracle_star_cohomology_c(complex, s, field);
    const auto d = static_cast<std::size_t>(complex.dim(s));
    for (std::size_t j = 0; j <= std::max(top, m.degrees()); ++j) {
      MultiplicityRow row{s, j, m.at(j, static_cast<ElementId>(s)), j + d < oracle.size() ? oracle[j + d] : 0};
      if (row.computed == 0 && row.oracle == 0) continue;
      if (row.computed != row.oracle) check.ok = false;
      check.rows.push_back(row);
    }
  }
  return check;
}

#define SHEAFRES_DERIVED_INSTANTIATE(K)                                                                          \
  template Sheaf<K> pushforward(const Resolution<K>&, const PosetMap&, std::size_t);                             \
  template std::vector<Sheaf<K>> pushforward_all(const Resolution<K>&, const PosetMap&);                         \
  template std::vector<Sheaf<K>> compact_pushforward_all(const Sheaf<K>&, std::span<const ElementId>,            \
                                                         const SimplicialMap&);                                  \
  template Sheaf<K> compact_pushforward(const Sheaf<K>&, std::span<const ElementId>, const SimplicialMap&,        \
                                        std::size_t);                                                            \
  template Sheaf<K> compact_pushforward(const Sheaf<K>&, std::span<const ElementId>, const PosetMap&,            \
                                        std::shared_ptr<const SimplicialComplex>,                                \
                                        std::shared_ptr<const SimplicialComplex>, std::size_t);                  \
  template std::vector<std::size_t> oracle_star_cohomology_c(const SimplicialComplex&, std::size_t, const K&);   \
  template std::vector<std::size_t> oracle_open_cohomology_c(const SimplicialComplex&, std::span<const std::size_t>, \
                                                             const K&);                                          \
  template std::vector<std::size_t> oracle_order_complex_cohomology(const Poset&, std::span<const ElementId>,    \
                                                                    const K&);                                   \
  template std::vector<std::size_t> oracle_relative_cohomology(const Poset&, std::span<const ElementId>,         \
                                                               std::span<const ElementId>, const K&);            \
  template MultiplicityCheck verify_multiplicity_theorem(const SimplicialComplex&, const K&);

SHEAFRES_DERIVED_INSTANTIATE(RationalField)
SHEAFRES_DERIVED_INSTANTIATE(PrimeField)

}  // namespace sheafres
