#include "sheafres/resolution.hpp"

#include <algorithm>
#include <map>

#include "sheafres/errors.hpp"
#include "sheafres/order_complex.hpp"

namespace sheafres {

namespace {

constexpr Index kNone = static_cast<Index>(-1);

template <Field K>
struct AdaptedBasis {
  std::size_t free = 0;     // number of leading v's
  std::size_t maximal = 0;  // number of trailing w's, dim M_F(p)
  EchelonBasis<K> basis;
};

// (v_1..v_l, w_1..w_k) with the w's a basis of M_F(p) and the v's standard
// vectors on the non-pivot columns of the w's.
template <Field K>
AdaptedBasis<K> adapted_basis(const Sheaf<K>& sheaf, ElementId p) {
  const K& field = sheaf.field();
  const std::size_t dim = sheaf.dim(p);
  auto w = maximal_vectors(sheaf, p);
  std::vector<bool> pivot(dim, false);
  auto echelon = rref_with_transform(SparseMatrix<K>::from_rows(field, dim, w));
  for (const auto& row : echelon.reduced.row_list()) {
    if (!row.is_zero()) pivot[row.leading()] = true;
  }
  AdaptedBasis<K> out{0, w.size(), EchelonBasis<K>(field)};
  for (Index c = 0; c < dim; ++c) {
    if (pivot[c]) continue;
    SparseVector<K> e;
    e.push_back(c, field.one());
    if (!out.basis.insert(e)) throw InternalError("minimal hull: adapted basis is degenerate");
    ++out.free;
  }
  for (const auto& v : w) {
    if (!out.basis.insert(v)) throw InternalError("minimal hull: adapted basis is degenerate");
  }
  return out;
}

template <Field K>
Hull<K> constant_hull(const Sheaf<K>& sheaf) {
  const Poset& p = sheaf.poset();
  const K& field = sheaf.field();
  InjectiveSheaf injective(sheaf.poset_ptr(), p.maximal_elements());
  Augmentation<K> alpha;
  alpha.components.reserve(p.size());
  for (ElementId s = 0; s < p.size(); ++s) {
    SparseMatrix<K> column(field, 0, 1);
    SparseVector<K> one;
    one.push_back(0, field.one());
    for (std::size_t i = 0; i < injective.stalk_dim(s); ++i) column.append_row(one);
    alpha.components.push_back(std::move(column));
  }
  return {std::move(injective), std::move(alpha)};
}

template <Field K, class PrevAt>
Step<K> step_impl(const InjectiveSheaf& term, const K& field, PrevAt prev_at, std::span<const ElementId> order) {
  const Poset& p = term.poset();
  if (!p.is_linear_extension(order)) throw DomainError("resolution step: order is not a linear extension");
  std::vector<ElementId> labels;
  std::vector<SparseVector<K>> rows;
  std::vector<std::vector<Index>> rows_by_label(p.size());
  std::vector<Index> local(term.size(), kNone);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const ElementId s = *it;
    const auto& gens = term.stalk_generators(s);
    if (gens.empty()) continue;
    for (Index k = 0; k < gens.size(); ++k) local[gens[k]] = k;

    SparseMatrix<K> prev = prev_at(s);
    if (prev.rows() != gens.size()) throw DomainError("resolution step: previous map does not land in the term");
    auto complement = left_null_basis(prev);

    // rows already present in eta(s); their support lies in star(s)
    EchelonBasis<K> current(field);
    for (ElementId t : p.star(s)) {
      for (Index r : rows_by_label[t]) {
        std::vector<typename SparseVector<K>::Entry> entries;
        entries.reserve(rows[r].nnz());
        for (const auto& [g, v] : rows[r]) entries.emplace_back(local[g], v);
        current.insert(SparseVector<K>(std::move(entries)));
      }
    }
    for (const auto& b : complement) {
      if (!current.insert(b)) continue;
      std::vector<typename SparseVector<K>::Entry> entries;
      entries.reserve(b.nnz());
      for (const auto& [k, v] : b) entries.emplace_back(gens[k], v);
      rows_by_label[s].push_back(rows.size());
      rows.emplace_back(std::move(entries));
      labels.push_back(s);
    }
    for (Index g : gens) local[g] = kNone;
  }

  InjectiveSheaf next(term.poset_ptr(), std::move(labels));
  auto matrix = SparseMatrix<K>::from_rows(field, term.size(), std::move(rows));
  LabeledMatrix<K> eta(term, next, std::move(matrix));
  return {std::move(next), std::move(eta)};
}

template <Field K>
void require_valid(const Sheaf<K>& sheaf) {
  auto report = validate(sheaf);
  if (!report.valid) throw ValidationError(report.message);
}

CertificateReport failure(std::optional<ElementId> element, std::optional<std::size_t> degree, std::string message) {
  CertificateReport r;
  r.ok = false;
  r.element = element;
  r.degree = degree;
  r.message = std::move(message);
  return r;
}

}  // namespace

template <Field K>
Hull<K> minimal_hull_general(const Sheaf<K>& sheaf) {
  const Poset& p = sheaf.poset();
  const K& field = sheaf.field();

  std::vector<AdaptedBasis<K>> adapted;
  adapted.reserve(p.size());
  std::vector<Index> first_generator(p.size());
  std::vector<ElementId> labels;
  for (ElementId e = 0; e < p.size(); ++e) {
    adapted.push_back(adapted_basis(sheaf, e));
    first_generator[e] = labels.size();
    labels.insert(labels.end(), adapted.back().maximal, e);
  }
  InjectiveSheaf injective(sheaf.poset_ptr(), std::move(labels));

  Augmentation<K> alpha;
  alpha.components.reserve(p.size());
  std::vector<Index> local(injective.size(), kNone);
  for (ElementId pi = 0; pi < p.size(); ++pi) {
    const auto& gens = injective.stalk_generators(pi);
    for (Index k = 0; k < gens.size(); ++k) local[gens[k]] = k;
    const auto& own = adapted[pi];
    const std::size_t dim = sheaf.dim(pi);

    std::vector<ElementId> up = p.star(pi);
    std::sort(up.begin(), up.end(), [&](ElementId a, ElementId b) { return p.position(a) < p.position(b); });

    // columns of the block matrix (U 0; 0 I) in adapted coordinates
    std::vector<std::vector<typename SparseVector<K>::Entry>> columns(dim);
    for (std::size_t i = 0; i < own.free; ++i) {
      std::map<ElementId, SparseVector<K>> dict;
      dict.emplace(pi, own.basis.generators()[i]);
      for (ElementId s : up) {
        auto it = dict.find(s);
        if (it == dict.end() || it->second.is_zero()) continue;
        const SparseVector<K> w = it->second;
        for (ElementId t : p.coboundary(s)) {
          if (dict.count(t)) continue;
          auto image = sheaf.cover_map(s, t).apply(w);
          const auto& target = adapted[t];
          if (target.maximal > 0 && !image.is_zero()) {
            auto coords = target.basis.coordinates(image);
            if (!coords) throw InternalError("minimal hull: vector outside its stalk");
            for (const auto& [c, v] : *coords) {
              if (c >= target.free) columns[i].emplace_back(local[first_generator[t] + (c - target.free)], v);
            }
          }
          dict.emplace(t, std::move(image));
        }
        it->second = SparseVector<K>();
      }
    }
    for (std::size_t j = 0; j < own.maximal; ++j) {
      columns[own.free + j].emplace_back(local[first_generator[pi] + j], field.one());
    }
    std::vector<SparseVector<K>> column_vectors;
    column_vectors.reserve(dim);
    for (auto& c : columns) column_vectors.emplace_back(std::move(c));
    auto adapted_alpha = SparseMatrix<K>::from_rows(field, gens.size(), std::move(column_vectors)).transpose();

    // change of basis: column c of B^{-1} holds the adapted coordinates of e_c
    std::vector<SparseVector<K>> inv_rows;
    inv_rows.reserve(dim);
    for (Index c = 0; c < dim; ++c) {
      SparseVector<K> e;
      e.push_back(c, field.one());
      auto coords = own.basis.coordinates(e);
      if (!coords) throw InternalError("minimal hull: adapted basis does not span");
      inv_rows.push_back(std::move(*coords));
    }
    auto basis_inverse = SparseMatrix<K>::from_rows(field, dim, std::move(inv_rows)).transpose();
    alpha.components.push_back(adapted_alpha * basis_inverse);

    for (Index g : gens) local[g] = kNone;
  }
  return {std::move(injective), std::move(alpha)};
}

template <Field K>
Hull<K> minimal_hull(const Sheaf<K>& sheaf) {
  require_valid(sheaf);
  if (is_constant(sheaf)) return constant_hull(sheaf);
  return minimal_hull_general(sheaf);
}

template <Field K>
Step<K> resolution_step(const InjectiveSheaf& term, const LabeledMatrix<K>& prev, std::span<const ElementId> order) {
  if (!(prev.codomain() == term)) throw DomainError("resolution step: previous differential does not land in the term");
  return step_impl(term, prev.matrix().field(), [&](ElementId s) { return eval_at(prev, s); }, order);
}

template <Field K>
Step<K> resolution_step(const InjectiveSheaf& term, const Augmentation<K>& prev, std::span<const ElementId> order) {
  if (prev.components.size() != term.poset().size()) {
    throw DomainError("resolution step: augmentation does not match the poset");
  }
  if (prev.components.empty()) {
    InjectiveSheaf next(term.poset_ptr(), {});
    return {next, LabeledMatrix<K>(term, next, SparseMatrix<K>(K{}, 0, term.size()))};
  }
  const K field = prev.components.front().field();
  return step_impl(term, field, [&](ElementId s) { return prev.components[s]; }, order);
}

template <Field K>
Resolution<K> minimal_resolution(const Sheaf<K>& sheaf, const ResolutionOptions& options) {
  const Poset& p = sheaf.poset();
  std::vector<ElementId> order = options.linear_extension.value_or(p.linear_extension());
  if (!p.is_linear_extension(order)) throw DomainError("minimal resolution: not a linear extension of the poset");
  const std::size_t max_len = options.max_len.value_or(p.height() + 2);

  auto hull = minimal_hull(sheaf);
  Resolution<K> r{sheaf, std::move(hull.augmentation), {}, {}, true, true};
  if (hull.injective.empty()) return r;
  r.terms.push_back(std::move(hull.injective));
  auto step = resolution_step(r.terms.back(), r.augmentation, order);
  for (;;) {
    r.differentials.push_back(std::move(step.differential));
    if (step.next.empty()) break;
    if (r.terms.size() >= max_len) {
      throw InternalError("minimal resolution exceeded " + std::to_string(max_len) + " terms");
    }
    r.terms.push_back(std::move(step.next));
    step = resolution_step(r.terms.back(), r.differentials.back(), order);
  }
  return r;
}

template <Field K>
Resolution<K> order_complex_resolution(const Sheaf<K>& sheaf, std::optional<std::size_t> max_degree) {
  require_valid(sheaf);
  const Poset& p = sheaf.poset();
  const K& field = sheaf.field();

  // term k is nonzero iff some chain of k+1 elements ends at a nonzero stalk
  std::vector<std::size_t> depth(p.size(), 0);
  std::size_t nonzero_terms = 0;
  for (ElementId e : p.linear_extension()) {
    for (ElementId b : p.boundary(e)) depth[e] = std::max(depth[e], depth[b] + 1);
    if (sheaf.dim(e) > 0) nonzero_terms = std::max(nonzero_terms, depth[e] + 1);
  }
  const std::size_t cap = max_degree.value_or(p.height()) + 1;
  const std::size_t count = std::min(nonzero_terms, cap);
  const bool complete = nonzero_terms <= cap;

  OrderComplex oc = count > 0 ? order_complex(p, count - 1) : OrderComplex{};
  std::vector<std::vector<Index>> offset(count);
  Resolution<K> r{sheaf, {}, {}, {}, false, complete};
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<ElementId> labels;
    offset[k].assign(oc.chains[k].size(), kNone);
    for (std::size_t c = 0; c < oc.chains[k].size(); ++c) {
      const Chain& chain = oc.chains[k][c];
      offset[k][c] = labels.size();
      labels.insert(labels.end(), sheaf.dim(chain.back()), chain.front());
    }
    r.terms.emplace_back(sheaf.poset_ptr(), std::move(labels));
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (k + 1 == count) {
      if (complete) {
        InjectiveSheaf empty(sheaf.poset_ptr(), {});
        r.differentials.push_back(LabeledMatrix<K>::zero(field, r.terms[k], std::move(empty)));
      }
      break;
    }
    std::vector<std::vector<typename SparseVector<K>::Entry>> rows(r.terms[k + 1].size());
    for (std::size_t c = 0; c < oc.chains[k].size(); ++c) {
      const Chain& chain = oc.chains[k][c];
      if (sheaf.dim(chain.back()) == 0) continue;
      for (auto [d, sign] : oc.cofaces[k][c]) {
        const Chain& longer = oc.chains[k + 1][d];
        if (sheaf.dim(longer.back()) == 0) continue;
        auto block = sheaf.composite(chain.back(), longer.back());
        const auto s = field.from_int(sign);
        for (Index i = 0; i < block.rows(); ++i) {
          for (const auto& [j, v] : block.row(i)) rows[offset[k + 1][d] + i].emplace_back(offset[k][c] + j, s * v);
        }
      }
    }
    std::vector<SparseVector<K>> row_vectors;
    row_vectors.reserve(rows.size());
    for (auto& entries : rows) row_vectors.emplace_back(std::move(entries));
    auto matrix = SparseMatrix<K>::from_rows(field, r.terms[k].size(), std::move(row_vectors));
    r.differentials.emplace_back(r.terms[k], r.terms[k + 1], std::move(matrix));
  }

  r.augmentation.components.reserve(p.size());
  for (ElementId s = 0; s < p.size(); ++s) {
    SparseMatrix<K> alpha(field, 0, sheaf.dim(s));
    if (count > 0) {
      for (ElementId g = 0; g < p.size(); ++g) {
        if (!p.leq(s, g) || sheaf.dim(g) == 0) continue;
        auto block = sheaf.composite(s, g);
        for (const auto& row : block.row_list()) alpha.append_row(row);
      }
    }
    r.augmentation.components.push_back(std::move(alpha));
  }
  return r;
}

template <Field K>
CertificateReport verify_exactness(const Resolution<K>& r) {
  const Poset& p = r.sheaf.poset();
  const std::size_t n = r.terms.size();
  const std::size_t expected = n == 0 ? 0 : (r.complete ? n : n - 1);
  if (r.differentials.size() != expected) {
    return failure(std::nullopt, std::nullopt, "resolution has " + std::to_string(r.differentials.size()) +
                                                   " differentials for " + std::to_string(n) + " terms");
  }
  if (r.augmentation.components.size() != p.size()) {
    return failure(std::nullopt, std::nullopt, "augmentation does not cover every element");
  }
  for (std::size_t k = 0; k < r.differentials.size(); ++k) {
    const auto& eta = r.differentials[k];
    if (!(eta.domain() == r.terms[k])) return failure(std::nullopt, k, "differential domain differs from its term");
    if (k + 1 < n ? !(eta.codomain() == r.terms[k + 1]) : !eta.codomain().empty()) {
      return failure(std::nullopt, k, "differential codomain differs from the next term");
    }
    if (k + 1 < r.differentials.size() && !(r.differentials[k + 1].matrix() * eta.matrix()).is_zero()) {
      return failure(std::nullopt, k + 1, "consecutive differentials do not compose to zero");
    }
  }
  for (ElementId s = 0; s < p.size(); ++s) {
    SparseMatrix<K> prev = r.augmentation.components[s];
    const std::size_t first_dim = n == 0 ? 0 : r.terms[0].stalk_dim(s);
    if (prev.rows() != first_dim || prev.cols() != r.sheaf.dim(s)) {
      return failure(s, 0, "augmentation at '" + p.name(s) + "' has the wrong shape");
    }
    std::size_t prev_rank = rank(prev);
    if (prev_rank != r.sheaf.dim(s)) return failure(s, 0, "augmentation is not injective at '" + p.name(s) + "'");
    if (n == 0) continue;
    for (std::size_t k = 0; k < r.differentials.size(); ++k) {
      auto e = eval_at(r.differentials[k], s);
      if (!(e * prev).is_zero()) return failure(s, k, "composite into term is nonzero at '" + p.name(s) + "'");
      std::size_t e_rank = rank(e);
      if (e_rank + prev_rank != r.terms[k].stalk_dim(s)) {
        return failure(s, k, "kernel differs from image in term " + std::to_string(k) + " at '" + p.name(s) + "'");
      }
      prev = std::move(e);
      prev_rank = e_rank;
    }
  }
  return {};
}

template <Field K>
CertificateReport verify_minimality(const Resolution<K>& r) {
  const Poset& p = r.sheaf.poset();
  for (std::size_t k = 0; k < r.differentials.size(); ++k) {
    const auto& eta = r.differentials[k];
    for (Index row = 0; row < eta.matrix().rows(); ++row) {
      const ElementId label = eta.codomain().label(row);
      for (const auto& [col, v] : eta.matrix().row(row)) {
        if (eta.domain().label(col) == label) {
          return failure(label, k, "differential " + std::to_string(k) + " has a nonzero diagonal block at '" +
                                       p.name(label) + "'");
        }
      }
    }
  }
  if (r.terms.empty()) return {};
  const auto& first = r.terms[0];
  for (ElementId s = 0; s < p.size(); ++s) {
    if (first.multiplicity(s) == 0) continue;
    const auto& alpha = r.augmentation.components.at(s);
    EchelonBasis<K> image(alpha.field());
    const auto columns = alpha.transpose();
    for (const auto& col : columns.row_list()) image.insert(col);
    const auto& gens = first.stalk_generators(s);
    for (Index k = 0; k < gens.size(); ++k) {
      if (first.label(gens[k]) != s) continue;
      SparseVector<K> e;
      e.push_back(k, alpha.field().one());
      if (!image.contains(e)) return failure(s, 0, "maximal vector at '" + p.name(s) + "' is not in the image");
    }
  }
  return {};
}

template <Field K>
Multiplicities multiplicities(const Resolution<K>& r) {
  Multiplicities m;
  m.table.assign(r.terms.size(), std::vector<std::size_t>(r.sheaf.poset().size(), 0));
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    for (ElementId label : r.terms[k].generators()) ++m.table[k][label];
  }
  return m;
}

template <Field K>
Rational star_complexity(const Resolution<K>& r, ElementId s, std::size_t degree) {
  const auto& star = r.sheaf.poset().star(s);
  if (degree >= r.terms.size()) return Rational(0);
  long total = 0;
  for (ElementId label : r.terms[degree].generators()) {
    if (r.sheaf.poset().leq(s, label)) ++total;
  }
  return Rational(total, static_cast<long>(star.size()));
}

#define SHEAFRES_RESOLUTION_INSTANTIATE(K)                                                                 \
  template Hull<K> minimal_hull(const Sheaf<K>&);                                                          \
  template Hull<K> minimal_hull_general(const Sheaf<K>&);                                                  \
  template Step<K> resolution_step(const InjectiveSheaf&, const LabeledMatrix<K>&, std::span<const ElementId>); \
  template Step<K> resolution_step(const InjectiveSheaf&, const Augmentation<K>&, std::span<const ElementId>);  \
  template Resolution<K> minimal_resolution(const Sheaf<K>&, const ResolutionOptions&);                    \
  template Resolution<K> order_complex_resolution(const Sheaf<K>&, std::optional<std::size_t>);            \
  template CertificateReport verify_exactness(const Resolution<K>&);                                       \
  template CertificateReport verify_minimality(const Resolution<K>&);                                      \
  template Multiplicities multiplicities(const Resolution<K>&);                                            \
  template Rational star_complexity(const Resolution<K>&, ElementId, std::size_t);

SHEAFRES_RESOLUTION_INSTANTIATE(RationalField)
SHEAFRES_RESOLUTION_INSTANTIATE(PrimeField)

}  // namespace sheafres
