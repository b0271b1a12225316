#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace sheafres::testing {

namespace {

// Row-reduces in place and returns the pivot columns.
std::vector<std::size_t> eliminate(Dense& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

DenseRow random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  DenseRow v(n);
  for (auto& x : v) x = Rational(entry(rng));
  return v;
}

}  // namespace

std::size_t dense_rank(Dense m) { return eliminate(m).size(); }

Dense to_dense(const SparseMatrix<Q>& m) {
  Dense d(m.rows(), DenseRow(m.cols()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) d[r][c] = v;
  }
  return d;
}

Dense multiply(const Dense& a, const Dense& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Dense out(a.size(), DenseRow(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

std::optional<DenseRow> solve(const Dense& basis, const DenseRow& v) {
  // columns are the basis vectors, last column is v
  const std::size_t n = basis.size();
  Dense m(v.size(), DenseRow(n + 1));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = basis[j][i];
    m[i][n] = v[i];
  }
  const auto pivots = eliminate(m);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  DenseRow x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
  return x;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::shared_ptr<const SimplicialComplex> tetrahedron() {
  return std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_facets({"1", "2", "3", "4"}, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}));
}

std::shared_ptr<const SimplicialComplex> link_complex() {
  // vertex v is label v+2
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(
      {"2", "3", "4", "5", "6", "7"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4}, {5}}));
}

std::shared_ptr<const Poset> link_poset() { return faces(*link_complex(), true); }

std::shared_ptr<const SimplicialComplex> pendant_complex() {
  std::vector<Simplex> facets;
  for (VertexId skip = 0; skip < 5; ++skip) {
    Simplex s;
    for (VertexId v = 0; v < 5; ++v) {
      if (v != skip) s.push_back(v);
    }
    facets.push_back(s);
  }
  facets.push_back({0, 5});
  facets.push_back({0, 6});
  return std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_facets({"1", "2", "3", "4", "5", "6", "7"}, facets));
}

std::shared_ptr<const SimplicialComplex> skeleton(std::size_t n, std::size_t k) {
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::skeleton_of_simplex(n, k));
}

std::shared_ptr<const Poset> faces(const SimplicialComplex& complex, bool include_empty) {
  return std::make_shared<const Poset>(complex.face_poset(include_empty));
}

std::shared_ptr<const SimplicialComplex> random_complex(std::mt19937_64& rng, std::size_t max_vertices) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t facet_count = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  std::uniform_int_distribution<std::size_t> size_dist(1, std::min<std::size_t>(4, n));
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Simplex> facets;
  std::set<VertexId> used;
  for (std::size_t f = 0; f < facet_count; ++f) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Simplex s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    std::sort(s.begin(), s.end());
    used.insert(s.begin(), s.end());
    facets.push_back(s);
  }
  std::vector<VertexId> relabel(n, 0);
  std::vector<std::string> labels;
  for (VertexId v : used) {
    relabel[v] = static_cast<VertexId>(labels.size());
    labels.push_back(std::to_string(labels.size() + 1));
  }
  for (auto& s : facets) {
    for (auto& v : s) v = relabel[v];
  }
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(labels, facets));
}

std::shared_ptr<const Poset> random_poset(std::mt19937_64& rng, std::size_t max_elements) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_elements)(rng);
  std::bernoulli_distribution edge(0.3);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<Cover> relations;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      if (edge(rng)) relations.emplace_back(i, j);
    }
  }
  return std::make_shared<const Poset>(Poset::from_relations(names, relations));
}

Sheaf<Q> random_sheaf(std::mt19937_64& rng, std::shared_ptr<const Poset> poset, std::size_t max_dim) {
  const Poset& p = *poset;
  std::uniform_int_distribution<std::size_t> space_dim(1, max_dim + 1);
  std::uniform_int_distribution<std::size_t> a_count(0, 2);
  std::bernoulli_distribution b_pick(0.25);
  std::uniform_int_distribution<int> mix(-1, 2);
  for (;;) {
    const std::size_t n = space_dim(rng);
    std::vector<Dense> ua(p.size()), ub(p.size());
    for (ElementId s = 0; s < p.size(); ++s) {
      for (std::size_t i = a_count(rng); i > 0; --i) ua[s].push_back(random_vector(rng, n));
      if (b_pick(rng)) ub[s].push_back(random_vector(rng, n));
    }
    std::vector<Dense> b_basis(p.size()), reps(p.size());
    bool too_big = false;
    for (ElementId s = 0; s < p.size() && !too_big; ++s) {
      Dense a_gens, b_gens;
      for (ElementId t : p.down_set(s)) {
        a_gens.insert(a_gens.end(), ua[t].begin(), ua[t].end());
        a_gens.insert(a_gens.end(), ub[t].begin(), ub[t].end());
        b_gens.insert(b_gens.end(), ub[t].begin(), ub[t].end());
      }
      Dense span;
      for (const auto& v : b_gens) {
        span.push_back(v);
        if (dense_rank(span) < span.size()) {
          span.pop_back();
        } else {
          b_basis[s].push_back(v);
        }
      }
      for (const auto& v : a_gens) {
        span.push_back(v);
        if (dense_rank(span) < span.size()) {
          span.pop_back();
        } else {
          reps[s].push_back(v);
        }
      }
      too_big = reps[s].size() > max_dim;
    }
    if (too_big) continue;

    // mix each stalk basis and shift it by elements of B
    for (ElementId s = 0; s < p.size(); ++s) {
      const std::size_t d = reps[s].size();
      if (d == 0) continue;
      Dense g;
      do {
        g.assign(d, DenseRow(d));
        for (auto& row : g) {
          for (auto& x : row) x = Rational(mix(rng));
        }
      } while (dense_rank(g) < d);
      Dense mixed(d, DenseRow(n));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t c = 0; c < n; ++c) mixed[i][c] += g[i][j] * reps[s][j][c];
        }
        for (const auto& b : b_basis[s]) {
          const Rational f(mix(rng));
          for (std::size_t c = 0; c < n; ++c) mixed[i][c] += f * b[c];
        }
      }
      reps[s] = std::move(mixed);
    }

    std::vector<std::size_t> dims(p.size());
    for (ElementId s = 0; s < p.size(); ++s) dims[s] = reps[s].size();
    std::map<Cover, SparseMatrix<Q>> maps;
    for (const auto& [s, t] : p.covers()) {
      Dense basis = b_basis[t];
      basis.insert(basis.end(), reps[t].begin(), reps[t].end());
      const std::size_t offset = b_basis[t].size();
      std::vector<std::vector<Rational>> dense(dims[t], std::vector<Rational>(dims[s]));
      for (std::size_t j = 0; j < dims[s]; ++j) {
        auto x = solve(basis, reps[s][j]);
        if (!x) throw InternalError("random_sheaf: representative left A(t)");
        for (std::size_t i = 0; i < dims[t]; ++i) dense[i][j] = (*x)[offset + i];
      }
      maps.emplace(Cover{s, t}, SparseMatrix<Q>::from_dense(Q{}, dims[t], dims[s], dense));
    }
    return Sheaf<Q>(poset, Q{}, dims, std::move(maps));
  }
}

std::vector<ElementId> random_linear_extension(std::mt19937_64& rng, const Poset& poset) {
  std::vector<std::size_t> below(poset.size(), 0);
  for (const auto& [s, t] : poset.covers()) ++below[t];
  std::vector<ElementId> ready, out;
  for (ElementId s = 0; s < poset.size(); ++s) {
    if (below[s] == 0) ready.push_back(s);
  }
  while (!ready.empty()) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    const ElementId s = ready[pick];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
    out.push_back(s);
    for (ElementId t : poset.coboundary(s)) {
      if (--below[t] == 0) ready.push_back(t);
    }
  }
  return out;
}

std::vector<std::size_t> brute_open_hc(const SimplicialComplex& complex, const std::vector<std::size_t>& open) {
  const int top = complex.dimension();
  std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(top + 1));
  for (std::size_t i : open) by_dim[static_cast<std::size_t>(complex.dim(i))].push_back(i);
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);  // ranks[d] = rank of C^{d-1} -> C^d
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    Dense m(by_dim[d].size(), DenseRow(by_dim[d - 1].size()));
    for (std::size_t r = 0; r < by_dim[d].size(); ++r) {
      const Simplex& big = complex.simplex(by_dim[d][r]);
      for (std::size_t c = 0; c < by_dim[d - 1].size(); ++c) {
        const Simplex& small = complex.simplex(by_dim[d - 1][c]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) continue;
        std::size_t omitted = 0;
        while (omitted < small.size() && small[omitted] == big[omitted]) ++omitted;
        m[r][c] = Rational(omitted % 2 == 0 ? 1 : -1);
      }
    }
    ranks[d] = dense_rank(std::move(m));
  }
  std::vector<std::size_t> out(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) out[d] = by_dim[d].size() - ranks[d] - ranks[d + 1];
  return out;
}

std::vector<std::size_t> brute_relative(const Poset& poset, const std::vector<ElementId>& v,
                                        const std::vector<ElementId>& u, std::size_t degrees) {
  std::set<ElementId> in_v(v.begin(), v.end()), in_u(u.begin(), u.end());
  std::vector<std::vector<Chain>> chains(degrees + 1);
  std::function<void(Chain&)> grow = [&](Chain& c) {
    if (in_u.count(c.back())) chains[c.size() - 1].push_back(c);
    if (c.size() == degrees + 1) return;
    for (ElementId t : in_v) {
      if (!poset.less(c.back(), t)) continue;
      c.push_back(t);
      grow(c);
      c.pop_back();
    }
  };
  for (ElementId s : in_v) {
    Chain c{s};
    grow(c);
  }
  std::vector<std::size_t> ranks(degrees + 2, 0);
  for (std::size_t k = 1; k <= degrees; ++k) {
    Dense m(chains[k].size(), DenseRow(chains[k - 1].size()));
    for (std::size_t r = 0; r < chains[k].size(); ++r) {
      const Chain& big = chains[k][r];
      for (std::size_t c = 0; c < chains[k - 1].size(); ++c) {
        const Chain& small = chains[k - 1][c];
        const bool face = std::all_of(small.begin(), small.end(), [&](ElementId e) {
          return std::find(big.begin(), big.end(), e) != big.end();
        });
        if (!face) continue;
        std::size_t inserted = 0;
        while (inserted < small.size() && small[inserted] == big[inserted]) ++inserted;
        m[r][c] = Rational(inserted % 2 == 0 ? 1 : -1);
      }
    }
    ranks[k] = dense_rank(std::move(m));
  }
  std::vector<std::size_t> out(degrees + 1);
  for (std::size_t k = 0; k <= degrees; ++k) out[k] = chains[k].size() - ranks[k] - ranks[k + 1];
  return out;
}

std::size_t chain_count(const Sheaf<Q>& sheaf, std::size_t k) {
  const Poset& p = sheaf.poset();
  std::size_t total = 0;
  std::function<void(ElementId, std::size_t)> walk = [&](ElementId top, std::size_t len) {
    if (len == k + 1) {
      total += sheaf.dim(top);
      return;
    }
    for (ElementId t = 0; t < p.size(); ++t) {
      if (p.less(top, t)) walk(t, len + 1);
    }
  };
  for (ElementId s = 0; s < p.size(); ++s) walk(s, 1);
  return total;
}

bool dense_exact(const Resolution<Q>& r) {
  const Poset& p = r.sheaf.poset();
  for (ElementId s = 0; s < p.size(); ++s) {
    const Dense alpha = to_dense(r.augmentation.components.at(s));
    const std::size_t f = r.sheaf.dim(s);
    if (dense_rank(alpha) != f) return false;
    std::size_t prev_rank = f;
    Dense prev = alpha;
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      const std::size_t here = r.terms[k].stalk_dim(s);
      if (k >= r.differentials.size()) break;  // truncated: no check at the last term
      const Dense eta = to_dense(eval_at(r.differentials[k], s));
      const std::size_t rk = dense_rank(eta);
      if (prev_rank + rk != here) return false;
      if (here > 0 && !prev.empty()) {
        for (const auto& row : multiply(eta, prev, here)) {
          for (const auto& x : row) {
            if (!x.is_zero()) return false;
          }
        }
      }
      prev = eta;
      prev_rank = rk;
    }
    if (r.terms.empty() && f != 0) return false;
  }
  return true;
}

std::vector<std::size_t> counts(const Resolution<Q>& r) {
  std::vector<std::size_t> out;
  for (const auto& t : r.terms) out.push_back(t.size());
  return out;
}

std::vector<std::string> labels(const InjectiveSheaf& term) {
  std::vector<std::string> out;
  for (ElementId g : term.generators()) out.push_back(term.poset().name(g));
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace sheafres::testing
