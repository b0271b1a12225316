#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sheafres/derived.hpp"
#include "sheafres/errors.hpp"
#include "sheafres/order_complex.hpp"

namespace sheafres::testing {

using Q = RationalField;
using DenseRow = std::vector<Rational>;
using Dense = std::vector<DenseRow>;

// Dense Gaussian elimination, kept apart from the library's sparse code so
// tests can check it.
std::size_t dense_rank(Dense m);
Dense to_dense(const SparseMatrix<Q>& m);
Dense multiply(const Dense& a, const Dense& b, std::size_t inner);
/// Coefficients x with sum_i x_i basis[i] = v, if any.
std::optional<DenseRow> solve(const Dense& basis, const DenseRow& v);

std::size_t binom(std::size_t n, std::size_t k);

std::shared_ptr<const SimplicialComplex> tetrahedron();
/// Facets 234, 235, 245, 345, 6, 7 on labels 2..7.
std::shared_ptr<const SimplicialComplex> link_complex();
/// Face poset of link_complex() with the empty simplex.
std::shared_ptr<const Poset> link_poset();
/// 3-skeleton of the 4-simplex on 1..5 with pendant edges 16 and 17.
std::shared_ptr<const SimplicialComplex> pendant_complex();
std::shared_ptr<const SimplicialComplex> skeleton(std::size_t n, std::size_t k);
std::shared_ptr<const Poset> faces(const SimplicialComplex& complex, bool include_empty = false);

std::shared_ptr<const SimplicialComplex> random_complex(std::mt19937_64& rng, std::size_t max_vertices);
std::shared_ptr<const Poset> random_poset(std::mt19937_64& rng, std::size_t max_elements);
/// A subquotient sheaf A(s)/B(s) of a fixed space with A, B increasing,
/// written in randomly mixed bases. Stalks have dimension <= max_dim.
Sheaf<Q> random_sheaf(std::mt19937_64& rng, std::shared_ptr<const Poset> poset, std::size_t max_dim);
/// A random linear extension of the poset.
std::vector<ElementId> random_linear_extension(std::mt19937_64& rng, const Poset& poset);

/// dim H_c^d of the cochains on the simplices in `open` (indices into the
/// complex), d = 0..dim.
std::vector<std::size_t> brute_open_hc(const SimplicialComplex& complex, const std::vector<std::size_t>& open);
/// H^j(K(V), K(V \ U)) from chains enumerated by depth-first search.
std::vector<std::size_t> brute_relative(const Poset& poset, const std::vector<ElementId>& v,
                                        const std::vector<ElementId>& u, std::size_t degrees);
/// Number of strict chains p_0 < ... < p_k whose top element has a nonzero stalk.
std::size_t chain_count(const Sheaf<Q>& sheaf, std::size_t k);

/// Exactness of 0 -> F -> I^0 -> ... at every element by dense ranks.
bool dense_exact(const Resolution<Q>& r);

std::vector<std::size_t> counts(const Resolution<Q>& r);
std::vector<std::string> labels(const InjectiveSheaf& term);
std::vector<std::string> sorted(std::vector<std::string> v);

}  // namespace sheafres::testing
