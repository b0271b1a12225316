#include <numeric>
#include <random>

#include "doctest.h"
#include "sheafres/derived.hpp"
#include "support.hpp"

using namespace sheafres;
using namespace sheafres::testing;

namespace {

std::vector<std::size_t> dims_at(const std::vector<Sheaf<Q>>& degrees, ElementId lambda) {
  std::vector<std::size_t> out;
  for (const auto& s : degrees) out.push_back(s.dim(lambda));
  return out;
}

std::vector<std::size_t> all_simplices(const SimplicialComplex& c) {
  std::vector<std::size_t> out(c.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

TEST_CASE("star cohomology oracle") {
  auto t = tetrahedron();
  CHECK(oracle_star_cohomology_c(*t, t->index_by_name("1"), Q{}) == std::vector<std::size_t>{0, 0, 1});
  CHECK(oracle_star_cohomology_c(*t, t->index_by_name("12"), Q{}) == std::vector<std::size_t>{0, 0, 1});
  CHECK(oracle_star_cohomology_c(*t, t->index_by_name("123"), Q{}) == std::vector<std::size_t>{0, 0, 1});
  CHECK_THROWS_AS(oracle_star_cohomology_c(*t, 99, Q{}), LookupError);
  CHECK(oracle_open_cohomology_c(*t, all_simplices(*t), Q{}) == std::vector<std::size_t>{1, 0, 1});

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_complex(rng, 7);
    auto p = faces(*c);
    for (std::size_t s = 0; s < c->size(); ++s) {
      std::vector<std::size_t> star(p->star(static_cast<ElementId>(s)).begin(), p->star(static_cast<ElementId>(s)).end());
      CHECK(oracle_star_cohomology_c(*c, s, Q{}) == brute_open_hc(*c, star));
    }
  }
}

TEST_CASE("order-complex oracle") {
  auto p = faces(*tetrahedron());
  std::vector<ElementId> all(p->size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(oracle_order_complex_cohomology(*p, all, Q{}) == std::vector<std::size_t>{1, 0, 1});
  CHECK(oracle_order_complex_cohomology(*p, p->star(p->id("1")), Q{}) == std::vector<std::size_t>{1, 0, 0});
  std::vector<ElementId> two{p->id("123"), p->id("124")};
  CHECK(oracle_order_complex_cohomology(*p, two, Q{}) == std::vector<std::size_t>{2, 0, 0});
  std::vector<ElementId> not_open{p->id("1")};
  CHECK_THROWS_AS(oracle_order_complex_cohomology(*p, not_open, Q{}), DomainError);

  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    auto q = random_poset(rng, 8);
    std::vector<ElementId> seed{static_cast<ElementId>(trial % q->size())};
    auto v = q->up_closure(seed);
    CHECK(oracle_order_complex_cohomology(*q, v, Q{}) == brute_relative(*q, v, v, q->height()));
    auto all_q = std::vector<ElementId>(q->size());
    std::iota(all_q.begin(), all_q.end(), 0);
    CHECK(oracle_relative_cohomology(*q, all_q, v, Q{}) == brute_relative(*q, all_q, v, q->height()));
  }
}

TEST_CASE("pushforward along the identity") {
  auto p = faces(*tetrahedron());
  auto r = minimal_resolution(constant_sheaf(p, Q{}));
  auto all = pushforward_all(r, PosetMap::identity(p));
  REQUIRE(all.size() == 3);
  CHECK(all[0] == constant_sheaf(p, Q{}));
  CHECK(all[1].total_dimension() == 0);
  CHECK(all[2].total_dimension() == 0);
  CHECK(pushforward(r, PosetMap::identity(p), 5).total_dimension() == 0);
}

TEST_CASE("pushforward to a point and along the dimension map") {
  auto t = tetrahedron();
  auto p = faces(*t);
  auto r = minimal_resolution(constant_sheaf(p, Q{}));
  auto pt = pushforward_all(r, PosetMap::to_point(p));
  CHECK(dims_at(pt, 0) == std::vector<std::size_t>{1, 0, 1});

  auto chain = std::make_shared<const Poset>(Poset::chain(3));
  std::vector<ElementId> by_dim(p->size());
  for (ElementId s = 0; s < p->size(); ++s) by_dim[s] = static_cast<ElementId>(t->dim(s));
  PosetMap dim_map(p, chain, by_dim);
  auto d = pushforward_all(r, dim_map);
  for (ElementId lambda = 0; lambda < 3; ++lambda) {
    auto pre = dim_map.preimage_star(lambda);
    auto expected = brute_relative(*p, pre, pre, 2);
    CHECK(dims_at(d, lambda) == expected);
  }
  CHECK(d[0].dim(2) == 4);
  for (const auto& s : d) CHECK(validate(s).valid);
}

TEST_CASE("truncated resolutions refuse high degrees") {
  auto p = faces(*tetrahedron());
  auto r = order_complex_resolution(constant_sheaf(p, Q{}), 1);
  CHECK_NOTHROW(pushforward(r, PosetMap::to_point(p), 0));
  CHECK_THROWS_AS(pushforward(r, PosetMap::to_point(p), 1), DomainError);
  auto other = faces(*link_complex());
  CHECK_THROWS_AS(pushforward(r, PosetMap::to_point(other), 0), DomainError);
}

TEST_CASE("compact pushforward of an open star") {
  auto t = tetrahedron();
  auto p = faces(*t);
  auto point = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets({"p"}, {{0}}));
  SimplicialMap collapse(t, point, {0, 0, 0, 0});
  const auto& star = p->star(p->id("1"));
  auto u = restrict(constant_sheaf(p, Q{}), star);
  auto out = compact_pushforward_all(u, star, collapse);
  CHECK(dims_at(out, 0) == std::vector<std::size_t>{0, 0, 1});
  CHECK(compact_pushforward(u, star, collapse, 2).dim(0) == 1);

  std::vector<ElementId> all(p->size());
  std::iota(all.begin(), all.end(), 0);
  auto whole = compact_pushforward_all(constant_sheaf(p, Q{}), all, collapse);
  CHECK(dims_at(whole, 0) == std::vector<std::size_t>{1, 0, 1});

  auto empty_poset = std::make_shared<const Poset>(Poset::from_covers({}, {}));
  auto nothing = compact_pushforward_all(zero_sheaf(empty_poset, Q{}), std::vector<ElementId>{}, collapse);
  for (const auto& s : nothing) CHECK(s.total_dimension() == 0);

  auto single = std::make_shared<const Poset>(Poset::antichain(1));
  std::vector<ElementId> closed{p->id("1")};
  CHECK_THROWS_AS(compact_pushforward_all(constant_sheaf(single, Q{}), closed, collapse), DomainError);
}

TEST_CASE("compact pushforward needs a simplicial map") {
  auto t = tetrahedron();
  auto p = faces(*t);
  auto edge = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets({"a", "b"}, {{0, 1}}));
  auto q = faces(*edge);
  std::vector<ElementId> images(p->size());
  for (ElementId s = 0; s < p->size(); ++s) images[s] = t->dim(s) == 0 ? q->id("a") : q->id("ab");
  PosetMap g(p, q, images);
  std::vector<ElementId> all(p->size());
  std::iota(all.begin(), all.end(), 0);
  CHECK_THROWS_AS(compact_pushforward(constant_sheaf(p, Q{}), all, g, t, edge, 0), DomainError);
}

TEST_CASE("multiplicity theorem on fixed complexes") {
  auto check = verify_multiplicity_theorem(*tetrahedron(), Q{});
  CHECK(check.ok);
  CHECK(check.rows.size() == 14);
  auto pendant = pendant_complex();
  auto pc = verify_multiplicity_theorem(*pendant, Q{});
  CHECK(pc.ok);
  const std::size_t v1 = pendant->index_by_name("1");
  std::map<std::size_t, std::size_t> at_v1;
  for (const auto& row : pc.rows) {
    if (row.simplex == v1) at_v1[row.degree] = row.computed;
  }
  CHECK(at_v1 == std::map<std::size_t, std::size_t>{{1, 2}, {3, 1}});
}
