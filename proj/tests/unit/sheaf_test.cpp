#include <random>

#include "doctest.h"
#include "sheafres/sheaf.hpp"
#include "support.hpp"

using namespace sheafres;
using namespace sheafres::testing;

namespace {

SparseMatrix<Q> scalar(long v) { return SparseMatrix<Q>::from_dense(Q{}, 1, 1, {{Rational(v)}}); }

// s < t, u < g
std::shared_ptr<const Poset> square() {
  return std::make_shared<const Poset>(Poset::from_covers({"s", "t", "u", "g"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

}  // namespace

TEST_CASE("constant and zero sheaves validate") {
  auto p = faces(*tetrahedron());
  auto f = constant_sheaf(p, Q{});
  CHECK(validate(f).valid);
  CHECK(is_constant(f));
  CHECK(f.total_dimension() == 14);
  auto z = zero_sheaf(p, Q{});
  CHECK(validate(z).valid);
  CHECK(z.total_dimension() == 0);
  CHECK_FALSE(is_constant(z));
  CHECK(validate(constant_sheaf(p, PrimeField(2))).valid);
}

TEST_CASE("a broken commuting square names its triple") {
  auto p = square();
  Sheaf<Q> f(p, Q{}, {1, 1, 1, 1}, {{{0, 1}, scalar(1)}, {{0, 2}, scalar(1)}, {{1, 3}, scalar(1)}, {{2, 3}, scalar(2)}});
  auto v = validate(f);
  CHECK_FALSE(v.valid);
  REQUIRE(v.triple.has_value());
  CHECK((*v.triple)[0] == 0);
  CHECK((*v.triple)[2] == 3);
  CHECK(v.message.find("'g'") != std::string::npos);

  Sheaf<Q> ok(p, Q{}, {1, 1, 1, 1}, {{{0, 1}, scalar(2)}, {{0, 2}, scalar(1)}, {{1, 3}, scalar(1)}, {{2, 3}, scalar(2)}});
  CHECK(validate(ok).valid);
  CHECK(ok.composite(0, 3) == scalar(2));
  CHECK(ok.composite(2, 2) == scalar(1));
  CHECK_THROWS_AS(ok.composite(1, 2), DomainError);
}

TEST_CASE("sheaf construction rejects bad maps") {
  auto p = square();
  CHECK_THROWS_AS(Sheaf<Q>(p, Q{}, {1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(Sheaf<Q>(p, Q{}, {1, 1, 1, 1}, {{{0, 3}, scalar(1)}}), ValidationError);
  CHECK_THROWS_AS(Sheaf<Q>(p, Q{}, {2, 1, 1, 1}, {{{0, 1}, scalar(1)}}), ValidationError);
  Sheaf<Q> sparse(p, Q{}, {1, 1, 0, 0}, {{{0, 1}, scalar(1)}});
  CHECK(sparse.cover_map(0, 2).rows() == 0);
  CHECK_THROWS_AS(sparse.cover_map(0, 3), DomainError);
}

TEST_CASE("maximal vectors") {
  auto p = faces(*tetrahedron());
  auto f = constant_sheaf(p, Q{});
  for (ElementId s = 0; s < p->size(); ++s) {
    CHECK(maximal_vectors(f, s).size() == (p->coboundary(s).empty() ? 1u : 0u));
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_sheaf(rng, random_poset(rng, 8), 3);
    for (ElementId s = 0; s < g.poset().size(); ++s) {
      Dense stacked;
      for (ElementId t : g.poset().coboundary(s)) {
        for (auto& row : to_dense(g.cover_map(s, t))) stacked.push_back(row);
      }
      const std::size_t r = stacked.empty() ? 0 : dense_rank(stacked);
      auto m = maximal_vectors(g, s);
      CHECK(m.size() == g.dim(s) - r);
      for (ElementId t : g.poset().coboundary(s)) {
        for (const auto& v : m) CHECK(g.cover_map(s, t).apply(v).is_zero());
      }
    }
  }
}

TEST_CASE("random subquotient sheaves are valid") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_sheaf(rng, random_poset(rng, 10), 3);
    CHECK(validate(g).valid);
    for (auto d : g.dims()) CHECK(d <= 3);
  }
}

TEST_CASE("restriction and extension by zero") {
  auto p = faces(*tetrahedron());
  auto f = constant_sheaf(p, Q{});
  const auto& star = p->star(p->id("1"));
  auto r = restrict(f, star);
  CHECK(r.poset().size() == 7);
  CHECK(validate(r).valid);
  CHECK(is_constant(r));
  auto e = extend_by_zero(r, p, star);
  CHECK(validate(e).valid);
  CHECK(e.total_dimension() == 7);
  CHECK(e.dim(p->id("2")) == 0);
  CHECK(e.dim(p->id("12")) == 1);
  std::vector<ElementId> not_open{p->id("1")};
  CHECK_THROWS_AS(restrict(f, not_open), DomainError);
  CHECK_THROWS_AS(extend_by_zero(r, p, std::vector<ElementId>(7, 0)), DomainError);
}

TEST_CASE("naturality") {
  auto p = square();
  auto f = constant_sheaf(p, Q{});
  NatTrans<Q> id{{scalar(1), scalar(1), scalar(1), scalar(1)}};
  CHECK_FALSE(naturality_violation(f, f, id).has_value());
  NatTrans<Q> bad{{scalar(1), scalar(2), scalar(1), scalar(1)}};
  auto v = naturality_violation(f, f, bad);
  REQUIRE(v.has_value());
  CHECK(v->first == 0);
  CHECK(v->second == 1);
  NatTrans<Q> short_list{{scalar(1)}};
  CHECK_THROWS_AS(naturality_violation(f, f, short_list), DomainError);
}
