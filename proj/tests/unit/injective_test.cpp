#include "doctest.h"
#include "sheafres/injective.hpp"
#include "support.hpp"

using namespace sheafres;
using namespace sheafres::testing;

TEST_CASE("stalks of an injective sheaf") {
  auto p = faces(*tetrahedron());
  const ElementId t123 = p->id("123"), t124 = p->id("124"), e12 = p->id("12"), v1 = p->id("1"), v3 = p->id("3");
  InjectiveSheaf i(p, {t124, t123, e12});
  CHECK(i.size() == 3);
  CHECK(i.stalk_dim(v1) == 3);
  CHECK(i.stalk_dim(v3) == 1);
  CHECK(i.stalk_dim(t123) == 1);
  CHECK(i.stalk_dim(p->id("134")) == 0);
  CHECK(i.stalk_generators(v1) == std::vector<Index>{0, 1, 2});
  CHECK(i.stalk_generators(v3) == std::vector<Index>{1});
  CHECK(i.multiplicity(e12) == 1);
  CHECK(i.multiplicity(v1) == 0);
  CHECK_THROWS_AS(InjectiveSheaf(p, {99}), LookupError);

  auto r = restriction_matrix(i, v1, t123, Q{});
  CHECK(r.rows() == 1);
  CHECK(r.cols() == 3);
  CHECK(r.at(0, 1) == Rational(1));
  CHECK(r.at(0, 0).is_zero());
  CHECK_THROWS_AS(restriction_matrix(i, t123, v1, Q{}), DomainError);
  CHECK(validate(as_sheaf(i, Q{})).valid);
}

TEST_CASE("labeled matrices respect labels") {
  auto p = faces(*tetrahedron());
  const ElementId t123 = p->id("123"), e12 = p->id("12"), e34 = p->id("34");
  InjectiveSheaf dom(p, {t123});
  InjectiveSheaf cod(p, {e12});
  // a map [123] -> [12] may be nonzero: 12 <= 123
  auto m = SparseMatrix<Q>::from_dense(Q{}, 1, 1, {{Rational(3)}});
  LabeledMatrix<Q> eta(dom, cod, m);
  CHECK(eval_at(eta, p->id("1")).at(0, 0) == Rational(3));
  CHECK(eval_at(eta, t123).rows() == 0);
  CHECK(validate(as_sheaf(cod, Q{})).valid);
  auto nat = nat_trans_of(eta);
  CHECK_FALSE(naturality_violation(as_sheaf(dom, Q{}), as_sheaf(cod, Q{}), nat).has_value());

  // the other way is not a map of sheaves
  CHECK_THROWS_AS(LabeledMatrix<Q>(cod, dom, m), ValidationError);
  InjectiveSheaf far(p, {e34});
  CHECK_THROWS_AS(LabeledMatrix<Q>(dom, far, m), ValidationError);
  CHECK_THROWS_AS(LabeledMatrix<Q>(dom, cod, SparseMatrix<Q>(Q{}, 2, 1)), ValidationError);
  CHECK(LabeledMatrix<Q>::zero(Q{}, dom, far).matrix().is_zero());
}

TEST_CASE("evaluation on an open set") {
  auto p = faces(*tetrahedron());
  InjectiveSheaf dom(p, {p->id("123"), p->id("234")});
  InjectiveSheaf cod(p, {p->id("23")});
  auto m = SparseMatrix<Q>::from_dense(Q{}, 1, 2, {{Rational(1), Rational(-1)}});
  LabeledMatrix<Q> eta(dom, cod, m);
  const auto& star = p->star(p->id("2"));
  auto e = eval_on(eta, star);
  CHECK(e.rows() == 1);
  CHECK(e.cols() == 2);
  auto at23 = eval_at(eta, p->id("23"));
  CHECK(to_dense(at23) == to_dense(m));
}
