#include <random>

#include "doctest.h"
#include "sheafres/linalg.hpp"
#include "support.hpp"

using namespace sheafres;
using namespace sheafres::testing;

namespace {

SparseMatrix<Q> random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::bernoulli_distribution keep(0.5);
  std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
  for (auto& row : dense) {
    for (auto& x : row) x = keep(rng) ? Rational(entry(rng)) : Rational(0);
  }
  return SparseMatrix<Q>::from_dense(Q{}, rows, cols, dense);
}

}  // namespace

TEST_CASE("rational literals parse to lowest terms") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-3").str() == "-3");
  CHECK(Rational::parse("0/7").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  const auto three = f7.from_int(3);
  CHECK((three * three.inverse()) == f7.one());
  CHECK(f7.from_int(-1).value() == 6);
  CHECK(f7.parse("1/2").value() == 4);
  CHECK_THROWS_AS(f7.parse("1/7"), DomainError);
  CHECK_THROWS_AS(PrimeField(8), DomainError);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2147483647u));
}

TEST_CASE("sparse vectors drop zeros and merge duplicates") {
  using V = SparseVector<Q>;
  V v({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}});
  REQUIRE(v.nnz() == 1);
  CHECK(v.leading() == 1);
  V w;
  w.push_back(1, Rational(1));
  w.push_back(4, Rational(5));
  v.axpy(Rational(-2), w);
  CHECK(v.nnz() == 1);
  CHECK(*v.find(4) == Rational(-10));
  CHECK(v.find(1) == nullptr);
}

TEST_CASE("matrix product and transpose agree with dense arithmetic") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_matrix(rng, 4, 5);
    auto b = random_matrix(rng, 5, 3);
    CHECK(to_dense(a * b) == multiply(to_dense(a), to_dense(b), 5));
    CHECK(a.transpose().transpose() == a);
  }
  CHECK_THROWS_AS(random_matrix(rng, 2, 3) * random_matrix(rng, 2, 3), DomainError);
}

TEST_CASE("rank, left null space and kernel against dense elimination") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
    auto m = random_matrix(rng, rows, cols);
    const std::size_t r = dense_rank(to_dense(m));
    CHECK(rank(m) == r);

    auto ech = rref_with_transform(m);
    CHECK(ech.rank == r);
    CHECK(to_dense(ech.transform * m) == to_dense(ech.reduced));

    auto left = left_null_basis(m);
    CHECK(left.size() == rows - r);
    for (const auto& v : left) CHECK(m.transpose().apply(v).is_zero());
    auto left_m = SparseMatrix<Q>::from_rows(Q{}, rows, left);
    CHECK(dense_rank(to_dense(left_m)) == left.size());

    auto ker = kernel_basis(m);
    CHECK(ker.size() == cols - r);
    for (const auto& v : ker) CHECK(m.apply(v).is_zero());
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 10) {
    auto m = random_matrix(rng, 4, 4);
    if (rank(m) < 4) {
      CHECK_THROWS_AS(inverse(m), DomainError);
      continue;
    }
    CHECK(m * inverse(m) == SparseMatrix<Q>::identity(Q{}, 4));
    ++done;
  }
}

TEST_CASE("echelon basis coordinates reproduce the vector") {
  std::mt19937_64 rng(14);
  auto m = random_matrix(rng, 6, 5);
  EchelonBasis<Q> basis(Q{});
  for (const auto& row : m.row_list()) basis.insert(row);
  CHECK(basis.size() == rank(m));
  for (const auto& row : m.row_list()) {
    auto c = basis.coordinates(row);
    REQUIRE(c.has_value());
    SparseVector<Q> back;
    for (const auto& [i, v] : *c) back.axpy(v, basis.generators()[i]);
    CHECK(back == row);
  }
  SparseVector<Q> outside;
  outside.push_back(7, Rational(1));
  CHECK_FALSE(basis.contains(outside));
  CHECK_FALSE(basis.coordinates(outside).has_value());
}

TEST_CASE("row membership") {
  auto m = SparseMatrix<Q>::from_dense(Q{}, 2, 3, {{Rational(1), Rational(1), Rational(0)},
                                                   {Rational(0), Rational(1), Rational(1)}});
  SparseVector<Q> in({{0, Rational(1)}, {2, Rational(-1)}});
  SparseVector<Q> out({{0, Rational(1)}});
  CHECK(row_membership(in, 3, m));
  CHECK_FALSE(row_membership(out, 3, m));
  CHECK_THROWS_AS(row_membership(in, 4, m), DomainError);
}

TEST_CASE("prime field reductions see characteristic-dependent rank") {
  // [[1,1],[1,-1]] has determinant -2
  auto q = SparseMatrix<Q>::from_dense(Q{}, 2, 2, {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  PrimeField f2(2), f3(3);
  auto m2 = SparseMatrix<PrimeField>::from_dense(f2, 2, 2, {{f2.one(), f2.one()}, {f2.one(), f2.from_int(-1)}});
  auto m3 = SparseMatrix<PrimeField>::from_dense(f3, 2, 2, {{f3.one(), f3.one()}, {f3.one(), f3.from_int(-1)}});
  CHECK(rank(q) == 2);
  CHECK(rank(m2) == 1);
  CHECK(rank(m3) == 2);
}
