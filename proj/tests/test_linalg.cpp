#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzkit/linalg.hpp"
#include "syzkit/tensor.hpp"

using namespace syzkit;

namespace {

DenseMatrix make(std::size_t rows, std::size_t cols, std::vector<long> vals) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat(vals[i * cols + j]);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_to_string(rat(2, 4)) == "1/2");
  CHECK(rat_to_string(rat(-6, 3)) == "-2");
  CHECK(rat_parse("7/21") == rat(1, 3));
  CHECK(rat_parse("-5") == rat(-5));
  CHECK_THROWS(rat_parse(""));
  CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("dual number arithmetic") {
  DualNumber one_plus(rat(1), rat(1));
  DualNumber one_minus(rat(1), rat(-1));
  CHECK(one_plus * one_minus == DualNumber(rat(1), rat(0)));
  DualNumber eps(rat(0), rat(1));
  CHECK(eps * eps == DualNumber(rat(0), rat(0)));
  CHECK(DualNumber(rat(2), rat(3)) * DualNumber(rat(5), rat(7)) ==
        DualNumber(rat(10), rat(29)));
}

TEST_CASE("dual number ring axioms on random triples") {
  SmallRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    DualNumber u(rat(rng.draw(9)), rat(rng.draw(9)));
    DualNumber v(rat(rng.draw(9)), rat(rng.draw(9)));
    DualNumber w(rat(rng.draw(9)), rat(rng.draw(9)));
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
  }
}

TEST_CASE("rref identity and proportional rows") {
  RrefResult id = rref(DenseMatrix::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.reduced == DenseMatrix::identity(2));

  RrefResult prop = rref(make(2, 2, {1, 2, 2, 4}));
  CHECK(prop.rank == 1);
  CHECK(prop.reduced == make(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref full-rank 3x3") {
  // Determinant 1 by cofactor expansion, so rank 3.
  CHECK(rref(make(3, 3, {1, 1, 1, 1, 2, 3, 1, 3, 6})).rank == 3);
}

TEST_CASE("rref is idempotent") {
  SmallRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    DenseMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = rat(rng.draw(5));
    DenseMatrix r = rref(m).reduced;
    CHECK(rref(r).reduced == r);
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(DenseMatrix(2, 3)).dim() == 3);
  CHECK(kernel_basis(DenseMatrix::identity(3)).dim() == 0);

  // The RNC3 tangent system at (1,1,1,1).
  DenseMatrix m = make(2, 4, {1, -2, 1, 0, 0, 1, -2, 1});
  Subspace k = kernel_basis(m);
  CHECK(k.dim() == 2);
  CHECK(k.contains({rat(1), rat(1), rat(1), rat(1)}));
}

TEST_CASE("rank-nullity on random matrices") {
  SmallRng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    DenseMatrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rat(rng.draw(4), 1 + (trial % 3));
    CHECK(rank(m) + kernel_basis(m).dim() == 6);
    // Kernel vectors really are in the kernel.
    Subspace k = kernel_basis(m);
    for (std::size_t r = 0; r < k.dim(); ++r) {
      std::vector<Rat> img = m.apply(k.basis_vector(r));
      for (const Rat& v : img) CHECK(v == 0);
    }
  }
}

TEST_CASE("subspace equality") {
  CHECK(subspace_equal(Subspace::span_of_vectors({{rat(1), rat(0)}}, 2),
                       Subspace::span_of_vectors({{rat(2), rat(0)}}, 2)));
  CHECK_FALSE(subspace_equal(Subspace::span_of_vectors({{rat(1), rat(0)}}, 2),
                             Subspace::span_of_vectors({{rat(0), rat(1)}}, 2)));
  CHECK(subspace_equal(
      Subspace::span_of_vectors({{rat(1), rat(1)}, {rat(0), rat(1)}}, 2),
      Subspace::span_of_vectors({{rat(1), rat(0)}, {rat(0), rat(1)}}, 2)));
  CHECK_THROWS(subspace_equal(Subspace(2), Subspace(3)));
}

TEST_CASE("subspace coordinates round-trip") {
  Subspace s = Subspace::span_of_vectors(
      {{rat(1), rat(2), rat(0)}, {rat(0), rat(0), rat(1)}}, 3);
  auto coords = s.coordinates({rat(3), rat(6), rat(-2)});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == 3);
  CHECK((*coords)[1] == -2);
  CHECK_FALSE(s.coordinates({rat(0), rat(1), rat(0)}).has_value());
}
