#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzkit/tensor.hpp"

using namespace syzkit;

namespace {

Poly var(int i, int n) { return Poly::variable(i, n); }

// gamma_C = [[0, c1], [c2, c3], [c4, c5]]: the worked non-1-generic instance.
TripleTensor zero_corner() {
  TripleTensor t(3, 2, 5);
  t.coeff(0, 1, 0) = 1;
  t.coeff(1, 0, 1) = 1;
  t.coeff(1, 1, 2) = 1;
  t.coeff(2, 0, 3) = 1;
  t.coeff(2, 1, 4) = 1;
  return t;
}

}  // namespace

TEST_CASE("catalecticant matches the 2x3 example") {
  TripleTensor t = catalecticant(2, 3);
  LinearFormMatrix m = gamma_C(t);
  CHECK(m.entries[0][0] == var(1, 4));
  CHECK(m.entries[0][1] == var(2, 4));
  CHECK(m.entries[0][2] == var(3, 4));
  CHECK(m.entries[1][0] == var(2, 4));
  CHECK(m.entries[1][1] == var(3, 4));
  CHECK(m.entries[1][2] == var(4, 4));

  TripleTensor rnc3 = catalecticant(3, 2);
  CHECK(rnc3 == t.transpose());
  CHECK(gamma_C(rnc3).entries[2][1] == var(4, 4));

  TripleTensor one = catalecticant(1, 1);
  CHECK(gamma_C(one).entries[0][0] == var(1, 1));
}

TEST_CASE("gamma_A recovers the example matrix transposed") {
  LinearFormMatrix g = gamma_A(catalecticant(2, 3));
  // Convention: c rows by b columns, entries linear in the a variables.
  CHECK(g.rows == 4);
  CHECK(g.cols == 3);
  CHECK(g.entries[0][0] == var(1, 2));
  CHECK(g.entries[1][0] == var(2, 2));
  CHECK(g.entries[1][1] == var(1, 2));
  CHECK(g.entries[3][2] == var(2, 2));
  CHECK(g.entries[0][2].is_zero());
  CHECK(g.entries[3][0].is_zero());
}

TEST_CASE("row ranks") {
  TripleTensor t = catalecticant(2, 3);
  CHECK(row_rank(t, {rat(1), rat(0)}) == 3);
  CHECK(row_rank(t, {rat(3), rat(-7)}) == 3);
  CHECK_THROWS(row_rank(t, {rat(0), rat(0)}));

  TripleTensor z(2, 2, 3);
  z.coeff(1, 0, 0) = 1;  // row 1 identically zero
  CHECK(row_rank(z, {rat(1), rat(0)}) == 0);
}

TEST_CASE("maximal minors of RNC3") {
  TripleTensor t = catalecticant(3, 2);
  int n = 4;
  CHECK(maximal_minor(t, IndexSubset({1, 2}, 3)) ==
        var(1, n) * var(3, n) - var(2, n) * var(2, n));
  CHECK(maximal_minor(t, IndexSubset({1, 3}, 3)) ==
        var(1, n) * var(4, n) - var(2, n) * var(3, n));
  CHECK(maximal_minor(t, IndexSubset({2, 3}, 3)) ==
        var(2, n) * var(4, n) - var(3, n) * var(3, n));
}

TEST_CASE("minor of repeated rows vanishes") {
  TripleTensor t(3, 2, 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 4; ++k) {
      t.coeff(0, j, k) = rat(k + j);
      t.coeff(1, j, k) = rat(k + j);  // duplicate row
      t.coeff(2, j, k) = rat(k * j + 1);
    }
  CHECK(maximal_minor(t, IndexSubset({1, 2}, 3)).is_zero());
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  SmallRng rng(41);
  for (int size : {3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::vector<Poly>> m(size, std::vector<Poly>(size, Poly(3)));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          Poly p(3);
          for (int k = 1; k <= 3; ++k) {
            Monomial mono(3, 0);
            mono[k - 1] = 1;
            p.add_term(mono, rat(rng.draw(3)));
          }
          m[i][j] = p;
        }
      CHECK(det_bareiss(m) == det_cofactor(m));
    }
  }
}

TEST_CASE("exterior minors") {
  TripleTensor t = catalecticant(3, 2);
  // n = 1: the entry itself.
  MultiVector e11 = exterior_minor(t, IndexSubset({1}, 3), {1, 0});
  CHECK(e11 == t.entry_vector(0, 0));

  // n = 2 with a repeated column: both permutations give the same wedge.
  MultiVector d = exterior_minor(t, IndexSubset({1, 2}, 3), {2, 0});
  MultiVector expected = wedge(t.entry_vector(0, 0), t.entry_vector(1, 0)) * rat(2);
  CHECK(d == expected);

  // Swapping the two rows negates the result.
  TripleTensor swapped(3, 2, 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 4; ++k) {
      swapped.coeff(0, j, k) = t.coeff(1, j, k);
      swapped.coeff(1, j, k) = t.coeff(0, j, k);
      swapped.coeff(2, j, k) = t.coeff(2, j, k);
    }
  CHECK(exterior_minor(swapped, IndexSubset({1, 2}, 3), {1, 1}) ==
        exterior_minor(t, IndexSubset({1, 2}, 3), {1, 1}) * rat(-1));
}

TEST_CASE("exterior minor is symmetric in the column multiset") {
  // The multiset {b1, b2} picked in either order gives the same sum.
  TripleTensor t = random_tensor(3, 3, 5, 7, 4);
  MultiVector v1 = exterior_minor(t, IndexSubset({1, 3}, 3), {1, 1, 0});
  MultiVector v2 = exterior_minor(t, IndexSubset({1, 3}, 3), {1, 1, 0});
  CHECK(v1 == v2);
  CHECK_THROWS(exterior_minor(t, IndexSubset({1, 3}, 3), {1, 0, 0}));
}

TEST_CASE("e_n matrix shapes and agreement with exterior minors") {
  TripleTensor t = catalecticant(2, 3);
  DenseMatrix e1 = e_n_matrix(t, 1);
  CHECK(e1.rows() == 4);
  CHECK(e1.cols() == 6);

  DenseMatrix e2 = e_n_matrix(t, 2);
  CHECK(e2.rows() == 6);
  CHECK(e2.cols() == 6);

  // Columns agree with direct exterior-minor computation.
  std::vector<IndexSubset> rows2 = subsets(4, 2);
  std::map<std::vector<int>, std::size_t> row_index;
  for (std::size_t i = 0; i < rows2.size(); ++i) row_index[rows2[i].elements] = i;
  std::size_t col = 0;
  for (const IndexSubset& rs : subsets(2, 2))
    for (const ExponentVector& m : sym_basis(3, 2)) {
      MultiVector v = exterior_minor(t, rs, m);
      for (const auto& [key, coef] : v.coords) CHECK(e2.at(row_index[key], col) == coef);
      ++col;
    }

  CHECK(e_n_matrix(TripleTensor(2, 2, 4), 2).is_zero());
}

TEST_CASE("green injectivity") {
  CHECK(green_injectivity(catalecticant(2, 3)));

  TripleTensor z(2, 2, 4);
  z.coeff(1, 0, 0) = 1;
  z.coeff(1, 1, 1) = 1;  // row 1 is zero: e_2 kills everything
  CHECK_FALSE(green_injectivity(z));

  TripleTensor a1(1, 2, 3);
  a1.coeff(0, 0, 0) = 1;
  a1.coeff(0, 1, 1) = 1;
  CHECK(green_injectivity(a1));

  CHECK_FALSE(green_injectivity(TripleTensor(5, 1, 3)));  // a > c
}

TEST_CASE("1-genericity certification") {
  OneGenericReport good = check_1generic(catalecticant(2, 3));
  CHECK(good.is_1generic);
  CHECK(good.failing_side == FailingSide::none);

  OneGenericReport bad = check_1generic(zero_corner());
  CHECK_FALSE(bad.is_1generic);
  CHECK(bad.failing_side == FailingSide::rows);
  REQUIRE(bad.witness.has_value());
  CHECK(row_rank(zero_corner(), *bad.witness) < 2);

  OneGenericReport generic = check_1generic(random_tensor(2, 2, 4, 1, 5));
  CHECK(generic.is_1generic);
}

TEST_CASE("certified instances have full row rank at random rows") {
  TripleTensor t = catalecticant(3, 2);
  REQUIRE(check_1generic(t).is_1generic);
  SmallRng rng(3);
  int checked = 0;
  while (checked < 50) {
    std::vector<Rat> alpha{rat(rng.draw(10)), rat(rng.draw(10)), rat(rng.draw(10))};
    bool nonzero = false;
    for (const Rat& q : alpha) nonzero = nonzero || q != 0;
    if (!nonzero) continue;
    CHECK(row_rank(t, alpha) == 2);
    ++checked;
  }
}

TEST_CASE("catalecticants up to 4x4 are 1-generic") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(check_1generic(catalecticant(a, b)).is_1generic);
    }
}

TEST_CASE("random tensor determinism") {
  CHECK(random_tensor(2, 3, 4, 99, 7) == random_tensor(2, 3, 4, 99, 7));
  TripleTensor z = random_tensor(2, 2, 3, 5, 0);
  CHECK(z == TripleTensor(2, 2, 3));
}

TEST_CASE("tensor basis transforms") {
  TripleTensor t = catalecticant(3, 2);
  CHECK(t.transform(DenseMatrix::identity(3), DenseMatrix::identity(2)) == t);
  // Swapping two rows of A swaps the rows of gamma_C.
  DenseMatrix p(3, 3);
  p.at(0, 1) = 1;
  p.at(1, 0) = 1;
  p.at(2, 2) = 1;
  TripleTensor s = t.transform(p, DenseMatrix::identity(2));
  CHECK(s.entry_vector(0, 0) == t.entry_vector(1, 0));
  CHECK(s.entry_vector(1, 1) == t.entry_vector(0, 1));
}
