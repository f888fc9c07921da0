#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzkit/multilin.hpp"
#include "syzkit/tensor.hpp"

using namespace syzkit;

TEST_CASE("index subsets validate and enumerate") {
  CHECK_THROWS(IndexSubset({2, 1}, 3));
  CHECK_THROWS(IndexSubset({1, 4}, 3));
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subsets(4, 2).front().elements == std::vector<int>{1, 2});
  CHECK(subsets(4, 2).back().elements == std::vector<int>{3, 4});
  CHECK(IndexSubset({1, 3}, 5).complement().elements == std::vector<int>{2, 4, 5});
}

TEST_CASE("shuffle sign") {
  CHECK(shuffle_sign(IndexSubset({1, 2}, 3), 3) == 1);
  CHECK(shuffle_sign(IndexSubset({1, 3}, 3), 3) == -1);
  CHECK(shuffle_sign(IndexSubset({2, 3}, 3), 3) == 1);
}

TEST_CASE("shuffle sign block-swap consistency") {
  // sign(beta, comp) * sign(comp, beta) = (-1)^{k(n-k)}.
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const IndexSubset& beta : subsets(n, k)) {
        int s1 = shuffle_sign(beta, n);
        int s2 = shuffle_sign(beta.complement(), n);
        int expected = (k * (n - k)) % 2 == 0 ? 1 : -1;
        CHECK(s1 * s2 == expected);
      }
}

TEST_CASE("sym basis graded-lex order and size") {
  CHECK(sym_basis(2, 1) == std::vector<ExponentVector>{{1, 0}, {0, 1}});
  CHECK(sym_basis(2, 2) == std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(sym_basis(3, 2).size() == 6);
  for (int b = 1; b <= 6; ++b)
    for (int d = 0; d <= 6; ++d)
      CHECK(sym_basis(b, d).size() == binomial(b + d - 1, d));
}

TEST_CASE("wedge basics") {
  MultiVector e1 = MultiVector::basis_vector(1, 3);
  MultiVector e2 = MultiVector::basis_vector(2, 3);
  MultiVector w = wedge(e1, e2);
  CHECK(w.coords == std::map<std::vector<int>, Rat>{{{1, 2}, rat(1)}});
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e1 + e2, e2).coords ==
        std::map<std::vector<int>, Rat>{{{1, 2}, rat(1)}});
  // Grade above ambient collapses to zero, not an error.
  MultiVector e3 = MultiVector::basis_vector(3, 3);
  CHECK(wedge(wedge(wedge(e1, e2), e3), e1).is_zero());
}

namespace {

MultiVector random_mv(int grade, int ambient, SmallRng& rng) {
  MultiVector v(grade, ambient);
  for (const IndexSubset& s : subsets(ambient, grade))
    v.add_term(s.elements, rat(rng.draw(5)));
  return v;
}

}  // namespace

TEST_CASE("wedge is associative and graded-anticommutative") {
  SmallRng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    MultiVector u = random_mv(1, 5, rng);
    MultiVector v = random_mv(2, 5, rng);
    MultiVector w = random_mv(1, 5, rng);
    CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
    // |u||v| = 2: commute with sign +1.
    CHECK(wedge(u, v) == wedge(v, u) * rat(1));
    // |u||w| = 1: anticommute.
    CHECK(wedge(u, w) == wedge(w, u) * rat(-1));
  }
}
