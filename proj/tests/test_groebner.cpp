#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzkit/groebner.hpp"
#include "syzkit/modp.hpp"
#include "syzkit/tensor.hpp"

using namespace syzkit;

namespace {

Poly var(int i, int n) { return Poly::variable(i, n); }

std::vector<Poly> rnc3_minors() {
  int n = 4;
  return {var(1, n) * var(3, n) - var(2, n) * var(2, n),
          var(1, n) * var(4, n) - var(2, n) * var(3, n),
          var(2, n) * var(4, n) - var(3, n) * var(3, n)};
}

}  // namespace

TEST_CASE("buchberger trivial cases") {
  GroebnerBasis g1 = buchberger<Rat>({var(1, 3)});
  CHECK(g1.generators.size() == 1);
  CHECK(g1.generators[0] == var(1, 3));

  GroebnerBasis g2 = buchberger<Rat>({var(1, 3), var(2, 3)});
  CHECK(g2.generators.size() == 2);
}

TEST_CASE("buchberger on the RNC3 minors") {
  GroebnerBasis g = buchberger(rnc3_minors());
  CHECK(g.generators.size() == 3);
  CHECK(g.reduced);
  // Hand check of one S-pair: the quadrics are already a Groebner basis.
  PolyT<Rat> s = s_polynomial(g.generators[0], g.generators[1]);
  CHECK(normal_form(s, g.generators).is_zero());
}

TEST_CASE("every S-polynomial of a reduced basis reduces to zero") {
  SmallRng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Poly> gens;
    for (int g = 0; g < 3; ++g) {
      Poly f(3);
      for (const Monomial& m : sym_basis(3, 2)) f.add_term(m, rat(rng.draw(3)));
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(gens);
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
      for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
        CHECK(normal_form(s_polynomial(gb.generators[i], gb.generators[j]),
                          gb.generators)
                  .is_zero());
  }
}

TEST_CASE("projective emptiness") {
  CHECK(is_projectively_empty<Rat>({var(1, 3), var(2, 3), var(3, 3)}, 3));
  CHECK_FALSE(is_projectively_empty<Rat>({var(1, 2) * var(2, 2)}, 2));
  // 2x2 minors of the gamma_A matrix of the 2x3 catalecticant: every
  // generalized row has full rank, so the rank-drop locus is empty.
  std::vector<Poly> minors = matrix_minors(gamma_A(catalecticant(2, 3)), 3);
  CHECK(is_projectively_empty(minors, 2));
  CHECK_THROWS(is_projectively_empty<Rat>({var(1, 2) + Poly::constant(2, rat(1))}, 2));
}

TEST_CASE("ideal dimension") {
  CHECK(ideal_dimension<Rat>({Poly::zero(3)}) == 3);
  CHECK(ideal_dimension<Rat>({var(1, 3), var(2, 3), var(3, 3)}) == 0);
  CHECK(ideal_dimension(rnc3_minors()) == 2);  // affine cone over the twisted cubic
}

TEST_CASE("emptiness implies dimension zero") {
  SmallRng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Poly> gens;
    for (int g = 0; g < 4; ++g) {
      Poly f(3);
      for (const Monomial& m : sym_basis(3, 2)) f.add_term(m, rat(rng.draw(3)));
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    if (is_projectively_empty(gens, 3)) CHECK(ideal_dimension(gens) == 0);
  }
}

TEST_CASE("graded pieces of the RNC3 ideal") {
  std::vector<Poly> minors = rnc3_minors();
  CHECK(graded_piece(minors, 2).subspace.dim() == 3);
  // 12 degree-3 products with rank 10 = C(6,3) - h(3), h(3) = 10.
  CHECK(graded_piece(minors, 3).subspace.dim() == 10);
  CHECK(graded_piece({}, 2).subspace.dim() == 0);
  CHECK_THROWS(graded_piece({var(1, 2) + var(1, 2) * var(2, 2)}, 2));
}

TEST_CASE("graded pieces are multiplicatively closed") {
  std::vector<Poly> minors = rnc3_minors();
  GradedPiece p2 = graded_piece(minors, 2);
  GradedPiece p3 = graded_piece(minors, 3);
  for (std::size_t r = 0; r < p2.subspace.dim(); ++r) {
    Poly g = poly_from_coordinates(p2.subspace.basis_vector(r), 4, 2);
    for (int k = 1; k <= 4; ++k) {
      Poly prod = g * var(k, 4);
      CHECK(p3.subspace.contains(poly_coordinates(prod, 3)));
    }
  }
}

TEST_CASE("mod-p advisory engine agrees with the exact one") {
  Fp::set_modulus(32003);
  std::vector<Poly> minors = rnc3_minors();
  std::vector<PolyT<Fp>> reduced;
  for (const Poly& f : minors) reduced.push_back(poly_mod_p(f));
  CHECK(ideal_dimension(reduced) == ideal_dimension(minors));
  CHECK(is_projectively_empty(reduced, 4) == is_projectively_empty(minors, 4));
  std::vector<Poly> irrelevant{var(1, 2), var(2, 2)};
  std::vector<PolyT<Fp>> irrelevant_p;
  for (const Poly& f : irrelevant) irrelevant_p.push_back(poly_mod_p(f));
  CHECK(is_projectively_empty(irrelevant_p, 2));
}
