#pragma once

#include <algorithm>
#include <list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "syzkit/linalg.hpp"
#include "syzkit/poly.hpp"

namespace syzkit {

template <class K>
struct GroebnerBasisT {
  std::vector<PolyT<K>> generators;
  std::string order = "grevlex";
  bool reduced = false;
};

using GroebnerBasis = GroebnerBasisT<Rat>;

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

// Full normal form of f modulo the set G: no term of the result is
// divisible by any leading monomial of G.
template <class K>
PolyT<K> normal_form(PolyT<K> f, const std::vector<PolyT<K>>& basis) {
  PolyT<K> remainder(f.nvars());
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    bool reduced_step = false;
    for (const PolyT<K>& g : basis) {
      if (g.is_zero()) continue;
      const Monomial& gm = g.leading_monomial();
      if (!monomial_divides(gm, lm)) continue;
      Monomial q(lm.size());
      for (std::size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - gm[i];
      K coef = f.leading_coeff() / g.leading_coeff();
      f = f - g * PolyT<K>::monomial(q, coef);
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      remainder.add_term(f.leading_monomial(), f.leading_coeff());
      f = f - PolyT<K>::monomial(f.leading_monomial(), f.leading_coeff());
    }
  }
  return remainder;
}

template <class K>
PolyT<K> s_polynomial(const PolyT<K>& f, const PolyT<K>& g) {
  const Monomial& mf = f.leading_monomial();
  const Monomial& mg = g.leading_monomial();
  Monomial l = monomial_lcm(mf, mg);
  Monomial qf(l.size()), qg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    qf[i] = l[i] - mf[i];
    qg[i] = l[i] - mg[i];
  }
  return f * PolyT<K>::monomial(qf, K(1) / f.leading_coeff()) -
         g * PolyT<K>::monomial(qg, K(1) / g.leading_coeff());
}

// Buchberger with the normal pair-selection strategy (smallest lcm first)
// and the coprime-leading-term criterion, followed by autoreduction.
template <class K>
GroebnerBasisT<K> buchberger(const std::vector<PolyT<K>>& gens) {
  std::vector<PolyT<K>> basis;
  for (const PolyT<K>& g : gens)
    if (!g.is_zero()) basis.push_back(g);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    return grevlex_greater(b.lcm, a.lcm);
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back(
          {i, j,
           monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    Pair p = pairs.front();
    pairs.erase(pairs.begin());
    const Monomial& mi = basis[p.i].leading_monomial();
    const Monomial& mj = basis[p.j].leading_monomial();
    // Coprime leading terms: the S-polynomial reduces to zero.
    bool coprime = true;
    for (std::size_t v = 0; v < mi.size(); ++v)
      if (mi[v] > 0 && mj[v] > 0) {
        coprime = false;
        break;
      }
    if (coprime) continue;
    PolyT<K> r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r);
    push_pairs_for(basis.size() - 1);
  }

  // Autoreduce: drop generators whose leading monomial is divisible by
  // another's, fully reduce the tails, normalize leading coefficients.
  std::vector<PolyT<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (!monomial_divides(basis[j].leading_monomial(),
                            basis[i].leading_monomial()))
        continue;
      if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)
        continue;
      redundant = true;
      break;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<PolyT<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyT<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    PolyT<K> r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r * (K(1) / r.leading_coeff()));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const PolyT<K>& a, const PolyT<K>& b) {
              return grevlex_greater(a.leading_monomial(), b.leading_monomial());
            });
  GroebnerBasisT<K> out;
  out.generators = std::move(reduced);
  out.reduced = true;
  return out;
}

// V(gens) empty in P^{nvars-1}? True iff the Groebner basis exposes a pure
// power of every variable among the leading terms.
template <class K>
bool is_projectively_empty_gb(const GroebnerBasisT<K>& gb, int nvars) {
  std::vector<bool> covered(nvars, false);
  for (const PolyT<K>& g : gb.generators) {
    const Monomial& m = g.leading_monomial();
    int support = -1;
    bool pure = true;
    for (int v = 0; v < nvars; ++v) {
      if (m[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = v;
    }
    if (pure && support >= 0) covered[support] = true;
    if (pure && support < 0) return true;  // 1 in the ideal
  }
  for (int v = 0; v < nvars; ++v)
    if (!covered[v]) return false;
  return true;
}

template <class K>
bool is_projectively_empty(const std::vector<PolyT<K>>& gens, int nvars) {
  for (const PolyT<K>& g : gens)
    if (!g.is_homogeneous())
      throw std::invalid_argument("is_projectively_empty: non-homogeneous generator");
  return is_projectively_empty_gb(buchberger(gens), nvars);
}

// Affine Krull dimension of the leading-term ideal: largest variable subset
// S such that no leading monomial is supported inside S. Brute force; the
// instances have few variables. Returns -1 for the unit ideal.
template <class K>
int ideal_dimension(const std::vector<PolyT<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("ideal_dimension: no generators");
  int nvars = gens[0].nvars();
  for (const PolyT<K>& g : gens)
    if (!g.is_homogeneous())
      throw std::invalid_argument("ideal_dimension: non-homogeneous generator");
  GroebnerBasisT<K> gb = buchberger(gens);
  if (gb.generators.empty()) return nvars;  // zero ideal
  std::vector<Monomial> lms;
  for (const PolyT<K>& g : gb.generators) lms.push_back(g.leading_monomial());

  int best = -1;
  for (unsigned long mask = 0; mask < (1ul << nvars); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool ok = true;
    for (const Monomial& m : lms) {
      bool inside = true;
      for (int v = 0; v < nvars; ++v)
        if (m[v] > 0 && !(mask & (1ul << v))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Degree-d graded piece of a homogeneous ideal, as a canonical subspace of
// S_d in the sym_basis coordinate order.
struct GradedPiece {
  int degree = 0;
  Subspace subspace;
};

inline GradedPiece graded_piece(const std::vector<Poly>& gens, int d) {
  int nvars = gens.empty() ? 0 : gens[0].nvars();
  for (const Poly& g : gens) {
    if (!g.is_homogeneous() || g.is_zero())
      throw std::invalid_argument("graded_piece: generators must be homogeneous and nonzero");
    if (g.degree() > d)
      throw std::invalid_argument("graded_piece: degree below generator degree");
  }
  std::vector<Monomial> mon_basis = nvars > 0 ? sym_basis(nvars, d)
                                              : std::vector<Monomial>{};
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mon_basis.size(); ++i) index[mon_basis[i]] = i;

  std::vector<std::vector<Rat>> rows;
  for (const Poly& g : gens) {
    for (const Monomial& m : sym_basis(nvars, d - g.degree())) {
      Poly prod = g * Poly::monomial(m, Rat(1));
      std::vector<Rat> row(mon_basis.size(), Rat(0));
      for (const auto& [mm, c] : prod.terms()) row[index.at(mm)] = c;
      rows.push_back(std::move(row));
    }
  }
  GradedPiece out;
  out.degree = d;
  out.subspace = Subspace::span_of_vectors(rows, mon_basis.size());
  return out;
}

// Coordinates of a degree-d homogeneous polynomial in sym_basis order.
inline std::vector<Rat> poly_coordinates(const Poly& f, int d) {
  std::vector<Monomial> mon_basis = sym_basis(f.nvars(), d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mon_basis.size(); ++i) index[mon_basis[i]] = i;
  std::vector<Rat> out(mon_basis.size(), Rat(0));
  for (const auto& [m, c] : f.terms()) {
    if (ev_degree(m) != d)
      throw std::invalid_argument("poly_coordinates: degree mismatch");
    out[index.at(m)] = c;
  }
  return out;
}

inline Poly poly_from_coordinates(const std::vector<Rat>& coords, int nvars,
                                  int d) {
  std::vector<Monomial> mon_basis = sym_basis(nvars, d);
  if (coords.size() != mon_basis.size())
    throw std::invalid_argument("poly_from_coordinates: length mismatch");
  Poly f(nvars);
  for (std::size_t i = 0; i < coords.size(); ++i)
    f.add_term(mon_basis[i], coords[i]);
  return f;
}

}  // namespace syzkit
