#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzkit/groebner.hpp"
#include "syzkit/linalg.hpp"
#include "syzkit/multilin.hpp"
#include "syzkit/poly.hpp"
#include "syzkit/tensor.hpp"

namespace syzkit {

// A stated hypothesis of one of the verified statements does not hold for
// the given input; the operation refuses to proceed.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid of graded Betti numbers, rows indexed by internal degree q and
// columns by homological degree p.
struct BettiTable {
  std::vector<std::vector<unsigned long>> entries;

  std::string to_text() const {
    std::string out;
    for (std::size_t q = 0; q < entries.size(); ++q) {
      for (std::size_t p = 0; p < entries[q].size(); ++p) {
        if (p > 0) out += " ";
        out += entries[q][p] == 0 ? "-" : std::to_string(entries[q][p]);
      }
      out += "\n";
    }
    return out;
  }
};

// Betti table of the Eagon-Northcott resolution of O_X for the maximal
// minors of an a x b matrix of expected codimension:
// beta_{i+1, b-1} = C(a, b+i) * C(b+i-1, i) for 0 <= i <= a-b.
inline BettiTable en_betti(int a, int b) {
  if (a < b || b < 1) throw std::invalid_argument("en_betti requires a >= b >= 1");
  BettiTable t;
  t.entries.assign(b, std::vector<unsigned long>(a - b + 2, 0));
  t.entries[0][0] += 1;
  for (int i = 0; i <= a - b; ++i)
    t.entries[b - 1][i + 1] += binomial(a, b + i) * binomial(b + i - 1, i);
  return t;
}

// Element of the last nonzero syzygy space E_{a-b,b} = S_{a-b}B, as
// coefficients over sym_basis(b, a-b).
using LastSyzygy = std::vector<Rat>;

// Koszul cocycle in Lambda^{a-b}C (x) S_bC: each sorted (a-b)-subset of
// the C coordinates carries a degree-b polynomial.
struct SyzygyCocycle {
  int a = 0, b = 0, c = 0;
  std::map<std::vector<int>, Poly> components;  // zero components omitted

  Poly component(const std::vector<int>& key) const {
    auto it = components.find(key);
    return it == components.end() ? Poly(c) : it->second;
  }

  std::vector<Poly> nonzero_components() const {
    std::vector<Poly> out;
    for (const auto& [k, f] : components) out.push_back(f);
    return out;
  }

  bool is_zero() const { return components.empty(); }
};

// Realizes the inclusion of the last syzygy space into
// Lambda^{a-b}C (x) (I_X)_b:
//   sigma(s) = sum_{|beta|=b} shuffle_sign(beta) * minor_beta (x)
//              exterior_minor(complement(beta), s).
// The minors and exterior minors depend only on the tensor, so they are
// precomputed once; embedding any s is then a linear combination.
class SyzygyEmbedder {
 public:
  explicit SyzygyEmbedder(const TripleTensor& t)
      : a_(t.a()), b_(t.b()), c_(t.c()) {
    if (a_ < b_) throw std::invalid_argument("embed_last_syzygy requires a >= b");
    s_monomials_ = sym_basis(b_, a_ - b_);
    for (const IndexSubset& beta : subsets(a_, b_)) {
      Term term;
      term.sign = shuffle_sign(beta, a_);
      term.minor = maximal_minor(t, beta);
      IndexSubset rest = beta.complement();
      for (const ExponentVector& m : s_monomials_)
        term.wedges.push_back(exterior_minor(t, rest, m));
      terms_.push_back(std::move(term));
    }
  }

  std::size_t syzygy_length() const { return s_monomials_.size(); }

  SyzygyCocycle embed(const LastSyzygy& s) const {
    if (s.size() != s_monomials_.size())
      throw std::invalid_argument("last syzygy has wrong length");
    SyzygyCocycle coc;
    coc.a = a_;
    coc.b = b_;
    coc.c = c_;
    std::map<std::vector<int>, Poly> acc;
    for (const Term& term : terms_) {
      for (std::size_t mi = 0; mi < s.size(); ++mi) {
        if (s[mi] == 0) continue;
        for (const auto& [key, coef] : term.wedges[mi].coords) {
          Rat factor = coef * s[mi] * term.sign;
          auto it = acc.find(key);
          if (it == acc.end())
            acc.emplace(key, term.minor * factor);
          else
            it->second = it->second + term.minor * factor;
        }
      }
    }
    for (auto& [key, f] : acc)
      if (!f.is_zero()) coc.components.emplace(key, std::move(f));
    return coc;
  }

 private:
  struct Term {
    int sign = 1;
    Poly minor;
    std::vector<MultiVector> wedges;  // one per monomial of S_{a-b}B
  };
  int a_, b_, c_;
  std::vector<ExponentVector> s_monomials_;
  std::vector<Term> terms_;
};

inline SyzygyCocycle embed_last_syzygy(const TripleTensor& t, const LastSyzygy& s) {
  return SyzygyEmbedder(t).embed(s);
}

// Koszul differential: delta(w_S (x) f) = sum_k (-1)^{k-1} w_{S \ s_k} (x)
// (c_{s_k} * f). Empty map when a = b (the differential leaves nothing).
inline std::map<std::vector<int>, Poly> koszul_differential(const SyzygyCocycle& coc) {
  std::map<std::vector<int>, Poly> out;
  if (coc.a - coc.b < 1) return out;
  for (const auto& [key, f] : coc.components) {
    for (std::size_t k = 0; k < key.size(); ++k) {
      std::vector<int> rest = key;
      rest.erase(rest.begin() + k);
      Poly term = Poly::variable(key[k], coc.c) * f;
      if (k % 2 == 1) term = -term;
      auto it = out.find(rest);
      if (it == out.end())
        out.emplace(std::move(rest), std::move(term));
      else
        it->second = it->second + term;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Basis order of Lambda^{a-b}C (x) (I_X)_b used by the oracle and by
// cocycle_coordinates: subsets of {1..c} in lex order, ideal-basis index
// fastest inside each subset.
struct LastSyzygyOracle {
  Subspace kernel;       // subspace of the domain above
  GradedPiece ideal_b;   // (I_X)_b with its canonical basis
  GradedPiece ideal_b1;  // (I_X)_{b+1}
};

// Brute-force Koszul kernel: ker( Lambda^{a-b}C (x) (I_X)_b ->
// Lambda^{a-b-1}C (x) S_{b+1}C ). For a = b the differential is zero and
// the kernel is everything.
inline LastSyzygyOracle last_syzygy_space_oracle(const TripleTensor& t) {
  int a = t.a(), b = t.b(), c = t.c();
  if (a < b) throw std::invalid_argument("oracle requires a >= b");
  std::vector<Poly> minors = all_maximal_minors(t);
  std::vector<Poly> nonzero;
  for (const Poly& m : minors)
    if (!m.is_zero()) nonzero.push_back(m);
  if (nonzero.empty())
    throw std::invalid_argument("oracle: all maximal minors are zero");

  LastSyzygyOracle out;
  out.ideal_b = graded_piece(nonzero, b);
  out.ideal_b1 = graded_piece(nonzero, b + 1);

  std::vector<IndexSubset> dom_subsets = subsets(c, a - b);
  std::size_t ideal_dim = out.ideal_b.subspace.dim();
  std::size_t dom_dim = dom_subsets.size() * ideal_dim;
  if (a == b) {
    out.kernel = Subspace::span_of_rows(DenseMatrix::identity(dom_dim));
    return out;
  }

  std::vector<IndexSubset> cod_subsets = subsets(c, a - b - 1);
  std::map<std::vector<int>, std::size_t> cod_index;
  for (std::size_t i = 0; i < cod_subsets.size(); ++i)
    cod_index[cod_subsets[i].elements] = i;
  std::vector<Monomial> cod_mons = sym_basis(c, b + 1);
  std::map<Monomial, std::size_t> mon_index;
  for (std::size_t i = 0; i < cod_mons.size(); ++i) mon_index[cod_mons[i]] = i;

  DenseMatrix d(cod_subsets.size() * cod_mons.size(), dom_dim);
  std::size_t col = 0;
  for (const IndexSubset& S : dom_subsets) {
    for (std::size_t r = 0; r < ideal_dim; ++r) {
      Poly g = poly_from_coordinates(out.ideal_b.subspace.basis_vector(r), c, b);
      for (std::size_t k = 0; k < S.elements.size(); ++k) {
        std::vector<int> rest = S.elements;
        rest.erase(rest.begin() + k);
        Poly term = Poly::variable(S.elements[k], c) * g;
        Rat sign = (k % 2 == 0) ? 1 : -1;
        std::size_t block = cod_index.at(rest) * cod_mons.size();
        for (const auto& [m, coef] : term.terms())
          d.at(block + mon_index.at(m), col) += sign * coef;
      }
      ++col;
    }
  }
  out.kernel = kernel_basis(d);
  return out;
}

// Coordinates of a cocycle in the oracle's domain basis; throws if some
// component is not in (I_X)_b.
inline std::vector<Rat> cocycle_coordinates(const SyzygyCocycle& coc,
                                            const LastSyzygyOracle& oracle) {
  std::vector<IndexSubset> dom_subsets = subsets(coc.c, coc.a - coc.b);
  std::size_t ideal_dim = oracle.ideal_b.subspace.dim();
  std::vector<Rat> out(dom_subsets.size() * ideal_dim, Rat(0));
  for (std::size_t si = 0; si < dom_subsets.size(); ++si) {
    Poly f = coc.component(dom_subsets[si].elements);
    if (f.is_zero()) continue;
    auto coords = oracle.ideal_b.subspace.coordinates(poly_coordinates(f, coc.b));
    if (!coords)
      throw std::logic_error("cocycle component outside (I_X)_b");
    for (std::size_t r = 0; r < ideal_dim; ++r) out[si * ideal_dim + r] = (*coords)[r];
  }
  return out;
}

// Span of the component polynomials: the degree-b piece of the syzygy
// ideal I(s). Always contained in (I_X)_b.
inline GradedPiece syzygy_ideal(const SyzygyCocycle& coc) {
  std::vector<Monomial> mon_basis = sym_basis(coc.c, coc.b);
  std::vector<std::vector<Rat>> rows;
  for (const auto& [key, f] : coc.components)
    rows.push_back(poly_coordinates(f, coc.b));
  GradedPiece out;
  out.degree = coc.b;
  out.subspace = Subspace::span_of_vectors(rows, mon_basis.size());
  return out;
}

// s(x) as a multivector in Lambda^{a-b}C; zero iff x lies in Syz(s).
inline MultiVector eval_syzygy(const SyzygyCocycle& coc, const std::vector<Rat>& x) {
  if (x.size() != static_cast<std::size_t>(coc.c))
    throw std::invalid_argument("eval_syzygy: point length mismatch");
  MultiVector out(coc.a - coc.b, coc.c);
  for (const auto& [key, f] : coc.components) out.add_term(key, evaluate(f, x));
  return out;
}

inline LastSyzygy random_last_syzygy(int a, int b, SmallRng& rng, long bound = 10) {
  std::size_t len = sym_basis(b, a - b).size();
  LastSyzygy s(len);
  while (true) {
    bool nonzero = false;
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = rat(rng.draw(bound));
      nonzero = nonzero || s[i] != 0;
    }
    if (nonzero) return s;
  }
}

inline bool on_variety(const std::vector<Poly>& minors, const std::vector<Rat>& x) {
  for (const Poly& m : minors)
    if (evaluate(m, x) != 0) return false;
  return true;
}

struct SupportReport {
  unsigned long off_x_nonzero = 0;
  unsigned long off_x_zero = 0;
  unsigned long on_x_zero = 0;
  unsigned long on_x_nonzero = 0;
  bool verdict = false;
};

// Randomized check of the support statement: every last syzygy evaluates
// nonzero off X; on parametrized points of X (catalecticant inputs only)
// it evaluates to zero.
inline SupportReport support_test(const TripleTensor& t, unsigned long trials,
                                  std::uint64_t seed, unsigned long on_x_trials = 25) {
  int a = t.a(), b = t.b(), c = t.c();
  OneGenericReport gen = check_1generic(t);
  if (!gen.is_1generic)
    throw PreconditionError("support_test: input tensor is not 1-generic");
  std::vector<Poly> minors = all_maximal_minors(t);
  int expected = c - (a - b + 1);
  int dim = ideal_dimension(minors);
  if (dim != expected)
    throw PreconditionError("support_test: minors do not have expected codimension (dim " +
                            std::to_string(dim) + ", expected " + std::to_string(expected) + ")");

  SyzygyEmbedder embedder(t);
  SmallRng rng(seed);
  SupportReport report;
  for (unsigned long trial = 0; trial < trials; ++trial) {
    std::vector<Rat> x(c);
    bool nonzero = false;
    for (int k = 0; k < c; ++k) {
      x[k] = rat(rng.draw(10));
      nonzero = nonzero || x[k] != 0;
    }
    if (!nonzero) continue;
    if (on_variety(minors, x)) continue;  // integer points land on X only by accident
    LastSyzygy s = random_last_syzygy(a, b, rng);
    if (eval_syzygy(embedder.embed(s), x).is_zero())
      ++report.off_x_zero;
    else
      ++report.off_x_nonzero;
  }
  bool on_x_ok = true;
  if (is_catalecticant(t)) {
    for (unsigned long trial = 0; trial < on_x_trials; ++trial) {
      Rat tau = rat(rng.draw(10));
      std::vector<Rat> x = rnc_point(c, tau);
      LastSyzygy s = random_last_syzygy(a, b, rng);
      if (eval_syzygy(embedder.embed(s), x).is_zero())
        ++report.on_x_zero;
      else {
        ++report.on_x_nonzero;
        on_x_ok = false;
      }
    }
  }
  report.verdict = report.off_x_zero == 0 && on_x_ok;
  return report;
}

// Kernel of the Jacobian of the generators at a point of their common
// vanishing locus; for homogeneous generators it always contains x.
inline Subspace tangent_space(const std::vector<Poly>& gens, const std::vector<Rat>& x) {
  for (const Poly& g : gens)
    if (evaluate(g, x) != 0)
      throw std::invalid_argument("tangent_space: point not on the variety");
  return kernel_basis(jacobian_at(gens, x));
}

struct TangentReport {
  bool x_smooth_on_x = false;
  bool compared = false;
  std::size_t dim_tx = 0;
  std::size_t dim_tsyz = 0;
  bool equal = false;
};

// Compare T_x X with T_x Syz(s) at a point of X. The smoothness gate is
// rank gamma_C(x) = b-1 together with Jacobian rank a-b+1. The caller is
// responsible for certifying 1-genericity.
inline TangentReport tangent_test(const TripleTensor& t, const LastSyzygy& s,
                                  const std::vector<Rat>& x) {
  int a = t.a(), b = t.b(), c = t.c();
  if (x.size() != static_cast<std::size_t>(c))
    throw std::invalid_argument("tangent_test: point length mismatch");
  bool zero = true;
  for (const Rat& v : x) zero = zero && v == 0;
  if (zero) throw std::invalid_argument("tangent_test: x must be nonzero");
  std::vector<Poly> minors = all_maximal_minors(t);
  if (!on_variety(minors, x))
    throw PreconditionError("tangent_test: x is not on X");

  // Rank of the rational a x b matrix gamma_C(x).
  DenseMatrix gx(a, b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k) gx.at(i, j) += t.coeff(i, j, k) * x[k];

  TangentReport report;
  DenseMatrix jac = jacobian_at(minors, x);
  report.x_smooth_on_x = rank(gx) == static_cast<std::size_t>(b - 1) &&
                         rank(jac) == static_cast<std::size_t>(a - b + 1);
  if (!report.x_smooth_on_x) return report;

  Subspace tx = kernel_basis(jac);
  SyzygyCocycle coc = embed_last_syzygy(t, s);
  Subspace tsyz = tangent_space(coc.nonzero_components(), x);
  report.compared = true;
  report.dim_tx = tx.dim();
  report.dim_tsyz = tsyz.dim();
  report.equal = subspace_equal(tx, tsyz);
  return report;
}

struct CounterexampleResult {
  bool found = false;
  std::string message;
  LastSyzygy s;
  DenseMatrix row_change;  // new A basis rows in old coordinates
  DenseMatrix col_change;  // new B basis columns in old coordinates
  std::vector<Rat> x;
  bool eval_zero = false;
  bool x_off_x = false;
};

namespace detail {

// Completes the given independent rows to a basis of Q^n with standard
// vectors; returns the n x n matrix whose rows are the basis.
inline DenseMatrix complete_basis_rows(const std::vector<std::vector<Rat>>& start, int n) {
  std::vector<std::vector<Rat>> rows = start;
  for (int i = 0; i < n && rows.size() < static_cast<std::size_t>(n); ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    std::vector<std::vector<Rat>> trial = rows;
    trial.push_back(e);
    if (Subspace::span_of_vectors(trial, n).dim() == trial.size()) rows = trial;
  }
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace detail

// Constructive converse: from a rank-deficient generalized row, build an
// adapted basis with zero (1,1) entry, take s = (b_1)^{a-b}, and find a
// point off X where the embedded syzygy vanishes. The search samples the
// linear subspace where the whole first row of the adapted matrix
// vanishes, which is where the proof locates such points.
inline CounterexampleResult counterexample(const TripleTensor& t, unsigned long budget,
                                           std::uint64_t seed = 0) {
  int a = t.a(), b = t.b(), c = t.c();
  OneGenericReport gen = check_1generic(t);
  if (gen.is_1generic)
    throw PreconditionError("counterexample: input is 1-generic");
  if (gen.failing_side != FailingSide::rows)
    throw PreconditionError("counterexample: requires a rank-deficient generalized row");
  if (!gen.witness)
    throw PreconditionError("counterexample: no witness row found by the certifier");
  std::vector<Poly> minors = all_maximal_minors(t);
  std::vector<Poly> nonzero_minors;
  for (const Poly& m : minors)
    if (!m.is_zero()) nonzero_minors.push_back(m);
  if (nonzero_minors.empty())
    throw PreconditionError("counterexample: all maximal minors vanish");
  int expected = c - (a - b + 1);
  if (ideal_dimension(nonzero_minors) != expected)
    throw PreconditionError("counterexample: minors do not have expected codimension");

  CounterexampleResult out;
  out.row_change = detail::complete_basis_rows({*gen.witness}, a);
  TripleTensor t1 = t.transform(out.row_change, DenseMatrix::identity(b));

  // Kernel vector of gamma_{e_1}: new first B-basis vector.
  std::vector<Rat> e1(a, Rat(0));
  e1[0] = 1;
  Subspace ker = kernel_basis(row_matrix(t1, e1));
  if (ker.dim() == 0)
    throw std::logic_error("counterexample: witness row has full rank");
  DenseMatrix cols = detail::complete_basis_rows({ker.basis_vector(0)}, b);
  // Rows of cols are the new B basis; store as columns.
  out.col_change = DenseMatrix(b, b);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) out.col_change.at(j, i) = cols.at(i, j);
  TripleTensor adapted = t1.transform(DenseMatrix::identity(a), out.col_change);

  out.s.assign(sym_basis(b, a - b).size(), Rat(0));
  out.s[0] = 1;  // (b_1)^{a-b} is the lex-largest monomial
  SyzygyCocycle coc = embed_last_syzygy(adapted, out.s);
  std::vector<Poly> adapted_minors = all_maximal_minors(adapted);

  // First-row linear forms of the adapted matrix as a coefficient matrix.
  DenseMatrix first_row(b, c);
  for (int j = 0; j < b; ++j)
    for (int k = 0; k < c; ++k) first_row.at(j, k) = adapted.coeff(0, j, k);
  Subspace row_kernel = kernel_basis(first_row);

  SmallRng rng(seed);
  for (unsigned long trial = 0; trial < budget; ++trial) {
    std::vector<Rat> x(c, Rat(0));
    bool nonzero = false;
    for (std::size_t r = 0; r < row_kernel.dim(); ++r) {
      Rat coef = rat(rng.draw(10));
      if (coef == 0) continue;
      nonzero = true;
      std::vector<Rat> basis = row_kernel.basis_vector(r);
      for (int k = 0; k < c; ++k) x[k] += coef * basis[k];
    }
    if (!nonzero) continue;
    bool eval_zero = eval_syzygy(coc, x).is_zero();
    bool off_x = !on_variety(adapted_minors, x);
    if (eval_zero && off_x) {
      out.found = true;
      out.x = x;
      out.eval_zero = eval_zero;
      out.x_off_x = off_x;
      return out;
    }
  }
  out.message = "search budget exhausted";
  return out;
}

}  // namespace syzkit
