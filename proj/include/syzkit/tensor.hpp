#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzkit/groebner.hpp"
#include "syzkit/linalg.hpp"
#include "syzkit/modp.hpp"
#include "syzkit/multilin.hpp"
#include "syzkit/poly.hpp"

namespace syzkit {

// Deterministic integer sampler; identical output for identical seeds on
// every platform (no library distributions involved).
class SmallRng {
 public:
  explicit SmallRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform draw from [-bound, bound].
  long draw(long bound) {
    if (bound <= 0) return 0;
    std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<long>(engine_() % span) - bound;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Exact division of polynomials; throws if the division is not exact.
template <class K>
PolyT<K> poly_divide_exact(PolyT<K> f, const PolyT<K>& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  PolyT<K> q(f.nvars());
  while (!f.is_zero()) {
    const Monomial& mf = f.leading_monomial();
    const Monomial& mg = g.leading_monomial();
    if (!monomial_divides(mg, mf))
      throw std::logic_error("poly_divide_exact: inexact division");
    Monomial d(mf.size());
    for (std::size_t i = 0; i < mf.size(); ++i) d[i] = mf[i] - mg[i];
    PolyT<K> term = PolyT<K>::monomial(d, f.leading_coeff() / g.leading_coeff());
    q = q + term;
    f = f - g * term;
  }
  return q;
}

// Determinant of a square polynomial matrix by fraction-free (Bareiss)
// elimination; divisions are exact at every step.
template <class K>
PolyT<K> det_bareiss(std::vector<std::vector<PolyT<K>>> m) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  int nvars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  PolyT<K> prev = PolyT<K>::constant(nvars, K(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return PolyT<K>::zero(nvars);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = poly_divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Laplace cofactor expansion along the first row; the independent route
// used to cross-check det_bareiss.
template <class K>
PolyT<K> det_cofactor(const std::vector<std::vector<PolyT<K>>>& m) {
  std::size_t n = m.size();
  int nvars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  PolyT<K> acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<PolyT<K>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<PolyT<K>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    PolyT<K> term = m[0][j] * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Matrix of linear forms; every entry homogeneous linear or zero.
struct LinearFormMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Poly>> entries;
};

// gamma: A (x) B -> C with coefficient tensor t[i][j][k], meaning
// gamma(a_i (x) b_j) = sum_k t[i][j][k] c_k. The single source of truth
// for a matrix of linear forms.
class TripleTensor {
 public:
  TripleTensor(int a, int b, int c)
      : a_(a), b_(b), c_(c), coeffs_(static_cast<std::size_t>(a) * b * c, Rat(0)) {
    if (a < 1 || b < 1 || c < 1)
      throw std::invalid_argument("tensor dimensions must be positive");
  }

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }

  // 0-based indices.
  Rat& coeff(int i, int j, int k) {
    return coeffs_[(static_cast<std::size_t>(i) * b_ + j) * c_ + k];
  }
  const Rat& coeff(int i, int j, int k) const {
    return coeffs_[(static_cast<std::size_t>(i) * b_ + j) * c_ + k];
  }

  bool operator==(const TripleTensor& o) const = default;

  // Entry (i,j) of the matrix of linear forms, as a vector in C.
  MultiVector entry_vector(int i, int j) const {
    MultiVector v(1, c_);
    for (int k = 0; k < c_; ++k) v.add_term({k + 1}, coeff(i, j, k));
    return v;
  }

  TripleTensor transpose() const {
    TripleTensor t(b_, a_, c_);
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < b_; ++j)
        for (int k = 0; k < c_; ++k) t.coeff(j, i, k) = coeff(i, j, k);
    return t;
  }

  // Row basis change P (new row i = sum_{i'} P[i][i'] old row i') and
  // column basis change Q (new column j = sum_{j'} Q[j'][j] old column j').
  TripleTensor transform(const DenseMatrix& row_change,
                         const DenseMatrix& col_change) const {
    if (row_change.rows() != static_cast<std::size_t>(a_) ||
        row_change.cols() != static_cast<std::size_t>(a_) ||
        col_change.rows() != static_cast<std::size_t>(b_) ||
        col_change.cols() != static_cast<std::size_t>(b_))
      throw std::invalid_argument("transform: basis-change shape mismatch");
    TripleTensor t(a_, b_, c_);
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < b_; ++j)
        for (int ip = 0; ip < a_; ++ip)
          for (int jp = 0; jp < b_; ++jp) {
            const Rat& f = row_change.at(i, ip) * col_change.at(jp, j);
            if (f == 0) continue;
            for (int k = 0; k < c_; ++k)
              t.coeff(i, j, k) += f * coeff(ip, jp, k);
          }
    return t;
  }

  // Basis change of C: new coordinates x' = R x (R invertible c x c),
  // i.e. each linear form c_k is rewritten in the new coordinates.
  TripleTensor transform_c(const DenseMatrix& c_change) const {
    TripleTensor t(a_, b_, c_);
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < b_; ++j)
        for (int k = 0; k < c_; ++k)
          for (int kp = 0; kp < c_; ++kp)
            t.coeff(i, j, kp) += c_change.at(kp, k) * coeff(i, j, k);
    return t;
  }

 private:
  int a_, b_, c_;
  std::vector<Rat> coeffs_;
};

// a x b matrix of linear forms on P(C): entry (i,j) = sum_k t[i][j][k] c_k.
inline LinearFormMatrix gamma_C(const TripleTensor& t) {
  LinearFormMatrix m;
  m.rows = t.a();
  m.cols = t.b();
  m.entries.assign(m.rows, std::vector<Poly>(m.cols, Poly(t.c())));
  for (int i = 0; i < t.a(); ++i)
    for (int j = 0; j < t.b(); ++j) {
      Poly p(t.c());
      for (int k = 0; k < t.c(); ++k) {
        Monomial mono(t.c(), 0);
        mono[k] = 1;
        p.add_term(mono, t.coeff(i, j, k));
      }
      m.entries[i][j] = std::move(p);
    }
  return m;
}

// c x b matrix in the row-space variables: entry (k,j) = sum_i t[i][j][k] a_i.
inline LinearFormMatrix gamma_A(const TripleTensor& t) {
  LinearFormMatrix m;
  m.rows = t.c();
  m.cols = t.b();
  m.entries.assign(m.rows, std::vector<Poly>(m.cols, Poly(t.a())));
  for (int k = 0; k < t.c(); ++k)
    for (int j = 0; j < t.b(); ++j) {
      Poly p(t.a());
      for (int i = 0; i < t.a(); ++i) {
        Monomial mono(t.a(), 0);
        mono[i] = 1;
        p.add_term(mono, t.coeff(i, j, k));
      }
      m.entries[k][j] = std::move(p);
    }
  return m;
}

// c x a matrix in the column-space variables: entry (k,i) = sum_j t[i][j][k] b_j.
inline LinearFormMatrix gamma_B(const TripleTensor& t) {
  LinearFormMatrix m;
  m.rows = t.c();
  m.cols = t.a();
  m.entries.assign(m.rows, std::vector<Poly>(m.cols, Poly(t.b())));
  for (int k = 0; k < t.c(); ++k)
    for (int i = 0; i < t.a(); ++i) {
      Poly p(t.b());
      for (int j = 0; j < t.b(); ++j) {
        Monomial mono(t.b(), 0);
        mono[j] = 1;
        p.add_term(mono, t.coeff(i, j, k));
      }
      m.entries[k][i] = std::move(p);
    }
  return m;
}

// The rational c x b matrix of the map gamma_alpha: B -> C.
inline DenseMatrix row_matrix(const TripleTensor& t, const std::vector<Rat>& alpha) {
  if (alpha.size() != static_cast<std::size_t>(t.a()))
    throw std::invalid_argument("generalized row has wrong length");
  DenseMatrix m(t.c(), t.b());
  for (int k = 0; k < t.c(); ++k)
    for (int j = 0; j < t.b(); ++j)
      for (int i = 0; i < t.a(); ++i)
        m.at(k, j) += alpha[i] * t.coeff(i, j, k);
  return m;
}

inline std::size_t row_rank(const TripleTensor& t, const std::vector<Rat>& alpha) {
  bool nonzero = false;
  for (const Rat& x : alpha) nonzero = nonzero || x != 0;
  if (!nonzero) throw std::invalid_argument("generalized row must be nonzero");
  return rank(row_matrix(t, alpha));
}

inline DenseMatrix col_matrix(const TripleTensor& t, const std::vector<Rat>& beta) {
  if (beta.size() != static_cast<std::size_t>(t.b()))
    throw std::invalid_argument("generalized column has wrong length");
  DenseMatrix m(t.c(), t.a());
  for (int k = 0; k < t.c(); ++k)
    for (int i = 0; i < t.a(); ++i)
      for (int j = 0; j < t.b(); ++j)
        m.at(k, i) += beta[j] * t.coeff(i, j, k);
  return m;
}

inline std::size_t col_rank(const TripleTensor& t, const std::vector<Rat>& beta) {
  bool nonzero = false;
  for (const Rat& x : beta) nonzero = nonzero || x != 0;
  if (!nonzero) throw std::invalid_argument("generalized column must be nonzero");
  return rank(col_matrix(t, beta));
}

// The b x b minor of gamma_C on the rows beta; homogeneous of degree b.
inline Poly maximal_minor(const TripleTensor& t, const IndexSubset& beta) {
  if (t.a() < t.b()) throw std::invalid_argument("maximal_minor requires a >= b");
  if (beta.ambient != t.a() || beta.size() != static_cast<std::size_t>(t.b()))
    throw std::invalid_argument("maximal_minor: row subset must have size b");
  LinearFormMatrix g = gamma_C(t);
  std::vector<std::vector<Poly>> sub;
  for (int r : beta.elements) sub.push_back(g.entries[r - 1]);
  return det_bareiss(sub);
}

// All b x b minors, in lexicographic order of the row subsets.
inline std::vector<Poly> all_maximal_minors(const TripleTensor& t) {
  std::vector<Poly> out;
  for (const IndexSubset& beta : subsets(t.a(), t.b()))
    out.push_back(maximal_minor(t, beta));
  return out;
}

// Minors of an arbitrary matrix of linear forms (used for the 1-genericity
// certificate on gamma_A / gamma_B).
inline std::vector<Poly> matrix_minors(const LinearFormMatrix& m, int size) {
  std::vector<Poly> out;
  for (const IndexSubset& rs : subsets(static_cast<int>(m.rows), size))
    for (const IndexSubset& cs : subsets(static_cast<int>(m.cols), size)) {
      std::vector<std::vector<Poly>> sub;
      for (int r : rs.elements) {
        std::vector<Poly> row;
        for (int c : cs.elements) row.push_back(m.entries[r - 1][c - 1]);
        sub.push_back(std::move(row));
      }
      out.push_back(det_bareiss(sub));
    }
  return out;
}

// Degree-n exterior minor: sum over all n! arrangements of the column
// multiset of the wedge of the picked entries of gamma, as vectors in C.
// Repeated columns are summed with multiplicity, not divided out.
inline MultiVector exterior_minor(const TripleTensor& t, const IndexSubset& rows,
                                  const ExponentVector& m) {
  int n = static_cast<int>(rows.size());
  if (rows.ambient != t.a())
    throw std::invalid_argument("exterior_minor: row subset ambient mismatch");
  if (static_cast<int>(m.size()) != t.b() || ev_degree(m) != n)
    throw std::invalid_argument("exterior_minor: column degree must match row count");
  std::vector<int> columns;  // 0-based, with repetitions
  for (int j = 0; j < t.b(); ++j)
    for (int e = 0; e < m[j]; ++e) columns.push_back(j);

  MultiVector acc(n, t.c());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end());
  do {
    MultiVector w(0, t.c());
    w.coords[{}] = 1;
    for (int p = 0; p < n; ++p)
      w = wedge(w, t.entry_vector(rows.elements[p] - 1, columns[perm[p]]));
    acc = acc + w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Matrix of e_n: Lambda^n A (x) S_n B -> Lambda^n C. Rows: grade-n subsets
// of {1..c} in lex order; columns: (row subset of {1..a}, exponent vector)
// pairs, row-subset major.
inline DenseMatrix e_n_matrix(const TripleTensor& t, int n) {
  if (n > std::min(t.a(), t.c()))
    throw std::invalid_argument("e_n_matrix: n exceeds min(a, c)");
  std::vector<IndexSubset> c_subsets = subsets(t.c(), n);
  std::map<std::vector<int>, std::size_t> row_index;
  for (std::size_t i = 0; i < c_subsets.size(); ++i)
    row_index[c_subsets[i].elements] = i;
  std::vector<IndexSubset> a_subsets = subsets(t.a(), n);
  std::vector<ExponentVector> b_monomials = sym_basis(t.b(), n);

  DenseMatrix m(c_subsets.size(), a_subsets.size() * b_monomials.size());
  std::size_t col = 0;
  for (const IndexSubset& rows : a_subsets)
    for (const ExponentVector& mono : b_monomials) {
      MultiVector v = exterior_minor(t, rows, mono);
      for (const auto& [key, coef] : v.coords) m.at(row_index.at(key), col) = coef;
      ++col;
    }
  return m;
}

// Green's criterion: e_a has full column rank. False (not an error) when
// a > c, where injectivity is impossible.
inline bool green_injectivity(const TripleTensor& t) {
  if (t.a() > t.c()) return false;
  DenseMatrix m = e_n_matrix(t, t.a());
  return rank(m) == m.cols();
}

enum class FailingSide { none, rows, cols };

struct OneGenericReport {
  bool is_1generic = false;
  FailingSide failing_side = FailingSide::none;
  std::optional<std::vector<Rat>> witness;  // generalized row or column
  bool advisory_mod_p = false;
};

namespace detail {

inline bool minors_projectively_empty(const std::vector<Poly>& minors, int nvars,
                                      bool* advisory) {
  if (advisory_prime() != 0) {
    Fp::set_modulus(advisory_prime());
    std::vector<PolyT<Fp>> reduced;
    for (const Poly& f : minors) reduced.push_back(poly_mod_p(f));
    *advisory = true;
    return is_projectively_empty(reduced, nvars);
  }
  return is_projectively_empty(minors, nvars);
}

// Best-effort search for a point of P^{nvars-1} where `bad` holds.
inline std::optional<std::vector<Rat>> search_witness(
    int nvars, const std::function<bool(const std::vector<Rat>&)>& bad) {
  std::vector<std::vector<Rat>> candidates;
  for (int i = 0; i < nvars; ++i) {
    std::vector<Rat> e(nvars, Rat(0));
    e[i] = 1;
    candidates.push_back(e);
  }
  for (int i = 0; i < nvars; ++i)
    for (int j = i + 1; j < nvars; ++j)
      for (int si : {1, -1}) {
        std::vector<Rat> v(nvars, Rat(0));
        v[i] = 1;
        v[j] = si;
        candidates.push_back(v);
      }
  SmallRng rng(0x5a5a);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Rat> v(nvars);
    bool nonzero = false;
    for (int i = 0; i < nvars; ++i) {
      v[i] = rat(rng.draw(3));
      nonzero = nonzero || v[i] != 0;
    }
    if (nonzero) candidates.push_back(v);
  }
  for (const auto& v : candidates)
    if (bad(v)) return v;
  return std::nullopt;
}

}  // namespace detail

// 1-genericity: every generalized row has rank b and every generalized
// column has rank a. Certified by projective emptiness of the rank-drop
// minor systems; the witness is best-effort only.
inline OneGenericReport check_1generic(const TripleTensor& t) {
  OneGenericReport report;
  bool advisory = false;

  bool rows_ok;
  if (t.c() < t.b()) {
    rows_ok = false;  // every row map B -> C has rank <= c < b
  } else {
    std::vector<Poly> minors = matrix_minors(gamma_A(t), t.b());
    rows_ok = detail::minors_projectively_empty(minors, t.a(), &advisory);
  }
  if (!rows_ok) {
    report.failing_side = FailingSide::rows;
    report.advisory_mod_p = advisory;
    report.witness = detail::search_witness(t.a(), [&](const std::vector<Rat>& v) {
      return row_rank(t, v) < static_cast<std::size_t>(t.b());
    });
    return report;
  }

  bool cols_ok;
  if (t.c() < t.a()) {
    cols_ok = false;
  } else {
    std::vector<Poly> minors = matrix_minors(gamma_B(t), t.a());
    cols_ok = detail::minors_projectively_empty(minors, t.b(), &advisory);
  }
  if (!cols_ok) {
    report.failing_side = FailingSide::cols;
    report.advisory_mod_p = advisory;
    report.witness = detail::search_witness(t.b(), [&](const std::vector<Rat>& v) {
      return col_rank(t, v) < static_cast<std::size_t>(t.a());
    });
    return report;
  }

  report.is_1generic = true;
  report.advisory_mod_p = advisory;
  return report;
}

// The classical 1-generic example: entry c_{i+j-1} in position (i,j),
// c = a + b - 1. Its maximal-minors locus is the rank-deficiency locus of
// the Hankel matrix of the rational normal curve.
inline TripleTensor catalecticant(int a, int b) {
  TripleTensor t(a, b, a + b - 1);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) t.coeff(i, j, i + j) = 1;
  return t;
}

inline bool is_catalecticant(const TripleTensor& t) {
  return t.c() == t.a() + t.b() - 1 && t == catalecticant(t.a(), t.b());
}

inline TripleTensor random_tensor(int a, int b, int c, std::uint64_t seed,
                                  long coeff_bound) {
  TripleTensor t(a, b, c);
  SmallRng rng(seed);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k) t.coeff(i, j, k) = rat(rng.draw(coeff_bound));
  return t;
}

// Point of the rational normal curve parametrized by tau: (1, tau, tau^2, ...).
inline std::vector<Rat> rnc_point(int c, const Rat& tau) {
  std::vector<Rat> x(c);
  Rat p = 1;
  for (int k = 0; k < c; ++k) {
    x[k] = p;
    p *= tau;
  }
  return x;
}

}  // namespace syzkit
