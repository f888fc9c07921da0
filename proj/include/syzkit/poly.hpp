#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzkit/linalg.hpp"
#include "syzkit/multilin.hpp"
#include "syzkit/rational.hpp"

namespace syzkit {

// Monomial in a fixed number of variables; exponent vector.
using Monomial = ExponentVector;

// Graded reverse lexicographic, c1 > c2 > ... > cn. Returns true if a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  int da = ev_degree(a), db = ev_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

// Multivariate polynomial with exact coefficients. Terms kept in descending
// grevlex order so the leading term is always begin().
template <class K>
class PolyT {
 public:
  using TermMap = std::map<Monomial, K, GrevlexDescending>;

  PolyT() = default;
  explicit PolyT(int nvars) : nvars_(nvars) {}

  static PolyT zero(int nvars) { return PolyT(nvars); }

  static PolyT constant(int nvars, const K& c) {
    PolyT p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  // The variable x_{index} (1-based).
  static PolyT variable(int index, int nvars) {
    if (index < 1 || index > nvars)
      throw std::invalid_argument("variable index out of range");
    PolyT p(nvars);
    Monomial m(nvars, 0);
    m[index - 1] = 1;
    p.add_term(m, K(1));
    return p;
  }

  static PolyT monomial(Monomial m, const K& c) {
    PolyT p(static_cast<int>(m.size()));
    p.add_term(std::move(m), c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const K& c) {
    if (c == K(0)) return;
    if (static_cast<int>(m.size()) != nvars_)
      throw std::invalid_argument("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
  }
  const K& leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, ev_degree(m));
    return d;
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    int d = ev_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (ev_degree(m) != d) return false;
    return true;
  }

  PolyT operator+(const PolyT& o) const {
    check_arity(o);
    PolyT r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  PolyT operator-(const PolyT& o) const {
    check_arity(o);
    PolyT r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, K(0) - c);
    return r;
  }

  PolyT operator-() const {
    PolyT r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, K(0) - c);
    return r;
  }

  PolyT operator*(const PolyT& o) const {
    check_arity(o);
    PolyT r(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  PolyT operator*(const K& s) const {
    PolyT r(nvars_);
    if (s == K(0)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  bool operator==(const PolyT& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // d/dx_{index} (1-based).
  PolyT derivative(int index) const {
    PolyT r(nvars_);
    for (const auto& [m, c] : terms_) {
      int e = m[index - 1];
      if (e == 0) continue;
      Monomial dm = m;
      dm[index - 1] = e - 1;
      r.add_term(dm, c * K(e));
    }
    return r;
  }

  template <class V>
  V evaluate_with(const std::vector<V>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw std::invalid_argument("evaluation point arity mismatch");
    V acc(0);
    for (const auto& [m, c] : terms_) {
      V t(c);
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * x[i];
      acc = acc + t;
    }
    return acc;
  }

 private:
  void check_arity(const PolyT& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomial arity mismatch");
  }

  int nvars_ = 0;
  TermMap terms_;
};

using Poly = PolyT<Rat>;

inline Rat evaluate(const Poly& f, const std::vector<Rat>& x) {
  return f.evaluate_with(x);
}

// f(x + eps*y) = f(x) + eps * (grad f(x) . y), exactly.
inline DualNumber evaluate_dual(const Poly& f, const std::vector<Rat>& x,
                                const std::vector<Rat>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("evaluate_dual: point/direction length mismatch");
  std::vector<DualNumber> duals(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) duals[i] = DualNumber(x[i], y[i]);
  return f.evaluate_with(duals);
}

// Matrix of partial derivatives at x, one row per generator.
inline DenseMatrix jacobian_at(const std::vector<Poly>& gens,
                               const std::vector<Rat>& x) {
  std::size_t nv = gens.empty() ? x.size() : gens[0].nvars();
  DenseMatrix j(gens.size(), nv);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].nvars() != static_cast<int>(nv))
      throw std::invalid_argument("jacobian_at: mixed arities");
    for (std::size_t k = 0; k < nv; ++k)
      j.at(i, k) = evaluate(gens[i].derivative(static_cast<int>(k) + 1), x);
  }
  return j;
}

// Human-readable rendering with variables named var<i> (1-based).
template <class K>
std::string poly_to_string(const PolyT<K>& f, const std::string& var = "c") {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string cs;
    if constexpr (std::is_same_v<K, Rat>) {
      cs = rat_to_string(c);
    } else {
      cs = c.to_string();
    }
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

}  // namespace syzkit
