#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <stdexcept>
#include <vector>

#include "syzkit/rational.hpp"

namespace syzkit {

// Strictly increasing 1-based indices in 1..ambient; wedge-basis label.
struct IndexSubset {
  std::vector<int> elements;
  int ambient = 0;

  IndexSubset() = default;
  IndexSubset(std::vector<int> elems, int amb)
      : elements(std::move(elems)), ambient(amb) {
    validate();
  }

  void validate() const {
    int prev = 0;
    for (int e : elements) {
      if (e <= prev || e > ambient)
        throw std::invalid_argument("index subset not strictly increasing in range");
      prev = e;
    }
  }

  std::size_t size() const { return elements.size(); }

  IndexSubset complement() const {
    std::vector<int> comp;
    comp.reserve(ambient - elements.size());
    std::size_t k = 0;
    for (int i = 1; i <= ambient; ++i) {
      if (k < elements.size() && elements[k] == i)
        ++k;
      else
        comp.push_back(i);
    }
    return IndexSubset(std::move(comp), ambient);
  }

  auto operator<=>(const IndexSubset& o) const = default;
};

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexSubset> subsets(int n, int k) {
  std::vector<IndexSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur, n);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline unsigned long binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long r = 1;
  for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sign of the permutation (beta, complement(beta)) of (1..n), by counting
// inversions between the block and its complement.
inline int shuffle_sign(const IndexSubset& beta, int ambient) {
  if (beta.ambient != ambient)
    throw std::invalid_argument("shuffle_sign: ambient mismatch");
  long inversions = 0;
  for (int b : beta.elements) inversions += b - 1;
  // After placing beta first, element beta[i] passes over beta[i]-1 smaller
  // values minus the earlier beta entries below it.
  for (std::size_t i = 0; i < beta.elements.size(); ++i) inversions -= i;
  return inversions % 2 == 0 ? 1 : -1;
}

// Exponent vector of length nvars; basis label for symmetric powers.
using ExponentVector = std::vector<int>;

inline int ev_degree(const ExponentVector& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// All exponent vectors of degree d in b variables, graded-lex descending
// (the lex-largest, (d,0,...,0), first). Length C(b+d-1, d).
inline std::vector<ExponentVector> sym_basis(int b, int d) {
  if (b < 1 || d < 0) throw std::invalid_argument("sym_basis: bad arguments");
  std::vector<ExponentVector> out;
  ExponentVector cur(b, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == b - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Homogeneous element of Lambda^grade of an ambient-dimensional space.
struct MultiVector {
  int grade = 0;
  int ambient = 0;
  std::map<std::vector<int>, Rat> coords;  // sorted index lists -> coefficient

  MultiVector() = default;
  MultiVector(int g, int amb) : grade(g), ambient(amb) {}

  static MultiVector basis_vector(int index, int amb) {
    MultiVector v(1, amb);
    v.coords[{index}] = 1;
    return v;
  }

  void add_term(const std::vector<int>& key, const Rat& c) {
    if (c == 0) return;
    Rat& slot = coords[key];
    slot += c;
    if (slot == 0) coords.erase(key);
  }

  bool is_zero() const { return coords.empty(); }

  MultiVector operator+(const MultiVector& o) const {
    if (grade != o.grade || ambient != o.ambient)
      throw std::invalid_argument("multivector sum: shape mismatch");
    MultiVector r = *this;
    for (const auto& [k, c] : o.coords) r.add_term(k, c);
    return r;
  }

  MultiVector operator*(const Rat& s) const {
    MultiVector r(grade, ambient);
    if (s == 0) return r;
    for (const auto& [k, c] : coords) r.coords[k] = c * s;
    return r;
  }

  bool operator==(const MultiVector& o) const {
    return grade == o.grade && ambient == o.ambient && coords == o.coords;
  }
};

// Sign and sorted merge of two disjoint sorted index lists; nullopt if they
// intersect. Sign = parity of inversions of the concatenation.
inline std::optional<std::pair<std::vector<int>, int>> merge_sorted_signed(
    const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  long inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      inversions += a.size() - i;
      merged.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) merged.push_back(a[i]);
  for (; j < b.size(); ++j) merged.push_back(b[j]);
  return std::make_pair(std::move(merged), inversions % 2 == 0 ? 1 : -1);
}

inline MultiVector wedge(const MultiVector& u, const MultiVector& v) {
  if (u.ambient != v.ambient)
    throw std::invalid_argument("wedge: ambient mismatch");
  MultiVector r(u.grade + v.grade, u.ambient);
  if (r.grade > r.ambient) return r;  // zero, not an error
  for (const auto& [ku, cu] : u.coords)
    for (const auto& [kv, cv] : v.coords) {
      auto merged = merge_sorted_signed(ku, kv);
      if (!merged) continue;
      r.add_term(merged->first, cu * cv * merged->second);
    }
  return r;
}

}  // namespace syzkit
