#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace syzkit {

// Exact rational scalar. GMP keeps gcd(|num|, den) = 1 and den > 0 after
// every operation, which is exactly the canonical form we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() < 0) throw std::invalid_argument("negative denominator: " + s);
  q.canonicalize();
  return q;
}

// value + eps*epsilon with eps^2 = 0; used for exact first-order evaluation.
struct DualNumber {
  Rat value;
  Rat epsilon;

  DualNumber() = default;
  DualNumber(Rat v, Rat e = 0) : value(std::move(v)), epsilon(std::move(e)) {}

  DualNumber operator+(const DualNumber& o) const {
    return {value + o.value, epsilon + o.epsilon};
  }
  DualNumber operator-(const DualNumber& o) const {
    return {value - o.value, epsilon - o.epsilon};
  }
  DualNumber operator*(const DualNumber& o) const {
    return {value * o.value, value * o.epsilon + epsilon * o.value};
  }
  DualNumber operator-() const { return {-value, -epsilon}; }
  bool operator==(const DualNumber& o) const = default;

  DualNumber pow(unsigned long e) const {
    DualNumber r(1);
    DualNumber base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * base;
      base = base * base;
    }
    return r;
  }
};

}  // namespace syzkit
