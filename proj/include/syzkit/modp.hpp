#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "syzkit/poly.hpp"

namespace syzkit {

// Prime-field scalar for the advisory fast mode. The modulus is process
// global: it is set once from the environment before any Fp value exists.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long x) {
    long m = x % static_cast<long>(modulus());
    v_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(modulus()) : m);
  }

  static void set_modulus(std::uint64_t p) {
    if (p < 2 || p > (1ull << 31))
      throw std::invalid_argument("prime modulus out of range");
    modulus_slot() = p;
  }
  static std::uint64_t modulus() {
    if (modulus_slot() == 0) throw std::logic_error("prime modulus not set");
    return modulus_slot();
  }

  static Fp from_rational(const Rat& q) {
    std::uint64_t p = modulus();
    mpz_class num = q.get_num() % static_cast<long>(p);
    mpz_class den = q.get_den() % static_cast<long>(p);
    if (den == 0)
      throw std::domain_error("denominator divisible by the prime modulus");
    Fp n(num.get_si());
    Fp d(den.get_si());
    return n / d;
  }

  std::uint64_t raw() const { return v_; }
  std::string to_string() const { return std::to_string(v_); }

  Fp operator+(const Fp& o) const { return make((v_ + o.v_) % modulus()); }
  Fp operator-(const Fp& o) const {
    return make((v_ + modulus() - o.v_) % modulus());
  }
  Fp operator*(const Fp& o) const { return make(v_ * o.v_ % modulus()); }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  bool operator==(const Fp& o) const = default;

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
    // Extended Euclid.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus()),
                 newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
      std::int64_t q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus());
    return make(static_cast<std::uint64_t>(t));
  }

 private:
  static Fp make(std::uint64_t raw) {
    Fp f;
    f.v_ = raw;
    return f;
  }
  static std::uint64_t& modulus_slot() {
    static std::uint64_t p = 0;
    return p;
  }
  std::uint64_t v_;
};

inline PolyT<Fp> poly_mod_p(const Poly& f) {
  PolyT<Fp> out(f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, Fp::from_rational(c));
  return out;
}

// Advisory prime for Groebner-backed decisions; 0 means exact mode.
inline std::uint64_t& advisory_prime() {
  static std::uint64_t p = 0;
  return p;
}

}  // namespace syzkit
