#pragma once

#include <cstdint>

#include "charpreg/errors.hpp"

namespace charpreg {

bool is_prime(std::uint32_t n);

// Arithmetic in F_p for a machine prime p < 2^31. Elements are residues in
// [0, p) stored as uint32_t; all products go through uint64_t.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw UsageError("field characteristic must be a prime below 2^31, got " +
                       std::to_string(p));
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    std::uint32_t base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw UsageError("division by zero in prime field");
    return pow(a, p_ - 2);
  }

  // Reduces an arbitrary signed integer into [0, p).
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// p^e with an overflow guard; everything downstream assumes q fits an int.
inline unsigned long long prime_power_checked(std::uint32_t p, unsigned e) {
  unsigned long long q = 1;
  for (unsigned k = 0; k < e; ++k) {
    q *= p;
    if (q > (1ull << 30))
      throw GuardAbort("p^e exceeds the supported exponent range");
  }
  return q;
}

}  // namespace charpreg
