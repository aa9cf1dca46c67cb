#pragma once

#include <cstdint>
#include <string>

#include "brim/errors.hpp"

namespace brim {

// Element of F_p for a 31-bit prime p. Each value carries its modulus;
// mixing moduli in one operation is an error. Used as a fast shadow of
// the rationals in consistency checks.
class PrimeFieldElement {
public:
  struct Context {
    std::uint32_t prime = 0;
    bool operator==(const Context&) const = default;
  };

  PrimeFieldElement() : r_(0), p_(0) {}
  PrimeFieldElement(std::uint32_t residue, std::uint32_t prime)
      : r_(residue % prime), p_(prime) {}

  static PrimeFieldElement from_int(std::int64_t n, const Context& ctx) {
    if (ctx.prime == 0) throw ArithmeticError("prime field context unset");
    std::int64_t m = n % static_cast<std::int64_t>(ctx.prime);
    if (m < 0) m += ctx.prime;
    return PrimeFieldElement(static_cast<std::uint32_t>(m), ctx.prime);
  }
  static PrimeFieldElement fraction(std::int64_t num, std::int64_t den,
                                    const Context& ctx) {
    return from_int(num, ctx) / from_int(den, ctx);
  }

  std::uint32_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  PrimeFieldElement operator-() const {
    return PrimeFieldElement(r_ == 0 ? 0 : p_ - r_, p_);
  }

  PrimeFieldElement& operator+=(const PrimeFieldElement& o) {
    match(o);
    std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
    r_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) {
    match(o);
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
  }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) {
    match(o);
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
    return *this;
  }
  PrimeFieldElement& operator/=(const PrimeFieldElement& o) {
    match(o);
    if (o.is_zero()) throw ArithmeticError("prime field division by zero");
    return *this *= o.inverse();
  }

  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.r_ == b.r_ && a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return !(a == b);
  }

  PrimeFieldElement inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    // Fermat: p is prime.
    std::uint64_t base = r_, acc = 1, e = p_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return PrimeFieldElement(static_cast<std::uint32_t>(acc), p_);
  }

  std::string str() const { return std::to_string(r_); }

private:
  void match(const PrimeFieldElement& o) const {
    if (p_ != o.p_) throw ArithmeticError("mixed prime field moduli");
  }

  std::uint32_t r_;
  std::uint32_t p_;
};

// Deterministic Miller-Rabin, exact for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e) {
      if (e & 1) x = mulmod(x, base, n);
      base = mulmod(base, base, n);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Next 31-bit prime at or above `from` (wraps into a fixed band).
inline std::uint32_t next_prime_31(std::uint64_t from) {
  std::uint64_t lo = 1u << 30, hi = (1ull << 31) - 1;
  std::uint64_t n = lo + from % (hi - lo);
  if ((n & 1) == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return static_cast<std::uint32_t>(n);
}

}  // namespace brim
