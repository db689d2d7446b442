#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mh {

bool is_prime(std::uint64_t n);

// throws InputError unless p is an odd prime small enough for 32-bit residues
void require_odd_prime(std::uint64_t p);

inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);  // a != 0

// binomial(n,k) mod p via Pascal rows, cached per p
std::uint32_t binom_mod(unsigned n, unsigned k, std::uint32_t p);
std::uint32_t factorial_mod(unsigned n, std::uint32_t p);

class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t v, std::uint32_t p);
  std::uint32_t value() const { return v_; }
  std::uint32_t prime() const { return p_; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;  // throws on zero
  PrimeFieldElement pow(std::uint64_t e) const;
  bool operator==(const PrimeFieldElement& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const PrimeFieldElement& o) const { return !(*this == o); }
  bool is_zero() const { return v_ == 0; }

 private:
  void same(const PrimeFieldElement& o) const;
  std::uint32_t v_;
  std::uint32_t p_;
};

}  // namespace mh
