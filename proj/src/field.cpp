#include "mhikita/field.hpp"

#include <map>

#include "mhikita/errors.hpp"

namespace mh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p) || p > 65521)
    throw InputError("prime must be an odd prime below 65536, got " + std::to_string(p));
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw StructuralError("inverse of zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

std::uint32_t binom_mod(unsigned n, unsigned k, std::uint32_t p) {
  if (k > n) return 0;
  // per-thread so parallel suites never contend
  thread_local std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> cache;
  auto& rows = cache[p];
  while (rows.size() <= n) {
    std::size_t m = rows.size();
    std::vector<std::uint32_t> r(m + 1, 1 % p);
    for (std::size_t j = 1; j < m; ++j) r[j] = mod_add(rows[m - 1][j - 1], rows[m - 1][j], p);
    rows.push_back(std::move(r));
  }
  return rows[n][k];
}

std::uint32_t factorial_mod(unsigned n, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  for (unsigned i = 2; i <= n && r; ++i) r = mod_mul(r, i % p, p);
  return r;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t v, std::uint32_t p) : v_(0), p_(p) {
  require_odd_prime(p);
  v_ = mod_reduce(v, p);
}

void PrimeFieldElement::same(const PrimeFieldElement& o) const {
  if (p_ != o.p_) throw StructuralError("field elements over different primes");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  same(o);
  return PrimeFieldElement(mod_add(v_, o.v_, p_), p_);
}
PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  same(o);
  return PrimeFieldElement(mod_sub(v_, o.v_, p_), p_);
}
PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  same(o);
  return PrimeFieldElement(mod_mul(v_, o.v_, p_), p_);
}
PrimeFieldElement PrimeFieldElement::operator-() const {
  return PrimeFieldElement(mod_sub(0, v_, p_), p_);
}
PrimeFieldElement PrimeFieldElement::inverse() const {
  return PrimeFieldElement(mod_inv(v_, p_), p_);
}
PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  return PrimeFieldElement(mod_pow(v_, e, p_), p_);
}

}  // namespace mh
