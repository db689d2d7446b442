#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"

namespace mh {

// c_1 u_1 + ... + c_r u_r + c_h hbar with exact integer coefficients
struct LinearForm {
  std::vector<std::int64_t> u;
  std::int64_t hbar = 0;

  LinearForm() = default;
  explicit LinearForm(int r) : u(r, 0) {}
  LinearForm(std::vector<std::int64_t> uu, std::int64_t h) : u(std::move(uu)), hbar(h) {}

  int rank() const { return static_cast<int>(u.size()); }
  bool is_zero() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator*(std::int64_t k) const;
  bool operator==(const LinearForm& o) const { return u == o.u && hbar == o.hbar; }
  bool operator!=(const LinearForm& o) const { return !(*this == o); }
  bool operator<(const LinearForm& o) const;

  // pairing of the u-part with an integer vector
  std::int64_t pair(const std::vector<std::int64_t>& a) const;
  // reduction mod p into R; u_i goes to variable uvar[i], hbar to variable 0
  CoeffPoly to_poly(const RingPtr& R, const std::vector<int>& uvar) const;
  std::string str(const std::vector<std::string>& names = {}) const;
};

}  // namespace mh
