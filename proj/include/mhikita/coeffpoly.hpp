#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mhikita/field.hpp"

namespace mh {

inline constexpr int kMaxVars = 8;
using Mono = std::array<std::uint16_t, kMaxVars>;

// the variable set of a coefficient context; ħ is always variable 0
struct Ring {
  std::uint32_t p;
  std::vector<std::string> names;
  int nvars() const { return static_cast<int>(names.size()); }
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);
// throws StructuralError when the contexts differ
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

int mono_degree(const Mono& m);
Mono mono_add(const Mono& a, const Mono& b);

// sparse commutative polynomial over F_p; no zero coefficients are stored
class CoeffPoly {
 public:
  explicit CoeffPoly(RingPtr R);
  static CoeffPoly constant(RingPtr R, std::int64_t c);
  static CoeffPoly var(RingPtr R, int i, unsigned e = 1);
  static CoeffPoly monomial(RingPtr R, const Mono& m, std::uint32_t c);

  const RingPtr& ring() const { return R_; }
  std::uint32_t p() const { return R_->p; }
  const std::map<Mono, std::uint32_t>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  std::uint32_t constant_term() const;
  std::uint32_t coeff(const Mono& m) const;
  int degree() const;  // total degree; -1 for zero
  bool is_homogeneous() const;

  void add_term(const Mono& m, std::uint32_t c);

  CoeffPoly operator+(const CoeffPoly& o) const;
  CoeffPoly operator-(const CoeffPoly& o) const;
  CoeffPoly operator-() const;
  CoeffPoly operator*(const CoeffPoly& o) const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly scaled(std::uint32_t c) const;
  CoeffPoly times_mono(const Mono& m, std::uint32_t c) const;
  CoeffPoly pow(unsigned e) const;
  bool operator==(const CoeffPoly& o) const;
  bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

  // ring map: variable i goes to images[i]; images live over the target ring
  CoeffPoly substitute(const std::vector<CoeffPoly>& images) const;
  // splits self = var_i^k * q + r with every term of r of var_i-degree < k
  std::pair<CoeffPoly, CoeffPoly> divide_var_power(int i, unsigned k) const;
  // Frobenius-semilinear extension of generator images (scalars go to c^p = c)
  CoeffPoly frobenius_map(const std::vector<CoeffPoly>& images) const;
  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;

  std::string str() const;

 private:
  RingPtr R_;
  std::map<Mono, std::uint32_t> t_;
};

std::string mono_str(const Mono& m, const Ring& R);

}  // namespace mh
