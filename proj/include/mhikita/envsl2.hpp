#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"

namespace mh {

// f^a h^b e^c
using PBWKey = std::array<std::uint16_t, 3>;

// element of U_hbar(sl2) with coefficients in R (variable 0 is hbar; others, such as
// the Cartan deformation sigma, are central)
class PBWElement {
 public:
  explicit PBWElement(RingPtr R);
  static PBWElement scalar(const CoeffPoly& c);
  static PBWElement constant(RingPtr R, std::int64_t c);
  static PBWElement monomial(RingPtr R, unsigned a, unsigned b, unsigned c, const CoeffPoly& coef);
  static PBWElement e(RingPtr R);
  static PBWElement f(RingPtr R);
  static PBWElement h(RingPtr R);
  static PBWElement hbar(RingPtr R);
  // 4fe + h^2 + 2 hbar h
  static PBWElement casimir(RingPtr R);

  const RingPtr& ring() const { return R_; }
  const std::map<PBWKey, CoeffPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const PBWKey& k, const CoeffPoly& c);

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement operator*(const PBWElement& o) const;
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  PBWElement scaled(const CoeffPoly& c) const;
  PBWElement pow(unsigned e) const;
  bool operator==(const PBWElement& o) const;
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  // exact division of every coefficient by hbar^k; StructuralError if not divisible
  PBWElement divide_hbar(unsigned k) const;
  // ad-h weight is 2(c - a); false if the monomials disagree
  bool homogeneous_weight(int* w) const;

  std::string str() const;

 private:
  RingPtr R_;
  std::map<PBWKey, CoeffPoly> t_;
};

PBWElement u_mul(const PBWElement& a, const PBWElement& b);
PBWElement u_commutator(const PBWElement& a, const PBWElement& b);

// generator -> x^[p]
struct RestrictedPowerTable {
  std::vector<std::pair<std::string, PBWElement>> gens;  // (name, x)
  std::vector<PBWElement> power;                         // x^[p]
};
RestrictedPowerTable sl2_restricted_table(RingPtr R);

struct CentralReport {
  bool central = true;
  std::string witness_label;  // "[z, e]" etc
  std::string witness;
};
CentralReport sl2_centrality(const PBWElement& z);

struct HarishChandraResult {
  CoeffPoly unshifted;  // pure Cartan PBW component, in the variable h
  CoeffPoly shifted;    // unshifted(h - j hbar)
  int shift_j;
};
// ring with the variables of R followed by h
RingPtr cartan_ring(const RingPtr& R);
// throws CheckError carrying the violating commutator when z is not central
HarishChandraResult harish_chandra(const PBWElement& z, int shift_j = 1);
// inverse of the shifted projection on W-invariant polynomials: write q(h) as Q(h^2 - hbar^2)
// and return Q(casimir); StructuralError for odd q
PBWElement harish_chandra_inverse(const CoeffPoly& q, const RingPtr& R);

// commutative input x (t) f: CoeffPoly over a ring named hbar, e, f, h, sigma; no hbar allowed.
// R must contain a variable named sigma for the S(t) factor.
RingPtr springer_input_ring(std::uint32_t p);
PBWElement frobenius_splitting_springer(const CoeffPoly& x, const RingPtr& R);
// sigma^p - hbar^(p-1) sigma under sigma -> sigma - j hbar
CoeffPoly sigma_splitting(const RingPtr& R);
int sigma_index(const RingPtr& R);

// weight-zero part f^j g(h) e^j  ->  g(h + 2j hbar) prod_{i<j} phi(h + 2i hbar)
// with phi(h) = (sigma^2 - hbar^2 - h^2 - 2 hbar h) / 4, the value of fe in the
// quotient where the Casimir acts by sigma^2 - hbar^2
CoeffPoly sl2_weight0_to_cartan(const PBWElement& w, const RingPtr& A0);

}  // namespace mh
