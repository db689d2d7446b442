#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"

namespace mh {

inline constexpr int kMaxN = 8;
using WExp = std::array<std::uint16_t, kMaxN>;

struct WKey {
  WExp a;  // x exponents
  WExp b;  // d exponents
  bool operator<(const WKey& o) const { return a != o.a ? a < o.a : b < o.b; }
  bool operator==(const WKey& o) const { return a == o.a && b == o.b; }
};

// element of D_hbar(A^n): sum of x^a d^b with coefficients in R (variable 0 is hbar);
// relation [d_i, x_i] = hbar, stored in normal order x before d
class WeylElement {
 public:
  WeylElement(RingPtr R, int n);
  static WeylElement scalar(const CoeffPoly& c, int n);
  static WeylElement constant(RingPtr R, int n, std::int64_t c);
  static WeylElement monomial(RingPtr R, int n, const WExp& a, const WExp& b, const CoeffPoly& c);
  static WeylElement x(RingPtr R, int n, int i);
  static WeylElement d(RingPtr R, int n, int i);
  static WeylElement euler(RingPtr R, int n, int i);  // E_i = x_i d_i
  static WeylElement hbar(RingPtr R, int n);

  const RingPtr& ring() const { return R_; }
  int n() const { return n_; }
  const std::map<WKey, CoeffPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const WKey& k, const CoeffPoly& c);

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement scaled(const CoeffPoly& c) const;
  WeylElement pow(unsigned e) const;
  bool operator==(const WeylElement& o) const;
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  // weight a - b of every monomial, if all agree
  bool homogeneous_weight(std::vector<int>* w) const;
  int max_conical_degree() const;  // |a|+|b|+2*(hbar exponent); -1 for zero

  std::string str() const;

 private:
  void compatible(const WeylElement& o, const char* where) const;
  RingPtr R_;
  int n_;
  std::map<WKey, CoeffPoly> t_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);
std::vector<int> monomial_weight(const WKey& k, int n);
WeylElement weight_component(const WeylElement& w, const std::vector<int>& lambda);
// x^{lambda+} d^{lambda-}
WeylElement monopole(RingPtr R, const std::vector<int>& lambda);

// polynomial in commuting x_i, y_i over F_p
class CommutativePair {
 public:
  CommutativePair(std::uint32_t p, int n);
  static CommutativePair constant(std::uint32_t p, int n, std::int64_t c);
  static CommutativePair x(std::uint32_t p, int n, int i);
  static CommutativePair y(std::uint32_t p, int n, int i);
  std::uint32_t p() const { return p_; }
  int n() const { return n_; }
  const std::map<WKey, std::uint32_t>& terms() const { return t_; }
  void add_term(const WKey& k, std::uint32_t c);
  CommutativePair operator+(const CommutativePair& o) const;
  CommutativePair operator*(const CommutativePair& o) const;
  CommutativePair scaled(std::int64_t c) const;

 private:
  std::uint32_t p_;
  int n_;
  std::map<WKey, std::uint32_t> t_;
};

// x_i -> x_i^p, y_i -> d_i^p, multiplicative, Frobenius on scalars
WeylElement frobenius_splitting_weyl(const CommutativePair& f, RingPtr R);
// x_i -> x_i, y_i -> d_i in normal order (the naive quantization)
WeylElement naive_quantization(const CommutativePair& f, RingPtr R);

struct CentralityResult {
  bool central = true;
  std::string witness_label;  // e.g. "[w, x1]"
  std::string witness;        // the nonzero commutator
};
CentralityResult centrality_check(const WeylElement& w);

struct EulerFactorization {
  WeylElement normal_ordered;  // x_i^k d_i^k
  WeylElement product_minus;   // prod_{j<k} (E_i - j hbar), the form valid under [d,x]=hbar
  WeylElement product_plus;    // prod_{j<k} (E_i + j hbar), the published form, for audit
};
EulerFactorization euler_factorization(RingPtr R, int n, unsigned k, int i);

// coefficient ring extended by E_1..E_n after the existing variables
RingPtr euler_ring(const RingPtr& R, int n);
// weight-zero element as a polynomial in E_i (x^a d^a = prod_i prod_{j<a_i}(E_i - j hbar));
// throws StructuralError on nonzero weight
CoeffPoly weight0_to_euler(const WeylElement& w, const RingPtr& ER);
WeylElement euler_to_weyl(const CoeffPoly& f, const RingPtr& R, int n);

}  // namespace mh
