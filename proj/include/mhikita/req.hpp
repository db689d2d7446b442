#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"
#include "mhikita/novikov.hpp"
#include "mhikita/trace.hpp"

namespace mh {

// k[z^mu] (x) Sym of the degree-2 generators, with a z^mu = z^mu (a + hbar <mu, abar>)
struct REqContext {
  RingPtr R;  // hbar first; the remaining variables are the generators a
  int nz = 0;
  std::vector<std::vector<std::int64_t>> pairing;  // [variable][l] = <alpha_l, abar>
};
using REqCtx = std::shared_ptr<const REqContext>;

// hypertoric data give the ring (hbar, E_1..E_n); sl2 data give (hbar, sigma, h)
REqCtx req_context(const TraceData& td);

class REqElement {
 public:
  explicit REqElement(REqCtx C);
  static REqElement constant(REqCtx C, std::int64_t c);
  static REqElement z(REqCtx C, int l);
  static REqElement var(REqCtx C, int v);
  static REqElement term(REqCtx C, const ZExp& e, const CoeffPoly& f);

  const REqCtx& context() const { return C_; }
  const std::map<ZExp, CoeffPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const ZExp& e, const CoeffPoly& f);

  REqElement operator+(const REqElement& o) const;
  REqElement operator-(const REqElement& o) const;
  REqElement operator*(const REqElement& o) const;
  REqElement scaled(std::uint32_t c) const;
  REqElement pow(unsigned k) const;
  bool operator==(const REqElement& o) const { return t_ == o.t_; }
  bool operator!=(const REqElement& o) const { return !(*this == o); }
  // exact division of every coefficient by hbar^k
  bool divide_hbar(unsigned k, REqElement* q) const;
  int degree() const;  // z-degree plus polynomial degree
  std::string str() const;

 private:
  REqCtx C_;
  std::map<ZExp, CoeffPoly> t_;
};

}  // namespace mh
