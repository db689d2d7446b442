#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"

namespace mh {

inline constexpr int kMaxZ = 4;
using ZExp = std::array<std::uint16_t, kMaxZ>;

int zdeg(const ZExp& e);
ZExp zadd(const ZExp& a, const ZExp& b);
ZExp zscale(const ZExp& a, unsigned k);
ZExp zunit(int j);
std::string zexp_str(const ZExp& e, int s);

// truncated series in z_1..z_s; every stored exponent has total degree <= M
class NovikovSeries {
 public:
  NovikovSeries(RingPtr R, int s, int M);
  static NovikovSeries constant(const CoeffPoly& c, int s, int M);
  static NovikovSeries zmono(const ZExp& e, const CoeffPoly& c, int s, int M);

  const RingPtr& ring() const { return R_; }
  int nz() const { return s_; }
  int bound() const { return M_; }
  const std::map<ZExp, CoeffPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  CoeffPoly coeff(const ZExp& e) const;
  CoeffPoly at_z0() const { return coeff(ZExp{}); }

  void add_term(const ZExp& e, const CoeffPoly& c);  // drops terms above M

  NovikovSeries operator+(const NovikovSeries& o) const;
  NovikovSeries operator-(const NovikovSeries& o) const;
  NovikovSeries operator-() const;
  NovikovSeries operator*(const NovikovSeries& o) const;
  NovikovSeries& operator+=(const NovikovSeries& o);
  NovikovSeries& operator-=(const NovikovSeries& o);
  NovikovSeries scaled(const CoeffPoly& c) const;
  NovikovSeries shifted(const ZExp& e) const;  // multiply by z^e
  bool operator==(const NovikovSeries& o) const;
  bool operator!=(const NovikovSeries& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void compatible(const NovikovSeries& o, const char* where) const;
  RingPtr R_;
  int s_;
  int M_;
  std::map<ZExp, CoeffPoly> t_;
};

NovikovSeries novikov_mul(const NovikovSeries& a, const NovikovSeries& b);
// sum_{k>=0} z^{k alpha} truncated at total degree M
NovikovSeries geom_inverse(RingPtr R, int s, const ZExp& alpha, int M);

}  // namespace mh
