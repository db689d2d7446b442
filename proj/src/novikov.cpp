#include "mhikita/novikov.hpp"

#include <sstream>

#include "mhikita/errors.hpp"

namespace mh {

int zdeg(const ZExp& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

ZExp zadd(const ZExp& a, const ZExp& b) {
  ZExp r{};
  for (int i = 0; i < kMaxZ; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

ZExp zscale(const ZExp& a, unsigned k) {
  ZExp r{};
  for (int i = 0; i < kMaxZ; ++i) r[i] = static_cast<std::uint16_t>(a[i] * k);
  return r;
}

ZExp zunit(int j) {
  ZExp r{};
  r.at(j) = 1;
  return r;
}

std::string zexp_str(const ZExp& e, int s) {
  std::string out;
  for (int i = 0; i < s; ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += "*";
    out += s == 1 ? std::string("z") : "z" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

NovikovSeries::NovikovSeries(RingPtr R, int s, int M) : R_(std::move(R)), s_(s), M_(M) {
  if (s < 0 || s > kMaxZ) throw StructuralError("Novikov index set size must be in [0,4]");
  if (M < 0) throw StructuralError("truncation bound must be >= 0");
}

NovikovSeries NovikovSeries::constant(const CoeffPoly& c, int s, int M) {
  NovikovSeries r(c.ring(), s, M);
  r.add_term(ZExp{}, c);
  return r;
}

NovikovSeries NovikovSeries::zmono(const ZExp& e, const CoeffPoly& c, int s, int M) {
  NovikovSeries r(c.ring(), s, M);
  r.add_term(e, c);
  return r;
}

CoeffPoly NovikovSeries::coeff(const ZExp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? CoeffPoly(R_) : it->second;
}

void NovikovSeries::add_term(const ZExp& e, const CoeffPoly& c) {
  require_same_ring(R_, c.ring(), "NovikovSeries");
  for (int i = s_; i < kMaxZ; ++i)
    if (e[i]) throw StructuralError("z exponent outside the index set");
  if (zdeg(e) > M_ || c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void NovikovSeries::compatible(const NovikovSeries& o, const char* where) const {
  if (s_ != o.s_) throw StructuralError(std::string("mismatched Novikov index sets in ") + where);
  if (M_ != o.M_) throw StructuralError(std::string("mismatched truncation bounds in ") + where);
  require_same_ring(R_, o.R_, where);
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& o) {
  compatible(o, "novikov +");
  for (auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

NovikovSeries& NovikovSeries::operator-=(const NovikovSeries& o) {
  compatible(o, "novikov -");
  for (auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

NovikovSeries NovikovSeries::operator+(const NovikovSeries& o) const {
  NovikovSeries r = *this;
  r += o;
  return r;
}

NovikovSeries NovikovSeries::operator-(const NovikovSeries& o) const {
  NovikovSeries r = *this;
  r -= o;
  return r;
}

NovikovSeries NovikovSeries::operator-() const {
  NovikovSeries r(R_, s_, M_);
  for (auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

NovikovSeries NovikovSeries::operator*(const NovikovSeries& o) const { return novikov_mul(*this, o); }

NovikovSeries NovikovSeries::scaled(const CoeffPoly& c) const {
  NovikovSeries r(R_, s_, M_);
  for (auto& [e, a] : t_) r.add_term(e, a * c);
  return r;
}

NovikovSeries NovikovSeries::shifted(const ZExp& z) const {
  NovikovSeries r(R_, s_, M_);
  for (auto& [e, a] : t_) r.add_term(zadd(e, z), a);
  return r;
}

bool NovikovSeries::operator==(const NovikovSeries& o) const {
  compatible(o, "novikov ==");
  return t_ == o.t_;
}

std::string NovikovSeries::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    std::string zs = zexp_str(e, s_);
    if (zs.empty()) {
      os << "(" << c.str() << ")";
    } else {
      os << "(" << c.str() << ")*" << zs;
    }
  }
  return os.str();
}

NovikovSeries novikov_mul(const NovikovSeries& a, const NovikovSeries& b) {
  if (a.nz() != b.nz()) throw StructuralError("mismatched Novikov index sets in novikov_mul");
  if (a.bound() != b.bound()) throw StructuralError("mismatched truncation bounds in novikov_mul");
  require_same_ring(a.ring(), b.ring(), "novikov_mul");
  NovikovSeries r(a.ring(), a.nz(), a.bound());
  for (auto& [e1, c1] : a.terms()) {
    int d1 = zdeg(e1);
    for (auto& [e2, c2] : b.terms()) {
      if (d1 + zdeg(e2) > a.bound()) continue;
      r.add_term(zadd(e1, e2), c1 * c2);
    }
  }
  return r;
}

NovikovSeries geom_inverse(RingPtr R, int s, const ZExp& alpha, int M) {
  if (M < 0) throw StructuralError("geom_inverse: M must be >= 0");
  NovikovSeries r(R, s, M);
  CoeffPoly one = CoeffPoly::constant(R, 1);
  int d = zdeg(alpha);
  if (d == 0) throw StructuralError("geom_inverse: alpha must be nonzero");
  for (unsigned k = 0; static_cast<int>(k) * d <= M; ++k) r.add_term(zscale(alpha, k), one);
  return r;
}

}  // namespace mh
