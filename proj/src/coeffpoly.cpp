#include "mhikita/coeffpoly.hpp"

#include <algorithm>
#include <sstream>

#include "mhikita/errors.hpp"

namespace mh {

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names) {
  require_odd_prime(p);
  if (names.empty() || static_cast<int>(names.size()) > kMaxVars)
    throw StructuralError("ring needs between 1 and 8 variables");
  return std::make_shared<const Ring>(Ring{p, std::move(names)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->p == b->p && a->names == b->names);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw StructuralError(std::string("coefficient contexts differ in ") + where);
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

Mono mono_add(const Mono& a, const Mono& b) {
  Mono r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

CoeffPoly::CoeffPoly(RingPtr R) : R_(std::move(R)) {
  if (!R_) throw StructuralError("null ring");
}

CoeffPoly CoeffPoly::constant(RingPtr R, std::int64_t c) {
  CoeffPoly r(R);
  r.add_term(Mono{}, mod_reduce(c, R->p));
  return r;
}

CoeffPoly CoeffPoly::var(RingPtr R, int i, unsigned e) {
  if (i < 0 || i >= R->nvars()) throw StructuralError("variable index out of range");
  Mono m{};
  m[i] = static_cast<std::uint16_t>(e);
  CoeffPoly r(R);
  r.add_term(m, 1);
  return r;
}

CoeffPoly CoeffPoly::monomial(RingPtr R, const Mono& m, std::uint32_t c) {
  CoeffPoly r(R);
  r.add_term(m, c % R->p);
  return r;
}

bool CoeffPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{});
}

std::uint32_t CoeffPoly::constant_term() const { return coeff(Mono{}); }

std::uint32_t CoeffPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? 0 : it->second;
}

int CoeffPoly::degree() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
  return d;
}

bool CoeffPoly::is_homogeneous() const {
  int d = -1;
  for (auto& [m, c] : t_) {
    int e = mono_degree(m);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

void CoeffPoly::add_term(const Mono& m, std::uint32_t c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second = mod_add(it->second, c, R_->p);
    if (it->second == 0) t_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  require_same_ring(R_, o.R_, "CoeffPoly +");
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  require_same_ring(R_, o.R_, "CoeffPoly -");
  for (auto& [m, c] : o.t_) add_term(m, mod_sub(0, c, R_->p));
  return *this;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
  CoeffPoly r = *this;
  r += o;
  return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
  CoeffPoly r = *this;
  r -= o;
  return r;
}

CoeffPoly CoeffPoly::operator-() const { return scaled(R_->p - 1); }

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
  require_same_ring(R_, o.R_, "CoeffPoly *");
  CoeffPoly r(R_);
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) r.add_term(mono_add(m1, m2), mod_mul(c1, c2, R_->p));
  return r;
}

CoeffPoly CoeffPoly::scaled(std::uint32_t c) const {
  CoeffPoly r(R_);
  c %= R_->p;
  if (c == 0) return r;
  for (auto& [m, a] : t_) r.t_.emplace_hint(r.t_.end(), m, mod_mul(a, c, R_->p));
  return r;
}

CoeffPoly CoeffPoly::times_mono(const Mono& mono, std::uint32_t c) const {
  CoeffPoly r(R_);
  c %= R_->p;
  if (c == 0) return r;
  for (auto& [m, a] : t_) r.t_.emplace(mono_add(m, mono), mod_mul(a, c, R_->p));
  return r;
}

CoeffPoly CoeffPoly::pow(unsigned e) const {
  CoeffPoly r = constant(R_, 1);
  CoeffPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool CoeffPoly::operator==(const CoeffPoly& o) const {
  require_same_ring(R_, o.R_, "CoeffPoly ==");
  return t_ == o.t_;
}

CoeffPoly CoeffPoly::substitute(const std::vector<CoeffPoly>& images) const {
  if (static_cast<int>(images.size()) != R_->nvars())
    throw StructuralError("substitute: wrong number of images");
  RingPtr T = images.empty() ? R_ : images[0].ring();
  CoeffPoly r(T);
  // cache powers per variable
  std::vector<std::vector<CoeffPoly>> pw(images.size());
  for (auto& [m, c] : t_) {
    CoeffPoly term = constant(T, c);
    for (int i = 0; i < R_->nvars(); ++i) {
      if (!m[i]) continue;
      auto& v = pw[i];
      if (v.empty()) v.push_back(constant(T, 1));
      while (v.size() <= m[i]) v.push_back(v.back() * images[i]);
      term = term * v[m[i]];
    }
    r += term;
  }
  return r;
}

std::pair<CoeffPoly, CoeffPoly> CoeffPoly::divide_var_power(int i, unsigned k) const {
  CoeffPoly q(R_), rem(R_);
  for (auto& [m, c] : t_) {
    if (m[i] >= k) {
      Mono mm = m;
      mm[i] = static_cast<std::uint16_t>(mm[i] - k);
      q.add_term(mm, c);
    } else {
      rem.add_term(m, c);
    }
  }
  return {q, rem};
}

CoeffPoly CoeffPoly::frobenius_map(const std::vector<CoeffPoly>& images) const {
  // scalars of F_p are fixed by Frobenius, so this is substitution
  return substitute(images);
}

std::uint32_t CoeffPoly::evaluate(const std::vector<std::uint32_t>& point) const {
  std::uint32_t p = R_->p, s = 0;
  for (auto& [m, c] : t_) {
    std::uint32_t v = c;
    for (int i = 0; i < R_->nvars(); ++i)
      if (m[i]) v = mod_mul(v, mod_pow(point.at(i) % p, m[i], p), p);
    s = mod_add(s, v, p);
  }
  return s;
}

std::string mono_str(const Mono& m, const Ring& R) {
  std::string s;
  for (int i = 0; i < R.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += R.names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

// highest degree first, then reverse lex; stable for golden files
std::string CoeffPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Mono, std::uint32_t>> v(t_.begin(), t_.end());
  std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
    int da = mono_degree(a.first), db = mono_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  std::uint32_t p = R_->p;
  for (auto& [m, c] : v) {
    // symmetric residues read better in witnesses
    bool neg = c > p / 2;
    std::uint32_t a = neg ? p - c : c;
    std::string ms = mono_str(m, *R_);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (ms.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << ms;
    }
  }
  return os.str();
}

}  // namespace mh
