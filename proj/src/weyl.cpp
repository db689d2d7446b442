#include "mhikita/weyl.hpp"

#include <sstream>

#include "mhikita/errors.hpp"

namespace mh {

WeylElement::WeylElement(RingPtr R, int n) : R_(std::move(R)), n_(n) {
  if (n < 0 || n > kMaxN) throw StructuralError("Weyl algebra rank must be in [0,8]");
}

WeylElement WeylElement::scalar(const CoeffPoly& c, int n) {
  WeylElement r(c.ring(), n);
  r.add_term(WKey{}, c);
  return r;
}

WeylElement WeylElement::constant(RingPtr R, int n, std::int64_t c) {
  return scalar(CoeffPoly::constant(R, c), n);
}

WeylElement WeylElement::monomial(RingPtr R, int n, const WExp& a, const WExp& b, const CoeffPoly& c) {
  WeylElement r(R, n);
  r.add_term(WKey{a, b}, c);
  return r;
}

WeylElement WeylElement::x(RingPtr R, int n, int i) {
  WExp a{};
  a.at(i) = 1;
  return monomial(R, n, a, WExp{}, CoeffPoly::constant(R, 1));
}

WeylElement WeylElement::d(RingPtr R, int n, int i) {
  WExp b{};
  b.at(i) = 1;
  return monomial(R, n, WExp{}, b, CoeffPoly::constant(R, 1));
}

WeylElement WeylElement::euler(RingPtr R, int n, int i) {
  WExp a{};
  a.at(i) = 1;
  return monomial(R, n, a, a, CoeffPoly::constant(R, 1));
}

WeylElement WeylElement::hbar(RingPtr R, int n) { return scalar(CoeffPoly::var(R, 0), n); }

void WeylElement::add_term(const WKey& k, const CoeffPoly& c) {
  require_same_ring(R_, c.ring(), "WeylElement");
  if (c.is_zero()) return;
  for (int i = n_; i < kMaxN; ++i)
    if (k.a[i] || k.b[i]) throw StructuralError("Weyl monomial uses an index beyond n");
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void WeylElement::compatible(const WeylElement& o, const char* where) const {
  if (n_ != o.n_) throw StructuralError(std::string("Weyl ranks differ in ") + where);
  require_same_ring(R_, o.R_, where);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  compatible(o, "weyl +");
  for (auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  compatible(o, "weyl -");
  for (auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  WeylElement r = *this;
  r += o;
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  WeylElement r = *this;
  r -= o;
  return r;
}

WeylElement WeylElement::operator-() const {
  WeylElement r(R_, n_);
  for (auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const { return weyl_mul(*this, o); }

WeylElement WeylElement::scaled(const CoeffPoly& c) const {
  WeylElement r(R_, n_);
  for (auto& [k, a] : t_) r.add_term(k, a * c);
  return r;
}

WeylElement WeylElement::pow(unsigned e) const {
  WeylElement r = constant(R_, n_, 1);
  WeylElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool WeylElement::operator==(const WeylElement& o) const {
  compatible(o, "weyl ==");
  return t_ == o.t_;
}

std::vector<int> monomial_weight(const WKey& k, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = int(k.a[i]) - int(k.b[i]);
  return w;
}

bool WeylElement::homogeneous_weight(std::vector<int>* w) const {
  bool first = true;
  std::vector<int> ref(n_, 0);
  for (auto& [k, c] : t_) {
    auto v = monomial_weight(k, n_);
    if (first) {
      ref = v;
      first = false;
    } else if (v != ref) {
      return false;
    }
  }
  if (w) *w = ref;
  return true;
}

int WeylElement::max_conical_degree() const {
  int best = -1;
  for (auto& [k, c] : t_) {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += k.a[i] + k.b[i];
    for (auto& [m, v] : c.terms()) best = std::max(best, d + 2 * m[0]);
  }
  return best;
}

std::string WeylElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto& [k, c] = *it;
    std::string mono;
    for (int i = 0; i < n_; ++i)
      if (k.a[i]) {
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1) + (k.a[i] > 1 ? "^" + std::to_string(k.a[i]) : "");
      }
    for (int i = 0; i < n_; ++i)
      if (k.b[i]) {
        if (!mono.empty()) mono += "*";
        mono += "d" + std::to_string(i + 1) + (k.b[i] > 1 ? "^" + std::to_string(k.b[i]) : "");
      }
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (mono.empty()) {
      os << "(" << cs << ")";
    } else if (cs == "1") {
      os << mono;
    } else {
      os << "(" << cs << ")*" << mono;
    }
  }
  return os.str();
}

namespace {

// d^b x^a = sum_k C(b,k) C(a,k) k! hbar^k x^{a-k} d^{b-k}, one index at a time
struct Reorder {
  unsigned k;
  std::uint32_t coef;
};

void expand(const WKey& left, const WKey& right, int n, int i, WExp& kvec, std::uint32_t coef, unsigned ktot,
            std::uint32_t p, std::vector<std::pair<WKey, std::pair<unsigned, std::uint32_t>>>& out) {
  if (i == n) {
    WKey r{};
    for (int j = 0; j < n; ++j) {
      r.a[j] = static_cast<std::uint16_t>(left.a[j] + right.a[j] - kvec[j]);
      r.b[j] = static_cast<std::uint16_t>(left.b[j] + right.b[j] - kvec[j]);
    }
    out.push_back({r, {ktot, coef}});
    return;
  }
  unsigned b = left.b[i], a = right.a[i];
  unsigned kmax = std::min(a, b);
  for (unsigned k = 0; k <= kmax; ++k) {
    std::uint32_t c = mod_mul(mod_mul(binom_mod(b, k, p), binom_mod(a, k, p), p), factorial_mod(k, p), p);
    if (!c) continue;
    kvec[i] = static_cast<std::uint16_t>(k);
    expand(left, right, n, i + 1, kvec, mod_mul(coef, c, p), ktot + k, p, out);
  }
  kvec[i] = 0;
}

}  // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (a.n() != b.n()) throw StructuralError("Weyl ranks differ in weyl_mul");
  require_same_ring(a.ring(), b.ring(), "weyl_mul");
  const auto& R = a.ring();
  std::uint32_t p = R->p;
  int n = a.n();
  std::map<WKey, CoeffPoly> acc;
  std::vector<std::pair<WKey, std::pair<unsigned, std::uint32_t>>> parts;
  for (auto& [k1, c1] : a.terms())
    for (auto& [k2, c2] : b.terms()) {
      parts.clear();
      WExp kvec{};
      expand(k1, k2, n, 0, kvec, 1 % p, 0, p, parts);
      CoeffPoly c12 = c1 * c2;
      for (auto& [key, kc] : parts) {
        Mono hm{};
        hm[0] = static_cast<std::uint16_t>(kc.first);
        CoeffPoly term = c12.times_mono(hm, kc.second);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, std::move(term));
        else
          it->second += term;
      }
    }
  WeylElement r(R, n);
  for (auto& [k, c] : acc)
    if (!c.is_zero()) r.add_term(k, c);
  return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement weight_component(const WeylElement& w, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != w.n()) throw StructuralError("weight vector has wrong length");
  WeylElement r(w.ring(), w.n());
  for (auto& [k, c] : w.terms())
    if (monomial_weight(k, w.n()) == lambda) r.add_term(k, c);
  return r;
}

WeylElement monopole(RingPtr R, const std::vector<int>& lambda) {
  int n = static_cast<int>(lambda.size());
  WExp a{}, b{};
  for (int i = 0; i < n; ++i) {
    if (lambda[i] > 0) a[i] = static_cast<std::uint16_t>(lambda[i]);
    if (lambda[i] < 0) b[i] = static_cast<std::uint16_t>(-lambda[i]);
  }
  return WeylElement::monomial(R, n, a, b, CoeffPoly::constant(R, 1));
}

CommutativePair::CommutativePair(std::uint32_t p, int n) : p_(p), n_(n) {
  require_odd_prime(p);
  if (n < 0 || n > kMaxN) throw StructuralError("rank must be in [0,8]");
}

CommutativePair CommutativePair::constant(std::uint32_t p, int n, std::int64_t c) {
  CommutativePair r(p, n);
  r.add_term(WKey{}, mod_reduce(c, p));
  return r;
}

CommutativePair CommutativePair::x(std::uint32_t p, int n, int i) {
  CommutativePair r(p, n);
  WKey k{};
  k.a.at(i) = 1;
  r.add_term(k, 1);
  return r;
}

CommutativePair CommutativePair::y(std::uint32_t p, int n, int i) {
  CommutativePair r(p, n);
  WKey k{};
  k.b.at(i) = 1;
  r.add_term(k, 1);
  return r;
}

void CommutativePair::add_term(const WKey& k, std::uint32_t c) {
  c %= p_;
  if (!c) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second = mod_add(it->second, c, p_);
    if (!it->second) t_.erase(it);
  }
}

CommutativePair CommutativePair::operator+(const CommutativePair& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw StructuralError("commutative pair contexts differ");
  CommutativePair r = *this;
  for (auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

CommutativePair CommutativePair::operator*(const CommutativePair& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw StructuralError("commutative pair contexts differ");
  CommutativePair r(p_, n_);
  for (auto& [k1, c1] : t_)
    for (auto& [k2, c2] : o.t_) {
      WKey k{};
      for (int i = 0; i < n_; ++i) {
        k.a[i] = static_cast<std::uint16_t>(k1.a[i] + k2.a[i]);
        k.b[i] = static_cast<std::uint16_t>(k1.b[i] + k2.b[i]);
      }
      r.add_term(k, mod_mul(c1, c2, p_));
    }
  return r;
}

CommutativePair CommutativePair::scaled(std::int64_t c) const {
  CommutativePair r(p_, n_);
  for (auto& [k, a] : t_) r.add_term(k, mod_mul(a, mod_reduce(c, p_), p_));
  return r;
}

WeylElement frobenius_splitting_weyl(const CommutativePair& f, RingPtr R) {
  if (R->p != f.p()) throw StructuralError("frobenius_splitting_weyl: prime mismatch");
  int n = f.n();
  std::uint32_t p = R->p;
  std::vector<WeylElement> lx, ly;
  for (int i = 0; i < n; ++i) {
    lx.push_back(WeylElement::x(R, n, i).pow(p));
    ly.push_back(WeylElement::d(R, n, i).pow(p));
  }
  WeylElement r(R, n);
  for (auto& [k, c] : f.terms()) {
    // c^p = c on F_p; images are central so the order of factors is irrelevant
    WeylElement t = WeylElement::constant(R, n, mod_pow(c, p, p));
    for (int i = 0; i < n; ++i) {
      if (k.a[i]) t = t * lx[i].pow(k.a[i]);
      if (k.b[i]) t = t * ly[i].pow(k.b[i]);
    }
    r += t;
  }
  return r;
}

WeylElement naive_quantization(const CommutativePair& f, RingPtr R) {
  WeylElement r(R, f.n());
  for (auto& [k, c] : f.terms()) r.add_term(k, CoeffPoly::constant(R, c));
  return r;
}

CentralityResult centrality_check(const WeylElement& w) {
  CentralityResult res;
  for (int i = 0; i < w.n(); ++i) {
    for (int which = 0; which < 2; ++which) {
      WeylElement g = which == 0 ? WeylElement::x(w.ring(), w.n(), i) : WeylElement::d(w.ring(), w.n(), i);
      WeylElement c = commutator(w, g);
      if (!c.is_zero()) {
        res.central = false;
        res.witness_label = std::string("[w, ") + (which == 0 ? "x" : "d") + std::to_string(i + 1) + "]";
        res.witness = c.str();
        return res;
      }
    }
  }
  return res;
}

EulerFactorization euler_factorization(RingPtr R, int n, unsigned k, int i) {
  if (k < 1) throw StructuralError("euler_factorization needs k >= 1");
  WExp a{};
  a.at(i) = static_cast<std::uint16_t>(k);
  WeylElement E = WeylElement::euler(R, n, i);
  WeylElement h = WeylElement::hbar(R, n);
  WeylElement minus = WeylElement::constant(R, n, 1), plus = minus;
  for (unsigned j = 0; j < k; ++j) {
    minus = minus * (E - h.scaled(CoeffPoly::constant(R, j)));
    plus = plus * (E + h.scaled(CoeffPoly::constant(R, j)));
  }
  return {WeylElement::monomial(R, n, a, a, CoeffPoly::constant(R, 1)), minus, plus};
}

RingPtr euler_ring(const RingPtr& R, int n) {
  auto names = R->names;
  for (int i = 0; i < n; ++i) names.push_back("E" + std::to_string(i + 1));
  return make_ring(R->p, names);
}

CoeffPoly weight0_to_euler(const WeylElement& w, const RingPtr& ER) {
  int n = w.n(), base = w.ring()->nvars();
  if (ER->nvars() != base + n) throw StructuralError("weight0_to_euler: ring has wrong size");
  std::vector<CoeffPoly> lift;
  for (int v = 0; v < base; ++v) lift.push_back(CoeffPoly::var(ER, v));
  CoeffPoly h = CoeffPoly::var(ER, 0);
  CoeffPoly r(ER);
  for (auto& [k, c] : w.terms()) {
    if (k.a != k.b) throw StructuralError("weight0_to_euler: element has nonzero weight");
    CoeffPoly t = c.substitute(lift);
    for (int i = 0; i < n; ++i) {
      CoeffPoly E = CoeffPoly::var(ER, base + i);
      for (unsigned j = 0; j < k.a[i]; ++j) t = t * (E - h.scaled(j % ER->p));
    }
    r += t;
  }
  return r;
}

WeylElement euler_to_weyl(const CoeffPoly& f, const RingPtr& R, int n) {
  int base = R->nvars();
  if (f.ring()->nvars() != base + n) throw StructuralError("euler_to_weyl: ring has wrong size");
  std::vector<WeylElement> gens;
  for (int v = 0; v < base; ++v) gens.push_back(WeylElement::scalar(CoeffPoly::var(R, v), n));
  for (int i = 0; i < n; ++i) gens.push_back(WeylElement::euler(R, n, i));
  WeylElement r(R, n);
  for (auto& [m, c] : f.terms()) {
    WeylElement t = WeylElement::constant(R, n, c);
    for (int v = 0; v < base + n; ++v)
      if (m[v]) t = t * gens[v].pow(m[v]);
    r += t;
  }
  return r;
}

}  // namespace mh
