#include "mhikita/envsl2.hpp"

#include <sstream>

#include "mhikita/errors.hpp"

namespace mh {

PBWElement::PBWElement(RingPtr R) : R_(std::move(R)) {}

PBWElement PBWElement::scalar(const CoeffPoly& c) {
  PBWElement r(c.ring());
  r.add_term(PBWKey{}, c);
  return r;
}

PBWElement PBWElement::constant(RingPtr R, std::int64_t c) { return scalar(CoeffPoly::constant(R, c)); }

PBWElement PBWElement::monomial(RingPtr R, unsigned a, unsigned b, unsigned c, const CoeffPoly& coef) {
  PBWElement r(R);
  r.add_term(PBWKey{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)},
             coef);
  return r;
}

PBWElement PBWElement::e(RingPtr R) { return monomial(R, 0, 0, 1, CoeffPoly::constant(R, 1)); }
PBWElement PBWElement::f(RingPtr R) { return monomial(R, 1, 0, 0, CoeffPoly::constant(R, 1)); }
PBWElement PBWElement::h(RingPtr R) { return monomial(R, 0, 1, 0, CoeffPoly::constant(R, 1)); }
PBWElement PBWElement::hbar(RingPtr R) { return scalar(CoeffPoly::var(R, 0)); }

PBWElement PBWElement::casimir(RingPtr R) {
  PBWElement r(R);
  r.add_term({1, 0, 1}, CoeffPoly::constant(R, 4));
  r.add_term({0, 2, 0}, CoeffPoly::constant(R, 1));
  r.add_term({0, 1, 0}, CoeffPoly::var(R, 0).scaled(2));
  return r;
}

void PBWElement::add_term(const PBWKey& k, const CoeffPoly& c) {
  require_same_ring(R_, c.ring(), "PBWElement");
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  require_same_ring(R_, o.R_, "pbw +");
  for (auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  require_same_ring(R_, o.R_, "pbw -");
  for (auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement r = *this;
  r += o;
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement r = *this;
  r -= o;
  return r;
}

PBWElement PBWElement::operator-() const {
  PBWElement r(R_);
  for (auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

PBWElement PBWElement::operator*(const PBWElement& o) const { return u_mul(*this, o); }

PBWElement PBWElement::scaled(const CoeffPoly& c) const {
  PBWElement r(R_);
  for (auto& [k, a] : t_) r.add_term(k, a * c);
  return r;
}

PBWElement PBWElement::pow(unsigned e) const {
  PBWElement r = constant(R_, 1);
  PBWElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool PBWElement::operator==(const PBWElement& o) const {
  require_same_ring(R_, o.R_, "pbw ==");
  return t_ == o.t_;
}

PBWElement PBWElement::divide_hbar(unsigned k) const {
  PBWElement r(R_);
  for (auto& [key, c] : t_) {
    auto [q, rem] = c.divide_var_power(0, k);
    if (!rem.is_zero()) throw StructuralError("pbw element is not divisible by the requested power of hbar");
    r.add_term(key, q);
  }
  return r;
}

bool PBWElement::homogeneous_weight(int* w) const {
  bool first = true;
  int ref = 0;
  for (auto& [k, c] : t_) {
    int v = 2 * (int(k[2]) - int(k[0]));
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

std::string PBWElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* names[3] = {"f", "h", "e"};
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto& [k, c] = *it;
    std::string mono;
    for (int v = 0; v < 3; ++v)
      if (k[v]) {
        if (!mono.empty()) mono += "*";
        mono += names[v];
        if (k[v] > 1) mono += "^" + std::to_string(k[v]);
      }
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (mono.empty())
      os << "(" << cs << ")";
    else if (cs == "1")
      os << mono;
    else
      os << "(" << cs << ")*" << mono;
  }
  return os.str();
}

namespace {

using TermMap = std::map<PBWKey, CoeffPoly>;

void acc(TermMap& m, const PBWKey& k, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// (h - s hbar)^b h^rest expanded; calls out(power of h, power of hbar, coefficient)
template <class F>
void shifted_h_power(unsigned b, std::int64_t s, std::uint32_t p, F out) {
  // (h - s hbar)^b = sum_k C(b,k) h^(b-k) (-s hbar)^k
  std::uint32_t ms = mod_reduce(-s, p);
  for (unsigned k = 0; k <= b; ++k) {
    std::uint32_t c = mod_mul(binom_mod(b, k, p), mod_pow(ms, k, p), p);
    if (c) out(b - k, k, c);
  }
}

void left_f(TermMap& m) {
  TermMap r;
  for (auto& [k, c] : m) r.emplace(PBWKey{static_cast<std::uint16_t>(k[0] + 1), k[1], k[2]}, c);
  m.swap(r);
}

// h f^a = f^a (h - 2a hbar)
void left_h(TermMap& m, std::uint32_t p) {
  TermMap r;
  for (auto& [k, c] : m) {
    std::int64_t a = k[0];
    // f^a (h - 2a hbar) h^b e^c
    acc(r, PBWKey{k[0], static_cast<std::uint16_t>(k[1] + 1), k[2]}, c);
    if (a) {
      Mono hm{};
      hm[0] = 1;
      acc(r, k, c.times_mono(hm, mod_reduce(-2 * a, p)));
    }
  }
  m.swap(r);
}

// e f^a h^b e^c = f^a (h - 2hbar)^b e^(c+1) + a hbar f^(a-1) (h - (a-1) hbar) h^b e^c
void left_e(TermMap& m, std::uint32_t p) {
  TermMap r;
  for (auto& [k, c] : m) {
    unsigned a = k[0], b = k[1], cc = k[2];
    shifted_h_power(b, 2, p, [&](unsigned hp, unsigned hb, std::uint32_t co) {
      Mono hm{};
      hm[0] = static_cast<std::uint16_t>(hb);
      acc(r, PBWKey{k[0], static_cast<std::uint16_t>(hp), static_cast<std::uint16_t>(cc + 1)}, c.times_mono(hm, co));
    });
    if (a) {
      std::uint32_t am = mod_reduce(a, p);
      if (!am) continue;
      Mono h1{};
      h1[0] = 1;
      std::uint16_t a1 = static_cast<std::uint16_t>(a - 1);
      acc(r, PBWKey{a1, static_cast<std::uint16_t>(b + 1), k[2]}, c.times_mono(h1, am));
      Mono h2{};
      h2[0] = 2;
      acc(r, PBWKey{a1, k[1], k[2]}, c.times_mono(h2, mod_mul(am, mod_reduce(-std::int64_t(a - 1), p), p)));
    }
  }
  m.swap(r);
}

}  // namespace

PBWElement u_mul(const PBWElement& a, const PBWElement& b) {
  require_same_ring(a.ring(), b.ring(), "u_mul");
  std::uint32_t p = a.ring()->p;
  TermMap total;
  for (auto& [k, c] : a.terms()) {
    TermMap cur;
    for (auto& [k2, c2] : b.terms()) cur.emplace(k2, c2 * c);
    for (unsigned i = 0; i < k[2]; ++i) left_e(cur, p);
    for (unsigned i = 0; i < k[1]; ++i) left_h(cur, p);
    for (unsigned i = 0; i < k[0]; ++i) left_f(cur);
    for (auto& [k3, c3] : cur) acc(total, k3, c3);
  }
  PBWElement r(a.ring());
  for (auto& [k, c] : total) r.add_term(k, c);
  return r;
}

PBWElement u_commutator(const PBWElement& a, const PBWElement& b) { return a * b - b * a; }

RestrictedPowerTable sl2_restricted_table(RingPtr R) {
  RestrictedPowerTable t;
  t.gens = {{"e", PBWElement::e(R)}, {"f", PBWElement::f(R)}, {"h", PBWElement::h(R)}};
  t.power = {PBWElement(R), PBWElement(R), PBWElement::h(R)};
  return t;
}

CentralReport sl2_centrality(const PBWElement& z) {
  CentralReport r;
  const auto& R = z.ring();
  std::pair<const char*, PBWElement> gens[3] = {{"e", PBWElement::e(R)}, {"f", PBWElement::f(R)}, {"h", PBWElement::h(R)}};
  for (auto& [name, g] : gens) {
    auto c = u_commutator(z, g);
    if (!c.is_zero()) {
      r.central = false;
      r.witness_label = std::string("[z, ") + name + "]";
      r.witness = c.str();
      return r;
    }
  }
  return r;
}

RingPtr cartan_ring(const RingPtr& R) {
  auto names = R->names;
  names.push_back("h");
  return make_ring(R->p, names);
}

HarishChandraResult harish_chandra(const PBWElement& z, int shift_j) {
  auto rep = sl2_centrality(z);
  if (!rep.central) throw CheckError("harish_chandra: input is not central, " + rep.witness_label + " = " + rep.witness);
  const auto& R = z.ring();
  auto H = cartan_ring(R);
  int hv = R->nvars();
  std::vector<CoeffPoly> lift;
  for (int v = 0; v < hv; ++v) lift.push_back(CoeffPoly::var(H, v));
  CoeffPoly u(H);
  for (auto& [k, c] : z.terms())
    if (k[0] == 0 && k[2] == 0) u += c.substitute(lift) * CoeffPoly::var(H, hv, k[1]);
  auto shift = lift;
  shift.push_back(CoeffPoly::var(H, hv) - CoeffPoly::var(H, 0).scaled(mod_reduce(shift_j, R->p)));
  return {u, u.substitute(shift), shift_j};
}

PBWElement harish_chandra_inverse(const CoeffPoly& q, const RingPtr& R) {
  int hv = R->nvars();
  if (q.ring()->nvars() != hv + 1) throw StructuralError("harish_chandra_inverse: expected the Cartan ring");
  PBWElement omega = PBWElement::casimir(R);
  // h^(2k) = (w + hbar^2)^k with w -> casimir
  PBWElement w_plus = omega + PBWElement::scalar(CoeffPoly::var(R, 0, 2));
  std::vector<CoeffPoly> down;
  for (int v = 0; v < hv; ++v) down.push_back(CoeffPoly::var(R, v));
  down.push_back(CoeffPoly::constant(R, 0));
  PBWElement r(R);
  for (auto& [m, c] : q.terms()) {
    if (m[hv] % 2) throw StructuralError("harish_chandra_inverse: polynomial is not Weyl invariant");
    Mono rest = m;
    rest[hv] = 0;
    CoeffPoly coef = CoeffPoly::monomial(q.ring(), rest, c).substitute(down);
    r += w_plus.pow(m[hv] / 2).scaled(coef);
  }
  return r;
}

RingPtr springer_input_ring(std::uint32_t p) { return make_ring(p, {"hbar", "e", "f", "h", "sigma"}); }

int sigma_index(const RingPtr& R) {
  for (int v = 0; v < R->nvars(); ++v)
    if (R->names[v] == "sigma") return v;
  throw StructuralError("coefficient ring has no sigma variable");
}

CoeffPoly sigma_splitting(const RingPtr& R) {
  int s = sigma_index(R);
  return CoeffPoly::var(R, s, R->p) - CoeffPoly::var(R, 0, R->p - 1) * CoeffPoly::var(R, s);
}

PBWElement frobenius_splitting_springer(const CoeffPoly& x, const RingPtr& R) {
  std::uint32_t p = R->p;
  if (x.ring()->p != p || x.ring()->nvars() != 5) throw StructuralError("springer input must live over hbar, e, f, h, sigma");
  auto table = sl2_restricted_table(R);
  PBWElement hb = PBWElement::hbar(R).pow(p - 1);
  // s(g) = g^p - hbar^(p-1) g^[p]
  std::vector<PBWElement> img;
  for (std::size_t i = 0; i < table.gens.size(); ++i) img.push_back(table.gens[i].second.pow(p) - hb * table.power[i]);
  PBWElement sig = PBWElement::scalar(sigma_splitting(R));
  PBWElement r(R);
  for (auto& [m, c] : x.terms()) {
    if (m[0]) throw StructuralError("springer input must not involve hbar");
    PBWElement t = PBWElement::constant(R, c);
    for (int g = 0; g < 3; ++g)
      if (m[g + 1]) t = t * img[g].pow(m[g + 1]);
    if (m[4]) t = t * sig.pow(m[4]);
    r += t;
  }
  return r;
}

CoeffPoly sl2_weight0_to_cartan(const PBWElement& w, const RingPtr& A0) {
  const auto& R = w.ring();
  int hv = R->nvars();
  if (A0->nvars() != hv + 1) throw StructuralError("sl2_weight0_to_cartan: expected the Cartan ring");
  std::uint32_t p = R->p;
  std::vector<CoeffPoly> lift;
  for (int v = 0; v < hv; ++v) lift.push_back(CoeffPoly::var(A0, v));
  CoeffPoly hb = CoeffPoly::var(A0, 0), h = CoeffPoly::var(A0, hv), sg = CoeffPoly::var(A0, sigma_index(R));
  std::uint32_t quarter = mod_inv(4, p);
  auto phi = [&](const CoeffPoly& x) { return (sg * sg - hb * hb - x * x - hb.scaled(2) * x).scaled(quarter); };
  CoeffPoly r(A0);
  for (auto& [k, c] : w.terms()) {
    if (k[0] != k[2]) throw StructuralError("sl2_weight0_to_cartan: element has nonzero weight");
    unsigned j = k[0];
    CoeffPoly t = c.substitute(lift) * (h + hb.scaled(mod_reduce(2 * j, p))).pow(k[1]);
    for (unsigned i = 0; i < j; ++i) t = t * phi(h + hb.scaled(mod_reduce(2 * i, p)));
    r += t;
  }
  return r;
}

}  // namespace mh
