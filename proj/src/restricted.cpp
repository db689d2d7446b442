#include "mhikita/restricted.hpp"

namespace mh {

namespace {

template <class E>
E mono_image(const Mono& m, int nv, const std::vector<E>& img, std::size_t offset, E acc) {
  for (int v = 0; v < nv; ++v)
    for (unsigned k = 0; k < m[v]; ++k) acc = acc * img[offset + v];
  return acc;
}

}  // namespace

// ---- R_eq

std::vector<std::string> AlgebraTraits<REqElement>::letters(const REqElement& like) {
  auto& C = like.context();
  std::vector<std::string> out;
  for (int l = 0; l < C->nz; ++l) out.push_back("z" + std::to_string(l + 1));
  for (auto& n : C->R->names) out.push_back(n);
  return out;
}

std::vector<REqElement> AlgebraTraits<REqElement>::letter_elems(const REqElement& like) {
  auto& C = like.context();
  std::vector<REqElement> out;
  for (int l = 0; l < C->nz; ++l) out.push_back(REqElement::z(C, l));
  for (int v = 0; v < C->R->nvars(); ++v) out.push_back(REqElement::var(C, v));
  return out;
}

REqElement AlgebraTraits<REqElement>::word_map(const REqElement& x, const std::vector<REqElement>& img) {
  auto& C = x.context();
  REqElement r(C);
  for (auto& [e, f] : x.terms()) {
    REqElement zpart = REqElement::constant(C, 1);
    for (int l = 0; l < C->nz; ++l)
      for (unsigned k = 0; k < e[l]; ++k) zpart = zpart * img[l];
    for (auto& [m, c] : f.terms())
      r = r + mono_image(m, C->R->nvars(), img, C->nz, zpart).scaled(c);
  }
  return r;
}

REqElement AlgebraTraits<REqElement>::one(const REqElement& like) { return REqElement::constant(like.context(), 1); }
REqElement AlgebraTraits<REqElement>::hbar_pow(const REqElement& like, unsigned k) {
  return REqElement::term(like.context(), ZExp{}, CoeffPoly::var(like.context()->R, 0, k));
}
bool AlgebraTraits<REqElement>::divide_hbar(const REqElement& x, unsigned k, REqElement* q) { return x.divide_hbar(k, q); }
REqElement AlgebraTraits<REqElement>::scale(const REqElement& x, std::uint32_t c) { return x.scaled(c); }
std::uint32_t AlgebraTraits<REqElement>::prime(const REqElement& like) { return like.context()->R->p; }
std::string AlgebraTraits<REqElement>::str(const REqElement& x) { return x.str(); }

// ---- Weyl

std::vector<std::string> AlgebraTraits<WeylElement>::letters(const WeylElement& like) {
  std::vector<std::string> out;
  for (int i = 0; i < like.n(); ++i) out.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < like.n(); ++i) out.push_back("d" + std::to_string(i + 1));
  for (auto& n : like.ring()->names) out.push_back(n);
  return out;
}

std::vector<WeylElement> AlgebraTraits<WeylElement>::letter_elems(const WeylElement& like) {
  auto R = like.ring();
  int n = like.n();
  std::vector<WeylElement> out;
  for (int i = 0; i < n; ++i) out.push_back(WeylElement::x(R, n, i));
  for (int i = 0; i < n; ++i) out.push_back(WeylElement::d(R, n, i));
  for (int v = 0; v < R->nvars(); ++v) out.push_back(WeylElement::scalar(CoeffPoly::var(R, v), n));
  return out;
}

WeylElement AlgebraTraits<WeylElement>::word_map(const WeylElement& x, const std::vector<WeylElement>& img) {
  auto R = x.ring();
  int n = x.n();
  WeylElement r(R, n);
  for (auto& [k, coef] : x.terms()) {
    WeylElement w = WeylElement::constant(R, n, 1);
    for (int i = 0; i < n; ++i)
      for (unsigned e = 0; e < k.a[i]; ++e) w = w * img[i];
    for (int i = 0; i < n; ++i)
      for (unsigned e = 0; e < k.b[i]; ++e) w = w * img[n + i];
    for (auto& [m, c] : coef.terms())
      r += mono_image(m, R->nvars(), img, 2 * n, WeylElement::constant(R, n, c)) * w;
  }
  return r;
}

WeylElement AlgebraTraits<WeylElement>::one(const WeylElement& like) { return WeylElement::constant(like.ring(), like.n(), 1); }
WeylElement AlgebraTraits<WeylElement>::hbar_pow(const WeylElement& like, unsigned k) {
  return WeylElement::scalar(CoeffPoly::var(like.ring(), 0, k), like.n());
}
bool AlgebraTraits<WeylElement>::divide_hbar(const WeylElement& x, unsigned k, WeylElement* q) {
  WeylElement r(x.ring(), x.n());
  for (auto& [key, c] : x.terms()) {
    auto [quo, rem] = c.divide_var_power(0, k);
    if (!rem.is_zero()) return false;
    r.add_term(key, quo);
  }
  if (q) *q = r;
  return true;
}
WeylElement AlgebraTraits<WeylElement>::scale(const WeylElement& x, std::uint32_t c) {
  return x.scaled(CoeffPoly::constant(x.ring(), c));
}
std::uint32_t AlgebraTraits<WeylElement>::prime(const WeylElement& like) { return like.ring()->p; }
std::string AlgebraTraits<WeylElement>::str(const WeylElement& x) { return x.str(); }

// ---- U_hbar(sl2)

std::vector<std::string> AlgebraTraits<PBWElement>::letters(const PBWElement& like) {
  std::vector<std::string> out{"f", "h", "e"};
  for (auto& n : like.ring()->names) out.push_back(n);
  return out;
}

std::vector<PBWElement> AlgebraTraits<PBWElement>::letter_elems(const PBWElement& like) {
  auto R = like.ring();
  std::vector<PBWElement> out{PBWElement::f(R), PBWElement::h(R), PBWElement::e(R)};
  for (int v = 0; v < R->nvars(); ++v) out.push_back(PBWElement::scalar(CoeffPoly::var(R, v)));
  return out;
}

PBWElement AlgebraTraits<PBWElement>::word_map(const PBWElement& x, const std::vector<PBWElement>& img) {
  auto R = x.ring();
  PBWElement r(R);
  for (auto& [k, coef] : x.terms()) {
    PBWElement w = PBWElement::constant(R, 1);
    for (int t = 0; t < 3; ++t)
      for (unsigned e = 0; e < k[t]; ++e) w = w * img[t];
    for (auto& [m, c] : coef.terms()) r += mono_image(m, R->nvars(), img, 3, PBWElement::constant(R, c)) * w;
  }
  return r;
}

PBWElement AlgebraTraits<PBWElement>::one(const PBWElement& like) { return PBWElement::constant(like.ring(), 1); }
PBWElement AlgebraTraits<PBWElement>::hbar_pow(const PBWElement& like, unsigned k) {
  return PBWElement::scalar(CoeffPoly::var(like.ring(), 0, k));
}
bool AlgebraTraits<PBWElement>::divide_hbar(const PBWElement& x, unsigned k, PBWElement* q) {
  try {
    auto r = x.divide_hbar(k);
    if (q) *q = r;
    return true;
  } catch (const StructuralError&) {
    return false;
  }
}
PBWElement AlgebraTraits<PBWElement>::scale(const PBWElement& x, std::uint32_t c) {
  return x.scaled(CoeffPoly::constant(x.ring(), c));
}
std::uint32_t AlgebraTraits<PBWElement>::prime(const PBWElement& like) { return like.ring()->p; }
std::string AlgebraTraits<PBWElement>::str(const PBWElement& x) { return x.str(); }

// ---- commutative polynomials

std::vector<std::string> AlgebraTraits<CoeffPoly>::letters(const CoeffPoly& like) { return like.ring()->names; }

std::vector<CoeffPoly> AlgebraTraits<CoeffPoly>::letter_elems(const CoeffPoly& like) {
  std::vector<CoeffPoly> out;
  for (int v = 0; v < like.ring()->nvars(); ++v) out.push_back(CoeffPoly::var(like.ring(), v));
  return out;
}

CoeffPoly AlgebraTraits<CoeffPoly>::word_map(const CoeffPoly& x, const std::vector<CoeffPoly>& img) {
  CoeffPoly r(x.ring());
  for (auto& [m, c] : x.terms()) r += mono_image(m, x.ring()->nvars(), img, 0, CoeffPoly::constant(x.ring(), c));
  return r;
}

CoeffPoly AlgebraTraits<CoeffPoly>::one(const CoeffPoly& like) { return CoeffPoly::constant(like.ring(), 1); }
CoeffPoly AlgebraTraits<CoeffPoly>::hbar_pow(const CoeffPoly& like, unsigned k) { return CoeffPoly::var(like.ring(), 0, k); }
bool AlgebraTraits<CoeffPoly>::divide_hbar(const CoeffPoly& x, unsigned k, CoeffPoly* q) {
  auto [quo, rem] = x.divide_var_power(0, k);
  if (!rem.is_zero()) return false;
  if (q) *q = quo;
  return true;
}
CoeffPoly AlgebraTraits<CoeffPoly>::scale(const CoeffPoly& x, std::uint32_t c) { return x.scaled(c); }
std::uint32_t AlgebraTraits<CoeffPoly>::prime(const CoeffPoly& like) { return like.ring()->p; }
std::string AlgebraTraits<CoeffPoly>::str(const CoeffPoly& x) { return x.str(); }

// ---- tables

RestrictedTable<REqElement> req_restricted_table(const REqCtx& C) {
  RestrictedTable<REqElement> T;
  REqElement like(C);
  T.names = AlgebraTraits<REqElement>::letters(like);
  T.gens = AlgebraTraits<REqElement>::letter_elems(like);
  for (std::size_t k = 0; k < T.gens.size(); ++k)
    T.power.push_back(static_cast<int>(k) < C->nz ? REqElement(C) : T.gens[k]);
  return T;
}

RestrictedTable<WeylElement> weyl_fixture_table(std::uint32_t p, bool corrupt) {
  auto R = make_ring(p, {"hbar"});
  RestrictedTable<WeylElement> T;
  WeylElement zero(R, 1);
  T.names = {"x1", "d1", "E1", "hbar"};
  T.gens = {WeylElement::x(R, 1, 0), WeylElement::d(R, 1, 0), WeylElement::euler(R, 1, 0), WeylElement::hbar(R, 1)};
  T.power = {zero, zero, corrupt ? zero : WeylElement::euler(R, 1, 0), WeylElement::hbar(R, 1)};
  return T;
}

RestrictedTable<PBWElement> pbw_restricted_table(const RingPtr& R) {
  auto src = sl2_restricted_table(R);
  RestrictedTable<PBWElement> T;
  for (std::size_t k = 0; k < src.gens.size(); ++k) {
    T.names.push_back(src.gens[k].first);
    T.gens.push_back(src.gens[k].second);
    T.power.push_back(src.power[k]);
  }
  for (int v = 0; v < R->nvars(); ++v) {
    T.names.push_back(R->names[v]);
    T.gens.push_back(PBWElement::scalar(CoeffPoly::var(R, v)));
    T.power.push_back(T.gens.back());
  }
  return T;
}

RestrictedTable<CoeffPoly> commutative_table(std::uint32_t p) {
  auto R = make_ring(p, {"hbar", "a", "b"});
  RestrictedTable<CoeffPoly> T;
  T.names = R->names;
  for (int v = 0; v < 3; ++v) {
    T.gens.push_back(CoeffPoly::var(R, v));
    T.power.push_back(CoeffPoly(R));
  }
  return T;
}

namespace detail {

std::vector<Node> random_trees(int ngens, int samples, int max_degree, std::uint32_t p, std::uint64_t seed) {
  std::vector<Node> nodes;
  for (int g = 0; g < ngens; ++g) {
    Node nd;
    nd.g = g;
    nodes.push_back(nd);
  }
  std::mt19937_64 rng(seed);
  std::function<int(int)> grow = [&](int depth) -> int {
    if (depth == 0 || rng() % 3 == 0) return static_cast<int>(rng() % ngens);
    Node nd;
    nd.kind = 1 + static_cast<int>(rng() % 3);
    nd.a = grow(depth - 1);
    if (nd.kind == 2) {
      nd.c = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
      nd.deg = nodes[nd.a].deg;
    } else {
      nd.b = grow(depth - 1);
      if (nd.kind == 3 && nodes[nd.a].deg + nodes[nd.b].deg > max_degree) nd.kind = 1;
      nd.deg = nd.kind == 3 ? nodes[nd.a].deg + nodes[nd.b].deg : std::max(nodes[nd.a].deg, nodes[nd.b].deg);
    }
    nodes.push_back(nd);
    return static_cast<int>(nodes.size()) - 1;
  };
  for (int s = 0; s < samples; ++s) grow(3);
  // one word reaching the degree bound, cycling through the generators
  int prev = 0;
  for (int k = 1; k < max_degree; ++k) {
    Node nd;
    nd.kind = 3;
    nd.a = prev;
    nd.b = k % ngens;
    nd.deg = nodes[prev].deg + 1;
    nodes.push_back(nd);
    prev = static_cast<int>(nodes.size()) - 1;
  }
  return nodes;
}

}  // namespace detail

}  // namespace mh
