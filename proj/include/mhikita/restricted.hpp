#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"
#include "mhikita/envsl2.hpp"
#include "mhikita/errors.hpp"
#include "mhikita/field.hpp"
#include "mhikita/req.hpp"
#include "mhikita/weyl.hpp"

namespace mh {

// what the axiom checker needs from an algebra. Letters are the symbols an element is
// written in (normal-ordered words); word_map sends each letter to an image and extends
// multiplicatively, fixing F_p scalars.
template <class E>
struct AlgebraTraits;

#define MH_ALGEBRA_TRAITS(E)                                                   \
  template <>                                                                  \
  struct AlgebraTraits<E> {                                                    \
    static std::vector<std::string> letters(const E& like);                    \
    static std::vector<E> letter_elems(const E& like);                         \
    static E word_map(const E& x, const std::vector<E>& img);                  \
    static E one(const E& like);                                               \
    static E hbar_pow(const E& like, unsigned k);                              \
    static bool divide_hbar(const E& x, unsigned k, E* q);                     \
    static E scale(const E& x, std::uint32_t c);                               \
    static std::uint32_t prime(const E& like);                                 \
    static std::string str(const E& x);                                        \
  }

MH_ALGEBRA_TRAITS(REqElement);
MH_ALGEBRA_TRAITS(WeylElement);
MH_ALGEBRA_TRAITS(PBWElement);
MH_ALGEBRA_TRAITS(CoeffPoly);
#undef MH_ALGEBRA_TRAITS

template <class E>
struct RestrictedTable {
  std::vector<std::string> names;
  std::vector<E> gens;
  std::vector<E> power;  // declared x^[p]
};

// a^[p] = a for the F_p-rational generators, hbar^[p] = hbar, (z^alpha)^[p] = 0
RestrictedTable<REqElement> req_restricted_table(const REqCtx& C);
// Weyl generators x_1, d_1, E_1, hbar with the powers 0, 0, E_1, hbar; corrupt = true sets E_1^[p] := 0
RestrictedTable<WeylElement> weyl_fixture_table(std::uint32_t p, bool corrupt);
// e, f, h with e^[p] = f^[p] = 0, h^[p] = h; the scalar variables (hbar, sigma) are their own powers
RestrictedTable<PBWElement> pbw_restricted_table(const RingPtr& R);
// polynomial ring in hbar, a, b with zero bracket and zero power map
RestrictedTable<CoeffPoly> commutative_table(std::uint32_t p);

template <class E>
E artin_schreier(const RestrictedTable<E>& T, std::size_t g) {
  using Tr = AlgebraTraits<E>;
  if (g >= T.power.size()) throw InputError("generator " + (g < T.names.size() ? T.names[g] : std::to_string(g)) + " has no declared restricted power");
  std::uint32_t p = Tr::prime(T.gens[g]);
  return T.gens[g].pow(p) - Tr::hbar_pow(T.gens[g], p - 1) * T.power[g];
}

struct AxiomCheck {
  std::string name;
  bool passed = true;
  int instances = 0;
  int failures = 0;
  std::string witness;
};

struct RestrictedReport {
  std::vector<AxiomCheck> checks;
  int samples = 0;
  bool all_passed() const {
    for (auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const AxiomCheck* find(const std::string& name) const {
    for (auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

struct Node {
  int kind = 0;  // 0 leaf, 1 sum, 2 scalar, 3 product
  int g = 0;
  std::uint32_t c = 0;
  int a = -1, b = -1;
  int deg = 1;
};

// leaves for every generator, then random trees whose products stay within max_degree
std::vector<Node> random_trees(int ngens, int samples, int max_degree, std::uint32_t p, std::uint64_t seed);

}  // namespace detail

// Checks the four axioms for the declared power map and both directions of the
// equivalence with s(x) = x^p - hbar^(p-1) x^[p] being a central algebra map.
// Direction 1 extends [p] to sample trees by the axioms and tests bracket, centrality and
// multiplicativity; direction 2 extends s from the letters as a ring map, recovers
// [p]' = (x^p - s(x)) / hbar^(p-1) and tests the axioms on [p]'.
template <class E>
RestrictedReport restricted_axioms_check(const RestrictedTable<E>& T, int samples, int max_degree, std::uint64_t seed,
                                         bool both_directions = true) {
  using Tr = AlgebraTraits<E>;
  if (T.gens.empty()) throw InputError("restricted table has no generators");
  if (T.power.size() != T.gens.size()) throw InputError("every generator needs a declared restricted power");
  const E& like = T.gens[0];
  std::uint32_t p = Tr::prime(like);
  E hp = Tr::hbar_pow(like, p - 1);
  auto comm = [](const E& a, const E& b) { return a * b - b * a; };
  auto hdiv = [&](const E& x, const std::string& what) {
    E q = x;
    if (!Tr::divide_hbar(x, p - 1, &q))
      throw StructuralError("flatness violation: " + what + " is not divisible by hbar^" + std::to_string(p - 1));
    return q;
  };

  RestrictedReport rep;
  std::vector<AxiomCheck> checks;
  auto slot = [&](const std::string& name) -> AxiomCheck& {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back(AxiomCheck{name, true, 0, 0, ""});
    return checks.back();
  };
  auto record = [&](const std::string& name, bool ok, const std::function<std::string()>& witness) {
    auto& c = slot(name);
    ++c.instances;
    if (!ok) {
      ++c.failures;
      if (c.passed) c.witness = witness();
      c.passed = false;
    }
  };

  auto nodes = detail::random_trees(static_cast<int>(T.gens.size()), samples, max_degree, p, seed);
  rep.samples = static_cast<int>(nodes.size());
  std::size_t n = nodes.size();
  std::vector<E> val(n, like), pw(n, like), pp(n, like);
  std::vector<std::string> label(n);

  try {
    // direction 1: [p] by the axioms
    for (std::size_t i = 0; i < n; ++i) {
      auto& nd = nodes[i];
      switch (nd.kind) {
        case 0:
          val[i] = T.gens[nd.g];
          pp[i] = T.power[nd.g];
          label[i] = T.names[nd.g];
          break;
        case 1: {
          val[i] = val[nd.a] + val[nd.b];
          E L = hdiv(val[i].pow(p) - pw[nd.a] - pw[nd.b], "(x+y)^p - x^p - y^p");
          pp[i] = pp[nd.a] + pp[nd.b] + L;
          label[i] = "(" + label[nd.a] + " + " + label[nd.b] + ")";
          break;
        }
        case 2:
          val[i] = Tr::scale(val[nd.a], nd.c);
          pp[i] = Tr::scale(pp[nd.a], mod_pow(nd.c, p, p));
          label[i] = std::to_string(nd.c) + "*" + label[nd.a];
          break;
        default: {
          val[i] = val[nd.a] * val[nd.b];
          E P = hdiv(val[i].pow(p) - pw[nd.a] * pw[nd.b], "(xy)^p - x^p y^p");
          pp[i] = pw[nd.a] * pp[nd.b] + pp[nd.a] * pw[nd.b] - hp * pp[nd.a] * pp[nd.b] + P;
          label[i] = "(" + label[nd.a] + ")*(" + label[nd.b] + ")";
        }
      }
      pw[i] = val[i].pow(p);
    }
    std::vector<E> s(n, like);
    for (std::size_t i = 0; i < n; ++i) s[i] = pw[i] - hp * pp[i];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t y = 0; y < T.gens.size(); ++y) {
        E lhs = hp * comm(pp[i], T.gens[y]);
        E rhs = T.gens[y];
        for (std::uint32_t k = 0; k < p; ++k) rhs = comm(val[i], rhs);
        record("bracket axiom", lhs == rhs, [&] {
          return "{" + label[i] + "^[p], " + T.names[y] + "} != (ad " + label[i] + ")^p(" + T.names[y] +
                 "): hbar^(p-1)[x^[p], y] = " + Tr::str(lhs) + ", (ad_[,] x)^p y = " + Tr::str(rhs);
        });
        E c = comm(s[i], T.gens[y]);
        record("s central", c.is_zero(), [&] { return "[s(" + label[i] + "), " + T.names[y] + "] = " + Tr::str(c); });
      }
      auto& nd = nodes[i];
      if (nd.kind == 1)
        record("s additive", s[i] == s[nd.a] + s[nd.b], [&] { return "s" + label[i] + " != s(x) + s(y)"; });
      if (nd.kind == 2)
        record("s semilinear", s[i] == Tr::scale(s[nd.a], mod_pow(nd.c, p, p)),
               [&] { return "s(" + label[i] + ") != c^p s(x)"; });
      if (nd.kind == 3)
        record("s multiplicative", s[i] == s[nd.a] * s[nd.b], [&] { return "s" + label[i] + " != s(x) s(y)"; });
    }

    if (both_directions) {
      // direction 2: s from the letters, [p]' recovered by hbar-division
      auto letters = Tr::letters(like);
      auto lel = Tr::letter_elems(like);
      std::vector<E> simg;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        auto it = std::find(T.names.begin(), T.names.end(), letters[k]);
        if (it == T.names.end()) throw InputError("generator " + letters[k] + " has no declared restricted power");
        std::size_t g = static_cast<std::size_t>(it - T.names.begin());
        if (T.gens[g] != lel[k]) throw InputError("table entry " + letters[k] + " is not the letter itself");
        simg.push_back(artin_schreier(T, g));
        for (std::size_t y = 0; y < T.gens.size(); ++y) {
          E c = comm(simg.back(), T.gens[y]);
          record("s central on letters", c.is_zero(),
                 [&] { return "[s(" + letters[k] + "), " + T.names[y] + "] = " + Tr::str(c); });
        }
      }
      std::vector<E> q(n, like);
      for (std::size_t i = 0; i < n; ++i)
        q[i] = hdiv(pw[i] - Tr::word_map(val[i], simg), "x^p - s(x)");
      for (std::size_t i = 0; i < n; ++i) {
        auto& nd = nodes[i];
        record("restricted powers agree", q[i] == pp[i],
               [&] { return "[p] from s differs on " + label[i] + ": " + Tr::str(q[i]) + " vs " + Tr::str(pp[i]); });
        for (std::size_t y = 0; y < T.gens.size(); ++y) {
          E lhs = hp * comm(q[i], T.gens[y]);
          E rhs = T.gens[y];
          for (std::uint32_t k = 0; k < p; ++k) rhs = comm(val[i], rhs);
          record("bracket axiom from s", lhs == rhs,
                 [&] { return "{" + label[i] + "^[p]', " + T.names[y] + "} != (ad " + label[i] + ")^p(" + T.names[y] + ")"; });
        }
        if (nd.kind == 1) {
          E L = hdiv(pw[i] - pw[nd.a] - pw[nd.b], "(x+y)^p - x^p - y^p");
          record("sum axiom", q[i] == q[nd.a] + q[nd.b] + L, [&] { return "sum axiom fails on " + label[i]; });
        }
        if (nd.kind == 2)
          record("scalar axiom", q[i] == Tr::scale(q[nd.a], mod_pow(nd.c, p, p)),
                 [&] { return "scalar axiom fails on " + label[i]; });
        if (nd.kind == 3) {
          E P = hdiv(pw[i] - pw[nd.a] * pw[nd.b], "(xy)^p - x^p y^p");
          E rhs = pw[nd.a] * q[nd.b] + q[nd.a] * pw[nd.b] - hp * q[nd.a] * q[nd.b] + P;
          record("product axiom", q[i] == rhs, [&] { return "product axiom fails on " + label[i]; });
        }
      }
    }
  } catch (const StructuralError& e) {
    AxiomCheck c{"hbar divisibility", false, 1, 1, ""};
    c.passed = false;
    c.instances = 1;
    c.failures = 1;
    c.witness = e.what();
    checks.push_back(c);
  }
  rep.checks = checks;
  return rep;
}

}  // namespace mh
