#include "mhikita/roots.hpp"

#include <algorithm>
#include <cstdlib>

#include "mhikita/envsl2.hpp"
#include "mhikita/errors.hpp"
#include "mhikita/fplinalg.hpp"
#include "mhikita/intmat.hpp"
#include "mhikita/novikov.hpp"
#include "mhikita/weyl.hpp"

namespace mh {

std::int64_t weight_pair(const Weight& sigma, const Weight& w) {
  if (sigma.size() != w.size()) throw StructuralError("weight pairing: lengths differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += sigma[i] * w[i];
  return s;
}

namespace {

std::int64_t l1(const Weight& w) {
  std::int64_t s = 0;
  for (auto x : w) s += std::llabs(x);
  return s;
}

void enum_l1(int n, int i, int budget, Weight& cur, std::vector<Weight>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (int v = -budget; v <= budget; ++v) {
    cur[i] = v;
    enum_l1(n, i + 1, budget - std::abs(v), cur, out);
  }
  cur[i] = 0;
}

// nonnegative vectors of length n with sum <= t
void enum_nonneg(int n, int i, int t, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= t; ++v) {
    cur[i] = v;
    enum_nonneg(n, i + 1, t - v, cur, out);
  }
  cur[i] = 0;
}

template <class Key>
struct Cell {
  std::vector<Key> basis;
  std::map<Key, int> index;
  void add(const Key& k) {
    index.emplace(k, static_cast<int>(basis.size()));
    basis.push_back(k);
  }
};

void finish(RootSystem& rs) {
  for (auto& [w, m] : rs.weights) {
    bool zero = std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
    if (!zero) rs.roots.push_back(w);
  }
}

}  // namespace

std::vector<Weight> invariant_weights(const GaugeData& d, int bound) {
  std::vector<Weight> all, out;
  Weight cur(d.n, 0);
  enum_l1(d.n, 0, bound, cur, all);
  for (auto& w : all) {
    bool ok = true;
    for (int j = 0; j < d.k && ok; ++j) {
      std::int64_t s = 0;
      for (int i = 0; i < d.n; ++i) s += d.iota[i][j] * w[i];
      ok = s == 0;
    }
    if (ok) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSystem equivariant_roots_hypertoric(const GaugeData& d, std::uint32_t p, int window) {
  if (window < 2) throw InputError("equivariant roots need a conical window of at least 2");
  validate_gauge(d);
  auto R = make_ring(p, {"hbar"});
  int n = d.n;
  using Key = std::pair<WKey, int>;  // monomial and hbar exponent
  std::map<std::pair<Weight, int>, Cell<Key>> cells;
  auto lams = invariant_weights(d, window);
  for (int deg = 1; deg <= window; ++deg)
    for (auto& lam : lams) {
      std::int64_t base = l1(lam);
      if (base > deg || (deg - base) % 2) continue;
      Cell<Key> cell;
      std::vector<std::vector<int>> cs;
      std::vector<int> cur(n, 0);
      enum_nonneg(n, 0, static_cast<int>((deg - base) / 2), cur, cs);
      for (auto& c : cs) {
        int sc = 0;
        WKey k{};
        for (int i = 0; i < n; ++i) {
          sc += c[i];
          k.a[i] = static_cast<std::uint16_t>(c[i] + std::max<std::int64_t>(lam[i], 0));
          k.b[i] = static_cast<std::uint16_t>(c[i] + std::max<std::int64_t>(-lam[i], 0));
        }
        cell.add({k, static_cast<int>((deg - base) / 2 - sc)});
      }
      cells.emplace(std::make_pair(lam, deg), std::move(cell));
    }

  RootSystem rs;
  rs.dim = n;
  rs.window = window;
  for (auto& [key, cell] : cells) {
    auto& [lam, deg] = key;
    FpEchelon ech(p, cell.basis.size());
    for (auto& [k1, c1] : cells) {
      int d2 = deg - k1.second;
      if (k1.second >= deg || d2 < 1) continue;
      Weight l2(n);
      for (int i = 0; i < n; ++i) l2[i] = lam[i] - k1.first[i];
      auto it = cells.find({l2, d2});
      if (it == cells.end()) continue;
      for (auto& b1 : c1.basis)
        for (auto& b2 : it->second.basis) {
          auto m1 = WeylElement::monomial(R, n, b1.first.a, b1.first.b, CoeffPoly::var(R, 0, b1.second));
          auto m2 = WeylElement::monomial(R, n, b2.first.a, b2.first.b, CoeffPoly::var(R, 0, b2.second));
          FpVec v(cell.basis.size(), 0);
          auto prod = m1 * m2;
          for (auto& [wk, coef] : prod.terms())
            for (auto& [mono, c] : coef.terms()) v.at(cell.index.at({wk, mono[0]})) = c;
          ech.insert(std::move(v));
          if (ech.rank() == cell.basis.size()) break;
        }
    }
    int mult = static_cast<int>(cell.basis.size() - ech.rank());
    if (mult) rs.weights[lam] += mult;
  }
  finish(rs);
  return rs;
}

RootSystem equivariant_roots_sl2(std::uint32_t p, int window) {
  if (window < 2) throw InputError("equivariant roots need a conical window of at least 2");
  auto R = make_ring(p, {"hbar", "sigma"});
  // key: f^a h^b e^c hbar^m sigma^k, conical degree 2(a+b+c+m+k), weight 2(c-a)
  using Key = std::array<int, 5>;
  std::map<std::pair<int, int>, Cell<Key>> cells;
  for (int deg = 2; deg <= window; deg += 2) {
    std::vector<std::vector<int>> es;
    std::vector<int> cur(5, 0);
    enum_nonneg(5, 0, deg / 2, cur, es);
    for (auto& e : es) {
      int tot = e[0] + e[1] + e[2] + e[3] + e[4];
      if (2 * tot != deg) continue;
      cells[{2 * (e[2] - e[0]), deg}].add({e[0], e[1], e[2], e[3], e[4]});
    }
  }
  auto elem = [&](const Key& k) {
    Mono m{};
    m[0] = static_cast<std::uint16_t>(k[3]);
    m[1] = static_cast<std::uint16_t>(k[4]);
    return PBWElement::monomial(R, k[0], k[1], k[2], CoeffPoly::monomial(R, m, 1));
  };
  RootSystem rs;
  rs.dim = 1;
  rs.window = window;
  for (auto& [key, cell] : cells) {
    auto [w, deg] = key;
    FpEchelon ech(p, cell.basis.size());
    for (auto& [k1, c1] : cells) {
      int d2 = deg - k1.second;
      if (d2 < 2) continue;
      auto it = cells.find({w - k1.first, d2});
      if (it == cells.end()) continue;
      for (auto& b1 : c1.basis)
        for (auto& b2 : it->second.basis) {
          FpVec v(cell.basis.size(), 0);
          auto prod = elem(b1) * elem(b2);
          for (auto& [pk, coef] : prod.terms())
            for (auto& [mono, c] : coef.terms())
              v.at(cell.index.at({pk[0], pk[1], pk[2], mono[0], mono[1]})) = c;
          ech.insert(std::move(v));
        }
    }
    int mult = static_cast<int>(cell.basis.size() - ech.rank());
    if (mult) rs.weights[{w}] += mult;
  }
  finish(rs);
  return rs;
}

void select_positive(RootSystem& rs, const Weight& sigma) {
  if (static_cast<int>(sigma.size()) != rs.dim) throw InputError("cocharacter has the wrong length");
  rs.sigma = sigma;
  rs.positive.clear();
  rs.coords.clear();
  for (auto& r : rs.roots) {
    auto s = weight_pair(sigma, r);
    if (s == 0) throw InputError("degenerate stability: the cocharacter vanishes on a root");
    if (s > 0) rs.positive.push_back(r);
  }
  std::sort(rs.positive.begin(), rs.positive.end(),
            [&](const Weight& a, const Weight& b) {
              auto sa = weight_pair(sigma, a), sb = weight_pair(sigma, b);
              return sa != sb ? sa < sb : a > b;
            });
  for (auto& r : rs.positive) {
    bool decomposable = false;
    for (auto& a : rs.positive)
      for (auto& b : rs.positive) {
        Weight s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        if (s == r) decomposable = true;
      }
    if (!decomposable) rs.coords.push_back(r);
  }
  if (static_cast<int>(rs.coords.size()) > kMaxZ) throw StructuralError("too many Novikov coordinates");
  IntMat m(rs.coords.begin(), rs.coords.end());
  if (int_rank(m, rs.dim) != static_cast<int>(rs.coords.size()))
    throw StructuralError("positive root monoid is not simplicial");
}

std::vector<std::vector<int>> novikov_exponents(int s, int M) {
  std::vector<std::vector<int>> all, out;
  std::vector<int> cur(s, 0);
  enum_nonneg(s, 0, M, cur, all);
  for (auto& v : all) {
    int t = 0;
    for (int x : v) t += x;
    if (t >= 1) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ta = 0, tb = 0;
    for (int x : a) ta += x;
    for (int x : b) tb += x;
    return ta != tb ? ta < tb : a > b;
  });
  return out;
}

Weight monoid_element(const RootSystem& rs, const std::vector<int>& mu) {
  Weight w(rs.dim, 0);
  for (std::size_t l = 0; l < rs.coords.size(); ++l)
    for (int i = 0; i < rs.dim; ++i) w[i] += mu[l] * rs.coords[l][i];
  return w;
}

}  // namespace mh
