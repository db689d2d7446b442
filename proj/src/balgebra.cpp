#include "mhikita/balgebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "mhikita/errors.hpp"
#include "mhikita/fplinalg.hpp"
#include "mhikita/roots.hpp"

namespace mh {

namespace {

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

std::vector<Mono> monos_upto(int nv, int ncoeff, int D) {
  // u-monomials of degree <= D, highest degree first so pivots land on leading terms
  std::vector<Mono> out;
  for (int d = D; d >= 0; --d) {
    std::vector<Mono> layer;
    Mono cur{};
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == nv - 1) {
        cur[ncoeff + i] = static_cast<std::uint16_t>(left);
        layer.push_back(cur);
        cur[ncoeff + i] = 0;
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[ncoeff + i] = static_cast<std::uint16_t>(e);
        rec(i + 1, left - e);
      }
      cur[ncoeff + i] = 0;
    };
    if (nv == 0) {
      if (d == 0) layer.push_back(cur);
    } else {
      rec(0, d);
    }
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string mono_name(const Mono& m, const RingPtr& R) {
  std::string s;
  for (int v = 0; v < R->nvars(); ++v) {
    if (!m[v]) continue;
    if (!s.empty()) s += "*";
    s += R->names[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

// gens are already specialized: only u-variables appear
void fill(BAlgebra& B, const TraceData& td, const std::vector<CoeffPoly>& gens, int N) {
  int nv = td.nu;
  for (int D = 0; D <= N; ++D) {
    auto cols = monos_upto(nv, td.ncoeff, D);
    std::map<Mono, std::size_t> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    FpEchelon ech(td.p, cols.size());
    for (auto& P : gens) {
      int dp = P.degree();
      if (dp < 0 || dp > D) continue;
      for (auto& m : monos_upto(nv, td.ncoeff, D - dp)) {
        CoeffPoly row = CoeffPoly::monomial(td.full, m, 1) * P;
        FpVec v(cols.size(), 0);
        for (auto& [mm, c] : row.terms()) v[idx.at(mm)] = c;
        ech.insert(std::move(v));
      }
    }
    B.rank_by_degree.push_back(static_cast<int>(cols.size() - ech.rank()));
    if (D == N) {
      std::vector<bool> piv(cols.size(), false);
      for (int c : ech.pivots()) piv[c] = true;
      for (std::size_t i = cols.size(); i-- > 0;)
        if (!piv[i]) B.basis.push_back(mono_name(cols[i], td.full));
    }
  }
  B.N = N;
  B.rank = B.rank_by_degree.back();
  B.stable = N >= 1 && B.rank_by_degree[N] == B.rank_by_degree[N - 1];
}

// random F_p values for the coefficient variables, hbar nonzero
std::vector<CoeffPoly> specialize(const TraceData& td, std::uint64_t seed, BAlgebra& B) {
  std::mt19937_64 rng(seed);
  std::vector<CoeffPoly> img;
  for (int v = 0; v < td.ncoeff; ++v) {
    std::uint32_t c = static_cast<std::uint32_t>(rng() % td.p);
    if (v == 0 && c == 0) c = 1;
    img.push_back(CoeffPoly::constant(td.full, c));
    B.params.push_back(td.full->names[v] + "=" + std::to_string(c));
  }
  for (int j = 0; j < td.nu; ++j) img.push_back(CoeffPoly::var(td.full, td.ncoeff + j));
  return img;
}

}  // namespace

BAlgebra b_algebra_hypertoric(const GaugeData& d, std::uint32_t p, const Weight& sigma, int N, int window,
                              std::uint64_t seed) {
  if (static_cast<int>(sigma.size()) != d.n) throw InputError("cocharacter must have one entry per coordinate");
  if (N < 0 || window < 1) throw InputError("b-algebra needs N >= 0 and window >= 1");
  bool zero = std::all_of(sigma.begin(), sigma.end(), [](std::int64_t x) { return x == 0; });
  // sigma = 0 has no positive roots; any generic cocharacter gives the same ring
  TraceData td = trace_data_hypertoric(d, p, zero ? d.sigma_lift : sigma);
  BAlgebra B;
  B.name = d.name;
  B.window = window;
  B.truncated = zero;
  auto img = specialize(td, seed, B);
  std::vector<CoeffPoly> gens;
  if (!zero)
    for (auto& lam : invariant_weights(d, window)) {
      std::int64_t s = 0;
      for (int i = 0; i < d.n; ++i) s += sigma[i] * lam[i];
      if (s <= 0) continue;
      B.generators.push_back(weight_str(lam));
      gens.push_back(weight_relation_pair(td, lam).first.substitute(img));
    }
  fill(B, td, gens, N);
  return B;
}

BAlgebra b_algebra_sl2(std::uint32_t p, std::int64_t sigma, int N, int window, std::uint64_t seed) {
  if (N < 0 || window < 1) throw InputError("b-algebra needs N >= 0 and window >= 1");
  TraceData td = trace_data_sl2(p, sigma == 0 ? 1 : sigma);
  BAlgebra B;
  B.name = "sl2";
  B.window = window;
  B.truncated = sigma == 0;
  auto img = specialize(td, seed, B);
  std::vector<CoeffPoly> gens;
  if (sigma != 0)
    for (std::int64_t m = 1; 2 * m <= window; ++m) {
      Weight lam{sigma > 0 ? 2 * m : -2 * m};
      B.generators.push_back(weight_str(lam));
      gens.push_back(weight_relation_pair(td, lam).first.substitute(img));
    }
  fill(B, td, gens, N);
  return B;
}

}  // namespace mh
