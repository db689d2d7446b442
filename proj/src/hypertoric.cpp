#include "mhikita/hypertoric.hpp"

#include <algorithm>
#include <sstream>

#include "mhikita/errors.hpp"

namespace mh {

std::vector<std::int64_t> GaugeData::a(int i) const {
  std::vector<std::int64_t> v(rank_t());
  for (int r = 0; r < rank_t(); ++r) v[r] = pi[r][i];
  return v;
}

namespace {
std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
  os << "}";
  return os.str();
}

bool all_ones(const std::vector<std::int64_t>& d) {
  for (auto x : d)
    if (x != 1) return false;
  return true;
}
}  // namespace

void validate_gauge(const GaugeData& d) {
  if (d.n < 1 || d.n > 8) throw InputError("gauge data: n must be between 1 and 8");
  if (d.k < 0 || d.k > d.n) throw InputError("gauge data: k must be between 0 and n");
  int r = d.rank_t();
  if (static_cast<int>(d.iota.size()) != d.n) throw InputError("gauge data: iota must have n rows");
  for (auto& row : d.iota)
    if (static_cast<int>(row.size()) != d.k) throw InputError("gauge data: iota rows must have k entries");
  if (static_cast<int>(d.pi.size()) != r) throw InputError("gauge data: pi must have n-k rows");
  for (auto& row : d.pi)
    if (static_cast<int>(row.size()) != d.n) throw InputError("gauge data: pi rows must have n entries");
  if (static_cast<int>(d.chi_lift.size()) != d.n) throw InputError("gauge data: chi_lift must have n entries");
  if (static_cast<int>(d.sigma_lift.size()) != d.n) throw InputError("gauge data: sigma must have n entries");
  auto comp = int_mul(d.pi, d.iota, d.n, d.k);
  for (auto& row : comp)
    for (auto x : row)
      if (x) throw InputError("gauge data: pi * iota is not zero");
  if (int_rank(d.iota, d.k) != d.k) throw InputError("gauge data: iota is not injective");
  if (int_rank(d.pi, d.n) != r) throw InputError("gauge data: rank(pi) != n-k");
  if (!all_ones(smith_invariants(d.iota, d.k))) throw InputError("gauge data: cokernel of iota has torsion");
  if (!all_ones(smith_invariants(d.pi, d.n))) throw InputError("gauge data: pi is not surjective over Z");
}

GaugeData gale_dual(const GaugeData& d) {
  validate_gauge(d);
  GaugeData g;
  g.n = d.n;
  g.k = d.rank_t();
  // pi^T spans ker iota^T by exactness
  g.iota = int_transpose(d.pi, d.n);
  g.pi = int_transpose(d.iota, d.k);
  g.chi_lift = d.sigma_lift;
  g.sigma_lift = d.chi_lift;
  g.name = d.name.empty() ? "" : d.name + "!";
  validate_gauge(g);
  return g;
}

bool unimodularity_check(const GaugeData& d) {
  int r = d.rank_t();
  for (auto& S : subsets(d.n, r)) {
    IntMat m = int_zero(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[i][j] = d.pi[i][S[j]];
    auto det = int_det(m);
    if (det != 0 && det != 1 && det != -1) return false;
  }
  return true;
}

std::vector<std::string> builtin_gauge_names() { return {"t-star-a1", "t-star-p1", "sqed-3"}; }

GaugeData builtin_gauge(const std::string& name) {
  GaugeData d;
  d.name = name;
  if (name == "t-star-a1") {
    d.n = 1;
    d.k = 0;
    d.iota = IntMat(1);
    d.pi = {{1}};
    d.chi_lift = {0};
    d.sigma_lift = {1};
  } else if (name == "t-star-p1") {
    d.n = 2;
    d.k = 1;
    d.iota = {{1}, {1}};
    d.pi = {{1, -1}};
    d.chi_lift = {-1, 0};
    d.sigma_lift = {1, 0};
  } else if (name == "sqed-3") {
    d.n = 3;
    d.k = 1;
    d.iota = {{1}, {1}, {1}};
    d.pi = {{1, -1, 0}, {0, 1, -1}};
    d.chi_lift = {1, 0, 0};
    d.sigma_lift = {2, 1, 0};
  } else {
    throw InputError("unknown built-in gauge data: " + name);
  }
  validate_gauge(d);
  return d;
}

Arrangement build_arrangement(const GaugeData& d) {
  validate_gauge(d);
  Arrangement arr;
  arr.n = d.n;
  arr.r = d.rank_t();
  arr.chi = d.chi_lift;
  for (int i = 0; i < d.n; ++i) arr.a.push_back(d.a(i));
  int r = arr.r;
  auto on = [&](const RatVec& v, int j) {
    Rational s(0);
    for (int t = 0; t < r; ++t) s += v[t] * arr.a[j][t];
    return s + arr.chi[j];
  };
  for (auto& S : subsets(d.n, r)) {
    // rows: a_{S[t]}^T x = -chi_{S[t]}
    IntMat A = int_zero(r, r);
    std::vector<Rational> b(r);
    for (int t = 0; t < r; ++t) {
      for (int c = 0; c < r; ++c) A[t][c] = arr.a[S[t]][c];
      b[t] = -arr.chi[S[t]];
    }
    RatVec v;
    if (!rat_solve(A, b, &v)) continue;
    std::vector<int> I;
    for (int j = 0; j < d.n; ++j)
      if (on(v, j) == Rational(0)) I.push_back(j);
    if (static_cast<int>(I.size()) != r)
      throw InputError("degenerate stability: chi is not generic; the vertex of subset " + vec_str(S) + " lies on " +
                       std::to_string(I.size()) + " hyperplanes");
    Vertex vx;
    vx.point = v;
    vx.I = I;
    // eta_t is column t of A^{-1}: <eta_t, a_{I[s]}> = delta
    std::vector<RatVec> inv;
    rat_inverse(A, &inv);
    for (int t = 0; t < r; ++t) {
      std::vector<std::int64_t> coeffs(r);
      for (int c = 0; c < r; ++c) {
        if (inv[c][t].denominator() != 1)
          throw InputError("vertex of subset " + vec_str(S) + " has a non-integral covector; data is not unimodular");
        coeffs[c] = inv[c][t].numerator();
      }
      vx.eta.emplace_back(coeffs, 0);
    }
    arr.vertices.push_back(std::move(vx));
  }
  return arr;
}

std::vector<LinearForm> divisor_matrix(const Arrangement& arr, int i) {
  if (i < 0 || i >= arr.n) throw StructuralError("divisor index out of range");
  std::vector<LinearForm> diag;
  for (auto& v : arr.vertices) {
    Rational s(0);
    for (int t = 0; t < arr.r; ++t) s += v.point[t] * arr.a[i][t];
    s += arr.chi[i];
    auto it = std::find(v.I.begin(), v.I.end(), i);
    if (it != v.I.end()) {
      const LinearForm& eta = v.eta[it - v.I.begin()];
      std::vector<std::int64_t> sum(arr.r, 0);
      for (int j = 0; j < arr.n; ++j) {
        Rational sj(0);
        for (int t = 0; t < arr.r; ++t) sj += v.point[t] * arr.a[j][t];
        if (sj + arr.chi[j] > Rational(0))
          for (int t = 0; t < arr.r; ++t) sum[t] += arr.a[j][t];
      }
      LinearForm e = eta;
      e.hbar = eta.pair(sum);
      diag.push_back(e);
    } else if (s > Rational(0)) {
      diag.emplace_back(std::vector<std::int64_t>(arr.r, 0), 0);
    } else {
      diag.emplace_back(std::vector<std::int64_t>(arr.r, 0), 1);
    }
  }
  return diag;
}

SpectrumCertificate simple_spectrum_of(const std::vector<std::vector<LinearForm>>& diags) {
  SpectrumCertificate c;
  std::size_t nv = diags.empty() ? 0 : diags[0].size();
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = v + 1; w < nv; ++w) {
      int sep = -1;
      for (std::size_t i = 0; i < diags.size() && sep < 0; ++i)
        if (!(diags[i][v] == diags[i][w])) sep = static_cast<int>(i);
      if (sep < 0) {
        c.simple = false;
        c.offending = {static_cast<int>(v), static_cast<int>(w)};
        return c;
      }
      c.separators.push_back({{static_cast<int>(v), static_cast<int>(w)}, sep});
    }
  return c;
}

SpectrumCertificate simple_spectrum_certificate(const Arrangement& arr) {
  std::vector<std::vector<LinearForm>> diags;
  for (int i = 0; i < arr.n; ++i) diags.push_back(divisor_matrix(arr, i));
  return simple_spectrum_of(diags);
}

std::string covector_audit(const Arrangement& arr) {
  for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
    auto& vx = arr.vertices[v];
    for (std::size_t t = 0; t < vx.I.size(); ++t)
      for (std::size_t s = 0; s < vx.I.size(); ++s) {
        auto val = vx.eta[t].pair(arr.a[vx.I[s]]);
        if (val != (s == t ? 1 : 0))
          return "vertex " + std::to_string(v) + ": <eta_" + std::to_string(vx.I[t] + 1) + ", a_" +
                 std::to_string(vx.I[s] + 1) + "> = " + std::to_string(val);
      }
  }
  return "";
}

}  // namespace mh
