#include "mhikita/trace.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mhikita/envsl2.hpp"
#include "mhikita/errors.hpp"
#include "mhikita/fplinalg.hpp"
#include "mhikita/intmat.hpp"
#include "mhikita/weyl.hpp"

namespace mh {

namespace {

using Lift = std::map<ZExp, FpVec>;

std::int64_t l1(const Weight& w) {
  std::int64_t s = 0;
  for (auto x : w) s += std::llabs(x);
  return s;
}

void monos_rec(int nv, int i, int left, Mono& cur, std::vector<Mono>& out) {
  if (i == nv - 1) {
    cur[i] = static_cast<std::uint16_t>(left);
    out.push_back(cur);
    cur[i] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[i] = static_cast<std::uint16_t>(e);
    monos_rec(nv, i + 1, left - e, cur, out);
  }
  cur[i] = 0;
}

std::vector<Mono> monomials_of_degree(int nv, int d) {
  std::vector<Mono> out;
  if (d < 0) return out;
  Mono cur{};
  if (nv == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  monos_rec(nv, 0, d, cur, out);
  return out;
}

Mono u_part(const Mono& m, int ncoeff) {
  Mono u{};
  for (int i = ncoeff; i < kMaxVars; ++i) u[i] = m[i];
  return u;
}

Mono c_part(const Mono& m, int ncoeff) {
  Mono c{};
  for (int i = 0; i < ncoeff; ++i) c[i] = m[i];
  return c;
}

int udeg(const Mono& m, int ncoeff) {
  int s = 0;
  for (int i = ncoeff; i < kMaxVars; ++i) s += m[i];
  return s;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ZExp zexp_of(const std::vector<int>& mu) {
  ZExp e{};
  for (std::size_t l = 0; l < mu.size(); ++l) e.at(l) = static_cast<std::uint16_t>(mu[l]);
  return e;
}

void lift_axpy(Lift& a, std::uint32_t c, const Lift& b, std::uint32_t p, std::size_t dim) {
  if (!c) return;
  for (auto& [e, v] : b) {
    auto it = a.try_emplace(e, FpVec(dim, 0)).first;
    fp_axpy(it->second, c, v, p);
  }
  for (auto it = a.begin(); it != a.end();) it = fp_is_zero(it->second) ? a.erase(it) : std::next(it);
}

std::string mu_str(const std::vector<int>& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << ")";
  return os.str();
}

}  // namespace

TraceData trace_data_hypertoric(const GaugeData& d, std::uint32_t p, const Weight& sigma, int root_window) {
  require_odd_prime(p);
  validate_gauge(d);
  if (static_cast<int>(sigma.size()) != d.n) throw InputError("cocharacter must have one entry per coordinate");
  TraceData td;
  td.name = d.name;
  td.p = p;
  td.gauge = d;
  td.roots = equivariant_roots_hypertoric(d, p, std::max(2, root_window));
  select_positive(td.roots, sigma);
  if (td.roots.coords.empty()) throw InputError("no positive roots: the torus acts trivially");
  int n = d.n, k = d.k;

  // u = E_J where iota^T restricted to the complement K' is unimodular; prefer the last K'
  auto all = subsets(n, k);
  std::vector<int> Kp;
  bool found = false;
  for (auto it = all.rbegin(); it != all.rend() && !found; ++it) {
    IntMat m = int_zero(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m[a][b] = d.iota[(*it)[b]][a];
    auto det = k ? int_det(m) : 1;
    if (det == 1 || det == -1) {
      Kp = *it;
      found = true;
    }
  }
  if (!found) throw StructuralError("no unimodular coordinate choice for the central parameters");
  std::vector<int> J;
  for (int i = 0; i < n; ++i)
    if (std::find(Kp.begin(), Kp.end(), i) == Kp.end()) J.push_back(i);
  td.u_index = J;

  std::vector<std::string> names{"hbar"};
  for (int a = 0; a < k; ++a) names.push_back("c" + std::to_string(a + 1));
  td.ncoeff = static_cast<int>(names.size());
  td.coeff = make_ring(p, names);
  for (int j : J) names.push_back("E" + std::to_string(j + 1));
  td.full = make_ring(p, names);
  td.nu = static_cast<int>(J.size());

  auto var = [&](int v) { return CoeffPoly::var(td.full, v); };
  td.euler_image.assign(n + 1, CoeffPoly(td.full));
  td.euler_image[0] = var(0);
  for (std::size_t j = 0; j < J.size(); ++j) td.euler_image[J[j] + 1] = var(td.ncoeff + static_cast<int>(j));
  if (k) {
    IntMat m = int_zero(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m[a][b] = d.iota[Kp[b]][a];
    std::vector<RatVec> inv;
    if (!rat_inverse(m, &inv)) throw StructuralError("central coordinate change is singular");
    // c_a - sum_j iota[J_j][a] u_j
    std::vector<CoeffPoly> rhs;
    for (int a = 0; a < k; ++a) {
      CoeffPoly r = var(1 + a);
      for (std::size_t j = 0; j < J.size(); ++j)
        r -= var(td.ncoeff + static_cast<int>(j)).scaled(mod_reduce(d.iota[J[j]][a], p));
      rhs.push_back(r);
    }
    for (int b = 0; b < k; ++b) {
      CoeffPoly e(td.full);
      for (int a = 0; a < k; ++a) {
        if (inv[b][a].denominator() != 1) throw StructuralError("central coordinate change is not integral");
        e += rhs[a].scaled(mod_reduce(inv[b][a].numerator(), p));
      }
      td.euler_image[Kp[b] + 1] = e;
    }
  }

  auto& C = td.roots.coords;
  td.ushift.assign(C.size(), std::vector<std::int64_t>(J.size()));
  for (std::size_t l = 0; l < C.size(); ++l)
    for (std::size_t j = 0; j < J.size(); ++j) td.ushift[l][j] = C[l][J[j]];
  for (int i = 0; i < n; ++i) {
    TraceGenerator g{"E" + std::to_string(i + 1), td.euler_image[i + 1], {}};
    for (auto& a : C) g.pairing.push_back(a[i]);
    td.gens.push_back(g);
  }
  td.gens.push_back({"hbar", var(0), std::vector<std::int64_t>(C.size(), 0)});
  return td;
}

TraceData trace_data_sl2(std::uint32_t p, std::int64_t sigma) {
  require_odd_prime(p);
  TraceData td;
  td.name = "sl2-springer";
  td.sl2 = true;
  td.p = p;
  td.coeff = make_ring(p, {"hbar", "sigma"});
  td.full = cartan_ring(td.coeff);
  td.ncoeff = 2;
  td.nu = 1;
  td.roots = equivariant_roots_sl2(p, 4);
  select_positive(td.roots, Weight{sigma});
  auto& C = td.roots.coords;
  for (auto& a : C) td.ushift.push_back({a[0]});
  TraceGenerator h{"h", CoeffPoly::var(td.full, 2), {}};
  for (auto& a : C) h.pairing.push_back(a[0]);
  td.gens.push_back(h);
  td.gens.push_back({"sigma", CoeffPoly::var(td.full, 1), std::vector<std::int64_t>(C.size(), 0)});
  td.gens.push_back({"hbar", CoeffPoly::var(td.full, 0), std::vector<std::int64_t>(C.size(), 0)});
  return td;
}

std::pair<CoeffPoly, CoeffPoly> relation_pair(const TraceData& td, const std::vector<int>& mu) {
  return weight_relation_pair(td, monoid_element(td.roots, mu));
}

std::pair<CoeffPoly, CoeffPoly> weight_relation_pair(const TraceData& td, const Weight& lam) {
  if (td.sl2) {
    auto R = td.coeff;
    auto part = [&](std::int64_t w) {
      unsigned m = static_cast<unsigned>(std::llabs(w) / 2);
      return w > 0 ? PBWElement::e(R).pow(m) : PBWElement::f(R).pow(m);
    };
    auto a = part(lam[0]), b = part(-lam[0]);
    return {sl2_weight0_to_cartan(a * b, td.full), sl2_weight0_to_cartan(b * a, td.full)};
  }
  auto Rh = make_ring(td.p, {"hbar"});
  auto ER = euler_ring(Rh, td.gauge.n);
  std::vector<int> l(lam.begin(), lam.end()), nl;
  for (int x : l) nl.push_back(-x);
  auto a = monopole(Rh, l), b = monopole(Rh, nl);
  return {weight0_to_euler(weyl_mul(a, b), ER).substitute(td.euler_image),
          weight0_to_euler(weyl_mul(b, a), ER).substitute(td.euler_image)};
}

std::vector<CoeffPoly> shift_images(const TraceData& td, const std::vector<int>& mu) {
  std::vector<CoeffPoly> img;
  for (int v = 0; v < td.ncoeff; ++v) img.push_back(CoeffPoly::var(td.full, v));
  auto hb = CoeffPoly::var(td.full, 0);
  for (int j = 0; j < td.nu; ++j) {
    std::int64_t s = 0;
    for (std::size_t l = 0; l < mu.size(); ++l) s += mu[l] * td.ushift[l][j];
    img.push_back(CoeffPoly::var(td.full, td.ncoeff + j) + hb.scaled(mod_reduce(s, td.p)));
  }
  return img;
}

CoeffPoly frobenius_image_hypertoric(const TraceData& td, const CommutativePair& f) {
  if (td.sl2) throw StructuralError("hypertoric Frobenius image requested on sl2 data");
  auto Rh = make_ring(td.p, {"hbar"});
  auto W = frobenius_splitting_weyl(f, Rh);
  return weight0_to_euler(W, euler_ring(Rh, td.gauge.n)).substitute(td.euler_image);
}

CoeffPoly frobenius_image_sl2(const TraceData& td, const CoeffPoly& f) {
  if (!td.sl2) throw StructuralError("sl2 Frobenius image requested on hypertoric data");
  return sl2_weight0_to_cartan(frobenius_splitting_springer(f, td.coeff), td.full);
}

struct TraceModule::Degree {
  int d = 0;
  std::vector<Mono> cols;
  std::map<Mono, int> index;
  std::vector<FpVec> rows;
  std::vector<int> piv;
  std::vector<Lift> lifts;
  std::vector<int> std_s;  // basis index of each standard column, -1 on pivots
  int nrows = 0;
  int overlaps = 0;
};

namespace {

// replaces pivot entries by the lifted relations, lowest z-degree first
Lift reduce_in(const std::vector<FpVec>& rows, const std::vector<int>& piv, const std::vector<Lift>& lifts,
               std::size_t dim, Lift acc, int M, std::uint32_t p, bool* overflow) {
  std::map<std::pair<int, ZExp>, FpVec> q;
  for (auto& [e, v] : acc) q.emplace(std::make_pair(zdeg(e), e), std::move(v));
  Lift out;
  while (!q.empty()) {
    auto node = q.extract(q.begin());
    ZExp nu = node.key().second;
    FpVec v = std::move(node.mapped());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t c = v[piv[r]];
      if (!c) continue;
      fp_axpy(v, p - c, rows[r], p);
      for (auto& [mu, L] : lifts[r]) {
        ZExp t = zadd(nu, mu);
        int td = zdeg(t);
        if (td > M) {
          if (overflow) *overflow = true;
          continue;
        }
        auto it = q.try_emplace(std::make_pair(td, t), FpVec(dim, 0)).first;
        fp_axpy(it->second, c, L, p);
      }
    }
    if (!fp_is_zero(v)) out.emplace(nu, std::move(v));
  }
  return out;
}

}  // namespace

TraceModule::TraceModule(TraceData data, int N, int M) : td_(std::move(data)), N_(N), M_(M) {
  if (N < 1) throw InputError("degree truncation must be at least 1");
  if (M < 1) throw InputError("z truncation must be at least 1");
  std::lock_guard<std::mutex> lock(mu_);
  for (int d = 0; d <= N; ++d) degrees_[d] = build_degree(d);
  std::vector<Mono> us;
  for (auto& [d, D] : degrees_)
    for (std::size_t i = 0; i < D->cols.size(); ++i)
      if (D->std_s[i] == -1 && !std::count(D->piv.begin(), D->piv.end(), static_cast<int>(i))) {
        auto u = u_part(D->cols[i], td_.ncoeff);
        if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(u);
      }
  int nc = td_.ncoeff;
  std::sort(us.begin(), us.end(), [nc](const Mono& a, const Mono& b) {
    int da = udeg(a, nc), db = udeg(b, nc);
    return da != db ? da < db : a > b;
  });
  basis_ = us;
  for (auto& [d, D] : degrees_) {
    finish_degree(*D);
    cert_.relations += D->nrows;
    cert_.overlaps += D->overlaps;
  }
  cert_.top_degree = N;
}

TraceModule::~TraceModule() = default;

std::unique_ptr<TraceModule::Degree> TraceModule::build_degree(int d) const {
  auto D = std::make_unique<Degree>();
  D->d = d;
  int nv = td_.full->nvars(), nc = td_.ncoeff;
  std::uint32_t p = td_.p;
  D->cols = monomials_of_degree(nv, d);
  std::sort(D->cols.begin(), D->cols.end(), [nc](const Mono& a, const Mono& b) {
    int da = udeg(a, nc), db = udeg(b, nc);
    if (da != db) return da > db;
    Mono ua = u_part(a, nc), ub = u_part(b, nc);
    if (ua != ub) return ua > ub;
    return a > b;
  });
  for (std::size_t i = 0; i < D->cols.size(); ++i) D->index.emplace(D->cols[i], static_cast<int>(i));
  std::size_t dim = D->cols.size();
  D->std_s.assign(dim, -1);

  auto vec = [&](const CoeffPoly& f) {
    FpVec v(dim, 0);
    for (auto& [m, c] : f.terms()) {
      auto it = D->index.find(m);
      if (it == D->index.end()) throw StructuralError("relation is not homogeneous");
      v[it->second] = c;
    }
    return v;
  };

  std::vector<Lift> syz;
  auto insert = [&](FpVec row, Lift lift) {
    ++D->nrows;
    for (std::size_t r = 0; r < D->rows.size(); ++r) {
      std::uint32_t c = row[D->piv[r]];
      if (!c) continue;
      fp_axpy(row, p - c, D->rows[r], p);
      lift_axpy(lift, p - c, D->lifts[r], p, dim);
    }
    std::size_t lead = 0;
    while (lead < dim && !row[lead]) ++lead;
    if (lead == dim) {
      syz.push_back(std::move(lift));
      return;
    }
    std::uint32_t inv = mod_inv(row[lead], p);
    for (auto& x : row) x = mod_mul(x, inv, p);
    for (auto& [e, v] : lift)
      for (auto& x : v) x = mod_mul(x, inv, p);
    for (std::size_t r = 0; r < D->rows.size(); ++r) {
      std::uint32_t c = D->rows[r][lead];
      if (!c) continue;
      fp_axpy(D->rows[r], p - c, row, p);
      lift_axpy(D->lifts[r], p - c, lift, p, dim);
    }
    D->rows.push_back(std::move(row));
    D->lifts.push_back(std::move(lift));
    D->piv.push_back(static_cast<int>(lead));
  };

  // |mu| <= <sigma, lambda> <= |sigma|_inf |lambda|_1 and deg P_lambda = |lambda|_1
  std::int64_t smax = 1;
  for (auto x : td_.roots.sigma) smax = std::max<std::int64_t>(smax, std::llabs(x));
  int bound = static_cast<int>(std::min<std::int64_t>(d * smax, 64));
  if (d > 0 && nz() > 0)
    for (auto& mu : novikov_exponents(nz(), bound)) {
      int dp = static_cast<int>(l1(monoid_element(td_.roots, mu)));
      if (dp > d) continue;
      auto it = pq_cache_.find(mu);
      if (it == pq_cache_.end()) it = pq_cache_.emplace(mu, relation_pair(td_, mu)).first;
      auto& [P, Q] = it->second;
      int mz = 0;
      for (int x : mu) mz += x;
      auto img = shift_images(td_, mu);
      for (auto& gm : monomials_of_degree(nv, d - dp)) {
        CoeffPoly g = CoeffPoly::monomial(td_.full, gm, 1);
        Lift lift;
        if (mz <= M_) {
          FpVec lv = vec(g.substitute(img) * Q);
          if (!fp_is_zero(lv)) lift.emplace(zexp_of(mu), std::move(lv));
        }
        insert(vec(g * P), std::move(lift));
      }
    }

  // overlaps: a dependency among rows leaves a pure z-lift that must already vanish
  for (auto& L : syz) {
    if (L.empty()) continue;
    ++D->overlaps;
    auto r = reduce_in(D->rows, D->piv, D->lifts, dim, L, M_, p, nullptr);
    if (!r.empty())
      throw StructuralError("trace relations are not confluent in degree " + std::to_string(d) +
                            "; the truncation window is too small or the data is not flat");
  }
  return D;
}

void TraceModule::finish_degree(Degree& D) const {
  std::vector<bool> pivot(D.cols.size(), false);
  for (int c : D.piv) pivot[c] = true;
  int nstd = 0;
  for (std::size_t i = 0; i < D.cols.size(); ++i) {
    if (pivot[i]) continue;
    ++nstd;
    auto u = u_part(D.cols[i], td_.ncoeff);
    auto it = std::find(basis_.begin(), basis_.end(), u);
    if (it == basis_.end())
      throw StructuralError("module is not free over the coefficient ring: extra standard monomial " +
                            mono_str(D.cols[i], *td_.full) + " in degree " + std::to_string(D.d));
    D.std_s[i] = static_cast<int>(it - basis_.begin());
  }
  std::int64_t expect = 0;
  for (auto& s : basis_) {
    int rest = D.d - udeg(s, td_.ncoeff);
    if (rest >= 0) expect += binom(rest + td_.ncoeff - 1, td_.ncoeff - 1);
  }
  if (expect != nstd)
    throw StructuralError("module is not free over the coefficient ring in degree " + std::to_string(D.d));
}

const TraceModule::Degree& TraceModule::degree(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = degrees_.find(d);
  if (it != degrees_.end()) return *it->second;
  auto D = build_degree(d);
  finish_degree(*D);
  return *degrees_.emplace(d, std::move(D)).first->second;
}

std::vector<std::string> TraceModule::basis_names() const {
  std::vector<std::string> out;
  for (auto& m : basis_) out.push_back(udeg(m, 0) ? mono_str(m, *td_.full) : "1");
  return out;
}

int TraceModule::generator_index(const std::string& name) const {
  for (std::size_t g = 0; g < td_.gens.size(); ++g)
    if (td_.gens[g].name == name) return static_cast<int>(g);
  throw InputError("unknown generator " + name);
}

ModElem TraceModule::zero() const { return ModElem(rank(), NovikovSeries(td_.coeff, nz(), M_)); }

NovikovSeries TraceModule::series(const CoeffPoly& c) const { return NovikovSeries::constant(c, nz(), M_); }

ModElem TraceModule::basis_vector(std::size_t s) const {
  auto v = zero();
  v.at(s) = series(CoeffPoly::constant(td_.coeff, 1));
  return v;
}

ModElem TraceModule::normal_form(const ZPoly& f, bool* overflow) const {
  std::map<int, Lift> acc;
  for (auto& [nu, poly] : f) {
    require_same_ring(poly.ring(), td_.full, "trace normal form");
    if (zdeg(nu) > M_) {
      if (overflow && !poly.is_zero()) *overflow = true;
      continue;
    }
    for (auto& [m, c] : poly.terms()) {
      int d = mono_degree(m);
      const Degree& D = degree(d);
      auto& v = acc[d].try_emplace(nu, FpVec(D.cols.size(), 0)).first->second;
      auto i = D.index.at(m);
      v[i] = mod_add(v[i], c, td_.p);
    }
  }
  ModElem out = zero();
  for (auto& [d, L] : acc) {
    const Degree& D = degree(d);
    auto rem = reduce_in(D.rows, D.piv, D.lifts, D.cols.size(), std::move(L), M_, td_.p, overflow);
    for (auto& [nu, v] : rem)
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) out[D.std_s[i]].add_term(nu, CoeffPoly::monomial(td_.coeff, c_part(D.cols[i], td_.ncoeff), v[i]));
  }
  return out;
}

ZPoly TraceModule::lift(const ModElem& v) const {
  ZPoly out;
  for (std::size_t s = 0; s < v.size(); ++s)
    for (auto& [nu, cp] : v[s].terms()) {
      auto& slot = out.try_emplace(nu, CoeffPoly(td_.full)).first->second;
      for (auto& [m, c] : cp.terms()) slot.add_term(mono_add(m, basis_[s]), c);
    }
  return out;
}

ZPoly TraceModule::act_raw(const CoeffPoly& a, const std::vector<std::int64_t>& pairing, const ZPoly& v) const {
  if (static_cast<int>(pairing.size()) != nz()) throw StructuralError("generator pairing has the wrong length");
  auto hb = CoeffPoly::var(td_.full, 0);
  ZPoly out;
  for (auto& [nu, f] : v) {
    std::int64_t s = 0;
    for (int l = 0; l < nz(); ++l) s += nu[l] * pairing[l];
    out.emplace(nu, (a + hb.scaled(mod_reduce(s, td_.p))) * f);
  }
  return out;
}

ModElem TraceModule::act(const CoeffPoly& a, const std::vector<std::int64_t>& pairing, const ModElem& v) const {
  return normal_form(act_raw(a, pairing, lift(v)));
}

ModElem TraceModule::act_gen(int g, const ModElem& v) const {
  auto& G = td_.gens.at(g);
  return act(G.value, G.pairing, v);
}

ModElem TraceModule::act_z(const ZExp& e, const ModElem& v) const {
  ModElem out;
  for (auto& s : v) out.push_back(s.shifted(e));
  return out;
}

ModElem TraceModule::apply(const OpMatrix& A, const ModElem& v) const {
  if (A.cols() != v.size() || A.rows() != rank()) throw StructuralError("operator and vector sizes differ");
  ModElem out = zero();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t s = 0; s < v.size(); ++s) out[i] += A(i, s) * v[s];
  return out;
}

OpMatrix TraceModule::act_matrix(int g) const {
  OpMatrix A(rank(), rank(), series(CoeffPoly(td_.coeff)));
  for (std::size_t s = 0; s < rank(); ++s) {
    auto col = act_gen(g, basis_vector(s));
    for (std::size_t i = 0; i < rank(); ++i) A(i, s) = col[i];
  }
  return A;
}

OpMatrix TraceModule::frobenius_action(const CoeffPoly& L) const {
  require_same_ring(L.ring(), td_.full, "frobenius_action");
  OpMatrix A(rank(), rank(), series(CoeffPoly(td_.coeff)));
  for (std::size_t s = 0; s < rank(); ++s) {
    auto col = normal_form({{ZExp{}, L * CoeffPoly::monomial(td_.full, basis_[s], 1)}});
    for (std::size_t i = 0; i < rank(); ++i) A(i, s) = col[i];
  }
  return A;
}

OpMatrix TraceModule::trace_pcurvature(int g) const {
  OpMatrix A(rank(), rank(), series(CoeffPoly(td_.coeff)));
  auto hp = CoeffPoly::var(td_.coeff, 0, td_.p - 1);
  for (std::size_t s = 0; s < rank(); ++s) {
    auto e = basis_vector(s);
    auto once = act_gen(g, e);
    auto v = once;
    for (std::uint32_t k = 1; k < td_.p; ++k) v = act_gen(g, v);
    for (std::size_t i = 0; i < rank(); ++i) A(i, s) = v[i] - once[i].scaled(hp);
  }
  return A;
}

std::string TraceModule::check_well_defined(int deg) const {
  for (int d = 1; d <= deg; ++d)
    for (auto& mu : novikov_exponents(nz(), M_)) {
      int dp = static_cast<int>(l1(monoid_element(td_.roots, mu)));
      if (dp > d) continue;
      std::pair<CoeffPoly, CoeffPoly> PQ(CoeffPoly(td_.full), CoeffPoly(td_.full));
      {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = pq_cache_.find(mu);
        if (it == pq_cache_.end()) it = pq_cache_.emplace(mu, relation_pair(td_, mu)).first;
        PQ = it->second;
      }
      auto img = shift_images(td_, mu);
      for (auto& gm : monomials_of_degree(td_.full->nvars(), d - dp)) {
        CoeffPoly g = CoeffPoly::monomial(td_.full, gm, 1);
        ZPoly lhs{{ZExp{}, g * PQ.first}}, rhs{{zexp_of(mu), g.substitute(img) * PQ.second}};
        if (normal_form(lhs) != normal_form(rhs))
          return "relation mu=" + mu_str(mu) + " g=" + g.str() + " does not vanish";
        for (auto& G : td_.gens) {
          if (normal_form(act_raw(G.value, G.pairing, lhs)) != normal_form(act_raw(G.value, G.pairing, rhs)))
            return G.name + " acts differently on the two sides of relation mu=" + mu_str(mu) + " g=" + g.str();
        }
      }
    }
  return "";
}

std::string TraceModule::check_covariant_constancy(const OpMatrix& F, const CoeffPoly& L) const {
  auto names = basis_names();
  for (std::size_t s = 0; s < rank(); ++s) {
    auto e = basis_vector(s);
    auto Fe = apply(F, e);
    for (std::size_t g = 0; g < td_.gens.size(); ++g) {
      int gi = static_cast<int>(g);
      if (act_gen(gi, Fe) != apply(F, act_gen(gi, e)))
        return "[F, " + td_.gens[g].name + "] is nonzero on " + names[s];
    }
    for (int l = 0; l < nz(); ++l) {
      ZExp z = zunit(l);
      auto direct = normal_form({{z, L * CoeffPoly::monomial(td_.full, basis_[s], 1)}});
      if (direct != act_z(z, Fe)) return "F is not linear in z" + std::to_string(l + 1) + " on " + names[s];
    }
  }
  return "";
}

std::string TraceModule::check_pcurvature_linear(int g) const {
  auto F = trace_pcurvature(g);
  auto names = basis_names();
  auto hp = CoeffPoly::var(td_.coeff, 0, td_.p - 1);
  for (std::size_t s = 0; s < rank(); ++s)
    for (int l = 0; l < nz(); ++l) {
      ZExp z = zunit(l);
      auto start = act_z(z, basis_vector(s));
      auto once = act_gen(g, start);
      auto v = once;
      for (std::uint32_t k = 1; k < td_.p; ++k) v = act_gen(g, v);
      for (std::size_t i = 0; i < rank(); ++i) v[i] -= once[i].scaled(hp);
      if (v != act_z(z, apply(F, basis_vector(s))))
        return "p-curvature of " + td_.gens[g].name + " is not linear in z" + std::to_string(l + 1) + " on " + names[s];
    }
  return "";
}

std::string modelem_str(const ModElem& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << v[s].str() << ")*[" << names.at(s) << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace mh
