#include "mhikita/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "mhikita/balgebra.hpp"
#include "mhikita/envsl2.hpp"
#include "mhikita/errors.hpp"
#include "mhikita/field.hpp"
#include "mhikita/quantum.hpp"
#include "mhikita/req.hpp"
#include "mhikita/restricted.hpp"
#include "mhikita/trace.hpp"
#include "mhikita/weyl.hpp"

namespace mh {

using nlohmann::json;

namespace {

const std::vector<std::string> kSuites = {"weyl-center",   "restricted-axioms", "springer-sl2",
                                          "hypertoric-match", "pcurvature-lin", "hikita-classical"};

const char* kThetaNote =
    "theta fixed to 0: the odd generator of the mu_p-equivariant cohomology of a point is set to zero; "
    "only even-degree classes occur";
const char* kTransportNote =
    "quantum side modelled by the trace module of the Gale dual data (transport), not by curve counts";

using Out = std::vector<CheckResult>;

struct Recorder {
  std::string cell;
  Out* out;
  void check(const std::string& id, const std::string& statement, bool ok, const std::string& detail,
             const std::function<std::string()>& witness = {}) {
    CheckResult c{cell, id, statement, ok ? "pass" : "fail", detail, ""};
    if (!ok) c.witness = witness ? witness() : detail;
    out->push_back(std::move(c));
  }
  void skip(const std::string& id, const std::string& statement, const std::string& why) {
    out->push_back({cell, id, statement, "skipped", why, ""});
  }
};

std::string cell_name(const std::string& input, std::uint32_t p) { return input + " p=" + std::to_string(p); }

bool is_zero_op(const OpMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) return false;
  return true;
}

std::string first_nonzero(const OpMatrix& A, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) return "entry (" + names.at(i) + ", " + names.at(j) + ") = " + A(i, j).str();
  return "";
}

std::string report_witness(const OperatorReport& r, const std::vector<std::string>& names) {
  if (r.equal) return "";
  return "first difference at (" + names.at(r.first_row) + ", " + names.at(r.first_col) + "): " + r.lhs + " vs " + r.rhs;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---- weyl-center

void run_weyl_center(const InputSpec& in, std::uint32_t p, Recorder& rec) {
  int n = in.gauge.n;
  auto R = make_ring(p, {"hbar"});
  auto hb = WeylElement::hbar(R, n);
  for (int i = 0; i < n; ++i) {
    std::string k = std::to_string(i + 1);
    auto f = CommutativePair::x(p, n, i) * CommutativePair::y(p, n, i);
    auto L = frobenius_splitting_weyl(f, R);
    auto cc = centrality_check(L);
    rec.check("lambda(x" + k + "y" + k + ") central", "Artin-Schreier centrality", cc.central,
              "commutators with all " + std::to_string(2 * n) + " generators vanish",
              [&] { return cc.witness_label + " = " + cc.witness; });
    auto E = WeylElement::euler(R, n, i);
    auto want = E.pow(p) - hb.pow(p - 1) * E;
    rec.check("lambda(x" + k + "y" + k + ") = E" + k + "^p - hbar^(p-1) E" + k, "Artin-Schreier centrality",
              L == want, "x^p d^p normal ordered against the Euler expansion",
              [&] { return L.str() + " vs " + want.str(); });
    auto fx = frobenius_splitting_weyl(CommutativePair::x(p, n, i), R);
    auto fy = frobenius_splitting_weyl(CommutativePair::y(p, n, i), R);
    auto cx = centrality_check(fx), cy = centrality_check(fy);
    rec.check("lambda(x" + k + ") and lambda(y" + k + ") central", "Artin-Schreier centrality",
              cx.central && cy.central, "x^p and d^p commute with every generator",
              [&] { return cx.central ? cy.witness_label + " = " + cy.witness : cx.witness_label + " = " + cx.witness; });
    auto ef = euler_factorization(R, n, p, i);
    rec.check("x" + k + "^p d" + k + "^p = prod (E" + k + " - j hbar)", "Artin-Schreier centrality",
              ef.normal_ordered == ef.product_minus && ef.normal_ordered == L, "product over j in F_p",
              [&] { return ef.normal_ordered.str() + " vs " + ef.product_minus.str(); });
  }
}

// ---- restricted-axioms

void record_axioms(const RestrictedReport& r, const std::string& prefix, Recorder& rec) {
  for (auto& c : r.checks)
    rec.check(prefix + c.name, "restricted power axioms and the Artin-Schreier equivalence", c.passed,
              std::to_string(c.instances) + " instances over " + std::to_string(r.samples) + " samples",
              [&] { return c.witness; });
}

void run_restricted(const InputSpec& in, std::uint32_t p, Recorder& rec) {
  TraceData td = in.sl2 ? trace_data_sl2(p) : trace_data_hypertoric(in.gauge, p, in.gauge.sigma_lift);
  auto C = req_context(td);
  auto T = req_restricted_table(C);
  record_axioms(restricted_axioms_check(T, 40, 4, 1000 + p), "R_eq: ", rec);
  auto hbar = REqElement::var(C, 0);
  for (std::size_t g = static_cast<std::size_t>(C->nz) + 1; g < T.gens.size(); ++g) {
    auto prod = REqElement::constant(C, 1);
    for (std::uint32_t j = 0; j < p; ++j) prod = prod * (T.gens[g] - hbar.scaled(j));
    auto s = artin_schreier(T, g);
    rec.check("R_eq: s(" + T.names[g] + ") = prod (" + T.names[g] + " - j hbar)", "Artin-Schreier map", s == prod,
              "s(a) for a^[p] = a", [&] { return s.str() + " vs " + prod.str(); });
  }
  for (int l = 0; l < C->nz; ++l) {
    auto s = artin_schreier(T, l);
    auto want = REqElement::z(C, l).pow(p);
    rec.check("R_eq: s(" + T.names[l] + ") = " + T.names[l] + "^p", "Artin-Schreier map", s == want,
              "(z^mu)^[p] = 0", [&] { return s.str(); });
  }
  auto sh = artin_schreier(T, static_cast<std::size_t>(C->nz));
  rec.check("R_eq: s(hbar) = 0", "Artin-Schreier map", sh.is_zero(), "hbar^[p] = hbar", [&] { return sh.str(); });
  if (in.sl2) {
    auto P = pbw_restricted_table(make_ring(p, {"hbar", "sigma"}));
    record_axioms(restricted_axioms_check(P, 24, 3, 2000 + p), "U(sl2): ", rec);
  }
}

void run_fixture(const std::string& fixture, std::uint32_t p, Recorder& rec) {
  auto T = weyl_fixture_table(p, fixture == "weyl-corrupted");
  record_axioms(restricted_axioms_check(T, 40, 4, 3000 + p), "fixture: ", rec);
}

// ---- springer-sl2

void run_springer(std::uint32_t p, int N, int M, Recorder& rec) {
  auto R = make_ring(p, {"hbar", "sigma"});
  auto S = springer_input_ring(p);
  const char* names[] = {"e", "f", "h"};
  for (int v = 1; v <= 3; ++v) {
    auto s = frobenius_splitting_springer(CoeffPoly::var(S, v), R);
    auto cr = sl2_centrality(s);
    rec.check(std::string("s(") + names[v - 1] + ") central", "Springer Frobenius splitting", cr.central,
              "commutators with e, f, h vanish", [&] { return cr.witness_label + " = " + cr.witness; });
  }
  auto sig = sigma_splitting(R);
  auto hb = CoeffPoly::var(R, 0), sg = CoeffPoly::var(R, 1);
  std::uint32_t bad = p;
  for (std::uint32_t j = 0; j < p && bad == p; ++j)
    if (sig.substitute({hb, sg - hb.scaled(j)}) != sig) bad = j;
  rec.check("sigma^p - hbar^(p-1) sigma shift invariant", "Springer Frobenius splitting", bad == p,
            "invariant under sigma -> sigma - j hbar for all j in F_p",
            [&] { return "fails for j = " + std::to_string(bad); });
  auto omega = PBWElement::casimir(R);
  auto hc = harish_chandra(omega);
  auto back = harish_chandra_inverse(hc.shifted, R);
  rec.check("Harish-Chandra round trip on the Casimir", "Harish-Chandra projection", back == omega,
            "shifted image " + hc.shifted.str(), [&] { return back.str() + " vs " + omega.str(); });
  auto z = omega * omega + PBWElement::scalar(CoeffPoly::var(R, 1));
  auto back2 = harish_chandra_inverse(harish_chandra(z).shifted, R);
  rec.check("Harish-Chandra round trip on Casimir^2 + sigma", "Harish-Chandra projection", back2 == z, "exact",
            [&] { return back2.str(); });

  TraceModule m(trace_data_sl2(p), N, M);
  auto L = frobenius_image_sl2(m.data(), CoeffPoly::var(S, 3));
  auto F = m.trace_pcurvature(0);
  auto G = m.frobenius_action(L);
  auto rep = compare_operators(F, G, N, M);
  auto names2 = m.basis_names();
  rec.check("trace p-curvature of h = action of s(h)", "operator matching", rep.equal,
            "rank " + std::to_string(m.rank()) + ", basis " + join(names2, " "),
            [&] { return report_witness(rep, names2); });
  auto wd = m.check_well_defined(std::min(N, 5));
  rec.check("trace action well defined", "trace module", wd.empty(), "both sides of every relation agree",
            [&] { return wd; });
}

// ---- hypertoric-match

Arrangement dual_arrangement(const GaugeData& d) {
  try {
    return build_arrangement(gale_dual(d));
  } catch (const InputError& e) {
    throw InputError(std::string("degenerate stability: sigma gives a degenerate Gale dual arrangement (") + e.what() + ")");
  }
}

void run_match(const InputSpec& in, std::uint32_t p, int N, int M, Recorder& rec) {
  // sigma first: its error names the cocharacter
  TraceData td = in.sl2 ? trace_data_sl2(p) : trace_data_hypertoric(in.gauge, p, in.gauge.sigma_lift);
  if (!in.sl2) {
    auto arr = build_arrangement(in.gauge);
    auto dual = dual_arrangement(in.gauge);
    rec.check("arrangements generic", "hypertoric data", true,
              std::to_string(arr.vertices.size()) + " vertices, Gale dual " + std::to_string(dual.vertices.size()));
  }
  TraceModule m(std::move(td), N, M);
  auto names = m.basis_names();
  auto& cert = m.certificate();
  rec.check("trace relations confluent", "trace module", true,
            std::to_string(cert.relations) + " relation rows, " + std::to_string(cert.overlaps) +
                " overlaps reduced to zero, rank " + std::to_string(m.rank()));
  int ngen = in.sl2 ? 1 : in.gauge.n;
  for (int i = 0; i < ngen; ++i) {
    std::string g = m.data().gens[i].name;
    CoeffPoly L = in.sl2 ? frobenius_image_sl2(m.data(), CoeffPoly::var(springer_input_ring(p), 3))
                         : frobenius_image_hypertoric(m.data(), CommutativePair::x(p, in.gauge.n, i) *
                                                                    CommutativePair::y(p, in.gauge.n, i));
    auto F = m.trace_pcurvature(i);
    auto G = m.frobenius_action(L);
    auto rep = compare_operators(F, G, N, M);
    std::string src = in.sl2 ? "s(h)" : "lambda(x" + std::to_string(i + 1) + "y" + std::to_string(i + 1) + ")";
    rec.check("p-curvature of " + g + " = action of " + src, "operator matching", rep.equal,
              std::to_string(rep.dim) + "x" + std::to_string(rep.dim) + " over z-degree <= " + std::to_string(M),
              [&] { return report_witness(rep, names); });
    auto cc = m.check_covariant_constancy(G, L);
    rec.check("action of " + src + " covariantly constant", "operator matching", cc.empty(),
              "commutes with every generator and every z^alpha", [&] { return cc; });
  }
  auto hp = m.trace_pcurvature(m.generator_index("hbar"));
  rec.check("p-curvature of hbar vanishes", "operator matching", is_zero_op(hp), "s(hbar) = 0",
            [&] { return first_nonzero(hp, names); });
  auto wd = m.check_well_defined(std::min(N, 5));
  rec.check("trace action well defined", "trace module", wd.empty(), "both sides of every relation agree",
            [&] { return wd; });
}

// ---- pcurvature-lin

void run_closed_forms(std::uint32_t p, int M, Recorder& rec) {
  auto R = make_ring(p, {"hbar"});
  auto hb = CoeffPoly::var(R, 0);
  NovikovSeries zero(R, 1, M);
  auto cst = [&](const CoeffPoly& c) { return NovikovSeries::constant(c, 1, M); };
  Connection c0{R, 1, M, {1}, OpMatrix(2, 2, zero)};
  auto F0 = connection_pcurvature(c0);
  rec.check("zero residue: p-curvature vanishes", "p-curvature closed forms", is_zero_op(F0), "nabla = hbar z d/dz",
            [&] { return first_nonzero(F0, {"e1", "e2"}); });
  // commuting residue: a diagonal and a nilpotent part that commute
  OpMatrix C(2, 2, zero);
  C(0, 0) = cst(CoeffPoly::constant(R, 2) + hb);
  C(1, 1) = cst(CoeffPoly::constant(R, 2) + hb);
  C(0, 1) = cst(hb.scaled(3));
  Connection c1{R, 1, M, {2}, C};
  auto F1 = connection_pcurvature(c1);
  auto want = residue_pcurvature(C, p);
  // independent: (a + N)^p = a^p + N^p with N^2 = 0
  auto a = CoeffPoly::constant(R, 2) + hb;
  OpMatrix hand(2, 2, zero);
  hand(0, 0) = cst(a.pow(p) - hb.pow(p - 1) * a);
  hand(1, 1) = hand(0, 0);
  hand(0, 1) = cst(CoeffPoly(R) - hb.pow(p - 1) * hb.scaled(3));
  rec.check("constant residue: C^p - hbar^(p-1) C", "p-curvature closed forms", F1 == want && want == hand,
            "C = (2 + hbar) I + 3 hbar E12", [&] { return first_nonzero(F1 - hand, {"e1", "e2"}); });
  // random residues with z-dependence: linearity certificate
  std::mt19937_64 rng(77 + p);
  for (int t = 0; t < 3; ++t) {
    OpMatrix A(2, 2, zero);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        NovikovSeries s(R, 1, M);
        for (int k = 0; k <= 2; ++k) s.add_term(zscale(zunit(0), k), CoeffPoly::constant(R, rng() % p) + hb.scaled(rng() % p));
        A(i, j) = s;
      }
    Connection c{R, 1, M, {static_cast<std::int64_t>(1 + rng() % 3)}, A};
    std::string err;
    try {
      auto F = connection_pcurvature(c);
      err = pcurvature_linearity(c, F);
    } catch (const CheckError& e) {
      err = e.what();
    }
    rec.check("random residue " + std::to_string(t + 1) + ": p-curvature commutes with z", "p-curvature linearity",
              err.empty(), "2x2 residue with z-degree 2 entries", [&] { return err; });
  }
}

void certify_module(const QuantumModule& q, const std::string& tag, Recorder& rec) {
  for (std::size_t i = 0; i < q.nabla.size(); ++i) {
    std::string err;
    try {
      auto F = connection_pcurvature(q.nabla[i]);
      err = pcurvature_linearity(q.nabla[i], F);
    } catch (const CheckError& e) {
      err = e.what();
    }
    rec.check(tag + "p-curvature of nabla_" + q.class_names[i] + " commutes with z", "p-curvature linearity",
              err.empty(), "every z^alpha with |alpha| <= " + std::to_string(q.M), [&] { return err; });
    for (std::size_t j = i + 1; j < q.nabla.size(); ++j) {
      auto w = flatness_witness(q.nabla[i], q.nabla[j], q.basis_names);
      rec.check(tag + "[nabla_" + q.class_names[i] + ", nabla_" + q.class_names[j] + "] = 0", "flatness", w.empty(),
                "on the basis", [&] { return w; });
    }
  }
}

void run_pcurvature(const InputSpec& in, std::uint32_t p, int N, int M, const std::string& structure, Recorder& rec) {
  TraceModule m(in.sl2 ? trace_data_sl2(p) : trace_data_hypertoric(in.gauge, p, in.gauge.sigma_lift), N, M);
  auto q = transported_module(m);
  certify_module(q, "", rec);
  if (!structure.empty()) {
    if (in.sl2) {
      rec.skip("structure data", "structure formula", "structure data applies to hypertoric input only");
      return;
    }
    auto sd = parse_structure(read_file(structure));
    auto s = structure_module(gale_dual(in.gauge), sd, p, M);
    certify_module(s, "structure: ", rec);
    for (std::size_t i = 0; i < s.nabla.size(); ++i) {
      std::vector<std::int64_t> x(s.nabla.size(), 0);
      x[i] = 1;
      auto z0 = z0_block(s.nabla[i].A);
      auto cup = class_cup(s, x);
      rec.check("structure: nabla_" + s.class_names[i] + " at z = 0 is the cup product", "structure formula",
                z0 == cup, "z^alpha terms vanish", [&] { return first_nonzero(z0 - cup, s.basis_names); });
    }
  }
}

// ---- hikita-classical

void run_hikita(const InputSpec& in, std::uint32_t p, int N, int M, Recorder& rec) {
  TraceModule m(in.sl2 ? trace_data_sl2(p) : trace_data_hypertoric(in.gauge, p, in.gauge.sigma_lift), N, M);
  auto q = transported_module(m);
  std::ostringstream sep;
  for (auto& [pr, idx] : q.spectrum.separators) sep << " (" << pr.first << "," << pr.second << ")->" << idx;
  rec.check("simple spectrum certificate", "jointly simple spectrum", q.spectrum.simple,
            "separators:" + (sep.str().empty() ? std::string(" none needed") : sep.str()), [&] {
              return "vertices " + std::to_string(q.spectrum.offending.first) + " and " +
                     std::to_string(q.spectrum.offending.second) + " are not separated";
            });
  for (std::size_t i = 0; i < q.nabla.size(); ++i) {
    std::vector<std::int64_t> x(q.nabla.size(), 0);
    x[i] = 1;
    auto F = quantum_steenrod_deg2(q, x);
    auto z0 = z0_block(F);
    auto st = classical_steenrod_deg2(q, x);
    rec.check("Steenrod of " + q.class_names[i] + " at z = 0 is classical", "classical limit", z0 == st,
              "entrywise", [&] { return first_nonzero(z0 - st, q.basis_names); });
  }
  auto arr = in.sl2 ? build_arrangement(builtin_gauge("t-star-p1")) : dual_arrangement(in.gauge);
  BAlgebra B = in.sl2 ? b_algebra_sl2(p, 1, N, 4, 5000 + p)
                      : b_algebra_hypertoric(in.gauge, p, in.gauge.sigma_lift, N, 4, 5000 + p);
  int verts = static_cast<int>(arr.vertices.size());
  rec.check("B-algebra rank = vertices of the Gale dual", "Hikita consistency", B.rank == verts && B.stable,
            "rank " + std::to_string(B.rank) + " at " + join(B.params, ", ") + ", basis " + join(B.basis, " "),
            [&] { return "rank " + std::to_string(B.rank) + " vs " + std::to_string(verts) + " vertices"; });
}

bool applies(const std::string& suite, const InputSpec& in) {
  if (suite == "weyl-center") return !in.sl2;
  if (suite == "springer-sl2") return in.sl2;
  return true;
}

}  // namespace

bool SuiteReport::passed() const {
  for (auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::vector<std::string> suite_names() { return kSuites; }

std::vector<std::string> builtin_input_names() {
  auto v = builtin_gauge_names();
  v.push_back("sl2-springer");
  return v;
}

GaugeData parse_gauge(const std::string& text, const std::string& fallback_name) {
  GaugeData d;
  d.name = fallback_name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_chi = false, have_sigma = false, have_pi = false;
  int iota_width = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string where = "gauge file line " + std::to_string(lineno) + ": ";
    if (kw == "name") {
      if (!(ls >> d.name)) throw InputError(where + "name needs a value");
      continue;
    }
    std::vector<std::int64_t> v;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError(where + "expected an integer, got '" + tok + "'");
      }
    }
    if (kw == "iota") {
      if (iota_width >= 0 && static_cast<int>(v.size()) != iota_width) throw InputError(where + "iota rows differ in length");
      iota_width = static_cast<int>(v.size());
      d.iota.push_back(v);
    } else if (kw == "pi") {
      d.pi.push_back(v);
      have_pi = true;
    } else if (kw == "chi") {
      if (have_chi) throw InputError(where + "chi given twice");
      d.chi_lift = v;
      have_chi = true;
    } else if (kw == "sigma") {
      if (have_sigma) throw InputError(where + "sigma given twice");
      d.sigma_lift = v;
      have_sigma = true;
    } else {
      throw InputError(where + "unknown keyword '" + kw + "'");
    }
  }
  if (!have_chi || !have_sigma) throw InputError("gauge file: chi and sigma lines are required");
  if (d.iota.empty()) throw InputError("gauge file: iota lines are required (one per coordinate)");
  d.n = static_cast<int>(d.iota.size());
  d.k = iota_width;
  if (!have_pi && d.k < d.n) throw InputError("gauge file: pi lines are required");
  validate_gauge(d);
  return d;
}

InputSpec resolve_input(const std::string& ref) {
  InputSpec in;
  if (ref == "sl2-springer") {
    in.name = ref;
    in.sl2 = true;
    return in;
  }
  auto b = builtin_gauge_names();
  if (std::find(b.begin(), b.end(), ref) != b.end()) {
    in.name = ref;
    in.gauge = builtin_gauge(ref);
    return in;
  }
  std::ifstream probe(ref);
  if (!probe) throw InputError("input '" + ref + "' is neither a built-in name (" + join(builtin_input_names(), ", ") +
                               ") nor a readable file");
  std::string stem = ref.substr(ref.find_last_of('/') + 1);
  in.gauge = parse_gauge(read_file(ref), stem);
  in.name = in.gauge.name;
  return in;
}

void validate_config(const RunConfig& cfg) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw InputError("unknown suite '" + cfg.suite + "'; expected one of " + join(kSuites, ", "));
  if (cfg.primes.empty()) throw InputError("at least one prime is required");
  for (auto p : cfg.primes)
    if (p < 3 || p > 61 || !is_prime(p)) throw InputError("prime " + std::to_string(p) + " must be an odd prime below 64");
  if (cfg.N < 2) throw InputError("--trunc-deg must be at least 2");
  if (cfg.M < 1 || cfg.M > 8) throw InputError("--trunc-z must be between 1 and 8");
  if (cfg.jobs < 1) throw InputError("--jobs must be positive");
  if (!cfg.fixture.empty() && cfg.suite != "restricted-axioms")
    throw InputError("--fixture only applies to restricted-axioms");
  if (!cfg.fixture.empty() && cfg.fixture != "weyl" && cfg.fixture != "weyl-corrupted")
    throw InputError("unknown fixture '" + cfg.fixture + "'; expected weyl or weyl-corrupted");
  if (!cfg.structure.empty() && cfg.suite != "pcurvature-lin")
    throw InputError("--structure only applies to pcurvature-lin");
}

SuiteReport run_suite(const RunConfig& cfg) {
  validate_config(cfg);
  SuiteReport rep;
  rep.config = cfg;
  rep.notes = {kThetaNote, "t = hbar: loop and conical parameters are identified"};
  if (cfg.suite == "pcurvature-lin" || cfg.suite == "hikita-classical") rep.notes.push_back(kTransportNote);

  std::vector<InputSpec> inputs;
  if (cfg.inputs.empty()) {
    // a fixture run checks only the fixture
    if (cfg.fixture.empty())
      for (auto& n : builtin_input_names()) {
        auto in = resolve_input(n);
        if (applies(cfg.suite, in)) inputs.push_back(in);
      }
  } else {
    for (auto& r : cfg.inputs) {
      auto in = resolve_input(r);
      if (!applies(cfg.suite, in))
        throw InputError("suite " + cfg.suite + " does not accept input " + in.name +
                         (in.sl2 ? " (needs hypertoric data)" : " (needs sl2-springer)"));
      inputs.push_back(in);
    }
  }

  struct Cell {
    std::string label;
    std::function<void(Recorder&)> run;
  };
  std::vector<Cell> cells;
  for (auto p : cfg.primes) {
    if (!cfg.fixture.empty())
      cells.push_back({cell_name("fixture " + cfg.fixture, p), [&cfg, p](Recorder& r) { run_fixture(cfg.fixture, p, r); }});
    if (cfg.suite == "pcurvature-lin")
      cells.push_back({cell_name("closed forms", p), [&cfg, p](Recorder& r) { run_closed_forms(p, cfg.M, r); }});
    for (auto& in : inputs) {
      std::function<void(Recorder&)> f;
      if (cfg.suite == "weyl-center") f = [&in, p](Recorder& r) { run_weyl_center(in, p, r); };
      if (cfg.suite == "restricted-axioms") f = [&in, p](Recorder& r) { run_restricted(in, p, r); };
      if (cfg.suite == "springer-sl2") f = [&cfg, p](Recorder& r) { run_springer(p, cfg.N, cfg.M, r); };
      if (cfg.suite == "hypertoric-match") f = [&cfg, &in, p](Recorder& r) { run_match(in, p, cfg.N, cfg.M, r); };
      if (cfg.suite == "pcurvature-lin")
        f = [&cfg, &in, p](Recorder& r) { run_pcurvature(in, p, cfg.N, cfg.M, cfg.structure, r); };
      if (cfg.suite == "hikita-classical") f = [&cfg, &in, p](Recorder& r) { run_hikita(in, p, cfg.N, cfg.M, r); };
      cells.push_back({cell_name(in.name, p), f});
    }
  }

  std::vector<Out> outs(cells.size());
  std::vector<std::exception_ptr> errs(cells.size());
  std::vector<double> secs(cells.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next++) < cells.size();) {
      auto t0 = std::chrono::steady_clock::now();
      Recorder rec{cells[c].label, &outs[c]};
      try {
        cells[c].run(rec);
      } catch (const InputError&) {
        errs[c] = std::current_exception();
      } catch (const std::exception& e) {
        // a structural failure inside the computation is a failed check, not bad input
        rec.check("cell completed", "computation", false, "the cell aborted", [&] { return std::string(e.what()); });
      }
      secs[c] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  int nthreads = std::min<int>(cfg.jobs, static_cast<int>(cells.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (auto& r : outs[c]) rep.checks.push_back(r);
    rep.cell_seconds[cells[c].label] = secs[c];
  }
  return rep;
}

namespace {

json config_json(const RunConfig& c) {
  json j;
  j["suite"] = c.suite;
  j["primes"] = c.primes;
  j["trunc_deg"] = c.N;
  j["trunc_z"] = c.M;
  j["inputs"] = c.inputs;
  j["fixture"] = c.fixture;
  j["structure"] = c.structure;
  j["jobs"] = c.jobs;
  return j;
}

}  // namespace

json report_json(const SuiteReport& r) {
  json j;
  j["artifact"] = {{"name", "mhikita-verify"}, {"version", kArtifactVersion}};
  j["config"] = config_json(r.config);
  j["notes"] = r.notes;
  json checks = json::array();
  int pass = 0, fail = 0, skip = 0;
  for (auto& c : r.checks) {
    json e{{"cell", c.cell}, {"id", c.id}, {"statement", c.statement}, {"status", c.status}, {"detail", c.detail}};
    if (c.status == "fail") e["witness"] = c.witness;
    checks.push_back(e);
    (c.status == "pass" ? pass : c.status == "fail" ? fail : skip)++;
  }
  j["checks"] = checks;
  j["summary"] = {{"passed", pass}, {"failed", fail}, {"skipped", skip}, {"status", fail ? "fail" : "pass"}};
  if (r.config.timings) {
    json t;
    for (auto& [cell, s] : r.cell_seconds) t[cell] = s;
    j["timings"] = t;
  }
  return j;
}

json error_json(const RunConfig& cfg, const std::string& kind, const std::string& message) {
  json j;
  j["artifact"] = {{"name", "mhikita-verify"}, {"version", kArtifactVersion}};
  j["config"] = config_json(cfg);
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

std::string validate_report(const json& j) {
  if (!j.is_object()) return "report is not an object";
  auto str_field = [](const json& o, const char* k) { return o.contains(k) && o[k].is_string(); };
  if (!j.contains("artifact") || !str_field(j["artifact"], "name") || !str_field(j["artifact"], "version"))
    return "artifact name/version missing";
  if (!j.contains("config") || !j["config"].is_object() || !str_field(j["config"], "suite")) return "config missing";
  if (j.contains("error")) {
    if (!str_field(j["error"], "kind") || !str_field(j["error"], "message")) return "error needs kind and message";
    return "";
  }
  if (!j.contains("notes") || !j["notes"].is_array()) return "notes missing";
  if (!j.contains("checks") || !j["checks"].is_array()) return "checks missing";
  int pass = 0, fail = 0, skip = 0;
  for (auto& c : j["checks"]) {
    for (auto k : {"cell", "id", "statement", "status", "detail"})
      if (!str_field(c, k)) return std::string("check without string field ") + k;
    std::string s = c["status"];
    if (s != "pass" && s != "fail" && s != "skipped") return "bad status " + s;
    if (s == "fail" && !str_field(c, "witness")) return "failing check " + c["id"].get<std::string>() + " has no witness";
    (s == "pass" ? pass : s == "fail" ? fail : skip)++;
  }
  if (!j.contains("summary")) return "summary missing";
  auto& s = j["summary"];
  if (s.value("passed", -1) != pass || s.value("failed", -1) != fail || s.value("skipped", -1) != skip)
    return "summary counts disagree with the checks";
  if (s.value("status", std::string()) != (fail ? "fail" : "pass")) return "summary status disagrees";
  return "";
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mh
