#include "mhikita/quantum.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "mhikita/errors.hpp"

namespace mh {

ModElem zero_elem(const RingPtr& R, std::size_t rank, int nz, int M) {
  return ModElem(rank, NovikovSeries(R, nz, M));
}

ModElem unit_elem(const RingPtr& R, std::size_t rank, int nz, int M, std::size_t s) {
  auto v = zero_elem(R, rank, nz, M);
  v.at(s) = NovikovSeries::constant(CoeffPoly::constant(R, 1), nz, M);
  return v;
}

ModElem matrix_apply(const OpMatrix& A, const ModElem& v) {
  if (A.cols() != v.size()) throw StructuralError("operator and vector sizes differ");
  ModElem out(A.rows(), A.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t s = 0; s < v.size(); ++s) out[i] += A(i, s) * v[s];
  return out;
}

namespace {

NovikovSeries euler_derivative(const NovikovSeries& f, const std::vector<std::int64_t>& w) {
  NovikovSeries r(f.ring(), f.nz(), f.bound());
  std::uint32_t p = f.ring()->p;
  for (auto& [e, c] : f.terms()) {
    std::int64_t s = 0;
    for (std::size_t l = 0; l < w.size(); ++l) s += e[l] * w[l];
    r.add_term(e, c.scaled(mod_reduce(s, p)));
  }
  return r;
}

ModElem scaled(const ModElem& v, const CoeffPoly& c) {
  ModElem out;
  for (auto& x : v) out.push_back(x.scaled(c));
  return out;
}

ModElem shifted(const ModElem& v, const ZExp& e) {
  ModElem out;
  for (auto& x : v) out.push_back(x.shifted(e));
  return out;
}

ModElem sub(ModElem a, const ModElem& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

ModElem pcurv_on(const Connection& c, const ModElem& v) {
  std::uint32_t p = c.R->p;
  auto once = connection_apply(c, v);
  auto w = once;
  for (std::uint32_t k = 1; k < p; ++k) w = connection_apply(c, w);
  return sub(w, scaled(once, CoeffPoly::var(c.R, 0, p - 1)));
}

ZExp zexp_of(const std::vector<int>& mu) {
  ZExp e{};
  for (std::size_t l = 0; l < mu.size(); ++l) e.at(l) = static_cast<std::uint16_t>(mu[l]);
  return e;
}

std::string zexp_text(const ZExp& e, int s) {
  std::ostringstream os;
  for (int l = 0; l < s; ++l) os << (l ? "," : "") << e[l];
  return os.str();
}

// affine expression over R: integer combinations of the variable names and 1
CoeffPoly parse_affine(const std::string& text, const RingPtr& R) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty matrix entry");
  CoeffPoly out(R);
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i) {
      throw InputError("malformed entry '" + text + "'");
    }
    std::int64_t coef = 1;
    bool have_num = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coef = std::stoll(s.substr(i, j - i));
      have_num = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    std::string name = s.substr(i, j - i);
    i = j;
    if (name.empty()) {
      if (!have_num) throw InputError("malformed entry '" + text + "'");
      out += CoeffPoly::constant(R, sign * coef);
      continue;
    }
    int v = -1;
    for (int k = 0; k < R->nvars(); ++k)
      if (R->names[k] == name) v = k;
    if (v < 0) throw InputError("unknown symbol '" + name + "' in entry '" + text + "'");
    out += CoeffPoly::var(R, v).scaled(mod_reduce(sign * coef, R->p));
  }
  return out;
}

}  // namespace

ModElem connection_apply(const Connection& c, const ModElem& v) {
  auto out = matrix_apply(c.A, v);
  auto hb = CoeffPoly::var(c.R, 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += euler_derivative(v[i], c.weights).scaled(hb);
  return out;
}

std::string pcurvature_linearity(const Connection& c, const OpMatrix& F) {
  std::size_t n = c.A.rows();
  for (auto& mu : novikov_exponents(c.nz, c.M)) {
    ZExp z = zexp_of(mu);
    for (std::size_t s = 0; s < n; ++s) {
      auto e = unit_elem(c.R, n, c.nz, c.M, s);
      if (pcurv_on(c, shifted(e, z)) != shifted(matrix_apply(F, e), z))
        return "F does not commute with z^(" + zexp_text(z, c.nz) + ") on basis vector " + std::to_string(s + 1);
    }
  }
  return "";
}

OpMatrix connection_pcurvature(const Connection& c) {
  std::size_t n = c.A.rows();
  if (c.A.cols() != n) throw StructuralError("connection matrix must be square");
  if (static_cast<int>(c.weights.size()) != c.nz) throw StructuralError("connection weights have the wrong length");
  OpMatrix F(n, n, c.A.zero());
  for (std::size_t s = 0; s < n; ++s) {
    auto col = pcurv_on(c, unit_elem(c.R, n, c.nz, c.M, s));
    for (std::size_t i = 0; i < n; ++i) F(i, s) = col[i];
  }
  auto w = pcurvature_linearity(c, F);
  if (!w.empty())
    throw CheckError("p-curvature linearity certificate failed: " + w + "; rerun with a z-window above " +
                     std::to_string(c.M));
  return F;
}

OpMatrix residue_pcurvature(const OpMatrix& C, std::uint32_t p) {
  OpMatrix P = C;
  for (std::uint32_t k = 1; k < p; ++k) P = P * C;
  auto hp = CoeffPoly::var(C.zero().ring(), 0, p - 1);
  return P - C.map([&](const NovikovSeries& x) { return x.scaled(hp); });
}

StructureData parse_structure(const std::string& text) {
  StructureData sd;
  std::istringstream in(text);
  std::string line;
  bool have_nz = false;
  int lineno = 0;
  auto ints = [&](std::istringstream& ls) {
    std::vector<std::int64_t> v;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("structure file line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
      }
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "novikov") {
      auto v = ints(ls);
      if (v.size() != 1 || v[0] < 1 || v[0] > kMaxZ)
        throw InputError("structure file line " + std::to_string(lineno) + ": novikov takes one count in [1,4]");
      sd.nz = static_cast<int>(v[0]);
      have_nz = true;
    } else if (kw == "class") {
      sd.classes.push_back(ints(ls));
    } else if (kw == "root") {
      if (!have_nz) throw InputError("structure file: 'novikov' must come before any root");
      auto v = ints(ls);
      if (static_cast<int>(v.size()) != sd.nz)
        throw InputError("structure file line " + std::to_string(lineno) + ": root needs " + std::to_string(sd.nz) + " exponents");
      std::vector<int> e;
      int tot = 0;
      for (auto x : v) {
        if (x < 0) throw InputError("structure file line " + std::to_string(lineno) + ": negative root exponent");
        e.push_back(static_cast<int>(x));
        tot += static_cast<int>(x);
      }
      if (!tot) throw InputError("structure file line " + std::to_string(lineno) + ": zero root");
      sd.roots.push_back({e, {}});
    } else if (kw == "row") {
      if (sd.roots.empty()) throw InputError("structure file line " + std::to_string(lineno) + ": row before any root");
      std::vector<std::string> row;
      std::string tok;
      while (ls >> tok) row.push_back(tok);
      sd.roots.back().second.push_back(row);
    } else {
      throw InputError("structure file line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (!have_nz) throw InputError("structure file: missing 'novikov' line");
  if (static_cast<int>(sd.classes.size()) != sd.nz)
    throw InputError("structure file: expected " + std::to_string(sd.nz) + " class lines");
  for (std::size_t r = 0; r < sd.roots.size(); ++r) {
    auto& rows = sd.roots[r].second;
    for (auto& row : rows)
      if (row.size() != rows.size())
        throw InputError("structure file: the matrix of root " + std::to_string(r + 1) + " is not square");
  }
  return sd;
}

std::string structure_text(const StructureData& sd) {
  std::ostringstream os;
  os << "novikov " << sd.nz << "\n";
  for (auto& c : sd.classes) {
    os << "class";
    for (auto x : c) os << " " << x;
    os << "\n";
  }
  for (auto& [e, S] : sd.roots) {
    os << "root";
    for (auto x : e) os << " " << x;
    os << "\n";
    for (auto& row : S) {
      os << "row";
      for (auto& x : row) os << " " << x;
      os << "\n";
    }
  }
  return os.str();
}

QuantumModule transported_module(const TraceModule& m) {
  auto& td = m.data();
  QuantumModule q;
  q.origin = "transported";
  q.name = td.name;
  q.R = td.coeff;
  q.nz = m.nz();
  q.M = m.M();
  q.basis_names = m.basis_names();
  for (std::size_t g = 0; g < td.gens.size(); ++g) {
    if (td.gens[g].name == "hbar") continue;
    q.class_names.push_back(td.gens[g].name);
    Connection c{td.coeff, m.nz(), m.M(), td.gens[g].pairing, m.act_matrix(static_cast<int>(g))};
    q.cup.push_back(z0_block(c.A));
    q.nabla.push_back(std::move(c));
  }
  // the mirror of the Springer resolution of sl2 is T*P1 again
  auto mirror = td.sl2 ? builtin_gauge("t-star-p1") : gale_dual(td.gauge);
  q.spectrum = simple_spectrum_certificate(build_arrangement(mirror));
  return q;
}

QuantumModule structure_module(const GaugeData& d, const StructureData& sd, std::uint32_t p, int M) {
  require_odd_prime(p);
  if (M < 1) throw InputError("z truncation must be at least 1");
  auto arr = build_arrangement(d);
  std::vector<std::string> names{"hbar"};
  std::vector<int> uvar;
  for (int t = 0; t < arr.r; ++t) {
    names.push_back("u" + std::to_string(t + 1));
    uvar.push_back(t + 1);
  }
  QuantumModule q;
  q.origin = "structure";
  q.name = d.name;
  q.R = make_ring(p, names);
  q.nz = sd.nz;
  q.M = M;
  q.diagonal = true;
  std::size_t nv = arr.vertices.size();
  for (std::size_t v = 0; v < nv; ++v) q.basis_names.push_back("p" + std::to_string(v + 1));
  for (auto& c : sd.classes)
    if (static_cast<int>(c.size()) != d.k)
      throw InputError("structure file: curve classes need " + std::to_string(d.k) + " entries");
  std::vector<std::pair<ZExp, OpMatrix>> S;
  NovikovSeries zs(q.R, q.nz, M);
  for (auto& [e, rows] : sd.roots) {
    if (rows.size() != nv) throw InputError("structure data: S_alpha matrix shape mismatch (rows)");
    OpMatrix m(nv, nv, zs);
    for (std::size_t i = 0; i < nv; ++i) {
      if (rows[i].size() != nv) throw InputError("structure data: S_alpha matrix shape mismatch (columns)");
      for (std::size_t j = 0; j < nv; ++j)
        m(i, j) = NovikovSeries::constant(parse_affine(rows[i][j], q.R), q.nz, M);
    }
    S.emplace_back(zexp_of(e), std::move(m));
  }
  auto hb = CoeffPoly::var(q.R, 0);
  for (int i = 0; i < d.n; ++i) {
    q.class_names.push_back("rho" + std::to_string(i + 1));
    auto diag = divisor_matrix(arr, i);
    OpMatrix A(nv, nv, zs);
    for (std::size_t v = 0; v < nv; ++v) A(v, v) = NovikovSeries::constant(diag[v].to_poly(q.R, uvar), q.nz, M);
    q.cup.push_back(A);
    // <beta_l, rho_i> = (iota beta_l)_i
    std::vector<std::int64_t> w;
    for (auto& beta : sd.classes) {
      std::int64_t s = 0;
      for (int a = 0; a < d.k; ++a) s += d.iota[i][a] * beta[a];
      w.push_back(s);
    }
    for (auto& [alpha, Sa] : S) {
      std::int64_t pair = 0;
      for (int l = 0; l < q.nz; ++l) pair += alpha[l] * w[l];
      if (!pair) continue;
      auto g = geom_inverse(q.R, q.nz, alpha, M).shifted(alpha).scaled(hb.scaled(mod_reduce(pair, p)));
      A = A + Sa.map([&](const NovikovSeries& x) { return x * g; });
    }
    q.nabla.push_back(Connection{q.R, q.nz, M, w, A});
  }
  q.spectrum = simple_spectrum_certificate(arr);
  return q;
}

Connection class_connection(const QuantumModule& q, const std::vector<std::int64_t>& x) {
  if (x.size() != q.nabla.size()) throw InputError("class needs one coefficient per divisor");
  std::size_t n = q.basis_names.size();
  Connection c{q.R, q.nz, q.M, std::vector<std::int64_t>(q.nz, 0), OpMatrix(n, n, NovikovSeries(q.R, q.nz, q.M))};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    auto k = CoeffPoly::constant(q.R, x[i]);
    c.A = c.A + q.nabla[i].A.map([&](const NovikovSeries& s) { return s.scaled(k); });
    for (int l = 0; l < q.nz; ++l) c.weights[l] += x[i] * q.nabla[i].weights[l];
  }
  return c;
}

OpMatrix class_cup(const QuantumModule& q, const std::vector<std::int64_t>& x) {
  if (x.size() != q.cup.size()) throw InputError("class needs one coefficient per divisor");
  std::size_t n = q.basis_names.size();
  OpMatrix C(n, n, NovikovSeries(q.R, q.nz, q.M));
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto k = CoeffPoly::constant(q.R, x[i]);
    C = C + q.cup[i].map([&](const NovikovSeries& s) { return s.scaled(k); });
  }
  return C;
}

OpMatrix quantum_steenrod_deg2(const QuantumModule& q, const std::vector<std::int64_t>& x) {
  if (!q.spectrum.simple)
    throw CheckError("refused: the divisor operators do not have jointly simple spectrum (fixed points " +
                     std::to_string(q.spectrum.offending.first + 1) + " and " +
                     std::to_string(q.spectrum.offending.second + 1) +
                     " are not separated), so the p-curvature only determines the Steenrod operator up to a "
                     "nilpotent correction");
  return connection_pcurvature(class_connection(q, x));
}

CoeffPoly classical_steenrod(const CoeffPoly& u) {
  auto& R = u.ring();
  std::uint32_t p = R->p;
  std::vector<CoeffPoly> img{CoeffPoly(R)};
  auto hp = CoeffPoly::var(R, 0, p - 1);
  for (int v = 1; v < R->nvars(); ++v) img.push_back(CoeffPoly::var(R, v, p) - hp * CoeffPoly::var(R, v));
  return u.frobenius_map(img);
}

OpMatrix classical_steenrod_deg2(const QuantumModule& q, const std::vector<std::int64_t>& x) {
  auto C = class_cup(q, x);
  if (!q.diagonal) return residue_pcurvature(C, q.R->p);
  OpMatrix out(C.rows(), C.cols(), C.zero());
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = 0; j < C.cols(); ++j) {
      if (i != j && !C(i, j).is_zero()) throw StructuralError("cup matrix is not diagonal");
      if (i == j) out(i, i) = NovikovSeries::constant(classical_steenrod(C(i, i).at_z0()), q.nz, q.M);
    }
  return out;
}

OpMatrix z0_block(const OpMatrix& A) {
  return A.map([](const NovikovSeries& s) { return NovikovSeries::constant(s.at_z0(), s.nz(), s.bound()); });
}

std::string flatness_witness(const Connection& x, const Connection& y, const std::vector<std::string>& names) {
  std::size_t n = x.A.rows();
  for (std::size_t s = 0; s < n; ++s) {
    auto e = unit_elem(x.R, n, x.nz, x.M, s);
    auto a = connection_apply(x, connection_apply(y, e));
    auto b = connection_apply(y, connection_apply(x, e));
    if (a != b) return "[nabla_x, nabla_y] is nonzero on " + names.at(s);
  }
  return "";
}

OperatorReport compare_operators(const OpMatrix& A, const OpMatrix& B, int N, int M) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw StructuralError("compare_operators: dimension mismatch");
  OperatorReport r;
  r.dim = A.rows();
  r.N = N;
  r.M = M;
  for (std::size_t j = 0; j < A.cols() && r.equal; ++j)
    for (std::size_t i = 0; i < A.rows() && r.equal; ++i)
      if (A(i, j) != B(i, j)) {
        r.equal = false;
        r.first_row = static_cast<int>(i);
        r.first_col = static_cast<int>(j);
        r.lhs = A(i, j).str();
        r.rhs = B(i, j).str();
      }
  return r;
}

std::string export_operator(const OpMatrix& A) {
  std::ostringstream os;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      for (auto& [e, c] : A(i, j).terms())
        os << i << " " << j << " " << zexp_text(e, A(i, j).nz()) << " " << c.str() << "\n";
  return os.str();
}

}  // namespace mh
