#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mhikita/balgebra.hpp"
#include "mhikita/envsl2.hpp"
#include "mhikita/errors.hpp"
#include "mhikita/quantum.hpp"
#include "mhikita/req.hpp"
#include "mhikita/restricted.hpp"
#include "mhikita/roots.hpp"
#include "mhikita/trace.hpp"

using namespace mh;

namespace {

TraceData hyper(const std::string& name, std::uint32_t p) {
  auto d = builtin_gauge(name);
  return trace_data_hypertoric(d, p, d.sigma_lift);
}

OpMatrix from_columns(const std::vector<ModElem>& cols, const NovikovSeries& zero) {
  OpMatrix A(cols.size(), cols.size(), zero);
  for (std::size_t s = 0; s < cols.size(); ++s)
    for (std::size_t i = 0; i < cols.size(); ++i) A(i, s) = cols[s][i];
  return A;
}

// p-fold action on basis vectors; with_tail subtracts hbar^(p-1) times the single action
OpMatrix unrolled_pcurvature(const TraceModule& m, int g, bool with_tail) {
  std::uint32_t p = m.data().p;
  auto hp = m.series(CoeffPoly::var(m.data().coeff, 0, p - 1));
  std::vector<ModElem> cols;
  for (std::size_t s = 0; s < m.rank(); ++s) {
    ModElem v = m.basis_vector(s);
    ModElem once = m.act_gen(g, v);
    for (std::uint32_t k = 0; k < p; ++k) v = m.act_gen(g, v);
    if (with_tail)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= novikov_mul(hp, once[i]);
    cols.push_back(v);
  }
  return from_columns(cols, m.zero()[0]);
}

bool is_zero_matrix(const OpMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) return false;
  return true;
}

// x^a d^a and d^a x^a in Euler form, written out by hand
CoeffPoly falling(const CoeffPoly& E, const CoeffPoly& hb, int a) {
  CoeffPoly r = CoeffPoly::constant(E.ring(), 1);
  for (int j = 0; j < a; ++j) r = r * (E - hb.scaled(j));
  return r;
}
CoeffPoly rising(const CoeffPoly& E, const CoeffPoly& hb, int a) {
  CoeffPoly r = CoeffPoly::constant(E.ring(), 1);
  for (int j = 1; j <= a; ++j) r = r * (E + hb.scaled(j));
  return r;
}
CoeffPoly hand_relation(const TraceData& td, const Weight& lam, bool ab) {
  auto hb = td.euler_image[0];
  CoeffPoly r = CoeffPoly::constant(td.full, 1);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    int a = static_cast<int>(std::llabs(lam[i]));
    const auto& E = td.euler_image[i + 1];
    bool x_first = (lam[i] > 0) == ab;
    r = r * (x_first ? falling(E, hb, a) : rising(E, hb, a));
  }
  return r;
}

}  // namespace

TEST_CASE("equivariant roots of the examples") {
  auto a1 = equivariant_roots_hypertoric(builtin_gauge("t-star-a1"), 5, 4);
  CHECK(a1.roots == std::vector<Weight>{{-1}, {1}});
  auto p1 = equivariant_roots_hypertoric(builtin_gauge("t-star-p1"), 5, 4);
  CHECK(p1.roots.size() == 2);
  CHECK(p1.weights.at(Weight{0, 0}) == 3);
  CHECK(p1.weights.at(Weight{1, -1}) == 1);
  auto s3 = equivariant_roots_hypertoric(builtin_gauge("sqed-3"), 5, 4);
  CHECK(s3.roots.size() == 6);
  auto sl = equivariant_roots_sl2(5, 4);
  CHECK(sl.weights.at(Weight{2}) == 1);
  CHECK(sl.weights.at(Weight{-2}) == 1);
  CHECK(sl.weights.at(Weight{0}) == 3);

  select_positive(a1, Weight{1});
  CHECK(a1.positive == std::vector<Weight>{{1}});
  CHECK_THROWS_AS(select_positive(p1, Weight{2, 2}), InputError);
  CHECK(novikov_exponents(2, 2).size() == 5);
}

TEST_CASE("relation instances match the hand expansion") {
  auto a1 = hyper("t-star-a1", 5);
  auto [P, Q] = relation_pair(a1, {1});
  auto E = a1.euler_image[1], hb = a1.euler_image[0];
  CHECK(P == E);
  CHECK(Q == E + hb);

  auto p1 = hyper("t-star-p1", 5);
  auto [P1, Q1] = relation_pair(p1, {1});
  auto E1 = p1.euler_image[1], E2 = p1.euler_image[2], h1 = p1.euler_image[0];
  Weight lam = monoid_element(p1.roots, {1});
  auto want_p = lam[0] > 0 ? E1 * (E2 + h1) : (E1 + h1) * E2;
  auto want_q = lam[0] > 0 ? (E1 + h1) * E2 : E1 * (E2 + h1);
  CHECK(P1 == want_p);
  CHECK(Q1 == want_q);

  auto s3 = hyper("sqed-3", 3);
  for (auto& lam3 : invariant_weights(builtin_gauge("sqed-3"), 4)) {
    auto pq = weight_relation_pair(s3, lam3);
    CHECK(pq.first == hand_relation(s3, lam3, true));
    CHECK(pq.second == hand_relation(s3, lam3, false));
  }
}

TEST_CASE("trace module of T*A1") {
  const std::uint32_t p = 5;
  const int M = 4;
  TraceModule m(hyper("t-star-a1", p), 6, M);
  REQUIRE(m.rank() == 1);
  CHECK(m.basis_names() == std::vector<std::string>{"1"});
  auto v = m.act_gen(0, m.basis_vector(0));
  // (1 - z) E.1 = hbar z
  auto R = m.data().coeff;
  auto hb = CoeffPoly::var(R, 0);
  auto one_minus_z = NovikovSeries::constant(CoeffPoly::constant(R, 1), 1, M) -
                     NovikovSeries::zmono(zunit(0), CoeffPoly::constant(R, 1), 1, M);
  CHECK(novikov_mul(one_minus_z, v[0]) == NovikovSeries::zmono(zunit(0), hb, 1, M));
  CHECK(v[0] == novikov_mul(NovikovSeries::zmono(zunit(0), hb, 1, M), geom_inverse(R, 1, zunit(0), M)));

  // z acts by shifting, hbar by scaling
  auto w = m.act_z(zunit(0), m.basis_vector(0));
  CHECK(w[0] == NovikovSeries::zmono(zunit(0), CoeffPoly::constant(R, 1), 1, M));
  auto h = m.act_gen(m.generator_index("hbar"), m.basis_vector(0));
  CHECK(h[0] == NovikovSeries::constant(hb, 1, M));

  CHECK(m.check_well_defined(5).empty());
  CHECK(m.certificate().relations > 0);
}

TEST_CASE("Frobenius action is unital and multiplicative") {
  const std::uint32_t p = 3;
  TraceModule m(hyper("t-star-p1", p), 6, 4);
  const int n = 2;
  auto one = m.frobenius_action(frobenius_image_hypertoric(m.data(), CommutativePair::constant(p, n, 1)));
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j) {
      auto want = i == j ? m.series(CoeffPoly::constant(m.data().coeff, 1)) : m.zero()[0];
      CHECK(one(i, j) == want);
    }
  auto f1 = CommutativePair::x(p, n, 0) * CommutativePair::y(p, n, 0);
  auto f2 = CommutativePair::x(p, n, 1) * CommutativePair::y(p, n, 1);
  auto F1 = m.frobenius_action(frobenius_image_hypertoric(m.data(), f1));
  auto F2 = m.frobenius_action(frobenius_image_hypertoric(m.data(), f2));
  auto F12 = m.frobenius_action(frobenius_image_hypertoric(m.data(), f1 * f2));
  CHECK(F12 == F1 * F2);
  CHECK(F1 * F2 == F2 * F1);
  CHECK(m.check_covariant_constancy(F1, frobenius_image_hypertoric(m.data(), f1)).empty());
}

TEST_CASE("p-curvature of the trace module equals the Frobenius action") {
  for (std::uint32_t p : {3u, 5u})
    for (auto name : {"t-star-a1", "t-star-p1", "sqed-3"}) {
      CAPTURE(p, name);
      auto d = builtin_gauge(name);
      TraceModule m(trace_data_hypertoric(d, p, d.sigma_lift), 6, 4);
      for (int i = 0; i < d.n; ++i) {
        auto F = m.trace_pcurvature(i);
        auto L = frobenius_image_hypertoric(m.data(), CommutativePair::x(p, d.n, i) * CommutativePair::y(p, d.n, i));
        auto G = m.frobenius_action(L);
        CHECK(compare_operators(F, G, 6, 4).equal);
        CHECK(m.check_pcurvature_linear(i).empty());
        CHECK(m.check_covariant_constancy(G, L).empty());
      }
    }
}

TEST_CASE("p-curvature unrolled by hand and a corrupted operator") {
  const std::uint32_t p = 3;
  TraceModule m(hyper("t-star-p1", p), 6, 4);
  auto F = m.trace_pcurvature(0);
  CHECK(F == unrolled_pcurvature(m, 0, true));
  auto bad = unrolled_pcurvature(m, 0, false);
  auto G = m.frobenius_action(
      frobenius_image_hypertoric(m.data(), CommutativePair::x(p, 2, 0) * CommutativePair::y(p, 2, 0)));
  auto rep = compare_operators(bad, G, 6, 4);
  CHECK_FALSE(rep.equal);
  CHECK(rep.first_row >= 0);
  CHECK(rep.lhs != rep.rhs);
  CHECK(is_zero_matrix(m.trace_pcurvature(m.generator_index("hbar"))));
  CHECK(compare_operators(F, F, 6, 4).equal);
  OpMatrix small(1, 1, m.zero()[0]);
  CHECK_THROWS_AS(compare_operators(F, small, 6, 4), StructuralError);
}

TEST_CASE("sl2 trace module") {
  for (std::uint32_t p : {5u, 7u}) {
    TraceModule m(trace_data_sl2(p), p + 1, 4);
    CHECK(m.rank() == 2);
    auto R = springer_input_ring(p);
    auto L = frobenius_image_sl2(m.data(), CoeffPoly::var(R, 3));
    CHECK(m.trace_pcurvature(0) == m.frobenius_action(L));
    CHECK(m.check_well_defined(4).empty());
  }
  CHECK_THROWS_AS(trace_data_sl2(5, 0), InputError);
}

TEST_CASE("degenerate cocharacter is refused") {
  auto d = builtin_gauge("t-star-p1");
  CHECK_THROWS_AS(trace_data_hypertoric(d, 5, Weight{1, 1}), InputError);
  CHECK_THROWS_AS(trace_data_hypertoric(d, 5, Weight{1}), InputError);
}

TEST_CASE("connection p-curvature closed forms") {
  const std::uint32_t p = 5;
  auto R = make_ring(p, {"hbar"});
  auto hb = CoeffPoly::var(R, 0);
  auto zero = NovikovSeries(R, 1, 4);
  auto cst = [&](const CoeffPoly& c) { return NovikovSeries::constant(c, 1, 4); };

  Connection c0{R, 1, 4, {1}, OpMatrix(2, 2, zero)};
  CHECK(is_zero_matrix(connection_pcurvature(c0)));

  // diagonal residue: entries c^p - hbar^(p-1) c
  OpMatrix C(2, 2, zero);
  auto a = CoeffPoly::constant(R, 2), b = hb.scaled(3);
  C(0, 0) = cst(a);
  C(1, 1) = cst(b);
  Connection c1{R, 1, 4, {1}, C};
  auto F = connection_pcurvature(c1);
  CHECK(F == residue_pcurvature(C, p));
  CHECK(F(0, 0) == cst(a.pow(p) - hb.pow(p - 1) * a));
  CHECK(F(1, 1) == cst(b.pow(p) - hb.pow(p - 1) * b));
  CHECK(F(0, 1).is_zero());

  // nilpotent residue: C^p = 0
  OpMatrix Nm(2, 2, zero);
  Nm(0, 1) = cst(CoeffPoly::constant(R, 1));
  Connection c2{R, 1, 4, {2}, Nm};
  auto G = connection_pcurvature(c2);
  CHECK(G(0, 1) == cst(hb.pow(p - 1).scaled(p - 1)));
  CHECK(pcurvature_linearity(c2, G).empty());
}

TEST_CASE("structure data parsing") {
  auto sd = parse_structure("# one root\nnovikov 1\nclass 1\nroot 1\nrow 2*u1-hbar\n");
  CHECK(sd.nz == 1);
  CHECK(sd.roots.size() == 1);
  CHECK(sd.roots[0].second[0][0] == "2*u1-hbar");
  CHECK(parse_structure(structure_text(sd)).roots == sd.roots);
  CHECK_THROWS_AS(parse_structure("novikov x\n"), InputError);
  CHECK_THROWS_AS(parse_structure("bogus 1\n"), InputError);
  CHECK_THROWS_AS(parse_structure("novikov 1\nclass 1\nroot 1\nrow 1 1\n"), InputError);
}

TEST_CASE("structure module against the transported module") {
  const std::uint32_t p = 5;
  auto dual = gale_dual(builtin_gauge("t-star-a1"));
  auto s = structure_module(dual, parse_structure("novikov 1\nclass 1\nroot 1\nrow 1\n"), p, 4);
  TraceModule m(hyper("t-star-a1", p), 6, 4);
  auto t = transported_module(m);
  CHECK(s.nabla[0].A == t.nabla[0].A);
  CHECK(s.nabla[0].weights == t.nabla[0].weights);
  CHECK(export_operator(s.nabla[0].A) == export_operator(t.nabla[0].A));
  CHECK(!export_operator(s.nabla[0].A).empty());

  // no structure data: pure cup action without z
  auto d = builtin_gauge("t-star-p1");
  auto c = structure_module(d, StructureData{}, p, 4);
  for (auto& nb : c.nabla) CHECK(z0_block(nb.A) == nb.A);
  CHECK_THROWS_AS(structure_module(dual, parse_structure("novikov 1\nclass 1\nroot 1\nrow 1\nrow 1\n"), p, 4),
                  InputError);
}

TEST_CASE("quantum Steenrod operators in degree two") {
  for (std::uint32_t p : {3u, 5u})
    for (auto name : {"t-star-a1", "t-star-p1", "sqed-3"}) {
      CAPTURE(p, name);
      auto d = builtin_gauge(name);
      TraceModule m(trace_data_hypertoric(d, p, d.sigma_lift), 6, 4);
      auto q = transported_module(m);
      REQUIRE(q.spectrum.simple);
      std::vector<std::int64_t> x0(q.nabla.size(), 0);
      CHECK(is_zero_matrix(quantum_steenrod_deg2(q, x0)));
      for (std::size_t i = 0; i < q.nabla.size(); ++i) {
        std::vector<std::int64_t> x(q.nabla.size(), 0);
        x[i] = 1;
        auto F = quantum_steenrod_deg2(q, x);
        CHECK(F == m.trace_pcurvature(static_cast<int>(i)));
        CHECK(z0_block(F) == classical_steenrod_deg2(q, x));
        for (std::size_t j = 0; j < q.nabla.size(); ++j)
          CHECK(flatness_witness(q.nabla[i], q.nabla[j], q.basis_names).empty());
      }
      auto refused = q;
      refused.spectrum.simple = false;
      std::vector<std::int64_t> x(q.nabla.size(), 0);
      x[0] = 1;
      CHECK_THROWS_AS(quantum_steenrod_deg2(refused, x), CheckError);
    }
}

TEST_CASE("classical Steenrod on degree two classes") {
  const std::uint32_t p = 5;
  auto R = make_ring(p, {"hbar", "u1", "u2"});
  auto hb = CoeffPoly::var(R, 0), u = CoeffPoly::var(R, 1), v = CoeffPoly::var(R, 2);
  auto st = [&](const CoeffPoly& a) { return a.pow(p) - hb.pow(p - 1) * a; };
  CHECK(classical_steenrod(u) == st(u));
  CHECK(classical_steenrod(CoeffPoly::constant(R, 3)) == CoeffPoly::constant(R, 3));
  CHECK(classical_steenrod(u * v) == st(u) * st(v));
  CHECK(classical_steenrod(u + v) == st(u) + st(v));
  CHECK(classical_steenrod(hb).is_zero());
  // product of linear factors over F_p
  CoeffPoly prod = CoeffPoly::constant(R, 1);
  for (std::uint32_t j = 0; j < p; ++j) prod = prod * (u - hb.scaled(j));
  CHECK(classical_steenrod(u) == prod);
}

TEST_CASE("restricted structure on R_eq") {
  for (std::uint32_t p : {3u, 5u})
    for (auto name : {"t-star-a1", "t-star-p1"}) {
      CAPTURE(p, name);
      auto C = req_context(hyper(name, p));
      auto T = req_restricted_table(C);
      auto rep = restricted_axioms_check(T, 40, 4, 11);
      CHECK(rep.all_passed());
      for (auto check : {"bracket axiom", "s central", "s additive", "s semilinear", "s multiplicative",
                         "restricted powers agree", "sum axiom", "scalar axiom", "product axiom"}) {
        CAPTURE(check);
        REQUIRE(rep.find(check));
        CHECK(rep.find(check)->instances > 0);
      }
      // s(E) is the product of E - j hbar; s(z) = z^p; s(hbar) = 0
      auto E = REqElement::var(C, 1), hb = REqElement::var(C, 0);
      auto prod = REqElement::constant(C, 1);
      for (std::uint32_t j = 0; j < p; ++j) prod = prod * (E - hb.scaled(j));
      std::size_t zi = 0, hi = static_cast<std::size_t>(C->nz), ei = hi + 1;
      CHECK(artin_schreier(T, ei) == prod);
      CHECK(artin_schreier(T, zi) == REqElement::z(C, 0).pow(p));
      CHECK(artin_schreier(T, hi).is_zero());
      // E z^mu = z^mu (E + hbar <mu, Ebar>)
      auto z = REqElement::z(C, 0);
      auto lhs = E * z;
      auto rhs = z * (E + hb.scaled(mod_reduce(C->pairing[1][0], p)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("restricted axiom checker on fixtures") {
  for (std::uint32_t p : {3u, 5u}) {
    CHECK(restricted_axioms_check(weyl_fixture_table(p, false), 30, 4, 3).all_passed());
    CHECK(restricted_axioms_check(commutative_table(p), 30, 4, 3).all_passed());
    CHECK(restricted_axioms_check(pbw_restricted_table(make_ring(p, {"hbar", "sigma"})), 20, 3, 3).all_passed());
    auto bad = restricted_axioms_check(weyl_fixture_table(p, true), 30, 4, 3);
    CHECK_FALSE(bad.all_passed());
    auto* ax = bad.find("bracket axiom");
    REQUIRE(ax);
    CHECK_FALSE(ax->passed);
    CHECK(ax->witness.find("{E1^[p], x1}") != std::string::npos);
    CHECK(ax->witness.find("(hbar^" + std::to_string(p) + ")*x1") != std::string::npos);
  }
  RestrictedTable<CoeffPoly> empty;
  CHECK_THROWS_AS(restricted_axioms_check(empty, 5, 2, 1), InputError);
  auto T = commutative_table(3);
  CHECK_THROWS_AS(artin_schreier(T, 7), InputError);
}

TEST_CASE("B-algebra ranks") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CAPTURE(p);
    auto a1 = builtin_gauge("t-star-a1"), p1 = builtin_gauge("t-star-p1"), s3 = builtin_gauge("sqed-3");
    CHECK(b_algebra_hypertoric(a1, p, a1.sigma_lift, 6, 4, 1).rank == 1);
    CHECK(b_algebra_hypertoric(p1, p, p1.sigma_lift, 6, 4, 1).rank == 2);
    auto b3 = b_algebra_hypertoric(s3, p, s3.sigma_lift, 6, 4, 1);
    CHECK(b3.rank == 3);
    CHECK(b3.stable);
    CHECK(b_algebra_sl2(p, 1, 6, 4, 1).rank == 2);
    CHECK(b3.rank == static_cast<int>(build_arrangement(gale_dual(s3)).vertices.size()));
  }
  // sigma = 0: nothing is killed
  auto z = b_algebra_hypertoric(builtin_gauge("sqed-3"), 5, Weight(3, 0), 3, 4, 1);
  CHECK(z.truncated);
  CHECK(z.rank == 10);
  CHECK(b_algebra_sl2(5, 0, 3, 4, 1).rank == 4);
  CHECK_THROWS_AS(b_algebra_hypertoric(builtin_gauge("t-star-p1"), 5, Weight{1, 1}, 4, 4, 1), InputError);
}

TEST_CASE("B-algebra of sqed-3 against a brute force point count") {
  const std::uint32_t p = 7;
  auto d = builtin_gauge("sqed-3");
  auto td = trace_data_hypertoric(d, p, d.sigma_lift);
  int best = 0;
  for (std::uint32_t hbv = 1; hbv < p; ++hbv)
    for (std::uint32_t cv = 0; cv < p; ++cv) {
      // E_i over (hbar, c, u) evaluated at all u in F_p^2; keep points killing every P_lambda
      std::set<std::vector<std::uint32_t>> pts;
      for (std::uint32_t u1 = 0; u1 < p; ++u1)
        for (std::uint32_t u2 = 0; u2 < p; ++u2) {
          std::vector<std::uint32_t> pt{hbv, cv, u1, u2};
          bool ok = true;
          for (auto& lam : invariant_weights(d, 4)) {
            if (weight_pair(d.sigma_lift, lam) <= 0) continue;
            if (hand_relation(td, lam, true).evaluate(pt) != 0) {
              ok = false;
              break;
            }
          }
          if (ok) pts.insert(pt);
        }
      best = std::max(best, static_cast<int>(pts.size()));
    }
  CHECK(best == 3);
  CHECK(b_algebra_hypertoric(d, p, d.sigma_lift, 6, 4, 9).rank == best);
}
