#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mhikita/errors.hpp"
#include "mhikita/hypertoric.hpp"

using namespace mh;

namespace {
LinearForm lf(std::vector<std::int64_t> u, std::int64_t h) { return LinearForm(std::move(u), h); }

// oracle: gcd of all j x j minors gives the product of the first j Smith invariants
std::int64_t minor_gcd(const IntMat& a, std::size_t cols, int j) {
  std::int64_t g = 0;
  for (auto& R : subsets(static_cast<int>(a.size()), j))
    for (auto& C : subsets(static_cast<int>(cols), j)) {
      IntMat m = int_zero(j, j);
      for (int x = 0; x < j; ++x)
        for (int y = 0; y < j; ++y) m[x][y] = a[R[x]][C[y]];
      g = std::gcd(g, std::llabs(int_det(m)));
    }
  return g;
}
}  // namespace

TEST_CASE("integer matrix helpers") {
  CHECK(int_det({{2, 1}, {1, 1}}) == 1);
  CHECK(int_det({{0, 1}, {1, 0}}) == -1);
  CHECK(int_det({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(smith_invariants({{2, 4}, {6, 8}}, 2) == std::vector<std::int64_t>{2, 4});
  CHECK(smith_invariants({{2, 0}, {0, 3}}, 2) == std::vector<std::int64_t>{1, 6});
  CHECK(subsets(3, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(subsets(2, 0).size() == 1);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    IntMat a = int_zero(r, c);
    for (auto& row : a)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 9) - 4;
    auto d = smith_invariants(a, c);
    CHECK(static_cast<int>(d.size()) == int_rank(a, c));
    std::int64_t prod = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      prod *= d[j];
      CHECK(prod == minor_gcd(a, c, static_cast<int>(j + 1)));
      if (j) CHECK(d[j] % d[j - 1] == 0);
    }
  }
}

TEST_CASE("gauge validation and Gale duality") {
  auto p1 = builtin_gauge("t-star-p1");
  auto dual = gale_dual(p1);
  CHECK(dual.iota == IntMat{{1}, {-1}});
  CHECK(dual.pi == IntMat{{1, 1}});
  auto dd = gale_dual(dual);
  CHECK(smith_invariants(dd.iota, dd.k) == smith_invariants(p1.iota, p1.k));
  CHECK(dd.iota == p1.iota);
  CHECK(dd.chi_lift == p1.chi_lift);

  auto s3 = gale_dual(builtin_gauge("sqed-3"));
  CHECK(s3.k == 2);
  // iota^T of the original kills the dual inclusion
  for (int c = 0; c < 2; ++c) {
    std::int64_t s = 0;
    for (int i = 0; i < 3; ++i) s += s3.iota[i][c];
    CHECK(s == 0);
  }

  GaugeData bad = p1;
  bad.pi = {{1, 1}};
  CHECK_THROWS_AS(validate_gauge(bad), InputError);
  bad = p1;
  bad.iota = {{2}, {2}};
  bad.pi = {{1, -1}};
  CHECK_THROWS_AS(gale_dual(bad), InputError);  // torsion cokernel
  bad = p1;
  bad.chi_lift = {0};
  CHECK_THROWS_AS(validate_gauge(bad), InputError);
}

TEST_CASE("arrangements of the built-in data") {
  auto arr = build_arrangement(builtin_gauge("t-star-p1"));
  REQUIRE(arr.vertices.size() == 2);
  CHECK(arr.vertices[0].point == RatVec{Rational(1)});
  CHECK(arr.vertices[1].point == RatVec{Rational(0)});
  CHECK(arr.vertices[0].I == std::vector<int>{0});
  CHECK(arr.vertices[1].I == std::vector<int>{1});
  CHECK(arr.vertices[0].eta[0] == lf({1}, 0));
  CHECK(arr.vertices[1].eta[0] == lf({-1}, 0));
  CHECK(covector_audit(arr).empty());

  CHECK(build_arrangement(builtin_gauge("t-star-a1")).vertices.size() == 1);
  auto s3 = build_arrangement(builtin_gauge("sqed-3"));
  CHECK(s3.vertices.size() == 3);
  CHECK(covector_audit(s3).empty());
  for (auto& name : builtin_gauge_names()) {
    auto d = builtin_gauge(name);
    CHECK(build_arrangement(gale_dual(d)).vertices.size() == build_arrangement(d).vertices.size());
    CHECK(unimodularity_check(d));
    CHECK(unimodularity_check(gale_dual(d)));
  }
}

TEST_CASE("translation of chi preserves the vertex count") {
  auto d = builtin_gauge("sqed-3");
  auto base = build_arrangement(d).vertices.size();
  for (std::int64_t w1 : {-2, 1, 3})
    for (std::int64_t w2 : {-1, 2}) {
      auto t = d;
      for (int i = 0; i < 3; ++i) t.chi_lift[i] += w1 * d.pi[0][i] + w2 * d.pi[1][i];
      CHECK(build_arrangement(t).vertices.size() == base);
    }
}

TEST_CASE("nongeneric chi is rejected") {
  GaugeData d;
  d.n = 2;
  d.k = 1;
  d.iota = {{1}, {-1}};
  d.pi = {{1, 1}};
  d.chi_lift = {0, 0};
  d.sigma_lift = {1, 0};
  try {
    build_arrangement(d);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("{1}") != std::string::npos);
  }
}

TEST_CASE("Harada-Holm divisor matrices") {
  auto arr = build_arrangement(builtin_gauge("t-star-p1"));
  CHECK(divisor_matrix(arr, 0) == std::vector<LinearForm>{lf({1}, 0), lf({0}, 1)});
  CHECK(divisor_matrix(arr, 1) == std::vector<LinearForm>{lf({0}, 1), lf({-1}, 0)});
  // the middle case of the formula: <v, a_i> > -chi_i gives 0
  auto s3 = build_arrangement(builtin_gauge("sqed-3"));
  bool saw_zero = false;
  for (int i = 0; i < 3; ++i) {
    auto D = divisor_matrix(s3, i);
    for (std::size_t v = 0; v < D.size(); ++v) {
      Rational s(0);
      for (int t = 0; t < 2; ++t) s += s3.vertices[v].point[t] * s3.a[i][t];
      if (s + s3.chi[i] > Rational(0)) {
        CHECK(D[v].is_zero());
        saw_zero = true;
      }
    }
  }
  CHECK(saw_zero);
}

TEST_CASE("simple spectrum certificate") {
  auto c = simple_spectrum_certificate(build_arrangement(builtin_gauge("t-star-p1")));
  CHECK(c.simple);
  REQUIRE(c.separators.size() == 1);
  CHECK(c.separators[0].second == 0);
  CHECK(simple_spectrum_certificate(build_arrangement(builtin_gauge("t-star-a1"))).simple);
  CHECK(simple_spectrum_certificate(build_arrangement(builtin_gauge("sqed-3"))).simple);
  // duplicated weight columns
  std::vector<std::vector<LinearForm>> dup{{lf({1}, 0), lf({1}, 0)}, {lf({0}, 1), lf({0}, 1)}};
  auto bad = simple_spectrum_of(dup);
  CHECK_FALSE(bad.simple);
  CHECK(bad.offending == std::pair<int, int>{0, 1});
}

TEST_CASE("unimodularity") {
  GaugeData d;
  d.n = 1;
  d.k = 0;
  d.iota = IntMat(1);
  d.pi = {{2}};
  d.chi_lift = {0};
  d.sigma_lift = {1};
  CHECK_FALSE(unimodularity_check(d));
  d.pi = {{1}};
  CHECK(unimodularity_check(d));
  GaugeData e;
  e.n = 2;
  e.k = 0;
  e.iota = IntMat(2);
  e.pi = {{1, 0}, {0, 1}};
  CHECK(unimodularity_check(e));
}
