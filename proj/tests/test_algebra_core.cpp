#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mhikita/errors.hpp"
#include "mhikita/linform.hpp"
#include "mhikita/novikov.hpp"

using namespace mh;

TEST_CASE("prime field axioms, exhaustive for p <= 7") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        PrimeFieldElement x(a, p), y(b, p);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x - y + y == x);
        if (!y.is_zero()) CHECK(x * y * y.inverse() == x);
        for (std::uint32_t c = 0; c < p; ++c) {
          PrimeFieldElement z(c, p);
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
    // Fermat
    for (std::uint32_t a = 0; a < p; ++a) CHECK(PrimeFieldElement(a, p).pow(p) == PrimeFieldElement(a, p));
  }
  CHECK_THROWS_AS(PrimeFieldElement(1, 9), InputError);
  CHECK_THROWS_AS(PrimeFieldElement(1, 2), InputError);
  CHECK_THROWS_AS(PrimeFieldElement(0, 5).inverse(), StructuralError);
  CHECK_THROWS_AS(PrimeFieldElement(1, 5) + PrimeFieldElement(1, 7), StructuralError);
}

TEST_CASE("binomials mod p agree with exact integers") {
  // exact Pascal in 64 bits, small n
  std::vector<std::vector<std::uint64_t>> C(30);
  for (unsigned n = 0; n < 30; ++n) {
    C[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) C[n][k] = C[n - 1][k - 1] + C[n - 1][k];
  }
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (unsigned n = 0; n < 30; ++n)
      for (unsigned k = 0; k <= n; ++k) CHECK(binom_mod(n, k, p) == C[n][k] % p);
}

TEST_CASE("CoeffPoly arithmetic") {
  auto R = make_ring(5, {"hbar", "l1"});
  auto h = CoeffPoly::var(R, 0), l = CoeffPoly::var(R, 1), one = CoeffPoly::constant(R, 1);
  CHECK((h + l) * (h - l) == h * h - l * l);
  // (h + l)^5 = h^5 + l^5 in char 5
  CHECK((h + l).pow(5) == h.pow(5) + l.pow(5));
  auto [q, r] = (h.pow(3) * l + h * l + one).divide_var_power(0, 2);
  CHECK(q == h * l);
  CHECK(r == h * l + one);
  // shift invariance of the Artin-Schreier polynomial, done by substitution
  auto s = l.pow(5) - h.pow(4) * l;
  for (int j = 0; j < 5; ++j) {
    auto shifted = s.substitute({h, l - h.scaled(j)});
    CHECK(shifted == s);
  }
  CHECK_THROWS_AS(h + CoeffPoly::var(make_ring(7, {"hbar", "l1"}), 0), StructuralError);
  CHECK((l - h).str() == "-hbar + l1");
}

namespace {
NovikovSeries series1(RingPtr R, int M, std::vector<std::int64_t> c) {
  NovikovSeries s(R, 1, M);
  for (std::size_t k = 0; k < c.size(); ++k) {
    ZExp e{};
    e[0] = static_cast<std::uint16_t>(k);
    s.add_term(e, CoeffPoly::constant(R, c[k]));
  }
  return s;
}
}  // namespace

TEST_CASE("novikov_mul examples") {
  auto R = make_ring(5, {"hbar"});
  CHECK(series1(R, 2, {1, 1}) * series1(R, 2, {1, -1}) == series1(R, 2, {1, 0, -1}));
  CHECK((series1(R, 2, {0, 0, 1}) * series1(R, 2, {0, 1})).is_zero());
  // (1+z+z^2)(1-z) = 1 - z^3, truncated at 2
  CHECK(series1(R, 2, {1, 1, 1}) * series1(R, 2, {1, -1}) == series1(R, 2, {1}));
  CHECK_THROWS_AS(series1(R, 2, {1}) * series1(R, 3, {1}), StructuralError);
  CHECK_THROWS_AS(novikov_mul(NovikovSeries(R, 1, 2), NovikovSeries(R, 2, 2)), StructuralError);
}

TEST_CASE("geom_inverse examples and uniqueness") {
  auto R = make_ring(7, {"hbar"});
  CHECK(geom_inverse(R, 1, zunit(0), 2) == series1(R, 2, {1, 1, 1}));
  ZExp two{};
  two[0] = 2;
  CHECK(geom_inverse(R, 1, two, 5) == series1(R, 5, {1, 0, 1, 0, 1}));
  CHECK(series1(R, 4, {1, -1}) * geom_inverse(R, 1, zunit(0), 4) == series1(R, 4, {1}));

  // oracle: solve (1 - z^a) g = 1 coefficientwise as a lower triangular system
  for (int a = 1; a <= 3; ++a)
    for (int M = 0; M <= 7; ++M) {
      std::vector<std::int64_t> g(M + 1, 0);
      for (int k = 0; k <= M; ++k) g[k] = (k == 0 ? 1 : 0) + (k - a >= 0 ? g[k - a] : 0);
      ZExp al{};
      al[0] = static_cast<std::uint16_t>(a);
      CHECK(geom_inverse(R, 1, al, M) == series1(R, M, g));
    }

  // two variables: (1 - z1 z2)^{-1}
  ZExp d{};
  d[0] = 1;
  d[1] = 1;
  auto g = geom_inverse(R, 2, d, 5);
  auto one_minus = NovikovSeries::constant(CoeffPoly::constant(R, 1), 2, 5) -
                   NovikovSeries::zmono(d, CoeffPoly::constant(R, 1), 2, 5);
  CHECK(one_minus * g == NovikovSeries::constant(CoeffPoly::constant(R, 1), 2, 5));
  CHECK(g.terms().size() == 3);
}

TEST_CASE("novikov_mul is associative and commutative on random triples") {
  auto R = make_ring(5, {"hbar", "l1"});
  std::mt19937_64 rng(7);
  auto rnd = [&](int M) {
    NovikovSeries s(R, 2, M);
    for (int t = 0; t < 6; ++t) {
      ZExp e{};
      e[0] = rng() % 3;
      e[1] = rng() % 3;
      Mono m{};
      m[0] = rng() % 2;
      m[1] = rng() % 2;
      s.add_term(e, CoeffPoly::monomial(R, m, rng() % 5));
    }
    return s;
  };
  for (int it = 0; it < 50; ++it) {
    auto a = rnd(4), b = rnd(4), c = rnd(4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("LinearForm exact arithmetic") {
  LinearForm a({1, -2}, 3), b({0, 2}, -3);
  CHECK((a + b) == LinearForm({1, 0}, 0));
  CHECK(a.pair({1, 1}) == -1);
  CHECK(a.str() == "u1 - 2*u2 + 3*hbar");
  CHECK(LinearForm(2).is_zero());
  CHECK_THROWS_AS(a + LinearForm(3), StructuralError);
  auto R = make_ring(5, {"hbar", "u1", "u2"});
  CHECK(a.to_poly(R, {1, 2}) == CoeffPoly::var(R, 1) - CoeffPoly::var(R, 2).scaled(2) + CoeffPoly::var(R, 0).scaled(3));
}
