#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mhikita/envsl2.hpp"
#include "mhikita/errors.hpp"

using namespace mh;

namespace {

// oracle: words in f,h,e rewritten by adjacent swaps until sorted (f < h < e)
using Word = std::string;
using WordSum = std::map<Word, CoeffPoly>;

void wadd(WordSum& s, const Word& w, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto it = s.find(w);
  if (it == s.end()) {
    s.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

int rank(char c) { return c == 'f' ? 0 : c == 'h' ? 1 : 2; }

PBWElement straighten(WordSum s, const RingPtr& R) {
  auto hb = CoeffPoly::var(R, 0);
  PBWElement out(R);
  while (!s.empty()) {
    auto [w, c] = *s.begin();
    s.erase(s.begin());
    std::size_t i = 0;
    while (i + 1 < w.size() && rank(w[i]) <= rank(w[i + 1])) ++i;
    if (i + 1 >= w.size()) {
      unsigned a = 0, b = 0, e = 0;
      for (char ch : w) (ch == 'f' ? a : ch == 'h' ? b : e)++;
      out += PBWElement::monomial(R, a, b, e, c);
      continue;
    }
    std::string L = w.substr(0, i), Rr = w.substr(i + 2);
    char x = w[i], y = w[i + 1];
    wadd(s, L + y + x + Rr, c);
    // xy = yx + [x,y]
    if (x == 'e' && y == 'f') wadd(s, L + "h" + Rr, c * hb);
    if (x == 'e' && y == 'h') wadd(s, L + "e" + Rr, c * hb.scaled(R->p - 2));
    if (x == 'h' && y == 'f') wadd(s, L + "f" + Rr, c * hb.scaled(R->p - 2));
  }
  return out;
}

WordSum to_words(const PBWElement& a) {
  WordSum s;
  for (auto& [k, c] : a.terms()) wadd(s, std::string(k[0], 'f') + std::string(k[1], 'h') + std::string(k[2], 'e'), c);
  return s;
}

PBWElement oracle_mul(const PBWElement& a, const PBWElement& b) {
  WordSum s;
  for (auto& [w1, c1] : to_words(a))
    for (auto& [w2, c2] : to_words(b)) wadd(s, w1 + w2, c1 * c2);
  return straighten(s, a.ring());
}

PBWElement random_pbw(const RingPtr& R, std::mt19937_64& rng) {
  PBWElement r(R);
  for (int t = 0; t < 3; ++t) {
    Mono m{};
    m[0] = rng() % 2;
    m[1] = rng() % 2;
    r.add_term({static_cast<std::uint16_t>(rng() % 3), static_cast<std::uint16_t>(rng() % 3),
                static_cast<std::uint16_t>(rng() % 3)},
               CoeffPoly::monomial(R, m, 1 + rng() % (R->p - 1)));
  }
  return r;
}

}  // namespace

TEST_CASE("u_mul straightening examples") {
  auto R = make_ring(5, {"hbar", "sigma"});
  auto e = PBWElement::e(R), f = PBWElement::f(R), h = PBWElement::h(R), hb = PBWElement::hbar(R);
  CHECK(e * f == f * e + hb * h);
  CHECK(h * e == e * h + (hb * e).scaled(CoeffPoly::constant(R, 2)));
  CHECK(PBWElement::constant(R, 1) * f == f);
  CHECK(u_commutator(h, f) == (hb * f).scaled(CoeffPoly::constant(R, -2)));
  // the Casimir written with ef
  CHECK(PBWElement::casimir(R) == (e * f).scaled(CoeffPoly::constant(R, 4)) + h * h -
                                      (hb * h).scaled(CoeffPoly::constant(R, 2)));
}

TEST_CASE("u_mul agrees with word rewriting and is associative") {
  for (std::uint32_t p : {5u, 7u}) {
    auto R = make_ring(p, {"hbar", "sigma"});
    std::mt19937_64 rng(p * 13);
    for (int it = 0; it < 25; ++it) {
      auto a = random_pbw(R, rng), b = random_pbw(R, rng), c = random_pbw(R, rng);
      CHECK(a * b == oracle_mul(a, b));
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("Springer splitting images are central") {
  for (std::uint32_t p : {5u, 7u}) {
    auto R = make_ring(p, {"hbar", "sigma"});
    auto S = springer_input_ring(p);
    auto hb = PBWElement::hbar(R);
    auto se = frobenius_splitting_springer(CoeffPoly::var(S, 1), R);
    auto sf = frobenius_splitting_springer(CoeffPoly::var(S, 2), R);
    auto sh = frobenius_splitting_springer(CoeffPoly::var(S, 3), R);
    CHECK(se == PBWElement::e(R).pow(p));
    CHECK(sf == PBWElement::f(R).pow(p));
    CHECK(sh == PBWElement::h(R).pow(p) - hb.pow(p - 1) * PBWElement::h(R));
    for (auto* s : {&se, &sf, &sh}) CHECK(sl2_centrality(*s).central);
    auto ss = frobenius_splitting_springer(CoeffPoly::var(S, 4), R);
    CHECK(ss == PBWElement::scalar(sigma_splitting(R)));
    // multiplicative on a mixed input
    auto x = CoeffPoly::var(S, 1) * CoeffPoly::var(S, 3) + CoeffPoly::var(S, 4);
    CHECK(frobenius_splitting_springer(x, R) == se * sh + ss);
    CHECK(sl2_centrality(frobenius_splitting_springer(x, R)).central);
    CHECK_THROWS_AS(frobenius_splitting_springer(CoeffPoly::var(S, 0), R), StructuralError);
  }
  // h itself is not central
  auto R = make_ring(5, {"hbar", "sigma"});
  auto rep = sl2_centrality(PBWElement::h(R));
  CHECK_FALSE(rep.central);
  CHECK(rep.witness_label == "[z, e]");
}

TEST_CASE("restricted table satisfies {x^[p], y} = (ad x)^p y") {
  for (std::uint32_t p : {5u, 7u}) {
    auto R = make_ring(p, {"hbar", "sigma"});
    auto t = sl2_restricted_table(R);
    for (std::size_t i = 0; i < t.gens.size(); ++i)
      for (auto& [yn, y] : t.gens) {
        PBWElement ad = y;
        for (unsigned k = 0; k < p; ++k) ad = u_commutator(t.gens[i].second, ad).divide_hbar(1);
        CHECK(u_commutator(t.power[i], y).divide_hbar(1) == ad);
      }
  }
}

TEST_CASE("sigma splitting is shift invariant") {
  for (std::uint32_t p : {5u, 7u}) {
    auto R = make_ring(p, {"hbar", "sigma"});
    auto s = sigma_splitting(R);
    auto hb = CoeffPoly::var(R, 0), sg = CoeffPoly::var(R, 1);
    for (std::uint32_t j = 0; j < p; ++j) CHECK(s.substitute({hb, sg - hb.scaled(j)}) == s);
    // a non-multiple of the splitting is not invariant
    CHECK((sg * sg).substitute({hb, sg - hb}) != sg * sg);
  }
}

TEST_CASE("Harish-Chandra projection") {
  auto R = make_ring(7, {"hbar", "sigma"});
  auto H = cartan_ring(R);
  auto hb = CoeffPoly::var(H, 0), h = CoeffPoly::var(H, 2);
  auto omega = PBWElement::casimir(R);
  REQUIRE(sl2_centrality(omega).central);
  auto hc = harish_chandra(omega);
  CHECK(hc.unshifted == h * h + hb.scaled(2) * h);
  CHECK(hc.shifted == h * h - hb * hb);
  CHECK(harish_chandra_inverse(hc.shifted, R) == omega);
  // Omega^2 + 3 Omega + sigma, round trip
  auto z = omega * omega + omega.scaled(CoeffPoly::constant(R, 3)) + PBWElement::scalar(CoeffPoly::var(R, 1));
  REQUIRE(sl2_centrality(z).central);
  CHECK(harish_chandra_inverse(harish_chandra(z).shifted, R) == z);
  CHECK(harish_chandra(PBWElement::constant(R, 3)).unshifted == CoeffPoly::constant(H, 3));
  CHECK_THROWS_AS(harish_chandra(PBWElement::e(R)), CheckError);
  CHECK_THROWS_AS(harish_chandra_inverse(h, R), StructuralError);
}

TEST_CASE("tensor compatibility of the Springer splitting") {
  // in the quotient where the Casimir is sigma^2 - hbar^2: 4 s(f) s(e) + s(h)^2 = s(sigma)^2
  for (std::uint32_t p : {5u, 7u}) {
    auto R = make_ring(p, {"hbar", "sigma"});
    auto A0 = cartan_ring(R);
    auto hb = CoeffPoly::var(A0, 0), sg = CoeffPoly::var(A0, 1);
    auto f = PBWElement::f(R), e = PBWElement::e(R);
    // the Casimir itself maps to sigma^2 - hbar^2
    CHECK(sl2_weight0_to_cartan(PBWElement::casimir(R), A0) == sg * sg - hb * hb);
    auto sh = PBWElement::h(R).pow(p) - PBWElement::hbar(R).pow(p - 1) * PBWElement::h(R);
    auto lhs = (f.pow(p) * e.pow(p)).scaled(CoeffPoly::constant(R, 4)) + sh * sh;
    auto ssig = sigma_splitting(R);
    std::vector<CoeffPoly> up{hb, sg};
    CHECK(sl2_weight0_to_cartan(lhs, A0) == ssig.substitute(up).pow(2));
  }
}
