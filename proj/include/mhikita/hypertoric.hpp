#pragma once

#include <string>
#include <vector>

#include "mhikita/intmat.hpp"
#include "mhikita/linform.hpp"

namespace mh {

// 1 -> K -> (G_m)^n -> T -> 1 with a character lift chi and a cocharacter lift sigma
struct GaugeData {
  int n = 0;
  int k = 0;
  IntMat iota;  // n x k
  IntMat pi;    // (n-k) x n
  std::vector<std::int64_t> chi_lift;
  std::vector<std::int64_t> sigma_lift;
  std::string name;

  int rank_t() const { return n - k; }
  std::vector<std::int64_t> a(int i) const;  // pi(e_i)
};

// throws InputError describing the first violated condition
void validate_gauge(const GaugeData& d);
GaugeData gale_dual(const GaugeData& d);
bool unimodularity_check(const GaugeData& d);

GaugeData builtin_gauge(const std::string& name);  // t-star-a1, t-star-p1, sqed-3
std::vector<std::string> builtin_gauge_names();

struct Vertex {
  RatVec point;
  std::vector<int> I;                 // indices of hyperplanes through the point, increasing
  std::vector<LinearForm> eta;        // eta[t] pairs to 1 with a_{I[t]} and 0 with the other a_j, j in I
};

struct Arrangement {
  int n = 0;
  int r = 0;  // dim t
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> chi;
  std::vector<Vertex> vertices;
};

// vertices in the order of the subsets that produced them; InputError for nongeneric chi
// or when a covector is not integral (the variety is not smooth there)
Arrangement build_arrangement(const GaugeData& d);

// diagonal of the Harada-Holm divisor matrix for rho_i over the vertex basis
std::vector<LinearForm> divisor_matrix(const Arrangement& arr, int i);

struct SpectrumCertificate {
  bool simple = true;
  std::vector<std::pair<std::pair<int, int>, int>> separators;  // (v, v') -> separating index
  std::pair<int, int> offending{-1, -1};
};
SpectrumCertificate simple_spectrum_certificate(const Arrangement& arr);
// same test on explicit diagonals: diags[i][v]
SpectrumCertificate simple_spectrum_of(const std::vector<std::vector<LinearForm>>& diags);

// recomputes <eta, a_j> for every stored covector; empty string when all hold
std::string covector_audit(const Arrangement& arr);

}  // namespace mh
