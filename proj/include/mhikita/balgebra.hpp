#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhikita/hypertoric.hpp"
#include "mhikita/trace.hpp"

namespace mh {

// A0 / sum over positive lambda of A_lambda A_-lambda, with hbar and the central parameters
// specialized to F_p values. The ideal is generated by P_lambda = m^lambda m^-lambda for the
// positive weights with |lambda|_1 <= window; the quotient dimension is read off the span of
// g P_lambda inside polynomials of degree <= D for D up to N.
struct BAlgebra {
  std::string name;
  int N = 0;
  int window = 0;
  std::vector<std::string> params;       // e.g. "hbar=2"
  std::vector<std::string> generators;   // positive weights used, as strings
  std::vector<std::string> basis;        // standard monomials at D = N
  std::vector<int> rank_by_degree;       // quotient dimension for D = 0..N
  int rank = 0;
  bool stable = false;     // last two entries of rank_by_degree agree
  bool truncated = false;  // sigma = 0: empty ideal, rank is the window count of A0
};

BAlgebra b_algebra_hypertoric(const GaugeData& d, std::uint32_t p, const Weight& sigma, int N, int window,
                              std::uint64_t seed);
BAlgebra b_algebra_sl2(std::uint32_t p, std::int64_t sigma, int N, int window, std::uint64_t seed);

}  // namespace mh
