#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhikita/hypertoric.hpp"

namespace mh {

using Weight = std::vector<std::int64_t>;

struct RootSystem {
  int dim = 0;                   // length of a weight vector
  int window = 0;                // conical degrees inspected
  std::map<Weight, int> weights;  // generator weights with multiplicity, zero included
  std::vector<Weight> roots;      // distinct nonzero weights
  Weight sigma;
  std::vector<Weight> positive;
  std::vector<Weight> coords;     // indecomposable positive roots, the Novikov coordinates
};

std::int64_t weight_pair(const Weight& sigma, const Weight& w);

// generator weights of A+/(A+ A+) for A = D(A^n)^K up to the conical window
RootSystem equivariant_roots_hypertoric(const GaugeData& d, std::uint32_t p, int window);
// same for U_hbar(sl2) with a central Cartan parameter; weights are ad-h eigenvalues
RootSystem equivariant_roots_sl2(std::uint32_t p, int window);

// fills positive and coords; InputError if sigma vanishes on a root, StructuralError when the
// positive monoid is not simplicial
void select_positive(RootSystem& rs, const Weight& sigma);

// all exponent vectors mu with 1 <= |mu| <= M over s coordinates, by degree then lex
std::vector<std::vector<int>> novikov_exponents(int s, int M);
Weight monoid_element(const RootSystem& rs, const std::vector<int>& mu);

// all lattice weights in ker iota^T with |lambda|_1 <= bound
std::vector<Weight> invariant_weights(const GaugeData& d, int bound);

}  // namespace mh
