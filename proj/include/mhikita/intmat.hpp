#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

namespace mh {

using IntMat = std::vector<std::vector<std::int64_t>>;  // row-major, rows may be empty when cols == 0
using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;

IntMat int_zero(std::size_t r, std::size_t c);
IntMat int_identity(std::size_t n);
IntMat int_transpose(const IntMat& a, std::size_t cols);
IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t inner, std::size_t cols);
// Bareiss determinant; throws StructuralError on overflow
std::int64_t int_det(const IntMat& a);
int int_rank(const IntMat& a, std::size_t cols);
// nonzero diagonal of the Smith normal form, in divisibility order
std::vector<std::int64_t> smith_invariants(const IntMat& a, std::size_t cols);
// solve A x = b over Q for square invertible A; false when singular
bool rat_solve(const IntMat& A, const std::vector<Rational>& b, RatVec* x);
// inverse of a square integer matrix over Q; false when singular
bool rat_inverse(const IntMat& A, std::vector<RatVec>* inv);
// all k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace mh
