#include "mhikita/fplinalg.hpp"

#include "mhikita/errors.hpp"
#include "mhikita/field.hpp"

namespace mh {

void fp_axpy(FpVec& v, std::uint32_t c, const FpVec& w, std::uint32_t p) {
  if (!c) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i]) v[i] = static_cast<std::uint32_t>((v[i] + static_cast<std::uint64_t>(c) * w[i]) % p);
}

bool fp_is_zero(const FpVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

void FpEchelon::reduce(FpVec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = v[piv_[r]];
    if (c) fp_axpy(v, p_ - c, rows_[r], p_);
  }
}

bool FpEchelon::insert(FpVec v) {
  if (v.size() != dim_) throw StructuralError("FpEchelon: vector of wrong length");
  reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && !v[lead]) ++lead;
  if (lead == dim_) return false;
  std::uint32_t inv = mod_inv(v[lead], p_);
  for (auto& x : v) x = mod_mul(x, inv, p_);
  // keep the stored rows fully reduced
  for (auto& row : rows_) {
    std::uint32_t c = row[lead];
    if (c) fp_axpy(row, p_ - c, v, p_);
  }
  rows_.push_back(std::move(v));
  piv_.push_back(static_cast<int>(lead));
  return true;
}

}  // namespace mh
