#pragma once

#include <cstdint>
#include <vector>

namespace mh {

using FpVec = std::vector<std::uint32_t>;

// incremental row echelon form over F_p; rows are kept reduced against each other
class FpEchelon {
 public:
  FpEchelon(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}
  // reduces v in place against the stored rows; returns true and stores it if independent
  bool insert(FpVec v);
  void reduce(FpVec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<int>& pivots() const { return piv_; }

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<FpVec> rows_;
  std::vector<int> piv_;
};

// v += c * w
void fp_axpy(FpVec& v, std::uint32_t c, const FpVec& w, std::uint32_t p);
bool fp_is_zero(const FpVec& v);

}  // namespace mh
