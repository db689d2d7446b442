#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mhikita/coeffpoly.hpp"
#include "mhikita/hypertoric.hpp"
#include "mhikita/matrix.hpp"
#include "mhikita/novikov.hpp"
#include "mhikita/roots.hpp"
#include "mhikita/weyl.hpp"

namespace mh {

// element of k[z] (x) A0 before normalization: z^mu -> polynomial over the full ring
using ZPoly = std::map<ZExp, CoeffPoly>;
// element of the module in the standard basis, coefficients over the coefficient ring
using ModElem = std::vector<NovikovSeries>;
using OpMatrix = Matrix<NovikovSeries>;

// a chosen generator of the degree-2 part of A0; pairing[l] = <alpha_l, abar>
struct TraceGenerator {
  std::string name;
  CoeffPoly value;
  std::vector<std::int64_t> pairing;
};

// everything the module needs from the algebra side. The full ring is
// (hbar, central parameters..., u_1..u_r) and the coefficient ring is its prefix
// (hbar, central parameters...). Moving z^lambda past u_j shifts it by hbar * ushift.
struct TraceData {
  std::string name;
  bool sl2 = false;
  std::uint32_t p = 0;
  GaugeData gauge;  // hypertoric only
  RingPtr coeff, full;
  int ncoeff = 0, nu = 0;
  RootSystem roots;
  std::vector<std::vector<std::int64_t>> ushift;  // [l][j]
  std::vector<TraceGenerator> gens;
  std::vector<CoeffPoly> euler_image;  // hypertoric: images of hbar, E_1..E_n in the full ring
  std::vector<int> u_index;            // hypertoric: which E_i are the u variables
};

TraceData trace_data_hypertoric(const GaugeData& d, std::uint32_t p, const Weight& sigma, int root_window = 4);
TraceData trace_data_sl2(std::uint32_t p, std::int64_t sigma = 1);

// P = a b and Q = b a for the monopole pair of weight lambda = sum mu_l alpha_l, in the full ring
std::pair<CoeffPoly, CoeffPoly> relation_pair(const TraceData& td, const std::vector<int>& mu);
// same for an arbitrary weight lambda of the algebra
std::pair<CoeffPoly, CoeffPoly> weight_relation_pair(const TraceData& td, const Weight& lam);
// images of the full ring variables under u_j -> u_j + hbar * shift_j, shift = sum mu_l ushift[l]
std::vector<CoeffPoly> shift_images(const TraceData& td, const std::vector<int>& mu);

// Lambda(f) as an element of the full ring. Hypertoric input is a polynomial in x_i y_i; sl2
// input lives over springer_input_ring.
CoeffPoly frobenius_image_hypertoric(const TraceData& td, const CommutativePair& f);
CoeffPoly frobenius_image_sl2(const TraceData& td, const CoeffPoly& f);

struct TraceCertificate {
  int relations = 0;  // relation rows generated up to degree N
  int overlaps = 0;   // linear dependencies among rows whose lifts were checked to vanish
  int top_degree = 0;
};

// k[z] (x) A0 modulo g P_lambda = z^mu tau(g) Q_lambda, truncated at z-degree M.
// Polynomials are graded with every full ring variable of degree 1 and each degree is an
// independent finite linear system; degrees up to N are built eagerly, higher ones on demand.
class TraceModule {
 public:
  TraceModule(TraceData data, int N, int M);
  ~TraceModule();
  TraceModule(const TraceModule&) = delete;
  TraceModule& operator=(const TraceModule&) = delete;

  const TraceData& data() const { return td_; }
  int N() const { return N_; }
  int M() const { return M_; }
  int nz() const { return static_cast<int>(td_.roots.coords.size()); }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Mono>& basis() const { return basis_; }
  std::vector<std::string> basis_names() const;
  const TraceCertificate& certificate() const { return cert_; }
  int generator_index(const std::string& name) const;

  ModElem zero() const;
  ModElem basis_vector(std::size_t s) const;
  NovikovSeries series(const CoeffPoly& c) const;  // constant series over the coefficient ring
  ModElem normal_form(const ZPoly& f, bool* overflow = nullptr) const;
  ZPoly lift(const ModElem& v) const;

  // a . (z^nu (x) b) = z^nu (x) (a + hbar <nu, abar>) b
  ZPoly act_raw(const CoeffPoly& a, const std::vector<std::int64_t>& pairing, const ZPoly& v) const;
  ModElem act(const CoeffPoly& a, const std::vector<std::int64_t>& pairing, const ModElem& v) const;
  ModElem act_gen(int g, const ModElem& v) const;
  ModElem act_z(const ZExp& e, const ModElem& v) const;
  ModElem apply(const OpMatrix& A, const ModElem& v) const;

  OpMatrix act_matrix(int g) const;  // z^0 columns act(g) e_s
  OpMatrix frobenius_action(const CoeffPoly& L) const;
  OpMatrix trace_pcurvature(int g) const;

  // empty string when act(g) agrees on both sides of every relation instance of degree <= deg
  std::string check_well_defined(int deg) const;
  // [F, act(g)] on basis vectors and F z^alpha e_s = z^alpha F e_s; empty string when both hold
  std::string check_covariant_constancy(const OpMatrix& F, const CoeffPoly& L) const;
  // F(z^alpha e_s) = z^alpha F(e_s) for the p-curvature of generator g
  std::string check_pcurvature_linear(int g) const;

 private:
  struct Degree;
  const Degree& degree(int d) const;
  std::unique_ptr<Degree> build_degree(int d) const;
  void finish_degree(Degree& D) const;

  TraceData td_;
  int N_, M_;
  std::vector<Mono> basis_;
  TraceCertificate cert_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Degree>> degrees_;
  mutable std::map<std::vector<int>, std::pair<CoeffPoly, CoeffPoly>> pq_cache_;
};

std::string modelem_str(const ModElem& v, const std::vector<std::string>& names);

}  // namespace mh
