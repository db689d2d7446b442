#pragma once

#include <string>
#include <vector>

#include "mhikita/hypertoric.hpp"
#include "mhikita/trace.hpp"

namespace mh {

// nabla(f e_s) = hbar delta(f) e_s + f A e_s with delta z^mu = (sum_l mu_l w_l) z^mu
struct Connection {
  RingPtr R;
  int nz = 0, M = 0;
  std::vector<std::int64_t> weights;
  OpMatrix A;
};

ModElem zero_elem(const RingPtr& R, std::size_t rank, int nz, int M);
ModElem unit_elem(const RingPtr& R, std::size_t rank, int nz, int M, std::size_t s);
ModElem connection_apply(const Connection& c, const ModElem& v);
ModElem matrix_apply(const OpMatrix& A, const ModElem& v);
// nabla^p - hbar^(p-1) nabla on the basis; throws CheckError if it fails to commute with some z^alpha
OpMatrix connection_pcurvature(const Connection& c);
// empty when F(z^alpha e_s) = z^alpha F(e_s) for every alpha of degree <= M
std::string pcurvature_linearity(const Connection& c, const OpMatrix& F);
// constant matrix C: C^p - hbar^(p-1) C
OpMatrix residue_pcurvature(const OpMatrix& C, std::uint32_t p);

// Kaehler structure data: Novikov coordinates are curve classes beta_l in the lattice of K;
// each root alpha carries a square matrix S_alpha over the fixed point basis
struct StructureData {
  int nz = 0;
  std::vector<std::vector<std::int64_t>> classes;
  std::vector<std::pair<std::vector<int>, std::vector<std::vector<std::string>>>> roots;
};
// text format, one item per line, '#' starts a comment:
//   novikov <s>
//   class <k integers>          (s lines)
//   root <s integers>           followed by one 'row' line per basis vector
//   row <entry> <entry> ...     entries are affine expressions such as 1, u1, 2*u1-hbar
StructureData parse_structure(const std::string& text);
std::string structure_text(const StructureData& sd);

struct QuantumModule {
  std::string origin;  // "transported" or "structure"
  std::string name;
  RingPtr R;
  int nz = 0, M = 0;
  std::vector<std::string> basis_names;
  std::vector<std::string> class_names;
  std::vector<Connection> nabla;  // one per divisor class
  std::vector<OpMatrix> cup;      // classical products at z = 0
  bool diagonal = false;          // cup matrices are the fixed point diagonals
  SpectrumCertificate spectrum;
};

// the trace module read as the quantum D-module of the Gale dual; nabla_i = act(E_i)
QuantumModule transported_module(const TraceModule& m);
// fixed point basis of the arrangement of d with the divisor diagonals and the structure formula
QuantumModule structure_module(const GaugeData& d, const StructureData& sd, std::uint32_t p, int M);

Connection class_connection(const QuantumModule& q, const std::vector<std::int64_t>& x);
OpMatrix class_cup(const QuantumModule& q, const std::vector<std::int64_t>& x);
// p-curvature of nabla_x, refused with CheckError unless the spectrum certificate holds
OpMatrix quantum_steenrod_deg2(const QuantumModule& q, const std::vector<std::int64_t>& x);
// St(u) = u^p - hbar^(p-1) u extended as a Frobenius-semilinear ring map (St(hbar) = 0)
CoeffPoly classical_steenrod(const CoeffPoly& u);
// St of the cup action of x: entrywise on diagonal modules, C^p - hbar^(p-1) C otherwise
OpMatrix classical_steenrod_deg2(const QuantumModule& q, const std::vector<std::int64_t>& x);
// z^0 coefficients of an operator
OpMatrix z0_block(const OpMatrix& A);
// [nabla_x, nabla_y] on the basis; empty string when it vanishes
std::string flatness_witness(const Connection& x, const Connection& y, const std::vector<std::string>& names);

struct OperatorReport {
  std::size_t dim = 0;
  int N = 0, M = 0;
  bool equal = true;
  int first_row = -1, first_col = -1;
  std::string lhs, rhs;  // the differing entries
};
// exact entrywise comparison; StructuralError on shape mismatch
OperatorReport compare_operators(const OpMatrix& A, const OpMatrix& B, int N, int M);
// one line per nonzero coefficient: "row col zexp coefficient", sorted
std::string export_operator(const OpMatrix& A);

}  // namespace mh
