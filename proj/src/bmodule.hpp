#ifndef HOPFO_BMODULE_HPP
#define HOPFO_BMODULE_HPP

#include "modalg.hpp"

namespace hopfo {

// Module over the smash product B = A # H: an A-representation and an
// H-representation on the same space satisfying the smash compatibility
// h(am) = sum (+-)(h1 a)(h2 m).
struct BModule {
  AlgPtr A;
  long dim = 0;
  std::vector<Mat> a_action;
  std::vector<Mat> h_action;
  std::vector<long> degree;

  Mat act_a(const Mat &coeffs) const;
  Mat act_h(const Mat &coeffs) const;
  HModule restrict_h() const;
  long parity(long i) const { return A->H->super_sign ? ((degree[i] % 2) + 2) % 2 : 0; }
};
using BModP = std::shared_ptr<const BModule>;

struct BMap {
  BModP src, dst;
  Mat m;
};

std::vector<std::string> verify_bmodule(const BModule &M);
bool is_b_linear(const BMap &f);  // degree-0: commutes plainly with both actions

// A itself as a left B-module
BModP regular_bmodule(const AlgPtr &A);
// free module A (x) V, index (a_i, v_j) -> i*dimV + j
BModP free_bmodule(const AlgPtr &A, const HModule &V);
// M (x) V with the Delta_B action (A acts on the M factor only)
BModP tensor_with_hmodule(const BModP &M, const HModule &V);
BModP direct_sum_b(const BModP &M, const BModP &N);
// an H-module as a module over the trivial algebra
BModP bmodule_from_hmodule(const AlgPtr &trivialA, const HModule &V);

struct BSubquotient {
  BModP mod;
  Mat proj;  // quotient: k x dim
  Mat incl;  // submodule: dim x k
};
BSubquotient quotient_bmodule(const BModP &M, const Mat &sub);
BSubquotient sub_bmodule(const BModP &M, const Mat &cols);

// Hom_A(M,N) as an H-module: basis columns are A-linear maps (vectorized,
// index r*dimM+c), with the S^{-1}-twisted action restricted to the subspace.
struct EnrichedHom {
  HModule mod;   // dim = number of basis columns
  Mat basis;     // (dimN*dimM) x k
  BModP src, dst;
};
EnrichedHom enriched_hom(const BModP &M, const BModP &N);

Mat hom_from_coords(const EnrichedHom &E, const Mat &coords);  // -> dimN x dimM matrix
std::optional<Mat> coords_of_hom(const EnrichedHom &E, const Mat &f);

// basis of Hom_B(M,N) (all invariants of the enriched hom, every map checked)
std::vector<Mat> chain_maps(const BModP &M, const BModP &N);

struct HomotopyHom {
  long dim = 0;
  std::vector<Mat> reps;
  std::map<long, long> by_degree;
};
HomotopyHom homotopy_hom(const BModP &M, const BModP &N);

// g with (Lambda . g) = f in Hom_A(M,N), or nullopt; f must be B-linear
std::optional<Mat> null_homotopy_witness(const BMap &f);
// extension g~(m (x) h) = (h.g)(m) of an A-linear g to M (x) H -> N
BMap extend_to_free(const BMap &f_shape, const Mat &g);

BMap lambda_embed(const BModP &M);  // M -> M (x) H, m -> m (x) Lambda

BModP shift_bmodule(const BModP &M, int direction);

struct TriangleData {
  BMap u;          // X -> Y
  BMap v;          // Y -> C_u
  BMap w;          // C_u -> TX (degree +1)
  BModP cone;      // C_u
  BModP tshift;    // TX
  // connecting data for SES-derived triangles: the quasi-isomorphism
  // C_u -> Z paired with w as a stable representative of Z -> TX
  std::optional<BMap> cone_to_z;
  bool a_split = true;
};

struct ConeResult {
  BModP cone;
  TriangleData triangle;
  // the cone as a quotient of X (x) H (+) Y: representative inclusion and
  // projection in those coordinates
  Mat incl, proj;
};
ConeResult cone(const BMap &u);

struct QuasiIsoResult {
  bool yes = false;
  std::optional<Mat> witness;  // acyclicity witness for the cone restriction
};
QuasiIsoResult quasi_iso(const BMap &f);
QuasiIsoResult quasi_iso_h(const HModule &src, const HModule &dst, const Mat &f);

// x in A with Lambda . x = 1, certifying D(A,H) = 0
std::optional<Mat> contractible_certificate(const ModuleAlgebra &A);

// Given a surjective B-linear beta : C -> Z (x) H and an A-linear section
// gamma0, produce the B-linear section via the averaging formula.
BMap lift_section(const BMap &beta, const BModP &Z, const Mat &gamma0);

struct SesTriangleOptions {
  bool allow_non_split = false;  // derived-category variant (Lemma-4.3 style)
};
TriangleData triangle_from_ses(const BMap &u, const BMap &v,
                               const SesTriangleOptions &opt = {});

// solve for an A-linear section of a surjection (degree 0)
std::optional<Mat> a_linear_section(const BMap &v);

}  // namespace hopfo

#endif
