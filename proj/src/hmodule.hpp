#ifndef HOPFO_HMODULE_HPP
#define HOPFO_HMODULE_HPP

#include <map>
#include <optional>
#include <utility>

#include "hopf.hpp"

namespace hopfo {

// Finite-dimensional H-module: one action matrix per Hopf basis element
// (column-action), integer degree per basis vector. Degrees are stored as
// full integers and reduced modulo the grading modulus only when compared.
struct HModule {
  HopfPtr H;
  long dim = 0;
  std::vector<Mat> action;
  std::vector<long> degree;

  Mat act(const Mat &coeffs) const;  // sum_i coeffs[i] * action[i]
  long parity(long basis_index) const {
    return H->super_sign ? ((degree[basis_index] % 2) + 2) % 2 : 0;
  }
};

struct HMap {
  HModule src, dst;
  Mat m;
};

HModule regular_module(const HopfPtr &H);
HModule trivial_module(const HopfPtr &H, long deg = 0);

std::vector<std::string> verify_hmodule(const HModule &M);
bool is_h_linear(const HModule &src, const HModule &dst, const Mat &f);

HModule tensor(const HModule &M, const HModule &N);
HModule direct_sum(const HModule &M, const HModule &N);

// Hom_k(M,N) with the S^{-1}-twisted action; basis E_{rc} has index r*dim_M+c
// and degree deg_N(r) - deg_M(c).
HModule hom_module(const HModule &M, const HModule &N);
Mat unvec_hom(const HModule &M, const HModule &N, const Mat &column);
Mat vec_hom(const Mat &f);

// (h . g) for an arbitrary g in Hom_k(M,N), without materializing the big
// action matrix; h given by coordinates in H.
Mat hom_act(const HModule &M, const HModule &N, const Mat &h_coeffs, const Mat &g);

// basis of {v : h v = eps(h) v} as columns
Mat invariants(const HModule &V);

struct StableInv {
  long dim = 0;
  Mat reps;                      // columns, representatives of Z(V)/(Lambda V)
  std::map<long, long> by_degree;  // reduced degree -> dimension
};
StableInv stable_invariants(const HModule &V);

struct StableHom {
  long dim = 0;
  std::vector<Mat> reps;  // H-linear maps modulo Lambda-action image
  std::map<long, long> by_degree;
};
StableHom stable_hom(const HModule &M, const HModule &N);

// witness g in End_k(V) with (Lambda . g) = Id, when V is projective
std::optional<Mat> is_stably_zero(const HModule &V);

HModule shift(const HModule &M, int direction);
// the tensor factor realizing the shift: H/(k Lambda) with degrees +1, or
// ker(eps) with the computed offset
HModule shift_factor(const HopfPtr &H, int direction);

// canonical iso M (x) H -> M_0 (x) H of Prop-2.1 type, with its inverse
struct FreenessIso {
  HModule src, dst;
  Mat fwd, inv;
};
FreenessIso freeness_iso(const HModule &M);

// H-linear iso r : H (x) V -> V (x) H with r(Lambda (x) v) = v (x) Lambda,
// found by linear solving; throws if no invertible solution is found.
HMap intertwiner_r(const HModule &V, long effort = 64);

// (block size, lowest degree) multiset for single-nilpotent-generator kinds
std::vector<std::pair<long, long>> jordan_type(const HModule &M);

// per-degree dims of ker(D^q)/im(D^{N-q})
std::map<long, long> slash_cohomology(const HModule &M, long q);
long slash_total(const HModule &M);

struct SubmoduleResult {
  HModule mod;
  Mat incl;  // dim x k
};
SubmoduleResult submodule(const HModule &M, const Mat &cols);

struct QuotientResult {
  HModule mod;
  Mat proj;                    // k x dim
  std::vector<long> rep_cols;  // chosen standard-basis representatives
};
QuotientResult quotient_module(const HModule &M, const Mat &sub);

// generic equivariant-map solving: X with act_dst(h) X = X act_src(h) and
// X * prescribed_src = prescribed_dst
std::optional<Mat> solve_equivariant_map(const HModule &src, const HModule &dst,
                                         const Mat &prescribed_src, const Mat &prescribed_dst);

std::vector<long> indices_of_degree(const HopfAlgebra &H, const std::vector<long> &degs, long d);
std::vector<long> degrees_present(const HopfAlgebra &H, const std::vector<long> &degs);

}  // namespace hopfo

#endif
