#ifndef HOPFO_MODALG_HPP
#define HOPFO_MODALG_HPP

#include "hmodule.hpp"

namespace hopfo {

// Finite-dimensional H-module algebra: structure constants of an associative
// unital algebra plus an H-action satisfying h(ab) = sum (h1 a)(h2 b) with
// the Koszul sign when super. mult column (i*dim+j) = coordinates of a_i a_j.
struct ModuleAlgebra {
  HopfPtr H;
  long dim = 0;
  std::vector<std::string> labels;
  Mat mult;   // dim x dim^2
  Mat unit;   // dim x 1
  std::vector<Mat> haction;
  std::vector<long> degree;

  Mat mul_vec(const Mat &a, const Mat &b) const;
  Mat left_mult(const Mat &a) const;
  Mat right_mult(const Mat &a) const;
  Mat act(const Mat &h_coeffs) const;
  HModule as_hmodule() const;
  long parity(long i) const { return H->super_sign ? ((degree[i] % 2) + 2) % 2 : 0; }
};
using AlgPtr = std::shared_ptr<const ModuleAlgebra>;

std::vector<std::string> verify_module_algebra(const ModuleAlgebra &A);

// B = A # H: the underlying associative algebra on A (x) H together with the
// comodule map Delta_B(a(x)h) = a (x) Delta(h).
struct SmashAlgebra {
  AlgPtr A;
  long dim = 0;  // dim A * dim H
  std::vector<std::string> labels;
  Mat mult;      // dim x dim^2
  Mat unit;      // dim x 1
  Mat comodule;  // (dim*dimH) x dim, column = Delta_B of basis element
};
SmashAlgebra smash(const AlgPtr &A);
std::vector<std::string> verify_smash(const SmashAlgebra &B);

// opposite multiplication with the Koszul sign; requires cocommutative H
AlgPtr opposite(const AlgPtr &A);
// componentwise product on A1 (x) A2 with the diagonal action; cocommutative H
AlgPtr tensor_algebras(const AlgPtr &A1, const AlgPtr &A2);

// unchecked data with reversed (graded-twisted) multiplication; used to
// exhibit axiom failures for non-cocommutative H
ModuleAlgebra reversed_multiplication_data(const ModuleAlgebra &A, bool zeta_twist);

// --- builtin catalog ---
// trivial H-action wrappers
AlgPtr make_trivial_field_algebra(const HopfPtr &H);             // A = k
AlgPtr make_kxk(const HopfPtr &H);                               // A = k x k
AlgPtr make_path_a2(const HopfPtr &H);                           // path algebra of 1 -> 2
AlgPtr make_upper_tri2(const HopfPtr &H);                        // upper triangular 2x2
// F_p[x]/(x^p) with D = d/dx over p_dg(p)
AlgPtr make_truncated_poly_pdg(long p);
// k[e,n]/(e^2,en,ne,n^2), d(e)=n over k[d]/d^2
AlgPtr make_dg_square_zero();
// Q(zeta)[x]/(x^trunc), d(x^k)=[k]_zeta x^{k+1} over taft(n)
AlgPtr make_truncated_poly_taft(long n, long trunc);

// parses "trivial:k", "kxk", "path_a2", "upper2" (wrap: needs hopf),
// "truncated_poly_pdg:3", "dg_square_zero", "truncated_poly_taft:3:4"
AlgPtr parse_builtin_algebra(const std::string &text, const HopfPtr &hopf_or_null);

// H-equivariant algebra morphism
struct AlgMorphism {
  AlgPtr src, dst;
  Mat m;  // dst.dim x src.dim
};
std::vector<std::string> verify_alg_morphism(const AlgMorphism &phi);

}  // namespace hopfo

#endif
