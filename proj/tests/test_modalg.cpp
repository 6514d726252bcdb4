#include "doctest.h"
#include "modalg.hpp"

using namespace hopfo;

namespace {

Mat basis_vec(const FieldPtr &F, long dim, long i) {
  Mat v(F, dim, 1);
  v.at(i, 0) = F->one();
  return v;
}

}  // namespace

TEST_CASE("builtin algebra catalog verifies") {
  CHECK(verify_module_algebra(*make_truncated_poly_pdg(3)).empty());
  CHECK(verify_module_algebra(*make_truncated_poly_pdg(5)).empty());
  CHECK(verify_module_algebra(*make_dg_square_zero()).empty());
  CHECK(verify_module_algebra(*make_truncated_poly_taft(3, 4)).empty());
  for (auto H : {make_pdg(3), make_exterior(1), make_taft(3), make_group_algebra(2)}) {
    CHECK(verify_module_algebra(*make_trivial_field_algebra(H)).empty());
    CHECK(verify_module_algebra(*make_kxk(H)).empty());
    CHECK(verify_module_algebra(*make_path_a2(H)).empty());
    CHECK(verify_module_algebra(*make_upper_tri2(H)).empty());
  }
}

TEST_CASE("derivative action on truncated polynomials") {
  auto A = make_truncated_poly_pdg(3);
  const FieldPtr &F = A->H->F;
  // D x = 1, D x^2 = 2x
  Mat D = A->haction[1];
  CHECK(D * basis_vec(F, 3, 1) == basis_vec(F, 3, 0));
  CHECK(D * basis_vec(F, 3, 2) == basis_vec(F, 3, 1).scaled(F->from_int(2)));
}

TEST_CASE("a wrong zeta power in the Leibniz rule is caught") {
  auto good = make_truncated_poly_taft(3, 4);
  ModuleAlgebra bad = *good;
  const FieldPtr &F = bad.H->F;
  // replace d(x^k) = [k] x^{k+1} with k x^{k+1}
  Mat D(F, 4, 4);
  for (long k = 1; k + 1 < 4; ++k) D.at(k + 1, k) = F->from_int(k);
  Mat K(F, 4, 4);
  Scalar z = F->one();
  for (long k = 0; k < 4; ++k) {
    K.at(k, k) = z;
    z = z * F->zeta();
  }
  bad.haction.clear();
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) bad.haction.push_back(K.pow(a) * D.pow(b));
  auto report = verify_module_algebra(bad);
  CHECK_FALSE(report.empty());
}

TEST_CASE("smash of the trivial algebra is the Hopf algebra itself") {
  auto H = make_pdg(3);
  SmashAlgebra B = smash(make_trivial_field_algebra(H));
  CHECK(B.dim == H->dim);
  CHECK(B.mult == H->mult);
  CHECK(B.unit == H->unit);
  CHECK(verify_smash(B).empty());
}

TEST_CASE("smash commutation (1#D)(x#1) = 1#1 + x#D over p_dg(3)") {
  auto A = make_truncated_poly_pdg(3);
  SmashAlgebra B = smash(A);
  const FieldPtr &F = A->H->F;
  long dh = 3;
  // index (a_i, h_j) -> i*dh + j; D = H basis 1, x = A basis 1
  Mat oneD = basis_vec(F, B.dim, 0 * dh + 1);
  Mat xone = basis_vec(F, B.dim, 1 * dh + 0);
  Mat prod(F, B.dim, 1);
  for (long k = 0; k < B.dim; ++k) prod.at(k, 0) = B.mult.at(k, (0 * dh + 1) * B.dim + (1 * dh + 0));
  Mat expect(F, B.dim, 1);
  expect.at(0 * dh + 0, 0) = F->one();  // 1 # 1
  expect.at(1 * dh + 1, 0) = F->one();  // x # D
  CHECK(prod == expect);
}

TEST_CASE("smash with a trivial action is the plain tensor algebra") {
  auto H = make_group_algebra(2);
  auto A = make_kxk(H);
  SmashAlgebra B = smash(A);
  // (a#h)(b#l) = ab # hl
  const FieldPtr &F = H->F;
  long dh = 2;
  for (long i = 0; i < 2; ++i)
    for (long h = 0; h < 2; ++h)
      for (long j = 0; j < 2; ++j)
        for (long l = 0; l < 2; ++l) {
          Mat got(F, B.dim, 1);
          for (long k = 0; k < B.dim; ++k)
            got.at(k, 0) = B.mult.at(k, (i * dh + h) * B.dim + (j * dh + l));
          Mat ab = A->mul_vec(basis_vec(F, 2, i), basis_vec(F, 2, j));
          Mat hl = H->mul_vec(basis_vec(F, 2, h), basis_vec(F, 2, l));
          Mat expect(F, B.dim, 1);
          for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) expect.at(x * dh + y, 0) = ab.at(x, 0) * hl.at(y, 0);
          CHECK(got == expect);
        }
}

TEST_CASE("smash Koszul sign shows up for odd elements") {
  auto A = make_dg_square_zero();
  SmashAlgebra B = smash(A);
  const FieldPtr &F = A->H->F;
  long dh = 2;
  // (1#d)(e#1) = de # 1 + e # d = n#1 + e#d   (e even)
  Mat got(F, B.dim, 1);
  for (long k = 0; k < B.dim; ++k) got.at(k, 0) = B.mult.at(k, (0 * dh + 1) * B.dim + (1 * dh + 0));
  Mat expect(F, B.dim, 1);
  expect.at(2 * dh + 0, 0) = F->one();
  expect.at(1 * dh + 1, 0) = F->one();
  CHECK(got == expect);
  // (1#d)(n#1) = dn # 1 - n # d = -n#d   (n odd)
  Mat got2(F, B.dim, 1);
  for (long k = 0; k < B.dim; ++k) got2.at(k, 0) = B.mult.at(k, (0 * dh + 1) * B.dim + (2 * dh + 0));
  Mat expect2(F, B.dim, 1);
  expect2.at(2 * dh + 1, 0) = -F->one();
  CHECK(got2 == expect2);
}

TEST_CASE("opposite: involution, triangular flip, and the Taft refusal") {
  auto H = make_pdg(3);
  auto A = make_upper_tri2(H);
  auto Aop = opposite(A);
  CHECK(verify_module_algebra(*Aop).empty());
  // e11 e12 = e12 in A becomes e12 e11 = e12 in A^op
  const FieldPtr &F = H->F;
  CHECK(Aop->mul_vec(basis_vec(F, 3, 1), basis_vec(F, 3, 0)) == basis_vec(F, 3, 1));
  CHECK(Aop->mul_vec(basis_vec(F, 3, 0), basis_vec(F, 3, 1)).is_zero());
  auto Aopop = opposite(Aop);
  CHECK(Aopop->mult == A->mult);
  // commutative algebra: opposite is itself
  auto P = make_truncated_poly_pdg(3);
  CHECK(opposite(P)->mult == P->mult);
  // non-cocommutative Hopf algebra: refused
  CHECK_THROWS_AS(opposite(make_truncated_poly_taft(3, 4)), MathError);
}

TEST_CASE("forced graded reversal over Taft(3) fails the axioms") {
  auto A = make_truncated_poly_taft(3, 4);
  ModuleAlgebra forced = reversed_multiplication_data(*A, true);
  auto report = verify_module_algebra(forced);
  CHECK_FALSE(report.empty());
}

TEST_CASE("tensor product algebra") {
  auto P = make_truncated_poly_pdg(3);
  auto K = make_trivial_field_algebra(P->H);
  auto PK = tensor_algebras(P, K);
  CHECK(PK->dim == P->dim);
  CHECK(PK->mult == P->mult);
  auto PP = tensor_algebras(P, P);
  CHECK(verify_module_algebra(*PP).empty());
  // D(x (x) y) = 1 (x) y + x (x) 1 under index (i,j) -> i*3+j with x=1, y=1
  const FieldPtr &F = P->H->F;
  Mat xy = basis_vec(F, 9, 1 * 3 + 1);
  Mat got = PP->haction[1] * xy;
  Mat expect(F, 9, 1);
  expect.at(0 * 3 + 1, 0) = F->one();
  expect.at(1 * 3 + 0, 0) = F->one();
  CHECK(got == expect);
  CHECK_THROWS_AS(tensor_algebras(make_truncated_poly_taft(3, 4), make_truncated_poly_taft(3, 4)),
                  MathError);
}

TEST_CASE("smash subalgebra commutation (1#h)(a#1) = sum h1 a # h2") {
  auto A = make_truncated_poly_pdg(3);
  SmashAlgebra B = smash(A);
  const FieldPtr &F = A->H->F;
  const HopfAlgebra &H = *A->H;
  long dh = 3, da = 3;
  for (long h = 0; h < dh; ++h)
    for (long a = 0; a < da; ++a) {
      Mat got(F, B.dim, 1);
      for (long k = 0; k < B.dim; ++k)
        got.at(k, 0) = B.mult.at(k, (0 * dh + h) * B.dim + (a * dh + 0));
      Mat expect(F, B.dim, 1);
      for (const auto &t : H.sweedler()[h]) {
        Mat h1a = A->haction[t.j] * basis_vec(F, da, a);
        for (long x = 0; x < da; ++x)
          if (!h1a.at(x, 0).is_zero()) expect.at(x * dh + t.k, 0) += t.c * h1a.at(x, 0);
      }
      CHECK(got == expect);
    }
}

TEST_CASE("algebra morphism verification") {
  auto A = make_dg_square_zero();
  auto K = make_trivial_field_algebra(A->H);
  const FieldPtr &F = A->H->F;
  // augmentation: 1 -> 1, e -> 0, n -> 0
  Mat m(F, 1, 3);
  m.at(0, 0) = F->one();
  AlgMorphism aug{A, K, m};
  CHECK(verify_alg_morphism(aug).empty());
  // a non-multiplicative map is flagged
  Mat bad(F, 1, 3);
  bad.at(0, 0) = F->one();
  bad.at(0, 1) = F->one();
  AlgMorphism nm{A, K, bad};
  CHECK_FALSE(verify_alg_morphism(nm).empty());
}
