#include "doctest.h"
#include "hmodule.hpp"
#include "hopf.hpp"

using namespace hopfo;

TEST_CASE("builtin catalog passes the axiom checks") {
  for (auto H : {make_group_algebra(2), make_group_algebra(3), make_exterior(1), make_exterior(2),
                 make_exterior(3), make_pdg(2), make_pdg(3), make_pdg(5), make_taft(2), make_taft(3),
                 make_taft(4)}) {
    CAPTURE(H->dim);
    CHECK(verify_hopf(*H).empty());
    CHECK_FALSE(H->integral.is_zero());
  }
}

TEST_CASE("group algebra Z/2: comultiplication, antipode, integral") {
  auto H = make_group_algebra(2);
  auto F = H->F;
  // Delta(g) = g (x) g
  Mat dg = H->comult.col(1);
  for (long x = 0; x < 4; ++x) CHECK(dg.at(x, 0) == (x == 3 ? F->one() : F->zero()));
  // S(g) = g
  CHECK(H->antipode.col(1).at(1, 0).is_one());
  // Lambda = 1 + g
  CHECK(H->integral.at(0, 0).is_one());
  CHECK(H->integral.at(1, 0).is_one());
  CHECK(H->counit_of(H->integral) == F->from_int(2));
  CHECK(H->cocommutative);
}

TEST_CASE("p_dg(3): grading, integral D^2, eps(Lambda)=0") {
  auto H = make_pdg(3);
  CHECK(H->dim == 3);
  CHECK(H->degree == std::vector<long>{0, 1, 2});
  Mat L = H->integral;
  CHECK(L.at(0, 0).is_zero());
  CHECK(L.at(1, 0).is_zero());
  CHECK(L.at(2, 0).is_one());
  CHECK(H->counit_of(L).is_zero());
  CHECK(H->integral_degree == 2);
  CHECK(H->cocommutative);
}

TEST_CASE("integral degrees sit at the top for local builtins") {
  CHECK(make_pdg(5)->integral_degree == 4);
  CHECK(make_exterior(2)->integral_degree == 2);
  CHECK(make_exterior(3)->integral_degree == 3);
  CHECK(make_taft(3)->integral_degree == 2);
}

TEST_CASE("exterior algebra is super cocommutative with top-wedge integral") {
  auto H = make_exterior(2);
  CHECK(H->dim == 4);
  CHECK(H->super_sign);
  CHECK(H->cocommutative);
  // integral = v0^v1, the top element (bitmask 3)
  for (long i = 0; i < 4; ++i) CHECK(H->integral.at(i, 0).is_zero() == (i != 3));
  CHECK(H->counit_of(H->integral).is_zero());
  // v0 v1 = -v1 v0
  Mat v0(H->F, 4, 1), v1(H->F, 4, 1);
  v0.at(1, 0) = H->F->one();
  v1.at(2, 0) = H->F->one();
  CHECK(H->mul_vec(v0, v1) == -H->mul_vec(v1, v0));
}

TEST_CASE("taft algebra relations and integral") {
  auto H = make_taft(3);
  auto F = H->F;
  Scalar z = F->zeta();
  long n = 3;
  auto idx = [n](long a, long b) { return a * n + b; };
  Mat K(F, 9, 1), d(F, 9, 1);
  K.at(idx(1, 0), 0) = F->one();
  d.at(idx(0, 1), 0) = F->one();
  // K^3 = 1
  Mat K3 = H->mul_vec(K, H->mul_vec(K, K));
  CHECK(K3.at(0, 0).is_one());
  // Kd = zeta d K
  CHECK(H->mul_vec(K, d) == H->mul_vec(d, K).scaled(z));
  // d^3 = 0
  CHECK(H->mul_vec(d, H->mul_vec(d, d)).is_zero());
  // normalized integral = sum_a K^a d^2; the catalog records the 1/n scale
  for (long a = 0; a < n; ++a) CHECK(H->integral.at(idx(a, 2), 0).is_one());
  CHECK(H->integral_paper_scale == F->one() / F->from_int(3));
  CHECK_FALSE(H->cocommutative);
  // integral property explicitly: h Lambda = eps(h) Lambda on generators
  CHECK(H->mul_vec(K, H->integral) == H->integral);
  CHECK(H->mul_vec(d, H->integral).is_zero());
}

TEST_CASE("taft(2) lives over the rationals in disguise") {
  auto H = make_taft(2);
  CHECK(H->dim == 4);
  CHECK(H->F->ext_degree() == 1);
  // Kd = -dK
  Mat K(H->F, 4, 1), d(H->F, 4, 1);
  K.at(2, 0) = H->F->one();
  d.at(1, 0) = H->F->one();
  CHECK(H->mul_vec(K, d) == -H->mul_vec(d, K));
}

TEST_CASE("a broken antipode is reported") {
  auto H = make_pdg(3);
  HopfAlgebra bad = *H;
  // S(D) = D instead of -D
  bad.antipode = Mat::identity(H->F, 3);
  bad.finalize();
  auto report = verify_hopf(bad);
  bool found = false;
  for (auto &r : report) found |= (r == "antipode");
  CHECK(found);
}

TEST_CASE("a primitive comultiplication on the Taft d is not an algebra map") {
  auto H = make_taft(3);
  HopfAlgebra bad = *H;
  long n = 3;
  auto idx = [n](long a, long b) { return a * n + b; };
  // overwrite Delta(d) with d (x) 1 + 1 (x) d (dropping the K twist)
  for (long x = 0; x < bad.dim * bad.dim; ++x) bad.comult.at(x, idx(0, 1)) = bad.F->zero();
  bad.comult.at(idx(0, 1) * bad.dim + 0, idx(0, 1)) = bad.F->one();
  bad.comult.at(0 * bad.dim + idx(0, 1), idx(0, 1)) = bad.F->one();
  bad.finalize();
  auto report = verify_hopf(bad);
  bool found = false;
  for (auto &r : report) found |= (r == "comult algebra map");
  CHECK(found);
}

TEST_CASE("left integral solver rejects non-Hopf input") {
  auto H = make_pdg(3);
  HopfAlgebra bad = *H;
  bad.mult = Mat(H->F, 3, 9);  // zero multiplication: integral space is 3-dim
  CHECK_THROWS_AS(left_integral(bad), MathError);
}

TEST_CASE("integral is unique up to scale and catalog-normalized") {
  for (auto H : {make_pdg(3), make_exterior(2), make_taft(3), make_group_algebra(3)}) {
    Mat L = left_integral(*H);
    CHECK(L == H->integral);
    long first = -1;
    for (long i = 0; i < H->dim && first < 0; ++i)
      if (!L.at(i, 0).is_zero()) first = i;
    CHECK(L.at(first, 0).is_one());
  }
}
