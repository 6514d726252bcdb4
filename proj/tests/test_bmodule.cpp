#include "doctest.h"
#include "helpers.hpp"

using namespace hopfo;
using namespace hopfo::testhelp;

TEST_CASE("regular and free B-modules verify") {
  for (auto A : {make_truncated_poly_pdg(3), make_dg_square_zero(), make_truncated_poly_taft(3, 4),
                 make_path_a2(make_pdg(3))}) {
    CHECK(verify_bmodule(*regular_bmodule(A)).empty());
    Rng rng(5);
    BModP Fm = random_free_bmodule(A, rng);
    CHECK(verify_bmodule(*Fm).empty());
  }
}

TEST_CASE("enriched hom from the regular module recovers the module") {
  for (auto A : {make_truncated_poly_pdg(3), make_dg_square_zero()}) {
    Rng rng(7);
    BModP R = regular_bmodule(A);
    BModP N = random_free_bmodule(A, rng);
    EnrichedHom E = enriched_hom(R, N);
    CHECK(E.mod.dim == N->dim);
    CHECK(verify_hmodule(E.mod).empty());
    CHECK(stable_invariants(E.mod).dim == stable_invariants(N->restrict_h()).dim);
    if (A->H->nil_order > 0) CHECK(jordan_type(E.mod) == jordan_type(N->restrict_h()));
  }
}

TEST_CASE("over the trivial algebra the enriched hom is the plain hom") {
  auto H = make_pdg(3);
  auto K = make_trivial_field_algebra(H);
  Rng rng(11);
  HModule V = random_module(H, rng, 2), W = random_module(H, rng, 2);
  EnrichedHom E = enriched_hom(bmodule_from_hmodule(K, V), bmodule_from_hmodule(K, W));
  CHECK(E.mod.dim == V.dim * W.dim);
  CHECK(stable_invariants(E.mod).dim == stable_hom(V, W).dim);
  CHECK(jordan_type(E.mod) == jordan_type(hom_module(V, W)));
}

TEST_CASE("free-module adjunction: Hom_A(A(x)V, N) is Hom_k(V, N)") {
  auto A = make_truncated_poly_pdg(3);
  Rng rng(13);
  HModule V = random_module(A->H, rng, 2);
  BModP AV = free_bmodule(A, V);
  BModP N = random_free_bmodule(A, rng);
  EnrichedHom E = enriched_hom(AV, N);
  HModule plain = hom_module(V, N->restrict_h());
  CHECK(E.mod.dim == plain.dim);
  CHECK(stable_invariants(E.mod).dim == stable_invariants(plain).dim);
  CHECK(jordan_type(E.mod) == jordan_type(plain));
}

TEST_CASE("chain maps catalog values") {
  auto A = make_truncated_poly_pdg(3);
  BModP R = regular_bmodule(A);
  auto cm = chain_maps(R, R);
  CHECK(cm.size() == 1);  // only scalars commute with the differential
  // identity is always a chain map
  bool has_id = false;
  for (auto &f : cm)
    if (!f.at(0, 0).is_zero()) has_id = true;
  CHECK(has_id);
  // A = k, M = N = H: dim Z(End(H)) = dim H
  auto H = make_pdg(3);
  auto K = make_trivial_field_algebra(H);
  BModP HH = bmodule_from_hmodule(K, regular_module(H));
  CHECK(chain_maps(HH, HH).size() == (size_t)H->dim);
}

TEST_CASE("homotopy hom of a contractible algebra vanishes") {
  auto A = make_truncated_poly_pdg(3);
  BModP R = regular_bmodule(A);
  CHECK(homotopy_hom(R, R).dim == 0);
  Rng rng(17);
  BModP Fm = random_free_bmodule(A, rng);
  CHECK(homotopy_hom(Fm, Fm).dim == 0);
}

TEST_CASE("null homotopy witnesses and the factorization through lambda") {
  for (auto A : {make_truncated_poly_pdg(3), make_dg_square_zero()}) {
    Rng rng(19);
    BModP M = random_free_bmodule(A, rng);
    BModP N = random_free_bmodule(A, rng);
    HModule Mh = M->restrict_h(), Nh = N->restrict_h();
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int t = 0; t < 3; ++t) {
      // f = Lambda . g for a random A-linear g is B-linear and null-homotopic;
      // pick g homogeneous with deg g + deg Lambda even so that f commutes
      // plainly in the super case
      EnrichedHom E = enriched_hom(M, N);
      if (E.mod.dim == 0) continue;
      Mat gc(A->H->F, E.mod.dim, 1);
      for (long i = 0; i < E.mod.dim; ++i)
        if ((E.mod.degree[i] + A->H->integral_degree) % 2 == 0)
          gc.at(i, 0) = A->H->F->from_int(coeff(rng));
      Mat g = hom_from_coords(E, gc);
      Mat f = hom_act(Mh, Nh, A->H->integral, g);
      BMap bf{M, N, f};
      CHECK(is_b_linear(bf));
      auto w = null_homotopy_witness(bf);
      REQUIRE(w);
      CHECK(hom_act(Mh, Nh, A->H->integral, *w) == f);
      // Lemma-style factorization f = g~ . lambda_M
      BMap gt = extend_to_free(bf, *w);
      CHECK(is_b_linear(gt));
      BMap lam = lambda_embed(M);
      CHECK(gt.m * lam.m == f);
    }
  }
}

TEST_CASE("zero map has the zero witness") {
  auto A = make_truncated_poly_pdg(3);
  BModP R = regular_bmodule(A);
  BMap z{R, R, Mat(A->H->F, R->dim, R->dim)};
  auto w = null_homotopy_witness(z);
  REQUIRE(w);
  CHECK(w->is_zero());
}

TEST_CASE("lambda embed properties") {
  auto A = make_truncated_poly_pdg(3);
  BModP R = regular_bmodule(A);
  BMap lam = lambda_embed(R);
  CHECK(lam.dst->dim == R->dim * A->H->dim);
  CHECK(rank_of(lam.m) == R->dim);
  CHECK(is_b_linear(lam));
  // composing with Id (x) eps gives eps(Lambda) Id = 0
  const FieldPtr &F = A->H->F;
  Mat ideps(F, R->dim, lam.dst->dim);
  for (long m = 0; m < R->dim; ++m)
    for (long h = 0; h < A->H->dim; ++h) ideps.at(m, m * A->H->dim + h) = A->H->counit.at(0, h);
  CHECK((ideps * lam.m).is_zero());
}

TEST_CASE("cone dimension bookkeeping and identity cone") {
  for (auto A : {make_truncated_poly_pdg(3), make_dg_square_zero()}) {
    BModP R = regular_bmodule(A);
    BMap id{R, R, Mat::identity(A->H->F, R->dim)};
    ConeResult c = cone(id);
    CHECK(c.cone->dim == R->dim * (A->H->dim - 1) + R->dim);
    CHECK(is_stably_zero(c.cone->restrict_h()));
  }
}

TEST_CASE("cone of the zero map is TX (+) Y") {
  auto A = make_truncated_poly_pdg(3);
  Rng rng(23);
  BModP X = random_free_bmodule(A, rng);
  BModP Y = random_free_bmodule(A, rng);
  BMap z{X, Y, Mat(A->H->F, Y->dim, X->dim)};
  ConeResult c = cone(z);
  // the cone carries the natural quotient grading on the X (x) H/kLambda
  // part (the +1 shift lives in the degree of w), so compare against the
  // unshifted factor
  HModule factor = shift_factor(A->H, +1);
  for (auto &d : factor.degree) d -= 1;
  HModule TXnat = tensor(X->restrict_h(), factor);
  auto jt = jordan_type(c.cone->restrict_h());
  auto expect = jordan_type(direct_sum(TXnat, Y->restrict_h()));
  CHECK(jt == expect);
}

TEST_CASE("shift of B-modules restricts to the module shift") {
  for (auto A : {make_truncated_poly_pdg(3), make_dg_square_zero(), make_truncated_poly_taft(2, 3)}) {
    Rng rng(29);
    BModP M = random_free_bmodule(A, rng);
    BModP T = shift_bmodule(M, +1);
    HModule expected = shift(M->restrict_h(), +1);
    CHECK(T->restrict_h().action == expected.action);
    CHECK(T->restrict_h().degree == expected.degree);
    CHECK(T->dim == M->dim * (A->H->dim - 1));
    CHECK(verify_bmodule(*T).empty());
    BModP Tm = shift_bmodule(M, -1);
    CHECK(verify_bmodule(*Tm).empty());
  }
}

TEST_CASE("quasi-isomorphism oracle") {
  auto A = make_truncated_poly_pdg(3);
  BModP R = regular_bmodule(A);
  BMap id{R, R, Mat::identity(A->H->F, R->dim)};
  CHECK(quasi_iso(id).yes);
  // the augmentation A -> 0 is a quasi-isomorphism since A is acyclic
  auto zero = std::make_shared<BModule>();
  zero->A = A;
  zero->dim = 0;
  zero->a_action.assign(A->dim, Mat(A->H->F, 0, 0));
  zero->h_action.assign(A->H->dim, Mat(A->H->F, 0, 0));
  BMap aug{R, zero, Mat(A->H->F, 0, R->dim)};
  CHECK(quasi_iso(aug).yes);
  // 0 -> k0 is not a quasi-isomorphism over p_dg
  auto H = A->H;
  auto K = make_trivial_field_algebra(H);
  BModP k0 = bmodule_from_hmodule(K, trivial_module(H));
  auto zeroK = std::make_shared<BModule>();
  zeroK->A = K;
  zeroK->dim = 0;
  zeroK->a_action.assign(1, Mat(H->F, 0, 0));
  zeroK->h_action.assign(H->dim, Mat(H->F, 0, 0));
  BMap z{std::const_pointer_cast<const BModule>(zeroK), k0, Mat(H->F, 1, 0)};
  CHECK_FALSE(quasi_iso(z).yes);
}

TEST_CASE("contractibility certificates") {
  // d/dx on F_p[x]/(x^p): Lambda . (-x^{p-1}) = 1 by Wilson's theorem
  for (long p : {3L, 5L}) {
    auto A = make_truncated_poly_pdg(p);
    auto x = contractible_certificate(*A);
    REQUIRE(x);
    Mat expect(A->H->F, p, 1);
    expect.at(p - 1, 0) = -A->H->F->one();
    CHECK(*x == expect);
  }
  // trivial action: no certificate when eps(Lambda) = 0
  CHECK_FALSE(contractible_certificate(*make_path_a2(make_pdg(3))));
  // semisimple: A = k over QZ/2, x = 1/2
  auto G = make_group_algebra(2);
  auto K = make_trivial_field_algebra(G);
  auto c = contractible_certificate(*K);
  REQUIRE(c);
  CHECK(c->at(0, 0) == G->F->from_mpq(mpq_class(1, 2)));
}

TEST_CASE("contractible algebra: homotopy hom vanishes for catalog modules") {
  auto A = make_truncated_poly_pdg(3);
  REQUIRE(contractible_certificate(*A));
  Rng rng(31);
  for (int t = 0; t < 3; ++t) {
    BModP M = random_free_bmodule(A, rng);
    CHECK(homotopy_hom(M, M).dim == 0);
  }
  BModP R = regular_bmodule(A);
  BModP TR = shift_bmodule(R, +1);
  CHECK(homotopy_hom(TR, TR).dim == 0);
}

TEST_CASE("lift_section: trivial and perturbed sections") {
  for (auto A : {make_truncated_poly_pdg(2), make_dg_square_zero()}) {
    Rng rng(37);
    HModule V = random_module(A->H, rng, 1);
    BModP Z = free_bmodule(A, V);
    BModP ZH = tensor_with_hmodule(Z, regular_module(A->H));
    const FieldPtr &F = A->H->F;
    // beta = Id, gamma0 = Id
    BMap beta{ZH, ZH, Mat::identity(F, ZH->dim)};
    BMap gamma = lift_section(beta, Z, Mat::identity(F, ZH->dim));
    CHECK(gamma.m == Mat::identity(F, ZH->dim));
    // C = (Z (x) H) (+) K, beta = projection, gamma0 = inclusion
    BModP K = regular_bmodule(A);
    BModP C = direct_sum_b(ZH, K);
    Mat proj(F, ZH->dim, C->dim);
    for (long i = 0; i < ZH->dim; ++i) proj.at(i, i) = F->one();
    BMap beta2{C, ZH, proj};
    Mat incl(F, C->dim, ZH->dim);
    for (long i = 0; i < ZH->dim; ++i) incl.at(i, i) = F->one();
    BMap gamma2 = lift_section(beta2, Z, incl);
    CHECK((beta2.m * gamma2.m) == Mat::identity(F, ZH->dim));
    CHECK(is_b_linear(gamma2));
  }
}

TEST_CASE("lift_section on a randomized A-linear section") {
  auto A = make_truncated_poly_pdg(2);
  Rng rng(41);
  HModule V = random_module(A->H, rng, 1);
  BModP Z = free_bmodule(A, V);
  BModP ZH = tensor_with_hmodule(Z, regular_module(A->H));
  BModP K = regular_bmodule(A);
  BModP C = direct_sum_b(ZH, K);
  const FieldPtr &F = A->H->F;
  Mat proj(F, ZH->dim, C->dim);
  for (long i = 0; i < ZH->dim; ++i) proj.at(i, i) = F->one();
  BMap beta{C, ZH, proj};
  // gamma0 = inclusion + (an A-linear map into K) : still a section of beta
  EnrichedHom E = enriched_hom(ZH, K);
  Mat pert(F, K->dim, ZH->dim);
  if (E.mod.dim > 0) {
    std::uniform_int_distribution<long> coeff(-1, 1);
    Mat gc(F, E.mod.dim, 1);
    for (long i = 0; i < E.mod.dim; ++i) gc.at(i, 0) = F->from_int(coeff(rng));
    pert = hom_from_coords(E, gc);
  }
  Mat gamma0(F, C->dim, ZH->dim);
  for (long i = 0; i < ZH->dim; ++i) gamma0.at(i, i) = F->one();
  for (long r = 0; r < K->dim; ++r)
    for (long c = 0; c < ZH->dim; ++c) gamma0.at(ZH->dim + r, c) = pert.at(r, c);
  BMap gamma = lift_section(beta, Z, gamma0);
  CHECK(is_b_linear(gamma));
  CHECK((beta.m * gamma.m) == Mat::identity(F, ZH->dim));
}

TEST_CASE("triangle from the defining SES of the shift") {
  auto H = make_pdg(3);
  auto K = make_trivial_field_algebra(H);
  const FieldPtr &F = H->F;
  BModP k0 = bmodule_from_hmodule(K, trivial_module(H));
  BModP Hreg = bmodule_from_hmodule(K, regular_module(H));
  BModP Tk = bmodule_from_hmodule(K, shift(trivial_module(H), +1));
  // u : k0 -> H, 1 -> Lambda; v : H -> T(k0) the quotient projection
  BMap u{k0, Hreg, H->integral};
  const ShiftData &sd = H->shift_data();
  BMap v{Hreg, Tk, sd.quot_proj};
  TriangleData t = triangle_from_ses(u, v);
  CHECK(t.a_split);
  REQUIRE(t.cone_to_z);
  CHECK(quasi_iso(*t.cone_to_z).yes);
}

TEST_CASE("split SES has a null-homotopic connecting map") {
  auto A = make_truncated_poly_pdg(3);
  Rng rng(43);
  BModP X = random_free_bmodule(A, rng, 1);
  BModP Z = random_free_bmodule(A, rng, 1);
  BModP Y = direct_sum_b(X, Z);
  const FieldPtr &F = A->H->F;
  Mat um(F, Y->dim, X->dim), vm(F, Z->dim, Y->dim);
  for (long i = 0; i < X->dim; ++i) um.at(i, i) = F->one();
  for (long i = 0; i < Z->dim; ++i) vm.at(i, X->dim + i) = F->one();
  BMap u{X, Y, um}, v{Y, Z, vm};
  TriangleData t = triangle_from_ses(u, v);
  // connecting stable class vanishes: w itself is null-homotopic
  auto w = null_homotopy_witness(t.w);
  CHECK(w);
}

TEST_CASE("non-split detection") {
  // 0 -> k0 -> H -> T(k0) -> 0 over A = F_3[x]/x^3 would need an A-structure;
  // instead check a plainly non-exact input is rejected
  auto A = make_truncated_poly_pdg(3);
  BModP R = regular_bmodule(A);
  BMap id{R, R, Mat::identity(A->H->F, R->dim)};
  CHECK_THROWS_AS(triangle_from_ses(id, id), MathError);
}
