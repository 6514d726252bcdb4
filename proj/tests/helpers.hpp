#ifndef HOPFO_TEST_HELPERS_HPP
#define HOPFO_TEST_HELPERS_HPP

#include <random>

#include "hmodule.hpp"

namespace hopfo::testhelp {

using Rng = std::mt19937_64;

// single-chain module of the given size and lowest degree, for Hopf kinds
// with one nilpotent generator (p_dg, taft, k[d]/d^2)
inline HModule block_module(const HopfPtr &H, long size, long lowdeg) {
  const FieldPtr &F = H->F;
  if (H->nil_order <= 0 || size < 1 || size > H->nil_order)
    throw MathError("block_module: unsupported");
  HModule M;
  M.H = H;
  M.dim = size;
  M.degree.resize(size);
  for (long i = 0; i < size; ++i) M.degree[i] = lowdeg + i;
  if (H->builtin == BuiltinHopf::Taft) {
    long n = H->builtin_param;
    Scalar zeta = F->zeta();
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        Mat op(F, size, size);
        for (long c = 0; c + b < size; ++c) {
          Scalar z = F->one();
          long e = ((a * (lowdeg + c + b)) % n + n) % n;
          for (long t = 0; t < e; ++t) z = z * zeta;
          op.at(c + b, c) = z;
        }
        M.action.push_back(op);
      }
    return M;
  }
  // p_dg(p) and k[d]/d^2: action of the i-th basis element is D^i resp. {1,v}
  Mat D(F, size, size);
  for (long c = 0; c + 1 < size; ++c) D.at(c + 1, c) = F->one();
  if (H->builtin == BuiltinHopf::PDG) {
    Mat P = Mat::identity(F, size);
    for (long i = 0; i < H->dim; ++i) {
      M.action.push_back(P);
      P = P * D;
    }
  } else {  // exterior(1)
    M.action.push_back(Mat::identity(F, size));
    M.action.push_back(D);
  }
  return M;
}

inline Mat random_degree_preserving_iso(const HModule &M, Rng &rng) {
  const HopfAlgebra &H = *M.H;
  const FieldPtr &F = H.F;
  Mat P = Mat::identity(F, M.dim);
  // random elementary row operations inside each degree class
  std::uniform_int_distribution<long> coeff(-1, 1);
  for (long d : degrees_present(H, M.degree)) {
    auto idx = indices_of_degree(H, M.degree, d);
    if (idx.size() < 2) continue;
    std::uniform_int_distribution<size_t> pick(0, idx.size() - 1);
    for (int step = 0; step < 4; ++step) {
      size_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      long c = coeff(rng);
      if (c == 0) continue;
      for (long j = 0; j < M.dim; ++j)
        P.at(idx[a], j) += F->from_int(c) * P.at(idx[b], j);
    }
  }
  return P;
}

inline HModule conjugate(const HModule &M, const Mat &P) {
  auto Pinv = inverse(P);
  if (!Pinv) throw MathError("conjugate: singular transform");
  HModule R = M;
  for (auto &a : R.action) a = P * a * *Pinv;
  return R;
}

// random valid module: a direct sum of catalog pieces twisted by a random
// degree-preserving change of basis
inline HModule random_module(const HopfPtr &H, Rng &rng, long max_pieces = 3) {
  std::uniform_int_distribution<long> npieces(1, max_pieces);
  std::uniform_int_distribution<long> degd(-1, 1);
  long n = npieces(rng);
  HModule acc;
  bool first = true;
  for (long i = 0; i < n; ++i) {
    HModule piece;
    if (H->nil_order > 0) {
      std::uniform_int_distribution<long> sz(1, H->nil_order);
      piece = block_module(H, sz(rng), degd(rng));
    } else if (H->builtin == BuiltinHopf::Exterior) {
      std::uniform_int_distribution<long> kind(0, 2);
      long k = kind(rng);
      if (k == 0)
        piece = trivial_module(H, degd(rng));
      else if (k == 1)
        piece = regular_module(H);
      else
        piece = shift(trivial_module(H, degd(rng)), +1);
    } else {
      // group algebra: sums of shifted regular pieces and trivial modules
      std::uniform_int_distribution<long> kind(0, 1);
      piece = kind(rng) == 0 ? trivial_module(H, 0) : regular_module(H);
    }
    acc = first ? piece : direct_sum(acc, piece);
    first = false;
  }
  return conjugate(acc, random_degree_preserving_iso(acc, rng));
}

}  // namespace hopfo::testhelp

#include "bmodule.hpp"

namespace hopfo::testhelp {

inline BModP random_free_bmodule(const AlgPtr &A, Rng &rng, long max_pieces = 2) {
  HModule V = random_module(A->H, rng, max_pieces);
  return free_bmodule(A, V);
}

// random B-linear map as a small integer combination of the chain-map basis
inline BMap random_bmap(const BModP &M, const BModP &N, Rng &rng) {
  auto basis = chain_maps(M, N);
  const FieldPtr &F = M->A->H->F;
  Mat m(F, N->dim, M->dim);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (const Mat &b : basis) m = m + b.scaled(F->from_int(coeff(rng)));
  return BMap{M, N, m};
}

}  // namespace hopfo::testhelp

#endif
