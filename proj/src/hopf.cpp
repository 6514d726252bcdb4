#include "hopf.hpp"

#include <sstream>

namespace hopfo {

HopfAlgebra::HopfAlgebra(const HopfAlgebra &o)
    : F(o.F),
      dim(o.dim),
      labels(o.labels),
      mult(o.mult),
      unit(o.unit),
      comult(o.comult),
      counit(o.counit),
      antipode(o.antipode),
      degree(o.degree),
      grading_modulus(o.grading_modulus),
      super_sign(o.super_sign),
      integral(o.integral),
      antipode_inv(o.antipode_inv),
      cocommutative(o.cocommutative),
      integral_degree(o.integral_degree),
      builtin(o.builtin),
      builtin_param(o.builtin_param),
      integral_paper_scale(o.integral_paper_scale),
      nil_generator(o.nil_generator),
      nil_order(o.nil_order),
      sweedler_(o.sweedler_) {}

Mat HopfAlgebra::mul_vec(const Mat &a, const Mat &b) const {
  Mat r(F, dim, 1);
  for (long i = 0; i < dim; ++i) {
    if (a.at(i, 0).is_zero()) continue;
    for (long j = 0; j < dim; ++j) {
      if (b.at(j, 0).is_zero()) continue;
      Scalar c = a.at(i, 0) * b.at(j, 0);
      for (long k = 0; k < dim; ++k) {
        const Scalar &m = mult.at(k, i * dim + j);
        if (!m.is_zero()) r.at(k, 0) += c * m;
      }
    }
  }
  return r;
}

Mat HopfAlgebra::left_mult(const Mat &h) const {
  Mat r(F, dim, dim);
  for (long j = 0; j < dim; ++j) {
    Mat ej(F, dim, 1);
    ej.at(j, 0) = F->one();
    Mat col = mul_vec(h, ej);
    for (long k = 0; k < dim; ++k) r.at(k, j) = col.at(k, 0);
  }
  return r;
}

Scalar HopfAlgebra::counit_of(const Mat &h) const {
  Scalar s = F->zero();
  for (long i = 0; i < dim; ++i) s += counit.at(0, i) * h.at(i, 0);
  return s;
}

void HopfAlgebra::finalize() {
  auto inv = inverse(antipode);
  if (!inv) throw MathError("antipode is not invertible");
  antipode_inv = *inv;
  sweedler_.assign(dim, {});
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j)
      for (long k = 0; k < dim; ++k) {
        const Scalar &c = comult.at(j * dim + k, i);
        if (!c.is_zero()) sweedler_[i].push_back({j, k, c});
      }
  // cocommutativity: Delta = (signed swap) . Delta
  cocommutative = true;
  for (long i = 0; i < dim && cocommutative; ++i) {
    Mat swapped(F, dim * dim, 1);
    for (const auto &t : sweedler_[i]) {
      Scalar c = t.c;
      if ((parity(t.j) & parity(t.k)) != 0) c = -c;
      swapped.at(t.k * dim + t.j, 0) += c;
    }
    for (long x = 0; x < dim * dim; ++x)
      if (swapped.at(x, 0) != comult.at(x, i)) {
        cocommutative = false;
        break;
      }
  }
  if (integral.rows() == dim && integral.cols() == 1 && !integral.is_zero()) {
    integral_degree = 0;
    for (long i = 0; i < dim; ++i)
      if (!integral.at(i, 0).is_zero()) {
        integral_degree = deg_reduce(degree[i]);
        break;
      }
  }
}

std::vector<std::string> verify_hopf(const HopfAlgebra &H) {
  std::vector<std::string> bad;
  const FieldPtr &F = H.F;
  long d = H.dim;
  auto basis_vec = [&](long i) {
    Mat v(F, d, 1);
    v.at(i, 0) = F->one();
    return v;
  };

  // associativity and unit
  bool assoc = true, unital = true;
  for (long i = 0; i < d && assoc; ++i)
    for (long j = 0; j < d && assoc; ++j) {
      Mat eij = H.mul_vec(basis_vec(i), basis_vec(j));
      for (long k = 0; k < d; ++k) {
        Mat lhs = H.mul_vec(eij, basis_vec(k));
        Mat rhs = H.mul_vec(basis_vec(i), H.mul_vec(basis_vec(j), basis_vec(k)));
        if (lhs != rhs) {
          assoc = false;
          break;
        }
      }
    }
  if (!assoc) bad.push_back("associativity");
  for (long i = 0; i < d; ++i) {
    Mat e = basis_vec(i);
    if (H.mul_vec(H.unit, e) != e || H.mul_vec(e, H.unit) != e) {
      unital = false;
      break;
    }
  }
  if (!unital) bad.push_back("unit");

  // coassociativity: (Delta x Id) Delta = (Id x Delta) Delta, computed sparsely
  bool coassoc = true;
  for (long i = 0; i < d && coassoc; ++i) {
    Mat lhs(F, d * d * d, 1), rhs(F, d * d * d, 1);
    for (const auto &t : H.sweedler()[i]) {
      for (const auto &u : H.sweedler()[t.j]) lhs.at((u.j * d + u.k) * d + t.k, 0) += t.c * u.c;
      for (const auto &u : H.sweedler()[t.k]) rhs.at((t.j * d + u.j) * d + u.k, 0) += t.c * u.c;
    }
    if (lhs != rhs) coassoc = false;
  }
  if (!coassoc) bad.push_back("coassociativity");

  // counit axiom
  bool counit_ok = true;
  for (long i = 0; i < d && counit_ok; ++i) {
    Mat left(F, d, 1), right(F, d, 1);
    for (const auto &t : H.sweedler()[i]) {
      left.at(t.k, 0) += t.c * H.counit.at(0, t.j);
      right.at(t.j, 0) += t.c * H.counit.at(0, t.k);
    }
    if (left != basis_vec(i) || right != basis_vec(i)) counit_ok = false;
  }
  if (!counit_ok) bad.push_back("counit");

  // Delta is an algebra map (Koszul sign in the product of H (x) H when super)
  bool comult_alg = true;
  {
    Mat d1(F, d * d, 1);
    // Delta(1)
    for (long i = 0; i < d; ++i) {
      if (H.unit.at(i, 0).is_zero()) continue;
      for (const auto &t : H.sweedler()[i]) d1.at(t.j * d + t.k, 0) += H.unit.at(i, 0) * t.c;
    }
    Mat one_one(F, d * d, 1);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) {
        Scalar c = H.unit.at(i, 0) * H.unit.at(j, 0);
        if (!c.is_zero()) one_one.at(i * d + j, 0) += c;
      }
    if (d1 != one_one) comult_alg = false;
  }
  for (long a = 0; a < d && comult_alg; ++a)
    for (long b = 0; b < d && comult_alg; ++b) {
      Mat prod = H.mul_vec(basis_vec(a), basis_vec(b));
      Mat lhs(F, d * d, 1);
      for (long i = 0; i < d; ++i) {
        if (prod.at(i, 0).is_zero()) continue;
        for (const auto &t : H.sweedler()[i]) lhs.at(t.j * d + t.k, 0) += prod.at(i, 0) * t.c;
      }
      Mat rhs(F, d * d, 1);
      for (const auto &s : H.sweedler()[a])
        for (const auto &t : H.sweedler()[b]) {
          Scalar c = s.c * t.c;
          if ((H.parity(s.k) & H.parity(t.j)) != 0) c = -c;
          Mat left = H.mul_vec(basis_vec(s.j), basis_vec(t.j));
          Mat right = H.mul_vec(basis_vec(s.k), basis_vec(t.k));
          for (long x = 0; x < d; ++x) {
            if (left.at(x, 0).is_zero()) continue;
            for (long y = 0; y < d; ++y) {
              if (right.at(y, 0).is_zero()) continue;
              rhs.at(x * d + y, 0) += c * left.at(x, 0) * right.at(y, 0);
            }
          }
        }
      if (lhs != rhs) comult_alg = false;
    }
  if (!comult_alg) bad.push_back("comult algebra map");

  bool counit_alg = true;
  for (long a = 0; a < d && counit_alg; ++a)
    for (long b = 0; b < d; ++b) {
      Scalar lhs = H.counit_of(H.mul_vec(basis_vec(a), basis_vec(b)));
      if (lhs != H.counit.at(0, a) * H.counit.at(0, b)) {
        counit_alg = false;
        break;
      }
    }
  if (!H.counit_of(H.unit).is_one()) counit_alg = false;
  if (!counit_alg) bad.push_back("counit algebra map");

  // antipode axiom: m(S x Id)Delta = unit . eps = m(Id x S)Delta
  bool antipode_ok = true;
  for (long i = 0; i < d && antipode_ok; ++i) {
    Mat left(F, d, 1), right(F, d, 1);
    for (const auto &t : H.sweedler()[i]) {
      left = left + H.mul_vec(H.antipode.col(t.j), basis_vec(t.k)).scaled(t.c);
      right = right + H.mul_vec(basis_vec(t.j), H.antipode.col(t.k)).scaled(t.c);
    }
    Mat expect = H.unit.scaled(H.counit.at(0, i));
    if (left != expect || right != expect) antipode_ok = false;
  }
  if (!antipode_ok) bad.push_back("antipode");

  // homogeneity of all structure tensors
  bool homog = true;
  for (long i = 0; i < d && homog; ++i)
    for (long j = 0; j < d && homog; ++j)
      for (long k = 0; k < d; ++k)
        if (!H.mult.at(k, i * d + j).is_zero() &&
            !H.deg_eq(H.degree[i] + H.degree[j], H.degree[k])) {
          homog = false;
          break;
        }
  for (long i = 0; i < d && homog; ++i)
    for (const auto &t : H.sweedler()[i])
      if (!H.deg_eq(H.degree[t.j] + H.degree[t.k], H.degree[i])) {
        homog = false;
        break;
      }
  for (long i = 0; i < d && homog; ++i) {
    if (!H.counit.at(0, i).is_zero() && !H.deg_eq(H.degree[i], 0)) homog = false;
    if (!H.unit.at(i, 0).is_zero() && !H.deg_eq(H.degree[i], 0)) homog = false;
    for (long k = 0; k < d; ++k)
      if (!H.antipode.at(k, i).is_zero() && !H.deg_eq(H.degree[k], H.degree[i])) homog = false;
  }
  if (!homog) bad.push_back("homogeneity");

  // cached integral, if present
  if (H.integral.rows() == d && !H.integral.is_zero()) {
    bool ok = true;
    for (long i = 0; i < d; ++i) {
      Mat lhs = H.mul_vec(
          [&] {
            Mat v(F, d, 1);
            v.at(i, 0) = F->one();
            return v;
          }(),
          H.integral);
      if (lhs != H.integral.scaled(H.counit.at(0, i))) {
        ok = false;
        break;
      }
    }
    if (!ok) bad.push_back("integral");
  }
  return bad;
}

bool structurally_equal(const HopfAlgebra &a, const HopfAlgebra &b) {
  if (&a == &b) return true;
  return a.F->same(*b.F) && a.dim == b.dim && a.mult == b.mult && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode && a.unit == b.unit &&
         a.degree == b.degree && a.grading_modulus == b.grading_modulus &&
         a.super_sign == b.super_sign;
}

Mat left_integral(const HopfAlgebra &H) {
  const FieldPtr &F = H.F;
  long d = H.dim;
  Mat sys(F, 0, d);
  for (long i = 0; i < d; ++i) {
    Mat ei(F, d, 1);
    ei.at(i, 0) = F->one();
    Mat block = H.left_mult(ei) - Mat::identity(F, d).scaled(H.counit.at(0, i));
    sys = sys.rows() == 0 ? block : sys.vstack(block);
  }
  Mat ker = nullspace(sys);
  if (ker.cols() != 1) throw MathError("left integral space has dimension " + std::to_string(ker.cols()));
  // normalize first nonzero coordinate to 1
  for (long i = 0; i < d; ++i)
    if (!ker.at(i, 0).is_zero()) return ker.scaled(ker.at(i, 0).inv());
  throw MathError("zero integral");
}

namespace {

HopfPtr finish(std::shared_ptr<HopfAlgebra> H) {
  H->finalize();
  auto bad = verify_hopf(*H);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "builtin fails Hopf axioms:";
    for (const auto &b : bad) os << " " << b;
    throw MathError(os.str());
  }
  H->integral = left_integral(*H);
  H->finalize();
  return H;
}

}  // namespace

HopfPtr make_group_algebra(long n, FieldPtr F) {
  if (n < 1) throw MathError("group order must be >= 1");
  if (!F) F = Field::rationals();
  auto H = std::make_shared<HopfAlgebra>();
  H->F = F;
  H->dim = n;
  H->mult = Mat(F, n, n * n);
  H->unit = Mat(F, n, 1);
  H->comult = Mat(F, n * n, n);
  H->counit = Mat(F, 1, n);
  H->antipode = Mat(F, n, n);
  H->degree.assign(n, 0);
  for (long i = 0; i < n; ++i) {
    H->labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (long j = 0; j < n; ++j) H->mult.at((i + j) % n, i * n + j) = F->one();
    H->comult.at(i * n + i, i) = F->one();
    H->counit.at(0, i) = F->one();
    H->antipode.at((n - i) % n, i) = F->one();
  }
  H->unit.at(0, 0) = F->one();
  H->builtin = BuiltinHopf::GroupAlgebra;
  H->builtin_param = n;
  H->integral_paper_scale = F->one();
  H->nil_generator = Mat(F, n, 1);
  H->nil_order = 0;
  return finish(H);
}

HopfPtr make_exterior(long gens, FieldPtr F) {
  if (gens < 1) throw MathError("exterior algebra needs >= 1 generator");
  if (!F) F = Field::rationals();
  long d = 1L << gens;
  auto H = std::make_shared<HopfAlgebra>();
  H->F = F;
  H->dim = d;
  H->mult = Mat(F, d, d * d);
  H->unit = Mat(F, d, 1);
  H->comult = Mat(F, d * d, d);
  H->counit = Mat(F, 1, d);
  H->antipode = Mat(F, d, d);
  H->degree.assign(d, 0);
  H->super_sign = true;
  auto popcount = [](long m) {
    long c = 0;
    while (m) {
      c += m & 1;
      m >>= 1;
    }
    return c;
  };
  for (long s = 0; s < d; ++s) {
    H->degree[s] = popcount(s);
    std::string lab;
    if (s == 0) lab = "1";
    for (long i = 0; i < gens; ++i)
      if (s & (1L << i)) lab += (lab.empty() ? "v" : "^v") + std::to_string(i);
    H->labels.push_back(lab);
  }
  // wedge product with shuffle signs
  for (long s = 0; s < d; ++s)
    for (long t = 0; t < d; ++t) {
      if (s & t) continue;  // repeated generator
      long inversions = 0;
      for (long i = 0; i < gens; ++i)
        if (t & (1L << i))
          for (long j = i + 1; j < gens; ++j)
            if (s & (1L << j)) ++inversions;
      Scalar c = (inversions % 2 == 0) ? F->one() : -F->one();
      H->mult.at(s | t, s * d + t) = c;
    }
  H->unit.at(0, 0) = F->one();
  H->counit.at(0, 0) = F->one();
  // Delta(e_S) = sum over splittings S = T | U with the shuffle sign
  for (long s = 0; s < d; ++s) {
    for (long t = s;; t = (t - 1) & s) {  // t runs over subsets of s
      long u = s & ~t;
      long inversions = 0;
      for (long i = 0; i < gens; ++i)
        if (t & (1L << i))
          for (long j = 0; j < i; ++j)
            if (u & (1L << j)) ++inversions;
      Scalar c = (inversions % 2 == 0) ? F->one() : -F->one();
      H->comult.at(t * d + u, s) += c;
      if (t == 0) break;
    }
  }
  // antipode: S(v_i) = -v_i extended as a super anti-homomorphism,
  // computed recursively through the multiplication
  {
    std::vector<Mat> svals(d, Mat(F, d, 1));
    svals[0].at(0, 0) = F->one();
    for (long s = 1; s < d; ++s) {
      long i = 0;
      while (!(s & (1L << i))) ++i;
      long rest = s & ~(1L << i);
      if (rest == 0) {
        svals[s].at(s, 0) = -F->one();
        continue;
      }
      // S(v_i e_rest) = (-1)^{1*|rest|} S(e_rest) S(v_i)
      Mat svi(F, d, 1);
      svi.at(1L << i, 0) = -F->one();
      Mat prod = H->mul_vec(svals[rest], svi);
      long sign = popcount(rest) % 2;
      svals[s] = sign ? -prod : prod;
    }
    for (long s = 0; s < d; ++s)
      for (long k = 0; k < d; ++k) H->antipode.at(k, s) = svals[s].at(k, 0);
  }
  H->builtin = BuiltinHopf::Exterior;
  H->builtin_param = gens;
  H->integral_paper_scale = F->one();
  H->nil_generator = Mat(F, d, 1);
  if (gens == 1) {
    H->nil_generator.at(1, 0) = F->one();
    H->nil_order = 2;
  }
  return finish(H);
}

HopfPtr make_pdg(long p) {
  FieldPtr F = Field::prime(p);
  auto H = std::make_shared<HopfAlgebra>();
  long d = p;
  H->F = F;
  H->dim = d;
  H->mult = Mat(F, d, d * d);
  H->unit = Mat(F, d, 1);
  H->comult = Mat(F, d * d, d);
  H->counit = Mat(F, 1, d);
  H->antipode = Mat(F, d, d);
  H->degree.resize(d);
  for (long i = 0; i < d; ++i) {
    H->degree[i] = i;
    H->labels.push_back(i == 0 ? "1" : (i == 1 ? "D" : "D^" + std::to_string(i)));
    for (long j = 0; j < d; ++j)
      if (i + j < d) H->mult.at(i + j, i * d + j) = F->one();
    // Delta(D^i) = sum_k C(i,k) D^k (x) D^{i-k}
    long binom = 1;
    for (long k = 0; k <= i; ++k) {
      H->comult.at(k * d + (i - k), i) = F->from_int(binom);
      binom = binom * (i - k) / (k + 1);
    }
    H->antipode.at(i, i) = (i % 2 == 0) ? F->one() : -F->one();
  }
  H->unit.at(0, 0) = F->one();
  H->counit.at(0, 0) = F->one();
  H->builtin = BuiltinHopf::PDG;
  H->builtin_param = p;
  H->integral_paper_scale = F->one();
  H->nil_generator = Mat(F, d, 1);
  H->nil_generator.at(1, 0) = F->one();
  H->nil_order = p;
  return finish(H);
}

HopfPtr make_taft(long n) {
  if (n < 2) throw MathError("taft algebra needs n >= 2");
  FieldPtr F = Field::cyclotomic(n);
  long d = n * n;
  auto idx = [n](long a, long b) { return a * n + b; };  // K^a d^b
  auto H = std::make_shared<HopfAlgebra>();
  H->F = F;
  H->dim = d;
  H->mult = Mat(F, d, d * d);
  H->unit = Mat(F, d, 1);
  H->comult = Mat(F, d * d, d);
  H->counit = Mat(F, 1, d);
  H->antipode = Mat(F, d, d);
  H->degree.resize(d);
  H->grading_modulus = n;
  Scalar zeta = F->zeta();
  std::vector<Scalar> zp(2 * n, F->one());
  for (long i = 1; i < 2 * n; ++i) zp[i] = zp[i - 1] * zeta;
  auto zpow = [&](long e) {
    long m = ((e % n) + n) % n;
    return zp[m];
  };
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      long i = idx(a, b);
      H->degree[i] = b;
      std::string lab = "1";
      if (a > 0 && b > 0)
        lab = "K^" + std::to_string(a) + "*d^" + std::to_string(b);
      else if (a > 0)
        lab = "K^" + std::to_string(a);
      else if (b > 0)
        lab = "d^" + std::to_string(b);
      H->labels.push_back(lab);
      H->counit.at(0, i) = (b == 0) ? F->one() : F->zero();
      // (K^a d^b)(K^c d^e) = zeta^{-bc} K^{a+c} d^{b+e}
      for (long c = 0; c < n; ++c)
        for (long e = 0; e < n; ++e)
          if (b + e < n) H->mult.at(idx((a + c) % n, b + e), i * d + idx(c, e)) = zpow(-b * c);
    }
  H->unit.at(0, 0) = F->one();
  // Delta and S generated from K and d through the algebra structure
  {
    long dd = d * d;
    auto hh_mul = [&](const Mat &x, const Mat &y) {
      // plain product on H (x) H (no super sign: Taft is not super)
      Mat r(F, dd, 1);
      for (long x1 = 0; x1 < d; ++x1)
        for (long x2 = 0; x2 < d; ++x2) {
          const Scalar &cx = x.at(x1 * d + x2, 0);
          if (cx.is_zero()) continue;
          for (long y1 = 0; y1 < d; ++y1)
            for (long y2 = 0; y2 < d; ++y2) {
              const Scalar &cy = y.at(y1 * d + y2, 0);
              if (cy.is_zero()) continue;
              Mat left(F, d, 1), right(F, d, 1);
              left.at(x1, 0) = F->one();
              right.at(y1, 0) = F->one();
              Mat p1 = H->mul_vec(left, right);
              Mat l2(F, d, 1), r2(F, d, 1);
              l2.at(x2, 0) = F->one();
              r2.at(y2, 0) = F->one();
              Mat p2 = H->mul_vec(l2, r2);
              Scalar c = cx * cy;
              for (long u = 0; u < d; ++u) {
                if (p1.at(u, 0).is_zero()) continue;
                for (long v = 0; v < d; ++v)
                  if (!p2.at(v, 0).is_zero())
                    r.at(u * d + v, 0) += c * p1.at(u, 0) * p2.at(v, 0);
              }
            }
        }
      return r;
    };
    Mat dK(F, dd, 1), dd_(F, dd, 1);
    dK.at(idx(1, 0) * d + idx(1, 0), 0) = F->one();                     // K (x) K
    dd_.at(idx(0, 1) * d + idx(0, 0), 0) = F->one();                    // d (x) 1
    dd_.at(idx(1, 0) * d + idx(0, 1), 0) = F->one();                    // K (x) d
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        Mat acc(F, dd, 1);
        acc.at(0, 0) = F->one();  // 1 (x) 1
        for (long t = 0; t < a; ++t) acc = hh_mul(acc, dK);
        for (long t = 0; t < b; ++t) acc = hh_mul(acc, dd_);
        for (long x = 0; x < dd; ++x) H->comult.at(x, idx(a, b)) = acc.at(x, 0);
      }
    // S(K) = K^{n-1}, S(d) = -K^{n-1} d; S(K^a d^b) = S(d)^b S(K)^a
    Mat sK(F, d, 1), sd(F, d, 1);
    sK.at(idx(n - 1, 0), 0) = F->one();
    sd.at(idx(n - 1, 1), 0) = -F->one();
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        Mat acc(F, d, 1);
        acc.at(0, 0) = F->one();
        for (long t = 0; t < b; ++t) acc = H->mul_vec(acc, sd);
        for (long t = 0; t < a; ++t) acc = H->mul_vec(acc, sK);
        for (long k = 0; k < d; ++k) H->antipode.at(k, idx(a, b)) = acc.at(k, 0);
      }
  }
  H->builtin = BuiltinHopf::Taft;
  H->builtin_param = n;
  H->integral_paper_scale = F->one() / F->from_int(n);
  H->nil_generator = Mat(F, d, 1);
  H->nil_generator.at(idx(0, 1), 0) = F->one();
  H->nil_order = n;
  return finish(H);
}

HopfPtr make_builtin(const BuiltinHopfSpec &spec) {
  FieldPtr F = spec.field ? Field::make(*spec.field) : nullptr;
  switch (spec.kind) {
    case BuiltinHopf::GroupAlgebra:
      return make_group_algebra(spec.param, F);
    case BuiltinHopf::Exterior:
      return make_exterior(spec.param, F);
    case BuiltinHopf::PDG:
      if (F && !(F->kind() == FieldKind::Prime && F->characteristic() == spec.param))
        throw MathError("p_dg requires the prime field F_p");
      return make_pdg(spec.param);
    case BuiltinHopf::Taft:
      if (F && !(F->kind() == FieldKind::Cyclotomic && F->spec().param == spec.param))
        throw MathError("taft requires the cyclotomic field Q[zeta_n]");
      return make_taft(spec.param);
    case BuiltinHopf::None:
      break;
  }
  throw MathError("unknown builtin Hopf algebra");
}

BuiltinHopfSpec parse_builtin_hopf(const std::string &text) {
  auto colon = text.find(':');
  std::string name = colon == std::string::npos ? text : text.substr(0, colon);
  long param = colon == std::string::npos ? 0 : std::stol(text.substr(colon + 1));
  BuiltinHopfSpec s;
  if (name == "p_dg" || name == "pdg")
    s.kind = BuiltinHopf::PDG;
  else if (name == "taft")
    s.kind = BuiltinHopf::Taft;
  else if (name == "group")
    s.kind = BuiltinHopf::GroupAlgebra;
  else if (name == "exterior")
    s.kind = BuiltinHopf::Exterior;
  else if (name == "dg")
    s.kind = BuiltinHopf::Exterior, param = 1;
  else
    throw MathError("unknown builtin hopf spec: " + text);
  s.param = param;
  return s;
}

}  // namespace hopfo
