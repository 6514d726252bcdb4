#ifndef HOPFO_HOPF_HPP
#define HOPFO_HOPF_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace hopfo {

enum class BuiltinHopf { None, GroupAlgebra, Exterior, PDG, Taft };

struct HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Data cached by the module layer: the concrete models of H/(k*Lambda) and
// ker(eps) used by the shift functors, plus the degree offset that makes the
// two shifts mutually inverse on graded modules.
struct ShiftData {
  // quotient H/(k*Lambda): representatives are standard basis vectors of H
  std::vector<long> quot_rep_cols;       // dim-1 chosen columns
  Mat quot_proj;                          // (dim-1) x dim projection along Lambda
  std::vector<Mat> quot_action;           // per Hopf basis element
  std::vector<long> quot_degree;          // natural degrees, before shift
  long quot_degree_offset = 1;            // T adds +1
  // ker(eps)
  Mat ker_basis;                          // dim x (dim-1)
  std::vector<Mat> ker_action;
  std::vector<long> ker_degree;           // natural degrees
  long ker_degree_offset = 0;             // computed so that T T^{-1} = id
};

// Finite-dimensional (graded, super) Hopf algebra given by structure
// constants. Maps act on column coordinate vectors; mult has column (i*d+j) =
// coordinates of e_i e_j, comult has column i = coordinates of Delta(e_i)
// with tensor index (j,k) -> j*d+k.
struct HopfAlgebra : public std::enable_shared_from_this<HopfAlgebra> {
  FieldPtr F;
  long dim = 0;
  std::vector<std::string> labels;
  Mat mult;      // dim x dim^2
  Mat unit;      // dim x 1
  Mat comult;    // dim^2 x dim
  Mat counit;    // 1 x dim
  Mat antipode;  // dim x dim
  std::vector<long> degree;
  long grading_modulus = 0;
  bool super_sign = false;
  Mat integral;  // dim x 1, normalized: first nonzero coordinate = 1

  // caches, filled by finalize()
  Mat antipode_inv;
  bool cocommutative = false;
  long integral_degree = 0;

  // builtin catalog metadata
  BuiltinHopf builtin = BuiltinHopf::None;
  long builtin_param = 0;
  Scalar integral_paper_scale;  // paper form = scale * normalized integral
  Mat nil_generator;            // dim x 1, zero cols if none
  long nil_order = 0;           // N with gen^N = 0, 0 when not applicable

  // --- basic arithmetic on coordinate vectors ---
  Mat mul_vec(const Mat &a, const Mat &b) const;   // product of two elements
  Mat left_mult(const Mat &h) const;               // operator x -> h*x
  Scalar counit_of(const Mat &h) const;
  // sparse Sweedler terms of Delta(e_i): (j, k, coeff)
  struct SweedlerTerm {
    long j, k;
    Scalar c;
  };
  const std::vector<std::vector<SweedlerTerm>> &sweedler() const { return sweedler_; }

  long parity(long basis_index) const {
    return super_sign ? ((degree[basis_index] % 2) + 2) % 2 : 0;
  }
  long deg_reduce(long d) const {
    return grading_modulus > 0 ? ((d % grading_modulus) + grading_modulus) % grading_modulus : d;
  }
  bool deg_eq(long a, long b) const { return deg_reduce(a - b) == 0; }

  void finalize();  // computes caches; throws on singular antipode

  const ShiftData &shift_data() const;

  HopfAlgebra() = default;
  HopfAlgebra(const HopfAlgebra &o);  // copies the data, drops lazy caches
  HopfAlgebra &operator=(const HopfAlgebra &o) = delete;

 private:
  std::vector<std::vector<SweedlerTerm>> sweedler_;
  mutable std::once_flag shift_once_;
  mutable std::unique_ptr<ShiftData> shift_;
  friend ShiftData build_shift_data(const HopfAlgebra &H);
};

// report of failed axioms; empty means the data is a Hopf algebra
std::vector<std::string> verify_hopf(const HopfAlgebra &H);

bool structurally_equal(const HopfAlgebra &a, const HopfAlgebra &b);

// Solves h*L = eps(h)*L over the basis; requires a 1-dimensional solution
// space and normalizes the first nonzero coordinate to 1.
Mat left_integral(const HopfAlgebra &H);

struct BuiltinHopfSpec {
  BuiltinHopf kind = BuiltinHopf::None;
  long param = 0;             // group order / generator count / p / n
  std::optional<FieldSpec> field;  // defaults per kind
};

HopfPtr make_builtin(const BuiltinHopfSpec &spec);
HopfPtr make_group_algebra(long n, FieldPtr F = nullptr);
HopfPtr make_exterior(long generators, FieldPtr F = nullptr);
HopfPtr make_pdg(long p);
HopfPtr make_taft(long n);

// parses e.g. "p_dg:3", "taft:3", "group:2", "exterior:2"
BuiltinHopfSpec parse_builtin_hopf(const std::string &text);

}  // namespace hopfo

#endif
