#ifndef HOPFO_MATRIX_HPP
#define HOPFO_MATRIX_HPP

#include <optional>
#include <vector>

#include "field.hpp"

namespace hopfo {

// Dense row-major matrix over one exact field. Matrices of linear maps act on
// column coordinate vectors: column c of the matrix is the image of basis
// vector c. Tensor indices follow kron: (i,j) -> i*dim_right + j.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, long rows, long cols)
      : fld_(std::move(f)), rows_(rows), cols_(cols), e_((size_t)(rows * cols), fld_->zero()) {}

  static Mat identity(const FieldPtr &f, long n);
  static Mat zero(const FieldPtr &f, long rows, long cols) { return Mat(f, rows, cols); }

  const FieldPtr &field() const { return fld_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Scalar &at(long r, long c) { return e_[(size_t)(r * cols_ + c)]; }
  const Scalar &at(long r, long c) const { return e_[(size_t)(r * cols_ + c)]; }

  bool is_zero() const;
  bool operator==(const Mat &o) const;
  bool operator!=(const Mat &o) const { return !(*this == o); }

  Mat operator+(const Mat &o) const;
  Mat operator-(const Mat &o) const;
  Mat operator*(const Mat &o) const;
  Mat operator-() const;
  Mat scaled(const Scalar &c) const;
  Mat transpose() const;

  Mat hstack(const Mat &o) const;
  Mat vstack(const Mat &o) const;
  Mat col(long c) const;
  Mat cols_at(const std::vector<long> &idx) const;
  Mat rows_at(const std::vector<long> &idx) const;
  Mat pow(long k) const;

  std::string str() const;

 private:
  FieldPtr fld_;
  long rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Mat reduced;
  std::vector<long> pivots;
  long rank = 0;
};

// Unique reduced row-echelon form (Gauss-Jordan with exact arithmetic).
RrefResult rref(const Mat &m);
long rank_of(const Mat &m);

// Kernel basis as columns; free variables get unit coordinates, in column order.
Mat nullspace(const Mat &m);

// One solution of a*x = b with all free variables set to zero, or nullopt.
std::optional<Mat> solve(const Mat &a, const Mat &b);
std::optional<Mat> inverse(const Mat &m);

// Kronecker product with index convention (i_a*rows_b + i_b).
Mat kron(const Mat &a, const Mat &b);

// Greedy column selection: indices of columns of m (scanned left to right)
// that are independent from the columns of `given` and from each other.
// Completes col(given) to a basis of the joint column space.
std::vector<long> complement_columns(const Mat &given, const Mat &m);

// Coordinates of each column of v in the basis formed by the columns of basis
// (throws if v is not in the span).
Mat coords_in_basis(const Mat &basis, const Mat &v);

}  // namespace hopfo

#endif
