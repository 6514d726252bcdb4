#include "matrix.hpp"

#include <sstream>

namespace hopfo {

Mat Mat::identity(const FieldPtr &f, long n) {
  Mat m(f, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

bool Mat::is_zero() const {
  for (const auto &s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Mat Mat::operator+(const Mat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix shape mismatch in +");
  Mat r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix shape mismatch in -");
  Mat r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto &s : r.e_) s = -s;
  return r;
}

Mat Mat::scaled(const Scalar &c) const {
  Mat r = *this;
  for (auto &s : r.e_) s = s * c;
  return r;
}

Mat Mat::operator*(const Mat &o) const {
  if (cols_ != o.rows_) throw MathError("matrix shape mismatch in *");
  Mat r(fld_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Scalar &a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Scalar &b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(fld_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::hstack(const Mat &o) const {
  if (rows_ != o.rows_) throw MathError("hstack row mismatch");
  Mat r(fld_, rows_, cols_ + o.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat &o) const {
  if (cols_ != o.cols_) throw MathError("vstack col mismatch");
  Mat r(fld_, rows_ + o.rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (long i = 0; i < o.rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Mat Mat::col(long c) const {
  Mat r(fld_, rows_, 1);
  for (long i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

Mat Mat::cols_at(const std::vector<long> &idx) const {
  Mat r(fld_, rows_, (long)idx.size());
  for (long j = 0; j < (long)idx.size(); ++j)
    for (long i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Mat Mat::rows_at(const std::vector<long> &idx) const {
  Mat r(fld_, (long)idx.size(), cols_);
  for (long i = 0; i < (long)idx.size(); ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
  return r;
}

Mat Mat::pow(long k) const {
  if (rows_ != cols_) throw MathError("pow needs a square matrix");
  Mat r = Mat::identity(fld_, rows_);
  for (long i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string Mat::str() const {
  std::ostringstream out;
  for (long i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (long j = 0; j < cols_; ++j) out << at(i, j).str() << (j + 1 < cols_ ? ", " : "");
    out << (i + 1 < rows_ ? ";\n" : "]");
  }
  return out.str();
}

RrefResult rref(const Mat &m) {
  RrefResult res;
  Mat a = m;
  const FieldPtr &F = m.field();
  long rows = a.rows(), cols = a.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (long j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inv();
    for (long j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar f = a.at(i, c);
      if (f.is_zero()) continue;
      for (long j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.reduced = a;
  res.rank = r;
  return res;
}

long rank_of(const Mat &m) { return rref(m).rank; }

Mat nullspace(const Mat &m) {
  RrefResult rr = rref(m);
  const FieldPtr &F = m.field();
  long cols = m.cols();
  std::vector<bool> is_piv(cols, false);
  for (long p : rr.pivots) is_piv[p] = true;
  std::vector<long> free_cols;
  for (long c = 0; c < cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat ker(F, cols, (long)free_cols.size());
  for (long k = 0; k < (long)free_cols.size(); ++k) {
    long fc = free_cols[k];
    ker.at(fc, k) = F->one();
    for (long i = 0; i < (long)rr.pivots.size(); ++i)
      ker.at(rr.pivots[i], k) = -rr.reduced.at(i, fc);
  }
  return ker;
}

std::optional<Mat> solve(const Mat &a, const Mat &b) {
  if (a.rows() != b.rows()) throw MathError("solve: row mismatch");
  RrefResult rr = rref(a.hstack(b));
  // inconsistent iff a pivot falls in the b block
  for (long p : rr.pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat x(a.field(), a.cols(), b.cols());
  for (long i = 0; i < (long)rr.pivots.size(); ++i)
    for (long j = 0; j < b.cols(); ++j) x.at(rr.pivots[i], j) = rr.reduced.at(i, a.cols() + j);
  return x;
}

std::optional<Mat> inverse(const Mat &m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult rr = rref(m.hstack(Mat::identity(m.field(), m.rows())));
  // invertible iff all pivots land in the m block
  for (long i = 0; i < m.rows(); ++i)
    if (i >= (long)rr.pivots.size() || rr.pivots[i] != i) return std::nullopt;
  std::vector<long> idx;
  for (long j = 0; j < m.cols(); ++j) idx.push_back(m.cols() + j);
  return rr.reduced.cols_at(idx);
}

Mat kron(const Mat &a, const Mat &b) {
  if (!a.field()->same(*b.field())) throw MathError("kron: field mismatch");
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (long ia = 0; ia < a.rows(); ++ia)
    for (long ja = 0; ja < a.cols(); ++ja) {
      const Scalar &s = a.at(ia, ja);
      if (s.is_zero()) continue;
      for (long ib = 0; ib < b.rows(); ++ib)
        for (long jb = 0; jb < b.cols(); ++jb) {
          const Scalar &t = b.at(ib, jb);
          if (t.is_zero()) continue;
          r.at(ia * b.rows() + ib, ja * b.cols() + jb) = s * t;
        }
    }
  return r;
}

std::vector<long> complement_columns(const Mat &given, const Mat &m) {
  if (given.rows() != m.rows()) throw MathError("complement_columns: row mismatch");
  std::vector<long> chosen;
  Mat acc = given;
  long cur = rank_of(acc);
  for (long c = 0; c < m.cols(); ++c) {
    Mat trym = acc.hstack(m.col(c));
    long r = rank_of(trym);
    if (r > cur) {
      chosen.push_back(c);
      acc = trym;
      cur = r;
    }
  }
  return chosen;
}

Mat coords_in_basis(const Mat &basis, const Mat &v) {
  auto x = solve(basis, v);
  if (!x) throw MathError("coords_in_basis: vector not in span");
  return *x;
}

}  // namespace hopfo
