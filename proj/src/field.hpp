#ifndef HOPFO_FIELD_HPP
#define HOPFO_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfo {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Prime, Rationals, Cyclotomic };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long param = 0;  // p for Prime, n for Cyclotomic
  bool operator==(const FieldSpec &) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class Scalar;

// Flyweight context for one exact field: F_p, Q, or Q[z]/Phi_n(z).
// Scalars hold a pointer to their field; all arithmetic is exact.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr prime(long p);
  static FieldPtr rationals();
  static FieldPtr cyclotomic(long n);
  static FieldPtr make(const FieldSpec &spec);

  const FieldSpec &spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  long characteristic() const { return spec_.kind == FieldKind::Prime ? spec_.param : 0; }
  // Degree of the field as an algebra over its prime field / Q (1 unless cyclotomic).
  long ext_degree() const { return deg_; }
  // Monic relation Phi_n, coefficients low to high, size deg_+1. Cyclotomic only.
  const std::vector<mpq_class> &relation() const { return phi_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpq(const mpq_class &v) const;
  // Residue class of z (cyclotomic); for n = 1 this is 1, for n = 2 it is -1.
  Scalar zeta() const;

  std::string format(const Scalar &s) const;
  Scalar parse(const std::string &text) const;

  bool same(const Field &other) const { return spec_ == other.spec_; }

 private:
  friend class Scalar;
  explicit Field(FieldSpec spec);
  FieldSpec spec_;
  long deg_ = 1;
  std::vector<mpq_class> phi_;                  // cyclotomic relation
  std::vector<std::vector<mpq_class>> redtab_;  // z^k mod Phi for k in [deg, 2deg-2]
};

// Canonical exact field element. Representation: residue in [0,p) for prime
// fields, reduced fraction for Q, reduced-fraction polynomial of degree
// < deg Phi_n for cyclotomic fields. Equality is representational.
class Scalar {
 public:
  Scalar() = default;  // null scalar, only assignable

  const FieldPtr &field() const { return fld_; }
  bool is_null() const { return fld_ == nullptr; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator/(const Scalar &o) const;
  Scalar operator-() const;
  Scalar inv() const;
  bool operator==(const Scalar &o) const;
  bool operator!=(const Scalar &o) const { return !(*this == o); }

  Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
  Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
  Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

  std::string str() const;

  // Rational value of a char-0 scalar with no z part (throws otherwise).
  mpq_class rational_value() const;
  // Integer lift: prime residue, or char-0 integer value.
  long int_value() const;

 private:
  friend class Field;
  FieldPtr fld_;
  long a_ = 0;                  // prime-field residue
  std::vector<mpq_class> c_;    // char-0 coefficients, size = ext_degree
  void check_same(const Scalar &o) const;
};

}  // namespace hopfo

#endif
