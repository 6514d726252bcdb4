#include "field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfo {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pos(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t, nt);
    nt -= q * t;
    std::swap(r, nr);
    nr -= q * r;
  }
  if (r != 1) throw MathError("not invertible mod p");
  return mod_pos(t, p);
}

using Poly = std::vector<mpq_class>;  // coefficients low to high

void trim(Poly &f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly polmul(const Poly &f, const Poly &g) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, mpq_class(0));
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < g.size(); ++j)
      if (g[j] != 0) h[i + j] += f[i] * g[j];
  }
  trim(h);
  return h;
}

// f = q*g + r with deg r < deg g.
void poldivmod(Poly f, const Poly &g, Poly &q, Poly &r) {
  trim(f);
  q.assign(f.size() > g.size() - 1 ? f.size() - g.size() + 1 : 0, mpq_class(0));
  while (f.size() >= g.size() && !f.empty()) {
    mpq_class c = f.back() / g.back();
    size_t shift = f.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    trim(f);
  }
  r = f;
  trim(q);
}

// Cyclotomic polynomial Phi_n by repeated exact division of x^n - 1.
Poly cyclotomic_poly(long n) {
  Poly f(n + 1, mpq_class(0));
  f[0] = -1;
  f[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly phid = cyclotomic_poly(d);
    Poly q, r;
    poldivmod(f, phid, q, r);
    if (!r.empty()) throw MathError("cyclotomic division not exact");
    f = q;
  }
  return f;
}

}  // namespace

Field::Field(FieldSpec spec) : spec_(spec) {
  switch (spec_.kind) {
    case FieldKind::Prime:
      if (!is_prime(spec_.param)) throw MathError("field characteristic must be prime");
      deg_ = 1;
      break;
    case FieldKind::Rationals:
      deg_ = 1;
      break;
    case FieldKind::Cyclotomic: {
      if (spec_.param < 1) throw MathError("cyclotomic index must be >= 1");
      phi_ = cyclotomic_poly(spec_.param);
      deg_ = (long)phi_.size() - 1;
      // z^k mod Phi for k = deg .. 2*deg-2
      redtab_.clear();
      Poly cur(deg_, mpq_class(0));  // will hold z^k reduced
      // z^deg = -phi[0..deg-1]
      for (long i = 0; i < deg_; ++i) cur[i] = -phi_[i];
      redtab_.push_back(cur);
      for (long k = deg_ + 1; k <= 2 * deg_ - 2; ++k) {
        Poly nxt(deg_, mpq_class(0));
        for (long i = 0; i + 1 < deg_; ++i) nxt[i + 1] = cur[i];
        if (cur[deg_ - 1] != 0)
          for (long i = 0; i < deg_; ++i) nxt[i] += cur[deg_ - 1] * -phi_[i];
        cur = nxt;
        redtab_.push_back(cur);
      }
      break;
    }
  }
}

FieldPtr Field::make(const FieldSpec &spec) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)spec.kind, spec.param);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f(new Field(spec));
  cache[key] = f;
  return f;
}

FieldPtr Field::prime(long p) { return make({FieldKind::Prime, p}); }
FieldPtr Field::rationals() { return make({FieldKind::Rationals, 0}); }
FieldPtr Field::cyclotomic(long n) { return make({FieldKind::Cyclotomic, n}); }

Scalar Field::zero() const {
  Scalar s;
  s.fld_ = shared_from_this();
  if (kind() != FieldKind::Prime) s.c_.assign(deg_, mpq_class(0));
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  Scalar s = zero();
  if (kind() == FieldKind::Prime)
    s.a_ = mod_pos(v, spec_.param);
  else
    s.c_[0] = v;
  return s;
}

Scalar Field::from_mpq(const mpq_class &v) const {
  if (kind() == FieldKind::Prime) {
    mpz_class den = v.get_den();
    mpz_class num = v.get_num();
    long p = spec_.param;
    long d = mpz_class(den % p).get_si();
    long n = mpz_class(num % p).get_si();
    return from_int(mod_pos(n, p) * mod_inv(d, p) % p);
  }
  Scalar s = zero();
  s.c_[0] = v;
  s.c_[0].canonicalize();
  return s;
}

Scalar Field::zeta() const {
  if (kind() != FieldKind::Cyclotomic) throw MathError("zeta needs a cyclotomic field");
  Scalar s = zero();
  if (deg_ == 1) {
    // Phi_1 = z-1, Phi_2 = z+1: z reduces to a rational
    s.c_[0] = -phi_[0];
  } else {
    s.c_[1] = 1;
  }
  return s;
}

void Scalar::check_same(const Scalar &o) const {
  if (is_null() || o.is_null() || !fld_->same(*o.fld_))
    throw MathError("scalar field mismatch");
}

bool Scalar::is_zero() const {
  if (is_null()) throw MathError("null scalar");
  if (fld_->kind() == FieldKind::Prime) return a_ == 0;
  for (const auto &c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const { return *this == fld_->one(); }

bool Scalar::operator==(const Scalar &o) const {
  check_same(o);
  if (fld_->kind() == FieldKind::Prime) return a_ == o.a_;
  return c_ == o.c_;
}

Scalar Scalar::operator+(const Scalar &o) const {
  check_same(o);
  Scalar r = *this;
  if (fld_->kind() == FieldKind::Prime)
    r.a_ = mod_pos(a_ + o.a_, fld_->spec_.param);
  else
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Scalar Scalar::operator-(const Scalar &o) const {
  check_same(o);
  Scalar r = *this;
  if (fld_->kind() == FieldKind::Prime)
    r.a_ = mod_pos(a_ - o.a_, fld_->spec_.param);
  else
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Scalar Scalar::operator-() const {
  if (is_null()) throw MathError("null scalar");
  Scalar r = *this;
  if (fld_->kind() == FieldKind::Prime)
    r.a_ = mod_pos(-a_, fld_->spec_.param);
  else
    for (auto &c : r.c_) c = -c;
  return r;
}

Scalar Scalar::operator*(const Scalar &o) const {
  check_same(o);
  Scalar r = fld_->zero();
  if (fld_->kind() == FieldKind::Prime) {
    long p = fld_->spec_.param;
    r.a_ = (long)(((__int128)a_ * o.a_) % p);
    return r;
  }
  long d = fld_->deg_;
  if (d == 1) {
    r.c_[0] = c_[0] * o.c_[0];
    return r;
  }
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (long i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < d; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  for (long i = 0; i < d; ++i) r.c_[i] = prod[i];
  for (long k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto &row = fld_->redtab_[k - d];
    for (long i = 0; i < d; ++i)
      if (row[i] != 0) r.c_[i] += prod[k] * row[i];
  }
  return r;
}

Scalar Scalar::inv() const {
  if (is_null()) throw MathError("null scalar");
  if (is_zero()) throw MathError("division by zero");
  Scalar r = fld_->zero();
  switch (fld_->kind()) {
    case FieldKind::Prime:
      r.a_ = mod_inv(a_, fld_->spec_.param);
      return r;
    case FieldKind::Rationals:
      r.c_[0] = 1 / c_[0];
      return r;
    case FieldKind::Cyclotomic: {
      long d = fld_->deg_;
      if (d == 1) {
        r.c_[0] = 1 / c_[0];
        return r;
      }
      // extended Euclid in Q[z] against Phi_n (irreducible over Q)
      Poly a(c_.begin(), c_.end());
      trim(a);
      Poly b = fld_->phi_;
      Poly s0 = {mpq_class(1)}, s1 = {};  // Bezout coefficients for a
      // invariant: s0*a = r0 mod Phi, s1*a = r1 mod Phi
      Poly r0 = a, r1 = b;
      while (true) {
        trim(r1);
        if (r1.empty()) break;
        Poly q, rem;
        poldivmod(r0, r1, q, rem);
        Poly qs1 = polmul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()), mpq_class(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        s0 = s1;
        s1 = s2;
        r0 = r1;
        r1 = rem;
      }
      if (r0.size() != 1) throw MathError("cyclotomic inverse: gcd not constant");
      mpq_class lead = r0[0];
      for (auto &c : s0) c /= lead;
      s0.resize(d, mpq_class(0));
      for (long i = 0; i < d; ++i) r.c_[i] = s0[i];
      return r;
    }
  }
  throw MathError("unreachable");
}

Scalar Scalar::operator/(const Scalar &o) const { return *this * o.inv(); }

mpq_class Scalar::rational_value() const {
  if (is_null() || fld_->kind() == FieldKind::Prime) throw MathError("not a char-0 scalar");
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) throw MathError("scalar has a z component");
  return c_[0];
}

long Scalar::int_value() const {
  if (is_null()) throw MathError("null scalar");
  if (fld_->kind() == FieldKind::Prime) return a_;
  mpq_class q = rational_value();
  if (q.get_den() != 1) throw MathError("scalar is not an integer");
  return q.get_num().get_si();
}

std::string Scalar::str() const {
  if (is_null()) return "<null>";
  return fld_->format(*this);
}

std::string Field::format(const Scalar &s) const {
  if (kind() == FieldKind::Prime) return std::to_string(s.a_);
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i < deg_; ++i) {
    const mpq_class &c = s.c_[i];
    if (c == 0) continue;
    mpq_class abs = c < 0 ? mpq_class(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (abs == 1) && i > 0;
    if (!unit_coeff) out << abs.get_str();
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// term := [sign] [rational] [ '*'? 'z' [ '^' int ] ]
struct ScalarParser {
  const std::string &t;
  size_t i = 0;
  explicit ScalarParser(const std::string &s) : t(s) {}
  void skip() {
    while (i < t.size() && std::isspace((unsigned char)t[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < t.size() && t[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    size_t start = i;
    while (i < t.size() && std::isdigit((unsigned char)t[i])) ++i;
    if (start == i) throw MathError("scalar parse error at position " + std::to_string(i));
    return mpz_class(t.substr(start, i - start));
  }
};

}  // namespace

Scalar Field::parse(const std::string &text) const {
  ScalarParser p(text);
  Scalar acc = zero();
  bool any = false;
  while (true) {
    p.skip();
    if (p.i >= p.t.size()) break;
    bool neg = false;
    if (p.eat('+')) {
    } else if (p.eat('-')) {
      neg = true;
    } else if (any) {
      throw MathError("scalar parse error: expected + or -");
    }
    p.skip();
    mpq_class coeff(1);
    bool have_coeff = false;
    if (p.i < p.t.size() && std::isdigit((unsigned char)p.t[p.i])) {
      mpz_class num = p.integer();
      mpz_class den(1);
      if (p.eat('/')) den = p.integer();
      if (den == 0) throw MathError("scalar parse error: zero denominator");
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_coeff = true;
    }
    long power = 0;
    p.skip();
    if (p.i < p.t.size() && (p.t[p.i] == 'z' || p.t[p.i] == '*')) {
      p.eat('*');
      p.skip();
      if (p.i >= p.t.size() || p.t[p.i] != 'z') throw MathError("scalar parse error: expected z");
      ++p.i;
      power = 1;
      if (p.eat('^')) power = p.integer().get_si();
    } else if (!have_coeff) {
      throw MathError("scalar parse error: empty term");
    }
    if (neg) coeff = -coeff;
    Scalar term = from_mpq(coeff);
    if (power > 0) {
      if (kind() != FieldKind::Cyclotomic) throw MathError("z is only valid over a cyclotomic field");
      Scalar zp = one();
      for (long k = 0; k < power; ++k) zp = zp * zeta();
      term = term * zp;
    }
    acc = acc + term;
    any = true;
  }
  if (!any) throw MathError("scalar parse error: empty input");
  return acc;
}

}  // namespace hopfo
