#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "codealg/error.hpp"

namespace codealg {

// An element of Q or of one quadratic extension Q(sqrt(d)), stored as
// rat + surd*sqrt(d) with d a squarefree nonzero integer.  Values with zero
// surd part are kept with d = 1 and mix freely with any discriminant;
// combining two distinct nontrivial discriminants throws
// discriminant_mismatch.  Representations are unique, so equality is
// componentwise.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}           // NOLINT: implicit by design
  Scalar(const mpq_class& r) : rat_(r) {}  // NOLINT
  Scalar(mpq_class rat, mpq_class surd, long disc);

  static Scalar sqrt_term(const mpq_class& coeff, long disc) {
    return Scalar(0, coeff, disc);
  }

  const mpq_class& rat() const { return rat_; }
  const mpq_class& surd() const { return surd_; }
  long disc() const { return disc_; }
  bool is_rational() const { return surd_ == 0; }
  bool is_zero() const { return rat_ == 0 && surd_ == 0; }
  bool is_one() const { return rat_ == 1 && surd_ == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const {
    return rat_ == o.rat_ && surd_ == o.surd_ && disc_ == o.disc_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar conj() const { return Scalar(rat_, -surd_, disc_); }
  Scalar inv() const;

  // Sign under the real embedding with sqrt(d) > 0.  Throws unordered_field
  // for negative discriminants.
  int sign() const;

  // "p/q" or "p/q+r/s*sqrt(d)" (minus sign folded into the surd term).
  std::string str() const;

private:
  mpq_class rat_{0}, surd_{0};
  long disc_{1};

  static long merge_disc(const Scalar& a, const Scalar& b);
};

// Total order usable for containers and deterministic output; compares
// (rat, surd, disc) lexicographically and does not depend on a real
// embedding.
bool scalar_key_less(const Scalar& a, const Scalar& b);

struct ScalarKeyLess {
  bool operator()(const Scalar& a, const Scalar& b) const {
    return scalar_key_less(a, b);
  }
};

// Canonicalized rational p/q (the two-argument mpq_class constructor does
// not reduce).
inline mpq_class frac(long p, long q) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

// Exact square root of a nonnegative rational square, if one exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// Root of q inside Q(sqrt(disc)): succeeds when q = s^2 or q = s^2*disc for
// rational s, returning the root with positive rational part, else positive
// surd part.  Absence is a value, not an error.
std::optional<Scalar> sqrt_in_field(const mpq_class& q, long disc);

// General in-field square root, including surd operands (x must live in
// Q(sqrt(disc))).
std::optional<Scalar> sqrt_in_field(const Scalar& x, long disc);

// Squarefree part d of q != 0, so that sqrt_in_field(q, d) succeeds.
long choose_discriminant(const mpq_class& q);

bool is_squarefree(long d);

}  // namespace codealg
