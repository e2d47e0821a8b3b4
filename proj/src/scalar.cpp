#include "codealg/scalar.hpp"

#include <cstdlib>
#include <vector>

namespace codealg {

const char* errc_name(errc c) {
  switch (c) {
    case errc::length_mismatch: return "LengthMismatch";
    case errc::dependent_rows: return "DependentRows";
    case errc::empty_cstar: return "EmptyCStar";
    case errc::not_constant_weight: return "NotConstantWeight";
    case errc::too_large: return "TooLarge";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::discriminant_mismatch: return "DiscriminantMismatch";
    case errc::zero_input: return "ZeroInput";
    case errc::unordered_field: return "UnorderedField";
    case errc::factorization_limit: return "FactorizationLimit";
    case errc::missing_param: return "MissingParam";
    case errc::not_an_automorphism: return "NotAnAutomorphism";
    case errc::not_regular: return "NotRegular";
    case errc::not_a_subcode: return "NotASubcode";
    case errc::dim_too_large: return "DimTooLarge";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::missing_unit_labels: return "MissingUnitLabels";
    case errc::no_grading: return "NoGrading";
    case errc::params_not_constant: return "ParamsNotConstantOnD";
    case errc::no_root_in_field: return "NoRootInField";
    case errc::degenerate_mu_zero: return "DegenerateMuZero";
    case errc::degenerate_half_case: return "DegenerateHalfCase";
    case errc::degenerate_third_case: return "DegenerateThirdCase";
    case errc::zero_form: return "ZeroForm";
    case errc::grading_fails: return "GradingFails";
    case errc::aut_too_large: return "AutTooLarge";
    case errc::degenerate: return "Degenerate";
    case errc::parse_error: return "ParseError";
    case errc::fixture_mismatch: return "FixtureMismatch";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

Scalar::Scalar(mpq_class rat, mpq_class surd, long disc)
    : rat_(std::move(rat)), surd_(std::move(surd)), disc_(disc) {
  if (disc_ == 0) throw Error(errc::zero_input, "discriminant must be nonzero");
  if (surd_ == 0 || disc_ == 1) {
    if (disc_ == 1 && surd_ != 0) {
      rat_ += surd_;  // sqrt(1) = 1
    }
    surd_ = 0;
    disc_ = 1;
  }
}

long Scalar::merge_disc(const Scalar& a, const Scalar& b) {
  if (a.disc_ == b.disc_) return a.disc_;
  if (a.surd_ == 0) return b.disc_;
  if (b.surd_ == 0) return a.disc_;
  throw Error(errc::discriminant_mismatch,
              "cannot combine sqrt(" + std::to_string(a.disc_) + ") with sqrt(" +
                  std::to_string(b.disc_) + ")");
}

Scalar Scalar::operator-() const { return Scalar(-rat_, -surd_, disc_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  disc_ = merge_disc(*this, o);
  rat_ += o.rat_;
  surd_ += o.surd_;
  if (surd_ == 0) disc_ = 1;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  disc_ = merge_disc(*this, o);
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  if (surd_ == 0) disc_ = 1;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = merge_disc(*this, o);
  mpq_class r = rat_ * o.rat_ + surd_ * o.surd_ * d;
  mpq_class s = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = r;
  surd_ = s;
  disc_ = surd_ == 0 ? 1 : d;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
  if (surd_ == 0) return Scalar(1 / rat_);
  // conjugate rationalisation; the norm is nonzero since d is squarefree != 1
  mpq_class n = rat_ * rat_ - surd_ * surd_ * disc_;
  if (n == 0) throw Error(errc::internal, "zero norm for nonzero scalar (non-squarefree disc?)");
  return Scalar(rat_ / n, -surd_ / n, disc_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

int Scalar::sign() const {
  if (surd_ == 0) return sgn(rat_);
  if (disc_ < 0)
    throw Error(errc::unordered_field,
                "ordering undefined for discriminant " + std::to_string(disc_));
  int sr = sgn(rat_), ss = sgn(surd_);
  if (sr == 0) return ss;
  if (ss == 0 || sr == ss) return sr;
  // opposite signs: compare rat^2 with surd^2 * d
  mpq_class lhs = rat_ * rat_, rhs = surd_ * surd_ * disc_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // cannot happen for squarefree d != 1
  return c > 0 ? sr : ss;
}

std::string Scalar::str() const {
  if (surd_ == 0) return rat_.get_str();
  std::string out;
  mpq_class s = surd_;
  if (rat_ != 0) {
    out = rat_.get_str();
    if (s < 0) {
      out += "-";
      s = -s;
    } else {
      out += "+";
    }
  } else if (s < 0) {
    out = "-";
    s = -s;
  }
  return out + s.get_str() + "*sqrt(" + std::to_string(disc_) + ")";
}

bool scalar_key_less(const Scalar& a, const Scalar& b) {
  int c = cmp(a.rat(), b.rat());
  if (c != 0) return c < 0;
  c = cmp(a.surd(), b.surd());
  if (c != 0) return c < 0;
  return a.disc() < b.disc();
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class &num = q.get_num(), &den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

std::optional<Scalar> sqrt_in_field(const mpq_class& q, long disc) {
  if (q == 0) return Scalar(0);
  if (auto r = rational_sqrt(q)) return Scalar(*r);
  if (disc != 1) {
    if (auto s = rational_sqrt(q / disc)) return Scalar::sqrt_term(*s, disc);
  }
  return std::nullopt;
}

std::optional<Scalar> sqrt_in_field(const Scalar& x, long disc) {
  if (x.is_rational()) return sqrt_in_field(x.rat(), disc);
  if (x.disc() != disc)
    throw Error(errc::discriminant_mismatch, "operand not in session field");
  // Look for (u + v*sqrt(d))^2 = p + q*sqrt(d): u^2 + v^2 d = p, 2uv = q.
  // Then u^2 is a root of t^2 - p t + q^2 d / 4, so needs rational
  // sqrt(p^2 - q^2 d) and then a rational sqrt of t itself.
  const mpq_class &p = x.rat(), &q = x.surd();
  auto r = rational_sqrt(p * p - q * q * disc);
  if (!r) return std::nullopt;
  for (int pm = 0; pm < 2; ++pm) {
    mpq_class t = (pm == 0) ? mpq_class((p + *r) / 2) : mpq_class((p - *r) / 2);
    if (auto u = rational_sqrt(t)) {
      if (*u == 0) continue;
      mpq_class v = q / (2 * *u);
      Scalar root(*u, v, disc);
      if (root * root == x) {
        if (sgn(root.rat()) < 0 || (root.rat() == 0 && sgn(root.surd()) < 0)) root = -root;
        return root;
      }
    }
  }
  return std::nullopt;
}

namespace {

// squarefree part of a positive integer; throws once trial division gives out
mpz_class squarefree_part(mpz_class v) {
  mpz_class out = 1;
  for (long p = 2; mpz_class(p) * p <= v && p < 1000000; p = (p == 2 ? 3 : p + 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++e;
    }
    if (e & 1) out *= p;
  }
  if (v > 1) {
    if (mpz_perfect_square_p(v.get_mpz_t())) {
      // all remaining exponents even: contributes nothing
    } else if (mpz_probab_prime_p(v.get_mpz_t(), 30) != 0) {
      out *= v;
    } else {
      throw Error(errc::factorization_limit, "cannot factor " + v.get_str());
    }
  }
  return out;
}

}  // namespace

long choose_discriminant(const mpq_class& q) {
  if (q == 0) throw Error(errc::zero_input, "choose_discriminant(0)");
  mpz_class f = abs(q.get_num() * q.get_den());
  mpz_class d = squarefree_part(f);
  if (q < 0) d = -d;
  if (!d.fits_slong_p())
    throw Error(errc::factorization_limit, "squarefree part exceeds machine range: " + d.get_str());
  return d.get_si();
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  mpz_class v = std::abs(d);
  try {
    return squarefree_part(v) == v;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace codealg
