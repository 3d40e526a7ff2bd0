#include "ptlattice/field.hpp"

#include "ptlattice/error.hpp"

namespace ptl {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::RelationNotAPath: return "RelationNotAPath";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::ArrowInIdeal: return "ArrowInIdeal";
    case Errc::InvalidQuiver: return "InvalidQuiver";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::NotSubmodule: return "NotSubmodule";
    case Errc::NotStringAlgebra: return "NotStringAlgebra";
    case Errc::BandPresent: return "BandPresent";
    case Errc::DimBoundReached: return "DimBoundReached";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::EndTooLarge: return "EndTooLarge";
    case Errc::EndResidueTooLarge: return "EndResidueTooLarge";
    case Errc::IsoUndecided: return "IsoUndecided";
    case Errc::ClosureNotIdempotent: return "ClosureNotIdempotent";
    case Errc::SubmoduleEnumerationTooLarge: return "SubmoduleEnumerationTooLarge";
    case Errc::NotGenClosed: return "NotGenClosed";
    case Errc::NotCogenClosed: return "NotCogenClosed";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::PreorderNotAntisymmetric: return "PreorderNotAntisymmetric";
    case Errc::InvalidPoset: return "InvalidPoset";
    case Errc::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int32_t mod_inverse(std::int32_t a, int p) {
  // p is tiny, so Fermat by repeated multiplication is fine.
  std::int32_t result = 1;
  std::int32_t base = a % p;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(int p) {
  if (p > 97 || !is_prime(p)) {
    throw Error(Errc::InvalidField, "characteristic must be a prime <= 97, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = Rational(v);
  } else {
    long long r = v % p_;
    if (r < 0) r += p_;
    s.r_ = static_cast<std::int32_t>(r);
  }
  return s;
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  return from_int(num) / from_int(den);
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) {
    throw Error(Errc::FieldMismatch, "characteristic " + std::to_string(p_) + " vs " + std::to_string(o.p_));
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, p_);
  }
  return s;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.str() : std::to_string(r_); }

int Scalar::residue() const {
  if (p_ == 0) throw Error(Errc::FieldMismatch, "residue() on a rational scalar");
  return r_;
}

const Rational& Scalar::rational() const {
  if (p_ != 0) throw Error(Errc::FieldMismatch, "rational() on a prime-field scalar");
  return q_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = (r_ - o.r_ + p_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % p_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else {
    s.r_ = (p_ - r_) % p_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.p_ == 0 ? a.q_ < b.q_ : a.r_ < b.r_;
}

}  // namespace ptl
