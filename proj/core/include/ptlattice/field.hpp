#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ptl {

using Rational = boost::multiprecision::mpq_rational;

class Scalar;

// Either the rationals (characteristic 0) or GF(p) for a prime p <= 97.
class Field {
 public:
  Field() = default;
  static Field rationals() noexcept { return Field(0); }
  static Field prime(int p);

  [[nodiscard]] int characteristic() const noexcept { return p_; }
  [[nodiscard]] bool is_rational() const noexcept { return p_ == 0; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] Scalar zero() const;
  [[nodiscard]] Scalar one() const;
  [[nodiscard]] Scalar from_int(long long v) const;
  [[nodiscard]] Scalar from_fraction(long long num, long long den) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(int p) noexcept : p_(p) {}
  int p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;

  [[nodiscard]] Field field() const;
  [[nodiscard]] int characteristic() const noexcept { return p_; }
  [[nodiscard]] bool is_zero() const noexcept { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] std::string to_string() const;
  // Residue in [0, p) for prime fields; throws for the rationals.
  [[nodiscard]] int residue() const;
  [[nodiscard]] const Rational& rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  friend class Field;
  void check_same(const Scalar& o) const;

  int p_ = 0;
  std::int32_t r_ = 0;
  Rational q_;
};

}  // namespace ptl
