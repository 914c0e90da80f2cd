#ifndef CURVEDHH_SCALAR_HPP
#define CURVEDHH_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace curvedhh {

// Coefficient field: the rationals or F_p for a prime p.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }
  // Throws ConfigurationError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  // Accepts "Q" or a decimal prime ("2", "F2" and "Z/2" are also understood).
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t characteristic() const noexcept { return modulus_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), modulus_(p) {}
  Kind kind_;
  std::uint32_t modulus_;
};

/*
 * An exact field element tagged with its field.  Rationals are arbitrary
 * precision (GMP); F_p values are kept reduced in [0, p).  Combining scalars
 * from different fields throws ConfigurationError.
 */
class Scalar {
 public:
  explicit Scalar(Field f = Field::rationals()) : field_(f) {}
  Scalar(Field f, long value);
  // Throws ConfigurationError if the denominator vanishes in F_p.
  Scalar(Field f, const mpq_class& value);

  static Scalar parse(Field f, std::string_view literal);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const mpq_class& rational() const noexcept { return q_; }
  std::uint32_t residue() const noexcept { return r_; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

// Exact literal parsing shared by the file format: "7", "-3", "2/5".
mpq_class parse_rational_literal(std::string_view literal);

// Residue of an exact rational in F_p; throws if the denominator is divisible by p.
std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace curvedhh

#endif  // CURVEDHH_SCALAR_HPP
