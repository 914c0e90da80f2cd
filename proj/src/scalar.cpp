#include "curvedhh/scalar.hpp"

#include <charconv>

#include "curvedhh/errors.hpp"

namespace curvedhh {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw ConfigurationError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "q") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("Z/")) digits.remove_prefix(2);
  else if (digits.starts_with("F") || digits.starts_with("p")) digits.remove_prefix(1);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ConfigurationError("unrecognised field '" + std::string(text) + "' (expected Q or a prime)");
  return prime(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(modulus_);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw ConfigurationError("element is not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw ConfigurationError("coefficient " + q.get_str() + " has a denominator divisible by " +
                             std::to_string(p));
  auto n = static_cast<std::uint64_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  return static_cast<std::uint32_t>(n * inverse_mod(d, p) % p);
}

mpq_class parse_rational_literal(std::string_view literal) {
  auto bad = [&] { return ConfigurationError("malformed exact literal '" + std::string(literal) + "'"); };
  if (literal.empty()) throw bad();
  auto slash = literal.find('/');
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  if (slash == std::string_view::npos) {
    if (!valid_int(literal)) throw bad();
    return mpq_class(to_mpz(literal));
  }
  auto num = literal.substr(0, slash), den = literal.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class d = to_mpz(den);
  if (d == 0) throw bad();
  mpq_class q(to_mpz(num), d);
  q.canonicalize();
  return q;
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
  } else {
    long m = value % static_cast<long>(f.modulus());
    if (m < 0) m += f.modulus();
    r_ = static_cast<std::uint32_t>(m);
  }
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
  if (f.is_rational()) q_ = value;
  else r_ = reduce_mod(value, f.modulus());
}

Scalar Scalar::parse(Field f, std::string_view literal) { return Scalar(f, parse_rational_literal(literal)); }

bool Scalar::is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw ConfigurationError("mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ConfigurationError("division by zero");
  Scalar out(field_);
  if (field_.is_rational()) out.q_ = 1 / q_;
  else out.r_ = inverse_mod(r_, field_.modulus());
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational()) out.q_ = -q_;
  else out.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) q_ += o.q_;
  else r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % field_.modulus());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) q_ *= o.q_;
  else r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % field_.modulus());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

}  // namespace curvedhh
