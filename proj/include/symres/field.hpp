#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "symres/errors.hpp"

namespace symres {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint32_t kDefaultPrime = 31991;

// Coefficient field: exact rationals (p == 0) or a prime field F_p.
// Characteristic 2 is rejected; the sign conventions of the duality maps
// and the averaging cross-check need 2 invertible.
struct FieldSpec {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const { return p == 0 ? "QQ" : "Fp:" + std::to_string(p); }

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);
  // Parses "QQ" or "Fp:<p>".
  static FieldSpec parse(const std::string& text);
};

// An exact field element. Rationals are kept in lowest terms with positive
// denominator (cpp_rational canonical form); F_p values live in [0, p).
class Scalar {
 public:
  Scalar() : v_(Fp{0, 0}) {}  // zero of an unspecified field; usable as placeholder

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(long long n, const FieldSpec& f);
  static Scalar from_big(const BigInt& n, const FieldSpec& f);
  static Scalar from_rational(const Rational& r, const FieldSpec& f);

  bool is_zero() const;
  bool is_one() const;
  FieldSpec field() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // F_p values render with the symmetric lift (-(p-1)/2 .. (p-1)/2).
  std::string to_string() const;

  const Rational& rat() const;  // rationals only
  long long fp_value() const;   // F_p only, in [0, p)

 private:
  struct Fp {
    std::int64_t v;
    std::uint32_t p;
    bool operator==(const Fp&) const = default;
  };
  explicit Scalar(Fp f) : v_(f) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}

  std::variant<Fp, Rational> v_;
};

}  // namespace symres
