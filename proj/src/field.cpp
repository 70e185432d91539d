#include "symres/field.hpp"

namespace symres {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::IncompatibleModule: return "IncompatibleModule";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::LengthExceeded: return "LengthExceeded";
    case ErrorCode::NotFiniteOverS: return "NotFiniteOverS";
    case ErrorCode::NotAnAlgebra: return "NotAnAlgebra";
    case ErrorCode::NotGorenstein: return "NotGorenstein";
    case ErrorCode::OddCodimRequired: return "OddCodimRequired";
    case ErrorCode::TNotInvertible: return "TNotInvertible";
    case ErrorCode::NoTwistExists: return "NoTwistExists";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::MiddleMapNotSymmetric: return "MiddleMapNotSymmetric";
    case ErrorCode::DualNotExact: return "DualNotExact";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::DegreesInconsistent: return "DegreesInconsistent";
    case ErrorCode::AveragedMapNotInvertible: return "AveragedMapNotInvertible";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::NotNullHomotopic: return "NotNullHomotopic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
  // extended Euclid
  std::int64_t t = 0, newt = 1, r = p, newr = mod_reduce(a, p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(ErrorCode::DivisionNotExact, "element not invertible mod p");
  return mod_reduce(t, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p == 2)
    fail(ErrorCode::InvalidArgument, "characteristic 2 not supported");
  if (!is_prime_u32(p))
    fail(ErrorCode::InvalidArgument, "field characteristic must be prime, got " + std::to_string(p));
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return prime(static_cast<std::uint32_t>(std::stoul(text.substr(3))));
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidArgument, "bad field spec: " + text);
    }
  }
  fail(ErrorCode::InvalidArgument, "bad field spec: " + text + " (expected QQ or Fp:<p>)");
}

Scalar Scalar::zero(const FieldSpec& f) {
  return f.is_rational() ? Scalar(Rational(0)) : Scalar(Fp{0, f.p});
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rational() ? Scalar(Rational(1)) : Scalar(Fp{1, f.p});
}

Scalar Scalar::from_int(long long n, const FieldSpec& f) {
  return f.is_rational() ? Scalar(Rational(n)) : Scalar(Fp{mod_reduce(n, f.p), f.p});
}

Scalar Scalar::from_big(const BigInt& n, const FieldSpec& f) {
  if (f.is_rational()) return Scalar(Rational(n));
  BigInt r = n % f.p;
  if (r < 0) r += f.p;
  return Scalar(Fp{static_cast<std::int64_t>(r), f.p});
}

Scalar Scalar::from_rational(const Rational& r, const FieldSpec& f) {
  if (f.is_rational()) return Scalar(r);
  Scalar num = from_big(numerator(r), f);
  Scalar den = from_big(denominator(r), f);
  return num / den;
}

bool Scalar::is_zero() const {
  if (auto* fp = std::get_if<Fp>(&v_)) return fp->v == 0;
  return std::get<Rational>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* fp = std::get_if<Fp>(&v_)) return fp->v == 1;
  return std::get<Rational>(v_) == 1;
}

FieldSpec Scalar::field() const {
  if (auto* fp = std::get_if<Fp>(&v_)) return FieldSpec{fp->p};
  return FieldSpec::rationals();
}

namespace {
void check_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::FieldMismatch, "mixed " + a.field().to_string() + " and " + b.field().to_string());
}
}  // namespace

Scalar Scalar::operator-() const {
  if (auto* fp = std::get_if<Fp>(&v_))
    return Scalar(Fp{fp->v == 0 ? 0 : static_cast<std::int64_t>(fp->p) - fp->v, fp->p});
  return Scalar(Rational(-std::get<Rational>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionNotExact, "division by zero");
  if (auto* fp = std::get_if<Fp>(&v_)) return Scalar(Fp{mod_inverse(fp->v, fp->p), fp->p});
  return Scalar(Rational(1 / std::get<Rational>(v_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (auto* fa = std::get_if<Scalar::Fp>(&a.v_)) {
    auto* fb = std::get_if<Scalar::Fp>(&b.v_);
    std::int64_t s = fa->v + fb->v;
    if (s >= static_cast<std::int64_t>(fa->p)) s -= fa->p;
    return Scalar(Scalar::Fp{s, fa->p});
  }
  return Scalar(Rational(std::get<Rational>(a.v_) + std::get<Rational>(b.v_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (auto* fa = std::get_if<Scalar::Fp>(&a.v_)) {
    auto* fb = std::get_if<Scalar::Fp>(&b.v_);
    return Scalar(Scalar::Fp{(fa->v * fb->v) % fa->p, fa->p});
  }
  return Scalar(Rational(std::get<Rational>(a.v_) * std::get<Rational>(b.v_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const { return v_ == o.v_; }

std::string Scalar::to_string() const {
  if (auto* fp = std::get_if<Fp>(&v_)) {
    std::int64_t half = (static_cast<std::int64_t>(fp->p) - 1) / 2;
    std::int64_t v = fp->v > half ? fp->v - fp->p : fp->v;
    return std::to_string(v);
  }
  const Rational& r = std::get<Rational>(v_);
  return r.str();
}

const Rational& Scalar::rat() const {
  if (!std::holds_alternative<Rational>(v_))
    fail(ErrorCode::FieldMismatch, "not a rational scalar");
  return std::get<Rational>(v_);
}

long long Scalar::fp_value() const {
  if (auto* fp = std::get_if<Fp>(&v_)) return fp->v;
  fail(ErrorCode::FieldMismatch, "not a prime-field scalar");
}

}  // namespace symres
