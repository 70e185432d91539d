#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symres/ring.hpp"

namespace symres {

struct Term {
  Monomial m;
  Scalar c;
};

// Sparse multivariate polynomial. Terms are kept sorted strictly descending
// in the ring's monomial order and never carry zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(GradedRing ring) : ring_(std::move(ring)) {}

  static Poly zero(const GradedRing& r) { return Poly(r); }
  static Poly constant(const GradedRing& r, const Scalar& c);
  static Poly from_int(const GradedRing& r, long long n);
  static Poly variable(const GradedRing& r, int var, int power = 1);
  static Poly term(const GradedRing& r, Monomial m, Scalar c);
  // terms in any order, duplicates combined
  static Poly from_terms(const GradedRing& r, std::vector<Term> terms);

  const GradedRing& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Scalar& leading_coeff() const { return leading_term().c; }

  // weighted degree of the highest-degree term (zero polynomial: nullopt)
  std::optional<long long> degree() const;
  bool is_homogeneous() const;
  // degree if homogeneous and nonzero, else nullopt
  std::optional<long long> homogeneous_degree() const;
  bool is_constant() const;
  // constant term (coefficient of the unit monomial, maybe zero)
  Scalar constant_coeff() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  // exact division by a monomial; every term must be divisible
  Poly divide_by_monomial(const Monomial& m) const;

  // coefficient of a specific monomial (zero scalar if absent)
  Scalar coeff(const Monomial& m) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

  // re-sort into a ring with the same graded structure but different order
  Poly in_ring(const GradedRing& target) const;
  // map variables by index into a (possibly larger) ring; var_map[i] is the
  // index in target of this ring's variable i
  Poly map_vars(const GradedRing& target, const std::vector<int>& var_map) const;

 private:
  GradedRing ring_;
  std::vector<Term> terms_;
};

// Expression grammar (bit-exact):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | ident | '(' expr ')'
// Identifiers match [A-Za-z][A-Za-z0-9_]*; unary minus allowed at expression head.
Poly parse_poly(const std::string& text, const GradedRing& ring);

long long weighted_degree(const Monomial& m, const GradedRing& ring);

}  // namespace symres
