#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symres/poly.hpp"

using namespace symres;

namespace {

GradedRing std_ring(std::vector<std::string> vars, FieldSpec f = FieldSpec::prime(31991),
                    MonomialOrder ord = {OrderKind::WGRevLex, {}}) {
  return GradedRing::make(vars, std::vector<int>(vars.size(), 1), f, ord);
}

GradedRing godeaux_ring() {
  // deg x_i = 2, deg y_j = 3
  return GradedRing::make({"x0", "x1", "y0", "y1", "y2", "y3"}, {2, 2, 3, 3, 3, 3},
                          FieldSpec::prime(31991));
}

Monomial random_monomial(const GradedRing& r, std::mt19937& rng, int max_exp = 3) {
  std::vector<int> e(r.nvars());
  for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
  return r.monomial(e);
}

Poly random_poly(const GradedRing& r, std::mt19937& rng, int terms = 3) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({random_monomial(r, rng, 2),
                  Scalar::from_int(static_cast<long long>(rng() % 19) - 9, r.field())});
  return Poly::from_terms(r, ts);
}

}  // namespace

TEST_CASE("field arithmetic") {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::from_int(3, f5) * Scalar::from_int(2, f5) == Scalar::one(f5));
  CHECK(Scalar::from_int(-1, f5) == Scalar::from_int(4, f5));
  CHECK(Scalar::from_int(2, f5).inverse() == Scalar::from_int(3, f5));
  Scalar half = Scalar::from_rational(Rational(1, 2), q);
  CHECK(half + half == Scalar::one(q));
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
}

TEST_CASE("weighted degree") {
  GradedRing g = godeaux_ring();
  // x_0 * y_1 has degree 5
  CHECK(weighted_degree(g.monomial({1, 0, 0, 1, 0, 0}), g) == 5);
  CHECK(weighted_degree(Monomial::unit(6), g) == 0);
  CHECK(weighted_degree(g.monomial({2, 0, 0, 0, 0, 0}), g) == 4);
}

TEST_CASE("parser examples") {
  GradedRing r = std_ring({"x0", "x1", "x2", "x3"});
  Poly quadric = parse_poly("x0*x3 - x1*x2", r);
  CHECK(quadric.nterms() == 2);
  CHECK(quadric.is_homogeneous());
  CHECK(*quadric.homogeneous_degree() == 2);

  CHECK(parse_poly("0", r).is_zero());

  GradedRing rq = std_ring({"x0"}, FieldSpec::rationals());
  Poly sq = parse_poly("x0^2 - 2*x0 + 1", rq);
  CHECK(sq.nterms() == 3);
  CHECK(sq == parse_poly("(x0 - 1)^2", rq));

  CHECK_THROWS_AS(parse_poly("x0 + z", r), Error);
  CHECK_THROWS_AS(parse_poly("x0 + ", r), Error);
  CHECK_THROWS_AS(parse_poly("x0 ^ x1", r), Error);
  // unary minus at expression head
  CHECK(parse_poly("-x0 + x0", r).is_zero());
  // byte offset reported
  try {
    parse_poly("x0*zz", r);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(e.index() == 3);
  }
}

TEST_CASE("render round-trip") {
  std::mt19937 rng(7);
  GradedRing r = std_ring({"x", "y", "z"});
  GradedRing rq = std_ring({"x", "y", "z"}, FieldSpec::rationals());
  for (int i = 0; i < 50; ++i) {
    for (const auto& ring : {r, rq}) {
      Poly p = random_poly(ring, rng, 4);
      CHECK(parse_poly(p.to_string(), ring) == p);
    }
  }
}

TEST_CASE("order comparisons") {
  GradedRing lexr = std_ring({"x", "y"}, FieldSpec::prime(31991), {OrderKind::Lex, {}});
  // lex: x^2 > x*y
  CHECK(lexr.compare(lexr.monomial({2, 0}), lexr.monomial({1, 1})) == Cmp::GT);
  Monomial m = lexr.monomial({1, 1});
  CHECK(lexr.compare(m, m) == Cmp::EQ);

  // grevlex, x > y > z: xz < y^2
  GradedRing gr = std_ring({"x", "y", "z"}, FieldSpec::prime(31991), {OrderKind::GRevLex, {}});
  CHECK(gr.compare(gr.monomial({1, 0, 1}), gr.monomial({0, 2, 0})) == Cmp::LT);
}

TEST_CASE("grevlex laws by enumeration") {
  // all degree <= 2 monomials in 3 variables: antisymmetry + transitivity +
  // compatibility with multiplication
  GradedRing gr = std_ring({"x", "y", "z"}, FieldSpec::prime(31991), {OrderKind::GRevLex, {}});
  std::vector<Monomial> ms;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b + a <= 2; ++b)
      for (int c = 0; a + b + c <= 2; ++c) ms.push_back(gr.monomial({a, b, c}));
  for (const auto& a : ms)
    for (const auto& b : ms) {
      Cmp ab = gr.compare(a, b);
      Cmp ba = gr.compare(b, a);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
      if (ab == Cmp::EQ) CHECK(a == b);
      for (const auto& c : ms) {
        if (ab == Cmp::GT && gr.compare(b, c) == Cmp::GT) CHECK(gr.compare(a, c) == Cmp::GT);
        // m1 < m2 => m*m1 < m*m2
        if (ab == Cmp::LT) CHECK(gr.compare(c * a, c * b) == Cmp::LT);
      }
    }
}

TEST_CASE("order laws randomized across kinds") {
  std::mt19937 rng(99);
  for (auto kind : {OrderKind::Lex, OrderKind::GRevLex, OrderKind::WGRevLex}) {
    GradedRing r = GradedRing::make({"x", "y", "z"}, {1, 2, 3}, FieldSpec::prime(31991),
                                    {kind, {}});
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_monomial(r, rng), b = random_monomial(r, rng),
               c = random_monomial(r, rng);
      Cmp ab = r.compare(a, b);
      CHECK(static_cast<int>(ab) == -static_cast<int>(r.compare(b, a)));
      if (ab == Cmp::EQ) CHECK(a == b);
      if (ab == Cmp::LT) CHECK(r.compare(c * a, c * b) == Cmp::LT);
      if (ab == Cmp::GT && r.compare(b, c) == Cmp::GT) CHECK(r.compare(a, c) == Cmp::GT);
    }
  }
}

TEST_CASE("poly arithmetic basics") {
  GradedRing r = std_ring({"x", "y"});
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  Poly f = x + y;
  CHECK((f + (-f)).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);
  GradedRing f5 = std_ring({"x"}, FieldSpec::prime(5));
  Poly three = Poly::from_int(f5, 3), two = Poly::from_int(f5, 2);
  CHECK(three * two == Poly::from_int(f5, 1));
}

TEST_CASE("poly arithmetic properties") {
  std::mt19937 rng(123);
  GradedRing r = std_ring({"x", "y", "z"});
  for (int i = 0; i < 1000; ++i) {
    Poly f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
  // homogeneous degrees add
  Poly f = parse_poly("x*y + z^2", r);
  Poly g = parse_poly("x + y - z", r);
  CHECK(*(f * g).homogeneous_degree() == 3);
}

TEST_CASE("monomial division") {
  GradedRing r = std_ring({"x", "y"});
  Poly f = parse_poly("x^2*y + x*y^2", r);
  Poly q = f.divide_by_monomial(r.monomial({1, 1}));
  CHECK(q == parse_poly("x + y", r));
  CHECK_THROWS_AS(f.divide_by_monomial(r.monomial({0, 2})), Error);
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(GradedRing::make({"x", "x"}, {1, 1}, FieldSpec::rationals()), Error);
  CHECK_THROWS_AS(GradedRing::make({"x"}, {0}, FieldSpec::rationals()), Error);
  CHECK_THROWS_AS(GradedRing::make({"1x"}, {1}, FieldSpec::rationals()), Error);
}
