#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symres/groebner.hpp"

using namespace symres;

namespace {

GradedRing ring3(FieldSpec f = FieldSpec::prime(31991),
                 MonomialOrder ord = {OrderKind::WGRevLex, {}}) {
  return GradedRing::make({"x", "y", "z"}, {1, 1, 1}, f, ord);
}

std::vector<Poly> parse_all(const GradedRing& r, const std::vector<std::string>& ss) {
  std::vector<Poly> out;
  for (const auto& s : ss) out.push_back(parse_poly(s, r));
  return out;
}

// brute force: monomials of S^rank of given internal degree, as Vec basis
std::vector<Vec> degree_basis(const FreeModule& F, long long deg) {
  std::vector<Vec> out;
  const GradedRing& r = F.ring();
  int n = r.nvars();
  std::vector<int> e(n, 0);
  for (int comp = 0; comp < F.rank(); ++comp) {
    long long need = deg - F.degree(comp);
    if (need < 0) continue;
    // enumerate exponent vectors of weighted degree == need
    std::function<void(int, long long)> rec = [&](int pos, long long rem) {
      if (pos == n) {
        if (rem == 0)
          out.push_back(Vec::unit(r, F.rank(), comp,
                                  Poly::term(r, r.monomial(e), Scalar::one(r.field()))));
        return;
      }
      for (int k = 0; rem - static_cast<long long>(k) * r.weights()[pos] >= 0; ++k) {
        e[pos] = k;
        rec(pos + 1, rem - static_cast<long long>(k) * r.weights()[pos]);
      }
      e[pos] = 0;
    };
    rec(0, need);
  }
  return out;
}

}  // namespace

TEST_CASE("normal form examples") {
  GradedRing lex = ring3(FieldSpec::prime(31991), {OrderKind::Lex, {}});
  Poly g = parse_poly("x^2 - y", lex);
  GroebnerBasis G = buchberger_ideal(lex, {g});
  // NF(g, {g}) = 0
  CHECK(normal_form(g, G).is_zero());
  // NF(x^2, {x^2 - y}) = y (one division step)
  CHECK(normal_form(parse_poly("x^2", lex), G) == parse_poly("y", lex));
  // NF(y, {x}) = y
  GroebnerBasis Gx = buchberger_ideal(lex, {parse_poly("x", lex)});
  CHECK(normal_form(parse_poly("y", lex), Gx) == parse_poly("y", lex));
  // idempotence
  Poly v = parse_poly("x^2*y + x*y + y^2 + x + 1", lex);
  CHECK(normal_form(normal_form(v, G), G) == normal_form(v, G));
}

TEST_CASE("buchberger examples") {
  GradedRing r = ring3();
  // monomial ideal is its own reduced basis
  GroebnerBasis G = buchberger_ideal(r, parse_all(r, {"x", "y"}));
  CHECK(G.gens.size() == 2);

  // lex x>y: {x^2 - y, x} reduces to {x, y}
  GradedRing lex = ring3(FieldSpec::prime(31991), {OrderKind::Lex, {}});
  GroebnerBasis G2 = buchberger_ideal(lex, parse_all(lex, {"x^2 - y", "x"}));
  GroebnerBasis expect = buchberger_ideal(lex, parse_all(lex, {"x", "y"}));
  CHECK(ideal_equal(G2, expect));
  CHECK(G2.gens.size() == 2);

  // correctness oracle: inputs reduce to zero against the basis
  auto gens = parse_all(r, {"x^2 + y*z", "y^2 - x*z", "x*y + z^2"});
  GroebnerBasis G3 = buchberger_ideal(r, gens);
  for (const auto& f : gens) CHECK(normal_form(f, G3).is_zero());
}

TEST_CASE("syzygies") {
  GradedRing r = ring3();
  FreeModule F1(r, {0});
  // M = (x y): kernel generated by (y, -x)
  ModuleMap M(F1, FreeModule(r, {1, 1}),
              {{parse_poly("x", r), parse_poly("y", r)}});
  ModuleMap N = syzygies(M);
  CHECK(N.cols() == 1);
  CHECK(M.compose(N).is_zero());
  Vec expected(r, {parse_poly("y", r), parse_poly("-x", r)});
  bool matches = N.column(0) == expected || N.column(0) == -expected;
  CHECK(matches);

  // M = (f), f != 0: no syzygies over a domain
  ModuleMap Mf(F1, FreeModule(r, {2}), {{parse_poly("x^2 + y*z", r)}});
  CHECK(syzygies(Mf).cols() == 0);

  // M = (x^2  x*y) contains the syzygy (y, -x)
  ModuleMap M2(F1, FreeModule(r, {2, 2}),
               {{parse_poly("x^2", r), parse_poly("x*y", r)}});
  ModuleMap N2 = syzygies(M2);
  CHECK(M2.compose(N2).is_zero());
  GroebnerBasis syzgb = buchberger(M2.source(), N2.columns());
  CHECK(is_member(Vec(r, {parse_poly("y", r), parse_poly("-x", r)}), syzgb));
}

TEST_CASE("syzygies match brute-force kernel dimensions") {
  // degree-by-degree kernel of (x^2 xy) over F_p up to degree 4
  GradedRing r = GradedRing::make({"x", "y"}, {1, 1}, FieldSpec::prime(31991));
  FreeModule F1(r, {0});
  FreeModule F2(r, {2, 2});
  ModuleMap M(F1, F2, {{parse_poly("x^2", r), parse_poly("x*y", r)}});
  ModuleMap N = syzygies(M);
  GroebnerBasis syzgb = buchberger(F2, N.columns());
  GroebnerBasis imagegb = buchberger(F1, M.columns());
  for (long long deg = 2; deg <= 4; ++deg) {
    auto dom = degree_basis(F2, deg);
    // brute kernel dimension via rank over the prime field is overkill here;
    // instead check each brute basis element: v in ker(M) iff M v == 0, and
    // then v must reduce to zero against the syzygy basis
    int kernel_dim = 0, captured = 0;
    for (size_t a = 0; a < dom.size(); ++a) {
      // single basis monomials rarely lie in the kernel; test 2-term combos too
      Vec va = M.apply(dom[a]);
      if (va.is_zero()) {
        ++kernel_dim;
        if (is_member(dom[a], syzgb)) ++captured;
        continue;
      }
      for (size_t b = a + 1; b < dom.size(); ++b) {
        Vec vb = M.apply(dom[b]);
        if ((va + vb).is_zero()) {
          ++kernel_dim;
          if (is_member(dom[a] + dom[b], syzgb)) ++captured;
        }
        if ((va - vb).is_zero()) {
          ++kernel_dim;
          if (is_member(dom[a] - dom[b], syzgb)) ++captured;
        }
      }
    }
    CHECK(kernel_dim == captured);
  }
  (void)imagegb;
}

TEST_CASE("lift_through") {
  GradedRing r = ring3();
  FreeModule F1(r, {0});
  ModuleMap M(F1, FreeModule(r, {1, 1}), {{parse_poly("x", r), parse_poly("y", r)}});
  // B = M: identity is a valid lift; any valid lift satisfies M X = B
  ModuleMap X = lift_through(M, M);
  CHECK(M.compose(X) == M);
  // B = 0
  ModuleMap Z = lift_through(M, ModuleMap::zero(F1, FreeModule(r, {3})));
  CHECK(M.compose(Z).is_zero());
  // B = (x^2 + y^2)
  ModuleMap B(F1, FreeModule(r, {2}), {{parse_poly("x^2 + y^2", r)}});
  ModuleMap X2 = lift_through(M, B);
  CHECK(M.compose(X2) == B);
  // z is not in (x, y)
  ModuleMap Bad(F1, FreeModule(r, {1}), {{parse_poly("z", r)}});
  CHECK_THROWS_AS(lift_through(M, Bad), Error);
}

TEST_CASE("hilbert series and dimension") {
  GradedRing r2 = GradedRing::make({"x", "y"}, {1, 1}, FieldSpec::prime(31991));
  // zero ideal in k[x,y]: series 1/(1-T)^2, dim 2
  GroebnerBasis zero = buchberger_ideal(r2, {});
  HilbertData h = hilbert_series(zero);
  CHECK(h.numerator == std::map<long long, long long>{{0, 1}});
  CHECK(h.dimension() == 2);
  auto coeffs = h.expand(5);
  for (int d = 0; d <= 5; ++d) CHECK(coeffs[d] == d + 1);

  // ideal (x): dim 1
  GroebnerBasis ix = buchberger_ideal(r2, {parse_poly("x", r2)});
  CHECK(krull_dimension(ix) == 1);

  // brute-force graded dimension cross-check on a non-trivial ideal
  GradedRing r = ring3();
  auto gens = parse_all(r, {"x^2 - y*z", "x*y"});
  GroebnerBasis G = buchberger_ideal(r, gens);
  HilbertData hg = hilbert_series(G);
  auto got = hg.expand(10);
  // brute force: count standard monomials (not divisible by any lead monomial)
  FreeModule F1(r, {0});
  for (long long d = 0; d <= 10; ++d) {
    long long count = 0;
    for (const auto& v : degree_basis(F1, d))
      if (!normal_form(v[0], G).is_zero() || v[0].is_zero()) {
        // v is a monomial: it is standard iff its NF is itself
        if (normal_form(v[0], G) == v[0]) ++count;
      }
    CHECK(got[d] == count);
  }
}

TEST_CASE("weighted hilbert series") {
  GradedRing g = GradedRing::make({"x", "y"}, {2, 3}, FieldSpec::prime(31991));
  GroebnerBasis zero = buchberger_ideal(g, {});
  auto coeffs = hilbert_series(zero).expand(12);
  // dims of k[x,y], deg x=2, deg y=3: 1,0,1,1,1,1,2,1,2,2,2,2,3
  std::vector<long long> expect{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3};
  for (int d = 0; d <= 12; ++d) CHECK(coeffs[d] == expect[d]);
}

TEST_CASE("ideal equality and annihilator") {
  GradedRing r2 = GradedRing::make({"x", "y"}, {1, 1}, FieldSpec::prime(31991));
  // (x, y) == (y, x + y)
  CHECK(ideal_equal(r2, {parse_poly("x", r2), parse_poly("y", r2)},
                    {parse_poly("y", r2), parse_poly("x + y", r2)}));
  CHECK_FALSE(ideal_equal(r2, {parse_poly("x", r2)}, {parse_poly("y", r2)}));

  // ann of coker(x·id on S^1) = (x)
  FreeModule F(r2, {0});
  ModuleMap mx(F, FreeModule(r2, {1}), {{parse_poly("x", r2)}});
  GroebnerBasis ann = annihilator(mx);
  CHECK(ideal_equal(ann, buchberger_ideal(r2, {parse_poly("x", r2)})));

  // ann of S ⊕ S/(x): intersection (1) ∩ (x) = (x)
  FreeModule F2(r2, {0, 0});
  ModuleMap pres(F2, FreeModule(r2, {1}),
                 {{Poly::zero(r2)}, {parse_poly("x", r2)}});
  GroebnerBasis ann2 = annihilator(pres);
  CHECK(ann2.gens.empty());  // ann(S ⊕ S/(x)) = 0 because of the free summand
}

TEST_CASE("buchberger S-pair soundness on random inputs") {
  std::mt19937 rng(2024);
  GradedRing r = ring3();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) {
      std::vector<Term> ts;
      for (int t = 0; t < 3; ++t) {
        std::vector<int> e(3, 0);
        int deg = 2;
        for (int d = 0; d < deg; ++d) e[rng() % 3]++;
        ts.push_back({r.monomial(e), Scalar::from_int(static_cast<long long>(rng() % 7) - 3,
                                                      r.field())});
      }
      Poly g = Poly::from_terms(r, ts);
      if (!g.is_zero()) gens.push_back(g);
    }
    GroebnerBasis G = buchberger_ideal(r, gens);
    for (const auto& f : gens) CHECK(normal_form(f, G).is_zero());
    // pairwise S-polynomials reduce to zero
    for (size_t a = 0; a < G.gens.size(); ++a)
      for (size_t b = a + 1; b < G.gens.size(); ++b) {
        const Poly& fa = G.gens[a][0];
        const Poly& fb = G.gens[b][0];
        Monomial l = fa.leading_monomial().lcm(fb.leading_monomial(), r.weights());
        Poly s = fa.times_monomial(l.divide_by(fa.leading_monomial()),
                                   fa.leading_coeff().inverse()) -
                 fb.times_monomial(l.divide_by(fb.leading_monomial()),
                                   fb.leading_coeff().inverse());
        CHECK(normal_form(s, G).is_zero());
      }
  }
}
