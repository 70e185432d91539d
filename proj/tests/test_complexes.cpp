#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "symres/complexes.hpp"

using namespace symres;

namespace {

GradedRing ring3() {
  return GradedRing::make({"x", "y", "z"}, {1, 1, 1}, FieldSpec::prime(31991));
}

ModuleMap row_matrix(const GradedRing& r, const std::vector<std::string>& entries) {
  std::vector<Poly> row;
  std::vector<long long> degs;
  for (const auto& s : entries) {
    Poly p = parse_poly(s, r);
    row.push_back(p);
    degs.push_back(*p.homogeneous_degree());
  }
  return ModuleMap(FreeModule(r, {0}), FreeModule(r, degs), {row});
}

}  // namespace

TEST_CASE("resolve Koszul complex of the residue field") {
  GradedRing r = ring3();
  Resolution res = resolve(row_matrix(r, {"x", "y", "z"}), 8);
  const FreeComplex& c = res.complex;
  CHECK(c.length() == 3);
  CHECK(c.module(0).degrees() == std::vector<long long>{0});
  CHECK(c.module(1).sorted_degrees() == std::vector<long long>{1, 1, 1});
  CHECK(c.module(2).sorted_degrees() == std::vector<long long>{2, 2, 2});
  CHECK(c.module(3).sorted_degrees() == std::vector<long long>{3});
  CHECK(c.is_minimal());
  for (int i = 1; i < 3; ++i) CHECK(homology_is_zero(c, i));
  CHECK(left_end_injective(c));
}

TEST_CASE("resolve principal ideal") {
  GradedRing r = GradedRing::make({"x"}, {1}, FieldSpec::prime(31991));
  Resolution res = resolve(row_matrix(r, {"x"}), 4);
  CHECK(res.complex.length() == 1);
  CHECK(res.complex.module(1).degrees() == std::vector<long long>{1});
}

TEST_CASE("betti tables and JSON") {
  GradedRing r = ring3();
  Resolution res = resolve(row_matrix(r, {"x", "y", "z"}), 8);
  BettiTable b = betti(res.complex);
  CHECK(b.rank(0, 0) == 1);
  CHECK(b.rank(1, 1) == 3);
  CHECK(b.rank(2, 2) == 3);
  CHECK(b.rank(3, 3) == 1);
  auto js = b.to_json();
  CHECK(js["betti"][1]["degrees"]["1"] == 3);
  // betti is independent of generator order
  Resolution res2 = resolve(row_matrix(r, {"z", "x", "y"}), 8);
  CHECK(betti(res2.complex) == b);
}

TEST_CASE("hilbert_from_betti equals groebner series") {
  GradedRing r = ring3();
  Resolution res = resolve(row_matrix(r, {"x", "y", "z"}), 8);
  HilbertData hb = hilbert_from_betti(betti(res.complex), r);
  CHECK(hb.numerator == std::map<long long, long long>{{0, 1}, {1, -3}, {2, 3}, {3, -1}});
  GroebnerBasis G = buchberger_ideal(r, {parse_poly("x", r), parse_poly("y", r),
                                         parse_poly("z", r)});
  HilbertData hs = hilbert_series(G);
  hs.weights = r.weights();
  CHECK(hs.expand(8) == hb.expand(8));
  // zero complex
  FreeComplex zero({FreeModule(r, {})}, {});
  CHECK(hilbert_from_betti(betti(zero), r).numerator.empty());
}

TEST_CASE("minimalize cancels unit blocks") {
  GradedRing r = ring3();
  FreeModule F0(r, {0, 1});
  FreeModule F1(r, {1, 1});
  ModuleMap d1(F0, F1,
               {{parse_poly("x", r), parse_poly("y", r)},
                {Poly::from_int(r, 1), Poly::zero(r)}});
  FreeComplex c({F0, F1}, {d1});
  CHECK_FALSE(c.is_minimal());
  FreeComplex m = minimalize(c);
  CHECK(m.is_minimal());
  CHECK(m.module(0).rank() == 1);
  CHECK(m.module(1).rank() == 1);

  // already minimal: shape unchanged
  FreeComplex k = resolve(row_matrix(r, {"x", "y", "z"}), 8).complex;
  FreeComplex km = minimalize(k);
  CHECK(betti(km) == betti(k));
}

TEST_CASE("minimalize matches resolve on non-minimal syzygy output") {
  GradedRing r = ring3();
  ModuleMap pres = row_matrix(r, {"x", "y", "z"});
  ModuleMap d1 = pres;
  ModuleMap d2 = syzygies(d1);
  ModuleMap d3 = syzygies(d2);
  ModuleMap d4 = syzygies(d3);
  std::vector<FreeModule> mods{d1.target(), d1.source(), d2.source(), d3.source()};
  std::vector<ModuleMap> diffs{d1, d2, d3};
  if (d4.cols() != 0) {
    mods.push_back(d4.source());
    diffs.push_back(d4);
    ModuleMap d5 = syzygies(d4);
    CHECK(d5.cols() == 0);
  }
  FreeComplex raw(mods, diffs);
  FreeComplex m = minimalize(raw);
  CHECK(betti(m) == betti(resolve(pres, 8).complex));
}

TEST_CASE("dualize") {
  GradedRing r = ring3();
  FreeComplex k = resolve(row_matrix(r, {"x", "y", "z"}), 8).complex;
  // biduality
  FreeComplex dd = dualize(dualize(k, -3), -3);
  CHECK(betti(dd) == betti(k));
  for (int i = 1; i <= k.length(); ++i) CHECK(dd.d(i) == k.d(i));
  // Koszul complex is self-dual at twist -3
  FreeComplex d = dualize(k, -3);
  CHECK(betti(d) == betti(k));
  // dual of a resolution of a perfect module is exact off the end
  for (int i = 1; i < d.length(); ++i) CHECK(homology_is_zero(d, i));
}

TEST_CASE("lift_map and null_homotopy") {
  GradedRing r = ring3();
  ModuleMap pres = row_matrix(r, {"x", "y", "z"});
  Resolution res = resolve(pres, 8);
  ModuleMap id0 = ModuleMap::identity(res.complex.module(0));
  ChainMap f = lift_map(id0, res, res);
  for (const auto& fi : f.maps) CHECK(fi.is_graded_invertible());
  for (int i = 1; i <= res.complex.length(); ++i)
    CHECK(f.maps[i - 1].compose(res.complex.d(i)) == res.complex.d(i).compose(f.maps[i]));

  // null homotopy of the zero chain map succeeds
  ChainMap zero;
  for (int i = 0; i <= res.complex.length(); ++i)
    zero.maps.push_back(ModuleMap::zero(res.complex.module(i), res.complex.module(i)));
  Homotopy h = null_homotopy(zero, res, res);
  // verify f = d h + h d degreewise
  for (int i = 0; i < static_cast<int>(zero.maps.size()); ++i) {
    ModuleMap acc = ModuleMap::zero(res.complex.module(i), res.complex.module(i));
    if (i + 1 <= res.complex.length()) acc = acc + res.complex.d(i + 1).compose(h.maps[i]);
    if (i >= 1) acc = acc + h.maps[i - 1].compose(res.complex.d(i));
    CHECK(acc == zero.maps[i]);
  }

  // two lifts of the same f0 differ by a null homotopy
  ChainMap g = lift_map(id0, res, res);
  ChainMap diff;
  for (size_t i = 0; i < f.maps.size(); ++i) diff.maps.push_back(f.maps[i] - g.maps[i]);
  CHECK_NOTHROW(null_homotopy(diff, res, res));
}

TEST_CASE("lift of multiplication map commutes") {
  GradedRing r2 = GradedRing::make({"x", "y"}, {1, 1}, FieldSpec::prime(31991));
  ModuleMap pres2(FreeModule(r2, {0}), FreeModule(r2, {2, 1}),
                  {{parse_poly("x^2", r2), parse_poly("y", r2)}});
  Resolution res2 = resolve(pres2, 8);
  // multiplication by x as a chain self-map of the shifted resolution
  std::vector<FreeModule> smods;
  std::vector<ModuleMap> sdiffs;
  for (int i = 0; i <= res2.complex.length(); ++i) {
    std::vector<long long> dg = res2.complex.module(i).degrees();
    for (auto& d : dg) d += 1;
    smods.push_back(FreeModule(r2, dg));
  }
  for (int i = 1; i <= res2.complex.length(); ++i) {
    std::vector<std::vector<Poly>> ent(smods[i - 1].rank());
    for (int a = 0; a < res2.complex.d(i).rows(); ++a)
      for (int b = 0; b < res2.complex.d(i).cols(); ++b)
        ent[a].push_back(res2.complex.d(i).entry(a, b));
    sdiffs.push_back(ModuleMap(smods[i - 1], smods[i], ent));
  }
  Resolution shifted{FreeComplex(smods, sdiffs), pres2, true};
  ModuleMap mulx(res2.complex.module(0), smods[0], {{parse_poly("x", r2)}});
  ChainMap fx = lift_map(mulx, shifted, res2);
  for (int i = 1; i <= shifted.complex.length(); ++i)
    CHECK(fx.maps[i - 1].compose(shifted.complex.d(i)) ==
          res2.complex.d(i).compose(fx.maps[i]));
}

TEST_CASE("homology detects failure") {
  GradedRing r = ring3();
  FreeModule F0(r, {0});
  FreeModule F1(r, {1, 1});
  FreeModule F2(r, {2});
  ModuleMap d1(F0, F1, {{parse_poly("x", r), parse_poly("y", r)}});
  ModuleMap d2 = ModuleMap::zero(F1, F2);
  FreeComplex c({F0, F1, F2}, {d1, d2});
  CHECK_FALSE(homology_is_zero(c, 1));
}
