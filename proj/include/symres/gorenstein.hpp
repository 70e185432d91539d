#pragma once

#include <nlohmann/json_fwd.hpp>

#include "symres/mult.hpp"

namespace symres {

struct DiamondResult {
  bool verified = false;
  std::string reason;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Certificate that coker(d_1) is a Gorenstein S-algebra of odd codimension
// c = 2m+1 and twist t, carried by a palindromic minimal free resolution with
// (-1)^m-symmetric middle map.
struct GorensteinCertificate {
  int codim = 0;
  int m = 0;
  long long twist = 0;
  int sign = 1;  // (-1)^m
  Resolution symmetric_res;
  std::optional<Vec> socle;        // sigma, coordinates in F_c^*(t)
  std::vector<ModuleMap> t_maps;   // t_0..t_c (duality/symmetrize path)
  BettiTable betti_table;
  std::vector<CheckRecord> transcript;
  std::string field;
  std::string method;  // "verify" | "symmetrize" | "averaging"
  unsigned seed = 0;

  bool all_checks_passed() const;
  nlohmann::ordered_json to_json() const;
};

// c = dim S - dim_S R, computed from the annihilator of the presentation.
long long codimension(const AlgebraOverS& A);

// length(res) == codimension and Ext^i(R,S) = 0 for i < c.
bool check_perfect(const AlgebraOverS& A, const Resolution& res);

// Partial sufficient check of the condition that S/ann -> R is an isomorphism
// at all minimal primes. Never returns a false positive.
DiamondResult check_diamond_partial(const AlgebraOverS& A);

// The unique twist making the resolution's degree tables palindromic.
long long discover_twist(const FreeComplex& c);

// Chain isomorphism psi : dualize(res, t) -> res lifting an S-module
// isomorphism Ext^c(R, S(t)) -> R; every level graded-invertible.
struct Identification {
  long long twist = 0;
  ChainMap psi;
  unsigned seed = 0;
};
std::optional<Identification> find_identification(const Resolution& res, long long twist,
                                                  unsigned seed, std::string* why = nullptr);

// Duality maps t_i(a)(b) = sigma(ab) and the sign identities; partial
// certificate (no splice yet). Throws NotGorenstein / TNotInvertible.
GorensteinCertificate duality_maps(const AlgebraOverS& A, const Resolution& res,
                                   const MultStructure& mult, long long twist,
                                   unsigned seed = 1);

// Full pipeline: perfection, twist discovery, multiplication, duality maps,
// symmetrized middle map, spliced certified resolution.
GorensteinCertificate symmetrize(const AlgebraOverS& A, const Resolution& res,
                                 unsigned seed = 1);

// Forward direction: certify an explicitly (skew-)symmetric palindromic
// resolution. Throws ShapeMismatch / MiddleMapNotSymmetric / DualNotExact.
GorensteinCertificate verify_symmetric_resolution(const Resolution& res);

// Independent construction: average a chain isomorphism with its reflected
// transpose instead of building the multiplication. Test oracle for
// symmetrize(); throws AveragedMapNotInvertible when the average degenerates.
GorensteinCertificate symmetrize_by_averaging(const AlgebraOverS& A, const Resolution& res,
                                              unsigned seed = 1);

// betti(i, j) == betti(c-i, -t-j) for every entry
bool betti_palindrome(const BettiTable& b, int c, long long t);

}  // namespace symres
