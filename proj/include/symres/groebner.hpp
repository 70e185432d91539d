#pragma once

#include <map>
#include <memory>

#include "symres/module.hpp"

namespace symres {

// Order on module terms (component, monomial). Components >= split form a
// "tail" block that every head-block term dominates; the tail carries either a
// position-over-term order or a Schreyer order induced by recorded lead terms.
// When elim_vars is set, terms whose monomial touches an eliminated variable
// dominate all terms that do not (module elimination order).
struct ModuleTermOrder {
  GradedRing ring;
  int split = -1;  // -1: no tail block
  struct Lead {
    int comp;
    Monomial m;
  };
  std::vector<Lead> tail_leads;  // Schreyer leads, indexed by comp - split; may be empty
  std::vector<std::uint8_t> elim_vars;  // empty: no elimination block

  // position-over-term: smaller component index wins, then ring order
  static ModuleTermOrder pot(GradedRing ring) { return {std::move(ring), -1, {}, {}}; }
  // eliminate the flagged variables across all components
  static ModuleTermOrder elimination(GradedRing ring, std::vector<std::uint8_t> elim) {
    return {std::move(ring), -1, {}, std::move(elim)};
  }

  Cmp compare(int ca, const Monomial& ma, int cb, const Monomial& mb) const;
};

// Reduced Groebner basis of a submodule of a graded free module (rank 1 for
// ideals), position-over-term.
struct GroebnerBasis {
  FreeModule module;       // ambient free module
  std::vector<Vec> gens;   // reduced, lead coefficients 1, sorted by lead term
  bool reduced = true;
  bool homogeneous = true;  // all input generators homogeneous

  const GradedRing& ring() const { return module.ring(); }
  bool is_zero_ideal() const { return gens.empty(); }
};

GroebnerBasis buchberger(const FreeModule& F, const std::vector<Vec>& gens);
GroebnerBasis buchberger_ideal(const GradedRing& r, const std::vector<Poly>& gens);

// reduced Groebner generators under an arbitrary module term order (the
// GroebnerBasis wrapper assumes position-over-term, so this returns raw
// columns instead)
std::vector<Vec> groebner_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                     const ModuleTermOrder& ord);

Vec normal_form(const Vec& v, const GroebnerBasis& G);
Poly normal_form(const Poly& f, const GroebnerBasis& G);
bool is_member(const Vec& v, const GroebnerBasis& G);
bool is_member(const Poly& f, const GroebnerBasis& G);

// Solver for M x = b with b in the column span of M; also produces syzygies.
// Built once per matrix, reused across many right-hand sides.
class LiftSolver {
 public:
  explicit LiftSolver(const ModuleMap& M, bool with_syzygies = false);
  ~LiftSolver();
  LiftSolver(LiftSolver&&) noexcept;

  // x with M x = b, or nullopt when b is not in the image
  std::optional<Vec> lift(const Vec& b) const;
  // Groebner basis of the column span of M
  const GroebnerBasis& image_basis() const;
  // generators of ker M as columns (Schreyer-order computation)
  const std::vector<Vec>& syzygy_generators() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Homogeneous matrix N with M∘N = 0 whose columns generate ker(M).
ModuleMap syzygies(const ModuleMap& M);
// Homogeneous X with M·X = B; throws NotInImage(column) when unsolvable.
ModuleMap lift_through(const ModuleMap& M, const ModuleMap& B);

// Hilbert series numerator over the weight denominator prod(1 - T^{w_i}).
struct HilbertData {
  std::map<long long, long long> numerator;  // degree -> coefficient
  std::vector<int> weights;

  // graded dimension counts of the represented series, degrees 0..bound
  std::vector<long long> expand(int bound) const;
  long long dimension() const;   // pole order at T = 1
  Rational multiplicity() const; // leading coefficient at T = 1
  bool operator==(const HilbertData& o) const;
  std::string to_string() const;
};

// Hilbert series of F/in(M) (for ideals: S/in(I)).
HilbertData hilbert_series(const GroebnerBasis& gb);
// equality as rational functions (cross-multiplied numerators), so series over
// different ambient rings compare correctly
bool same_series(const HilbertData& a, const HilbertData& b);
// Krull dimension of F/M via the initial module's variable support.
long long krull_dimension(const GroebnerBasis& gb);

bool ideal_equal(const GroebnerBasis& I, const GroebnerBasis& J);
bool ideal_equal(const GradedRing& r, const std::vector<Poly>& I, const std::vector<Poly>& J);

// generators of I ∩ J
std::vector<Poly> intersect_ideals(const GradedRing& r, const std::vector<Poly>& I,
                                   const std::vector<Poly>& J);
// generators of (span(M) : v) = {s in S : s·v in span(M)}
std::vector<Poly> submodule_colon(const ModuleMap& M, const Vec& v);
// ann of coker(presentation), as a reduced Groebner basis
GroebnerBasis annihilator(const ModuleMap& presentation);

}  // namespace symres
