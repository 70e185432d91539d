#pragma once

#include <nlohmann/json_fwd.hpp>

#include "symres/groebner.hpp"

namespace symres {

// Complex of graded free modules F_0 <- F_1 <- ... <- F_len with differentials
// d_i : F_i -> F_{i-1}; d∘d = 0 is validated at construction.
class FreeComplex {
 public:
  FreeComplex() = default;
  FreeComplex(std::vector<FreeModule> modules, std::vector<ModuleMap> differentials);

  int length() const { return static_cast<int>(modules_.size()) - 1; }
  const FreeModule& module(int i) const { return modules_[i]; }
  const ModuleMap& d(int i) const { return diffs_[i - 1]; }  // 1 <= i <= length
  const GradedRing& ring() const { return modules_[0].ring(); }

  bool is_minimal() const;  // no unit entries in any differential

 private:
  std::vector<FreeModule> modules_;
  std::vector<ModuleMap> diffs_;
};

struct Resolution {
  FreeComplex complex;
  ModuleMap presentation;  // the presented module's matrix (coker = module)
  bool minimal = false;
};

struct BettiTable {
  // (homological index, internal degree) -> rank
  std::map<std::pair<int, long long>, long long> entries;

  long long rank(int i, long long j) const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  nlohmann::ordered_json to_json() const;
  std::string to_string() const;
};

// chain map f_i : A_i -> B_i with commuting squares (validated)
struct ChainMap {
  std::vector<ModuleMap> maps;
};

// homotopy h_i : A_i -> B_{i+1}
struct Homotopy {
  std::vector<ModuleMap> maps;
};

// Minimal free resolution of coker(presentation); iterated syzygies with
// minimal-generator pruning at every step. Throws LengthExceeded when the
// kernel is still nonzero at max_length.
Resolution resolve(const ModuleMap& presentation, int max_length);

// Homotopy-equivalent complex with all unit entries cancelled.
FreeComplex minimalize(const FreeComplex& c);

// Position i holds Hom(F_{c-i}, S)(t); differentials are plain transposes.
FreeComplex dualize(const FreeComplex& c, long long twist);

// true iff ker d_i ⊆ im d_{i+1}, for 0 < i < length
bool homology_is_zero(const FreeComplex& c, int i);
// kernel of the leftmost differential d_length is zero
bool left_end_injective(const FreeComplex& c);
// exact at every interior position and at the left end
bool is_exact_resolution_shape(const FreeComplex& c);

// Lift f0 (a map of augmentation targets A_0 -> B_0 descending to cokernels)
// to a chain map between the resolutions.
ChainMap lift_map(const ModuleMap& f0, const Resolution& resA, const Resolution& resB);

// h with f = d h + h d, for a chain map f : A -> B inducing zero on cokernels.
Homotopy null_homotopy(const ChainMap& f, const Resolution& resA, const Resolution& resB);

BettiTable betti(const FreeComplex& c);
HilbertData hilbert_from_betti(const BettiTable& b, const GradedRing& ring);

// minimal homogeneous generators of the submodule generated by cols
// (degree-greedy membership pruning)
std::vector<Vec> minimal_generators(const FreeModule& F, std::vector<Vec> cols);
// free module whose generator degrees match the given homogeneous columns
FreeModule module_for_columns(const FreeModule& ambient, const std::vector<Vec>& cols);

}  // namespace symres
