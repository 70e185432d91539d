#pragma once

#include "symres/algebra.hpp"

namespace symres {

// Free-module realization of one homological level of F ⊗ F. Basis element
// (i, a, j, b) is (generator a of F_i) ⊗ (generator b of F_j) with i + j = n.
struct TensorLevel {
  struct Pair {
    int i, a, j, b;
  };
  std::vector<Pair> basis;
  FreeModule module;

  int index_of(int i, int a, int j, int b) const;
};

// One level of the symmetric square S2(F) = (F ⊗ F)/M. Basis: (i, a, j, b)
// with i < j; on the diagonal i == j the pairs are a<b (wedge, i odd) or
// a<=b (symmetric, i even).
struct SymLevel {
  struct Pair {
    int i, a, j, b;
  };
  std::vector<Pair> basis;
  FreeModule module;

  int index_of(int i, int a, int j, int b) const;
};

// S2(F) in homological degrees 0..top with the induced differentials.
struct SymSquare {
  std::vector<SymLevel> levels;      // 0..top
  std::vector<ModuleMap> delta_bar;  // delta_bar[n]: levels[n] -> levels[n-1], n >= 1
};

// The multiplication mu: F ⊗ F -> F on a minimal free resolution, built
// through homological degree top, together with its factorization
// mu = beta ∘ pi through the symmetric square.
struct MultStructure {
  int top = 0;
  std::vector<TensorLevel> tensor;  // 0..top
  std::vector<ModuleMap> delta;     // tensor differential, 1..top (index n-1... use [n])
  SymSquare sym;
  std::vector<ModuleMap> pi;    // tensor[n] -> sym[n]
  std::vector<ModuleMap> beta;  // sym[n] -> F_n
  std::vector<ModuleMap> mu;    // tensor[n] -> F_n

  // value of mu on a single basis tensor (gen a of F_i) ⊗ (gen b of F_j)
  Vec mu_on(int i, int a, int j, int b) const;
};

TensorLevel tensor_level(const FreeComplex& F, int n, int top);
ModuleMap tensor_delta(const FreeComplex& F, const TensorLevel& from, const TensorLevel& to);
SymSquare sym_square(const FreeComplex& F, int top);

// Prop-2.1-style construction: chain map with Leibniz rule, e_0 unit, and
// graded commutativity, lifted from the products of the algebra's generators.
MultStructure build_multiplication(const AlgebraOverS& A, const Resolution& res);

// exact verification helpers
bool check_leibniz(const MultStructure& m, const FreeComplex& F);
bool check_unit(const MultStructure& m, const FreeComplex& F);
bool check_commutativity(const MultStructure& m, const FreeComplex& F);
// delta(M) ⊆ M on the graded-commutativity relation generators
bool check_relations_stable(const MultStructure& m, const FreeComplex& F);
// builds the null homotopy for mu∘(mu⊗id) - mu∘(id⊗mu); throws on failure
void check_homotopy_associativity(const MultStructure& m, const FreeComplex& F);

}  // namespace symres
