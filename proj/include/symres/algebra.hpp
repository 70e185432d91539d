#pragma once

#include <optional>

#include "symres/complexes.hpp"

namespace symres {

// A finite graded algebra R over a polynomial subring S, presented either as
// T/I with a designated set of S-variables, or directly by an S-module
// presentation with a distinguished unit generator slot (index 0, degree 0).
//
// Either way the object exposes: the S-module generators of R (degrees, with
// the class of 1 first), a minimal homogeneous presentation matrix over S, and
// representatives in F_0 of products of generators.
class AlgebraOverS {
 public:
  static AlgebraOverS from_quotient(const GradedRing& T, std::vector<Poly> ideal_gens,
                                    const std::vector<std::string>& s_vars);
  static AlgebraOverS from_presentation(const ModuleMap& presentation,
                                        std::vector<std::string> gen_names = {});

  const GradedRing& s_ring() const { return s_ring_; }
  const FreeModule& f0() const { return f0_; }
  const ModuleMap& presentation() const { return pres_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  const GroebnerBasis& relations_gb() const { return pres_gb_; }

  // F_0 representative of (generator i)·(generator j) in R
  const Vec& product_in_f0(int i, int j) const;
  bool is_zero_in_r(const Vec& v) const;
  HilbertData hilbert() const;

  bool has_quotient_data() const { return t_ring_.valid(); }
  const GradedRing& t_ring() const { return t_ring_; }
  const std::vector<Poly>& t_ideal() const { return t_ideal_; }
  // block-order basis used for normal forms in T
  const GroebnerBasis& t_gb() const { return t_gb_; }
  // representative of generator k as an element of T
  const Poly& generator_representative(int k) const { return gen_reps_[k]; }
  // rewrite a T element over the S-module generators; exact
  Vec express_in_generators(const Poly& t_elem) const;
  // indices of the S variables inside T (t_ring variable order)
  const std::vector<int>& s_var_indices() const { return s_var_idx_; }
  // carry an S polynomial into T
  Poly s_to_t(const Poly& p) const;

 private:
  AlgebraOverS() = default;
  void build_products_by_lifting();
  Vec rewrite_standard_monomial(const Monomial& u) const;

  GradedRing s_ring_;
  FreeModule f0_;
  ModuleMap pres_;
  GroebnerBasis pres_gb_;  // of the column span of pres_ (for membership in R)
  std::vector<std::string> gen_names_;
  mutable std::vector<std::vector<Vec>> products_;

  // quotient-mode data
  GradedRing t_ring_;       // with the original order
  GradedRing t_elim_;       // same ring, block elimination order
  std::vector<Poly> t_ideal_;
  GroebnerBasis t_gb_;      // GB of the ideal in t_elim_
  std::vector<Poly> gen_reps_;
  std::vector<int> s_var_idx_;       // S index -> T index
  std::vector<int> t_to_s_var_;      // T index -> S index or -1
  mutable std::map<std::vector<int>, Vec> rewrite_cache_;
};

}  // namespace symres
