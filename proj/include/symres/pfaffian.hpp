#pragma once

#include "symres/gorenstein.hpp"

namespace symres {

// Square matrix with A^T = -A and zero diagonal, entries homogeneous.
class SkewMatrix {
 public:
  // validates skewness; throws NotSkew
  SkewMatrix(GradedRing ring, std::vector<std::vector<Poly>> entries);

  int size() const { return static_cast<int>(a_.size()); }
  const GradedRing& ring() const { return ring_; }
  const Poly& entry(int i, int j) const { return a_[i][j]; }

  // delete row and column `k`
  SkewMatrix minor_matrix(int k) const;

 private:
  GradedRing ring_;
  std::vector<std::vector<Poly>> a_;
};

// pf(A); zero for odd size. pf(A)^2 = det(A).
Poly pfaffian(const SkewMatrix& A);

// v_i = (-1)^{i+1} pf(A with row/column i deleted), 1-indexed signs, so the
// 3x3 case returns (a_{23}, -a_{13}, a_{12}); satisfies A·v = 0.
std::vector<Poly> submaximal_pfaffians(const SkewMatrix& A);

// 0 <- S <- F <- F^*(t) <- S(t') <- 0 with middle map A and the Pfaffian
// vector at both ends; for odd-size A with codimension-3 Pfaffian ideal this
// is the classical Gorenstein resolution. gen_degrees are the degrees of F.
FreeComplex buchsbaum_eisenbud_complex(const SkewMatrix& A,
                                       const std::vector<long long>& gen_degrees);

// (R.C.): the ideal of (h-1)-minors of d1 equals that of d1 with its first
// row deleted.
bool check_rank_condition(const ModuleMap& d1);

// all k x k minors of the matrix
std::vector<Poly> minor_ideal(const ModuleMap& M, int k);

// S-module presentation of T/I for the designated subring variables.
AlgebraOverS finite_algebra_presentation(const GradedRing& T, const std::vector<Poly>& t_ideal,
                                         const std::vector<std::string>& s_vars);

struct AlgebraRelation {
  Poly relation;      // in the extended ring S[new generators]
  std::string kind;   // "column" | "square"
  int generator = 0;  // the F_0' generator it concerns (square relations)
};

struct AlgebraRelations {
  GradedRing extended_ring;
  std::vector<std::string> new_vars;  // names of the adjoined generators
  std::vector<AlgebraRelation> relations;
};

// Defining relations of R as a k-algebra over the extended ring S[x_g]:
// the columns of d_1 read as linear forms in the x_g, plus for every pair of
// F_0' generators the quadratic relation x_g x_h - (mu_0 expansion).
AlgebraRelations recover_algebra_relations(const GorensteinCertificate& cert,
                                           const AlgebraOverS& A);

}  // namespace symres
