#pragma once

#include <vector>

#include "symres/poly.hpp"

namespace symres {

// Graded free module ⊕_i S(-g_i); generator i has degree g_i. Generator order
// is significant (it indexes matrix rows/columns); sorted_degrees() gives the
// canonical multiset view.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(GradedRing ring, std::vector<long long> degrees)
      : ring_(std::move(ring)), degs_(std::move(degrees)) {}

  const GradedRing& ring() const { return ring_; }
  int rank() const { return static_cast<int>(degs_.size()); }
  long long degree(int i) const { return degs_[i]; }
  const std::vector<long long>& degrees() const { return degs_; }
  std::vector<long long> sorted_degrees() const;

  // Hom(-, S)(t): generator degrees -(g_i + t), same index order
  FreeModule dual(long long twist) const;

  bool same_module(const FreeModule& o) const {
    return ring_.same_ring(o.ring_) && degs_ == o.degs_;
  }
  bool same_degrees_sorted(const FreeModule& o) const {
    return sorted_degrees() == o.sorted_degrees();
  }

 private:
  GradedRing ring_;
  std::vector<long long> degs_;
};

// Element of a free module: dense vector of polynomials.
class Vec {
 public:
  Vec() = default;
  Vec(GradedRing ring, std::vector<Poly> comps)
      : ring_(std::move(ring)), c_(std::move(comps)) {}
  static Vec zero(const GradedRing& r, int rank);
  static Vec unit(const GradedRing& r, int rank, int i, const Poly& value);

  const GradedRing& ring() const { return ring_; }
  int rank() const { return static_cast<int>(c_.size()); }
  const Poly& operator[](int i) const { return c_[i]; }
  Poly& operator[](int i) { return c_[i]; }
  const std::vector<Poly>& comps() const { return c_; }

  bool is_zero() const;
  Vec operator-() const;
  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  Vec scaled(const Scalar& c) const;
  Vec times_poly(const Poly& p) const;
  bool operator==(const Vec& o) const;

  // homogeneous of some degree D with respect to gen degrees? (zero: yes)
  bool is_homogeneous(const FreeModule& F) const;
  // degree D if homogeneous nonzero
  std::optional<long long> homogeneous_degree(const FreeModule& F) const;

 private:
  GradedRing ring_;
  std::vector<Poly> c_;
};

// Degree-0 homogeneous map of graded free modules, stored as a
// (target rank) x (source rank) matrix of polynomials. Entry (i,j) is zero or
// homogeneous of degree g_j(source) - g_i(target).
class ModuleMap {
 public:
  ModuleMap() = default;
  // validates homogeneity; throws DegreesInconsistent
  ModuleMap(FreeModule target, FreeModule source, std::vector<std::vector<Poly>> entries);

  static ModuleMap zero(const FreeModule& target, const FreeModule& source);
  static ModuleMap identity(const FreeModule& F);
  // build from columns
  static ModuleMap from_columns(const FreeModule& target, const FreeModule& source,
                                const std::vector<Vec>& cols);

  const FreeModule& source() const { return src_; }
  const FreeModule& target() const { return tgt_; }
  const GradedRing& ring() const { return tgt_.ring(); }
  int rows() const { return tgt_.rank(); }
  int cols() const { return src_.rank(); }
  const Poly& entry(int i, int j) const { return a_[i][j]; }

  Vec column(int j) const;
  std::vector<Vec> columns() const;
  Vec apply(const Vec& v) const;
  ModuleMap compose(const ModuleMap& inner) const;  // this ∘ inner
  ModuleMap operator*(const ModuleMap& inner) const { return compose(inner); }
  friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
  friend ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);
  ModuleMap scaled(const Scalar& c) const;

  // plain transpose into the twisted duals: F_src^*(t) <- F_tgt^*(t)
  ModuleMap transpose(long long twist) const;

  bool is_zero() const;
  bool operator==(const ModuleMap& o) const;

  // true if some entry is a nonzero constant
  bool has_unit_entry() const;

  // scalar part: entries between equal-degree generators, as a field matrix
  std::vector<std::vector<Scalar>> scalar_part() const;
  // invertible as a map of graded free modules (graded Nakayama: the scalar
  // part must be invertible over the field)
  bool is_graded_invertible() const;
  // exact two-sided inverse; throws TNotInvertible when not invertible
  ModuleMap graded_inverse() const;

 private:
  FreeModule src_, tgt_;
  std::vector<std::vector<Poly>> a_;
};

}  // namespace symres
