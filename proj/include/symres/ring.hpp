#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symres/field.hpp"

namespace symres {

enum class OrderKind {
  Lex,       // pure lexicographic, first variable strongest
  GRevLex,   // total degree, then reverse lexicographic
  WGRevLex,  // weighted degree, then reverse lexicographic
  Block,     // major block (wgrevlex) eliminates first, then minor block
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

class GradedRing;

// Dense exponent vector with cached weighted degree.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<int> exps, long long wdeg) : e_(std::move(exps)), wdeg_(wdeg) {}

  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0), 0); }

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  long long weighted_degree() const { return wdeg_; }
  long long total_degree() const;
  bool is_unit() const { return wdeg_ == 0 && total_degree() == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // quotient *this / d; caller must check divisibility
  Monomial divide_by(const Monomial& d) const;
  Monomial lcm(const Monomial& o, const std::vector<int>& weights) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  // structural order (not a term order); used for canonical container keys
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::vector<int> e_;
  long long wdeg_ = 0;
};

struct MonomialOrder {
  OrderKind kind = OrderKind::WGRevLex;
  // for Block: flags[i] != 0 marks variable i as a major (eliminated) variable
  std::vector<std::uint8_t> major;

  static MonomialOrder parse(const std::string& tag);
  std::string to_string() const;
  bool operator==(const MonomialOrder&) const = default;
};

// Weighted polynomial ring over an exact field, with a fixed monomial order.
// Immutable after construction; shared by value through a shared_ptr.
class GradedRing {
 public:
  GradedRing() = default;
  static GradedRing make(std::vector<std::string> vars, std::vector<int> weights,
                         FieldSpec field, MonomialOrder order = {});

  bool valid() const { return d_ != nullptr; }
  int nvars() const { return static_cast<int>(d_->vars.size()); }
  const std::vector<std::string>& vars() const { return d_->vars; }
  const std::vector<int>& weights() const { return d_->weights; }
  const FieldSpec& field() const { return d_->field; }
  const MonomialOrder& order() const { return d_->order; }
  std::optional<int> var_index(const std::string& name) const;

  Monomial monomial(std::vector<int> exps) const;
  Monomial var_monomial(int i, int power = 1) const;
  long long weighted_degree(const std::vector<int>& exps) const;

  Cmp compare(const Monomial& a, const Monomial& b) const;

  // same content (vars, weights, field, order)
  bool same_ring(const GradedRing& o) const;
  // same vars/weights/field, any order
  bool same_graded_structure(const GradedRing& o) const;
  // copy of this ring with a different order
  GradedRing with_order(MonomialOrder order) const;

  bool operator==(const GradedRing& o) const { return same_ring(o); }

 private:
  struct Data {
    std::vector<std::string> vars;
    std::vector<int> weights;
    FieldSpec field;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> d_;
};

Cmp compare_monomials(const MonomialOrder& order, const std::vector<int>& weights,
                      const Monomial& a, const Monomial& b);

}  // namespace symres
