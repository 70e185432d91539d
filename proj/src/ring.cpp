#include "symres/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace symres {

long long Monomial::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0LL);
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return Monomial(std::move(r), wdeg_ + o.wdeg_);
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& d) const {
  std::vector<int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - d.e_[i];
  return Monomial(std::move(r), wdeg_ - d.wdeg_);
}

Monomial Monomial::lcm(const Monomial& o, const std::vector<int>& weights) const {
  std::vector<int> r(e_.size());
  long long extra = 0;  // weighted degree of (lcm / this)
  for (size_t i = 0; i < e_.size(); ++i) {
    r[i] = std::max(e_[i], o.e_[i]);
    extra += static_cast<long long>(r[i] - e_[i]) * weights[i];
  }
  return Monomial(std::move(r), wdeg_ + extra);
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::parse(const std::string& tag) {
  if (tag == "lex") return {OrderKind::Lex, {}};
  if (tag == "grevlex") return {OrderKind::GRevLex, {}};
  if (tag == "wgrevlex" || tag == "weighted-grevlex") return {OrderKind::WGRevLex, {}};
  fail(ErrorCode::InvalidArgument, "unknown monomial order: " + tag);
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GRevLex: return "grevlex";
    case OrderKind::WGRevLex: return "wgrevlex";
    case OrderKind::Block: return "block";
  }
  return "?";
}

namespace {

// revlex tie-break: a > b iff the last index where they differ has a smaller
// exponent in a
Cmp revlex_tiebreak(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp cmp_ll(long long x, long long y) {
  return x < y ? Cmp::LT : (x > y ? Cmp::GT : Cmp::EQ);
}

Cmp wgrevlex_on(const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<int>& weights, const std::vector<std::uint8_t>* mask,
                bool in_mask) {
  long long da = 0, db = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (mask && (((*mask)[i] != 0) != in_mask)) continue;
    da += static_cast<long long>(a[i]) * weights[i];
    db += static_cast<long long>(b[i]) * weights[i];
  }
  if (Cmp c = cmp_ll(da, db); c != Cmp::EQ) return c;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (mask && (((*mask)[i] != 0) != in_mask)) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

}  // namespace

Cmp compare_monomials(const MonomialOrder& order, const std::vector<int>& weights,
                      const Monomial& a, const Monomial& b) {
  switch (order.kind) {
    case OrderKind::Lex:
      for (size_t i = 0; i < weights.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
      return Cmp::EQ;
    case OrderKind::GRevLex: {
      if (Cmp c = cmp_ll(a.total_degree(), b.total_degree()); c != Cmp::EQ) return c;
      return revlex_tiebreak(a.exps(), b.exps());
    }
    case OrderKind::WGRevLex: {
      if (Cmp c = cmp_ll(a.weighted_degree(), b.weighted_degree()); c != Cmp::EQ) return c;
      return revlex_tiebreak(a.exps(), b.exps());
    }
    case OrderKind::Block: {
      if (Cmp c = wgrevlex_on(a.exps(), b.exps(), weights, &order.major, true); c != Cmp::EQ)
        return c;
      return wgrevlex_on(a.exps(), b.exps(), weights, &order.major, false);
    }
  }
  return Cmp::EQ;
}

GradedRing GradedRing::make(std::vector<std::string> vars, std::vector<int> weights,
                            FieldSpec field, MonomialOrder order) {
  if (vars.empty()) fail(ErrorCode::InvalidArgument, "ring needs at least one variable");
  if (vars.size() != weights.size())
    fail(ErrorCode::InvalidArgument, "weights/vars length mismatch");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0]))))
      fail(ErrorCode::InvalidArgument, "bad variable name: '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        fail(ErrorCode::InvalidArgument, "bad variable name: '" + v + "'");
    if (!seen.insert(v).second)
      fail(ErrorCode::InvalidArgument, "duplicate variable name: " + v);
  }
  for (int w : weights)
    if (w < 1) fail(ErrorCode::InvalidArgument, "weights must be positive");
  if (field.p == 2) fail(ErrorCode::InvalidArgument, "characteristic 2 not supported");
  if (order.kind == OrderKind::Block && order.major.size() != vars.size())
    fail(ErrorCode::InvalidArgument, "block order mask length mismatch");
  GradedRing r;
  r.d_ = std::make_shared<Data>(Data{std::move(vars), std::move(weights), field, std::move(order)});
  return r;
}

std::optional<int> GradedRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < d_->vars.size(); ++i)
    if (d_->vars[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

long long GradedRing::weighted_degree(const std::vector<int>& exps) const {
  long long w = 0;
  for (size_t i = 0; i < exps.size(); ++i)
    w += static_cast<long long>(exps[i]) * d_->weights[i];
  return w;
}

Monomial GradedRing::monomial(std::vector<int> exps) const {
  if (static_cast<int>(exps.size()) != nvars())
    fail(ErrorCode::InvalidArgument, "exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  long long w = weighted_degree(exps);
  return Monomial(std::move(exps), w);
}

Monomial GradedRing::var_monomial(int i, int power) const {
  std::vector<int> e(nvars(), 0);
  e[i] = power;
  return monomial(std::move(e));
}

Cmp GradedRing::compare(const Monomial& a, const Monomial& b) const {
  return compare_monomials(d_->order, d_->weights, a, b);
}

bool GradedRing::same_ring(const GradedRing& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->vars == o.d_->vars && d_->weights == o.d_->weights && d_->field == o.d_->field &&
         d_->order == o.d_->order;
}

bool GradedRing::same_graded_structure(const GradedRing& o) const {
  if (!d_ || !o.d_) return false;
  return d_->vars == o.d_->vars && d_->weights == o.d_->weights && d_->field == o.d_->field;
}

GradedRing GradedRing::with_order(MonomialOrder order) const {
  return make(d_->vars, d_->weights, d_->field, std::move(order));
}

}  // namespace symres
