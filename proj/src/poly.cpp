#include "symres/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symres {

namespace {
void check_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring().same_ring(b.ring()))
    fail(ErrorCode::IncompatibleModule, "polynomials from different rings");
}
}  // namespace

Poly Poly::constant(const GradedRing& r, const Scalar& c) {
  return term(r, Monomial::unit(r.nvars()), c);
}

Poly Poly::from_int(const GradedRing& r, long long n) {
  return constant(r, Scalar::from_int(n, r.field()));
}

Poly Poly::variable(const GradedRing& r, int var, int power) {
  return term(r, r.var_monomial(var, power), Scalar::one(r.field()));
}

Poly Poly::term(const GradedRing& r, Monomial m, Scalar c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(const GradedRing& r, std::vector<Term> terms) {
  Poly p(r);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) == Cmp::GT; });
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "leading term of zero polynomial");
  return terms_.front();
}

std::optional<long long> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  long long d = terms_.front().m.weighted_degree();
  for (const auto& t : terms_) d = std::max(d, t.m.weighted_degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long long d = terms_.front().m.weighted_degree();
  for (const auto& t : terms_)
    if (t.m.weighted_degree() != d) return false;
  return true;
}

std::optional<long long> Poly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().m.weighted_degree();
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit());
}

Scalar Poly::constant_coeff() const {
  for (const auto& t : terms_)
    if (t.m.is_unit()) return t.c;
  return Scalar::zero(ring_.field());
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    Cmp c = a.ring_.compare(a.terms_[i].m, b.terms_[j].m);
    if (c == Cmp::GT) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c == Cmp::LT) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = a.terms_[i].c + b.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  // accumulate in a map keyed by the ring order
  auto cmp = [&](const Monomial& x, const Monomial& y) {
    return a.ring_.compare(x, y) == Cmp::GT;
  };
  std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.m * tb.m;
      Scalar c = ta.c * tb.c;
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) it->second += c;
    }
  }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;
}

Poly Poly::divide_by_monomial(const Monomial& m) const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.m))
      fail(ErrorCode::DivisionNotExact, "term not divisible by monomial");
    r.terms_.push_back({t.m.divide_by(m), t.c});
  }
  return r;
}

Scalar Poly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return Scalar::zero(ring_.field());
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_.same_ring(o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c)) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.c.to_string();
    bool neg = !c.empty() && c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool unit_mono = t.m.is_unit();
    bool coeff_one = (mag == "1");
    if (!coeff_one || unit_mono) out << mag;
    if (!unit_mono) {
      bool printed = !coeff_one;
      for (int i = 0; i < t.m.nvars(); ++i) {
        if (t.m[i] == 0) continue;
        if (printed) out << "*";
        out << ring_.vars()[i];
        if (t.m[i] > 1) out << "^" << t.m[i];
        printed = true;
      }
    }
  }
  return out.str();
}

Poly Poly::in_ring(const GradedRing& target) const {
  if (!ring_.same_graded_structure(target))
    fail(ErrorCode::IncompatibleModule, "in_ring requires same variables and weights");
  Poly r(target);
  std::vector<Term> ts = terms_;
  return from_terms(target, std::move(ts));
}

Poly Poly::map_vars(const GradedRing& target, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != ring_.nvars())
    fail(ErrorCode::InvalidArgument, "var_map length mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(target.nvars(), 0);
    for (int i = 0; i < ring_.nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (var_map[i] < 0)
        fail(ErrorCode::UnknownVariable,
             "variable " + ring_.vars()[i] + " has no image in target ring");
      e[var_map[i]] += t.m[i];
    }
    Scalar c = t.c;
    if (!(ring_.field() == target.field()))
      fail(ErrorCode::FieldMismatch, "map_vars across different fields");
    ts.push_back({target.monomial(std::move(e)), std::move(c)});
  }
  return from_terms(target, std::move(ts));
}

long long weighted_degree(const Monomial& m, const GradedRing& ring) {
  if (m.nvars() != ring.nvars())
    fail(ErrorCode::InvalidArgument, "monomial/ring variable count mismatch");
  return ring.weighted_degree(m.exps());
}

}  // namespace symres
