#include "symres/module.hpp"

#include <algorithm>

#include "symres/linalg.hpp"

namespace symres {

std::vector<long long> FreeModule::sorted_degrees() const {
  std::vector<long long> s = degs_;
  std::sort(s.begin(), s.end());
  return s;
}

FreeModule FreeModule::dual(long long twist) const {
  std::vector<long long> d(degs_.size());
  for (size_t i = 0; i < degs_.size(); ++i) d[i] = -(degs_[i] + twist);
  return FreeModule(ring_, std::move(d));
}

Vec Vec::zero(const GradedRing& r, int rank) {
  return Vec(r, std::vector<Poly>(rank, Poly::zero(r)));
}

Vec Vec::unit(const GradedRing& r, int rank, int i, const Poly& value) {
  Vec v = zero(r, rank);
  v[i] = value;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

Vec Vec::operator-() const {
  Vec r(ring_, c_);
  for (auto& p : r.c_) p = -p;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.rank() != b.rank()) fail(ErrorCode::IncompatibleModule, "vector rank mismatch");
  Vec r = a;
  for (int i = 0; i < a.rank(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) { return a + (-b); }

Vec Vec::scaled(const Scalar& c) const {
  Vec r(ring_, c_);
  for (auto& p : r.c_) p = p.scaled(c);
  return r;
}

Vec Vec::times_poly(const Poly& p) const {
  Vec r(ring_, c_);
  for (auto& q : r.c_) q = q * p;
  return r;
}

bool Vec::operator==(const Vec& o) const {
  if (rank() != o.rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

bool Vec::is_homogeneous(const FreeModule& F) const {
  return !is_zero() ? homogeneous_degree(F).has_value() : true;
}

std::optional<long long> Vec::homogeneous_degree(const FreeModule& F) const {
  std::optional<long long> deg;
  for (int i = 0; i < rank(); ++i) {
    if (c_[i].is_zero()) continue;
    auto d = c_[i].homogeneous_degree();
    if (!d) return std::nullopt;
    long long total = *d + F.degree(i);
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg;
}

ModuleMap::ModuleMap(FreeModule target, FreeModule source, std::vector<std::vector<Poly>> entries)
    : src_(std::move(source)), tgt_(std::move(target)), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != tgt_.rank())
    fail(ErrorCode::IncompatibleModule, "matrix row count mismatch");
  for (const auto& row : a_)
    if (static_cast<int>(row.size()) != src_.rank())
      fail(ErrorCode::IncompatibleModule, "matrix column count mismatch");
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      const Poly& p = a_[i][j];
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      if (!d || *d != src_.degree(j) - tgt_.degree(i))
        fail(ErrorCode::DegreesInconsistent,
             "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") is not homogeneous of degree " +
                 std::to_string(src_.degree(j) - tgt_.degree(i)));
    }
  }
}

ModuleMap ModuleMap::zero(const FreeModule& target, const FreeModule& source) {
  std::vector<std::vector<Poly>> a(
      target.rank(), std::vector<Poly>(source.rank(), Poly::zero(target.ring())));
  return ModuleMap(target, source, std::move(a));
}

ModuleMap ModuleMap::identity(const FreeModule& F) {
  auto a = std::vector<std::vector<Poly>>(F.rank(),
                                          std::vector<Poly>(F.rank(), Poly::zero(F.ring())));
  for (int i = 0; i < F.rank(); ++i) a[i][i] = Poly::from_int(F.ring(), 1);
  return ModuleMap(F, F, std::move(a));
}

ModuleMap ModuleMap::from_columns(const FreeModule& target, const FreeModule& source,
                                  const std::vector<Vec>& cols) {
  if (static_cast<int>(cols.size()) != source.rank())
    fail(ErrorCode::IncompatibleModule, "column count mismatch");
  std::vector<std::vector<Poly>> a(
      target.rank(), std::vector<Poly>(source.rank(), Poly::zero(target.ring())));
  for (int j = 0; j < source.rank(); ++j) {
    if (cols[j].rank() != target.rank())
      fail(ErrorCode::IncompatibleModule, "column rank mismatch");
    for (int i = 0; i < target.rank(); ++i) a[i][j] = cols[j][i];
  }
  return ModuleMap(target, source, std::move(a));
}

Vec ModuleMap::column(int j) const {
  std::vector<Poly> c;
  c.reserve(rows());
  for (int i = 0; i < rows(); ++i) c.push_back(a_[i][j]);
  return Vec(ring(), std::move(c));
}

std::vector<Vec> ModuleMap::columns() const {
  std::vector<Vec> cs;
  cs.reserve(cols());
  for (int j = 0; j < cols(); ++j) cs.push_back(column(j));
  return cs;
}

Vec ModuleMap::apply(const Vec& v) const {
  if (v.rank() != cols()) fail(ErrorCode::IncompatibleModule, "apply: rank mismatch");
  Vec r = Vec::zero(ring(), rows());
  for (int i = 0; i < rows(); ++i) {
    Poly s = Poly::zero(ring());
    for (int j = 0; j < cols(); ++j) {
      if (a_[i][j].is_zero() || v[j].is_zero()) continue;
      s += a_[i][j] * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  if (!src_.same_module(inner.tgt_))
    fail(ErrorCode::IncompatibleModule, "compose: middle modules differ");
  std::vector<std::vector<Poly>> a(rows(), std::vector<Poly>(inner.cols(), Poly::zero(ring())));
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      if (a_[i][k].is_zero()) continue;
      for (int j = 0; j < inner.cols(); ++j) {
        if (inner.a_[k][j].is_zero()) continue;
        a[i][j] += a_[i][k] * inner.a_[k][j];
      }
    }
  return ModuleMap(tgt_, inner.src_, std::move(a));
}

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
  if (!a.src_.same_module(b.src_) || !a.tgt_.same_module(b.tgt_))
    fail(ErrorCode::IncompatibleModule, "map sum: modules differ");
  auto e = a.a_;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) e[i][j] += b.a_[i][j];
  return ModuleMap(a.tgt_, a.src_, std::move(e));
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) { return a + b.scaled(Scalar::from_int(-1, a.ring().field())); }

ModuleMap ModuleMap::scaled(const Scalar& c) const {
  auto e = a_;
  for (auto& row : e)
    for (auto& p : row) p = p.scaled(c);
  return ModuleMap(tgt_, src_, std::move(e));
}

ModuleMap ModuleMap::transpose(long long twist) const {
  FreeModule new_src = tgt_.dual(twist);
  FreeModule new_tgt = src_.dual(twist);
  std::vector<std::vector<Poly>> a(new_tgt.rank(), std::vector<Poly>(new_src.rank(), Poly::zero(ring())));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) a[j][i] = a_[i][j];
  return ModuleMap(new_tgt, new_src, std::move(a));
}

bool ModuleMap::is_zero() const {
  for (const auto& row : a_)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

bool ModuleMap::operator==(const ModuleMap& o) const {
  if (!src_.same_module(o.src_) || !tgt_.same_module(o.tgt_)) return false;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!(a_[i][j] == o.a_[i][j])) return false;
  return true;
}

bool ModuleMap::has_unit_entry() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!a_[i][j].is_zero() && a_[i][j].is_constant()) return true;
  return false;
}

std::vector<std::vector<Scalar>> ModuleMap::scalar_part() const {
  std::vector<std::vector<Scalar>> s(rows(), std::vector<Scalar>(cols(), Scalar::zero(ring().field())));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (src_.degree(j) == tgt_.degree(i)) s[i][j] = a_[i][j].constant_coeff();
  return s;
}

bool ModuleMap::is_graded_invertible() const {
  if (rows() != cols()) return false;
  if (!src_.same_degrees_sorted(tgt_)) return false;
  return linalg::is_invertible(scalar_part());
}

ModuleMap ModuleMap::graded_inverse() const {
  if (!is_graded_invertible())
    fail(ErrorCode::TNotInvertible, "graded map has singular scalar part");
  // M = M0 + M+; inv = sum_k (-M0^{-1} M+)^k M0^{-1}, finite because M+ raises
  // internal degree strictly
  auto inv0 = linalg::inverse(scalar_part());
  std::vector<std::vector<Poly>> n0(rows(), std::vector<Poly>(cols(), Poly::zero(ring())));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!inv0[i][j].is_zero()) n0[i][j] = Poly::constant(ring(), inv0[i][j]);
  ModuleMap N(src_, tgt_, std::move(n0));  // N: tgt -> src, inverse of scalar part
  ModuleMap plus = *this - [&] {
    std::vector<std::vector<Poly>> m0(rows(), std::vector<Poly>(cols(), Poly::zero(ring())));
    auto sp = scalar_part();
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j)
        if (!sp[i][j].is_zero()) m0[i][j] = Poly::constant(ring(), sp[i][j]);
    return ModuleMap(tgt_, src_, std::move(m0));
  }();
  ModuleMap result = N;
  ModuleMap pow = N;  // (-N plus)^k N
  const int max_iter = 512;
  for (int k = 0; k < max_iter; ++k) {
    pow = N.compose(plus).compose(pow).scaled(Scalar::from_int(-1, ring().field()));
    if (pow.is_zero()) break;
    result = result + pow;
    if (k + 1 == max_iter)
      fail(ErrorCode::TNotInvertible, "graded inverse did not terminate");
  }
  if (!(compose(result) == identity(tgt_)) || !(result.compose(*this) == identity(src_)))
    fail(ErrorCode::TNotInvertible, "graded inverse verification failed");
  return result;
}

}  // namespace symres
