#include "symres/pfaffian.hpp"

#include <map>

namespace symres {

SkewMatrix::SkewMatrix(GradedRing ring, std::vector<std::vector<Poly>> entries)
    : ring_(std::move(ring)), a_(std::move(entries)) {
  int n = static_cast<int>(a_.size());
  for (const auto& row : a_)
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::NotSkew, "matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (!a_[i][i].is_zero()) fail(ErrorCode::NotSkew, "nonzero diagonal entry");
    for (int j = i + 1; j < n; ++j)
      if (!(a_[i][j] == -a_[j][i])) fail(ErrorCode::NotSkew, "A^T != -A");
  }
}

SkewMatrix SkewMatrix::minor_matrix(int k) const {
  std::vector<std::vector<Poly>> m;
  for (int i = 0; i < size(); ++i) {
    if (i == k) continue;
    std::vector<Poly> row;
    for (int j = 0; j < size(); ++j)
      if (j != k) row.push_back(a_[i][j]);
    m.push_back(std::move(row));
  }
  return SkewMatrix(ring_, std::move(m));
}

namespace {

// first-row expansion over an index subset, memoized
Poly pf_rec(const SkewMatrix& A, std::vector<int> idx,
            std::map<std::vector<int>, Poly>& memo) {
  if (idx.empty()) return Poly::from_int(A.ring(), 1);
  if (idx.size() % 2 == 1) return Poly::zero(A.ring());
  auto it = memo.find(idx);
  if (it != memo.end()) return it->second;
  Poly acc = Poly::zero(A.ring());
  int first = idx[0];
  for (size_t j = 1; j < idx.size(); ++j) {
    const Poly& a = A.entry(first, idx[j]);
    if (a.is_zero()) continue;
    std::vector<int> rest;
    for (size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Poly sub = pf_rec(A, std::move(rest), memo);
    // sign (-1)^j with positions 1-indexed inside the subset
    if (j % 2 == 1)
      acc += a * sub;
    else
      acc -= a * sub;
  }
  memo.emplace(std::move(idx), acc);
  return acc;
}

}  // namespace

Poly pfaffian(const SkewMatrix& A) {
  std::vector<int> idx(A.size());
  for (int i = 0; i < A.size(); ++i) idx[i] = i;
  std::map<std::vector<int>, Poly> memo;
  return pf_rec(A, std::move(idx), memo);
}

std::vector<Poly> submaximal_pfaffians(const SkewMatrix& A) {
  if (A.size() % 2 == 0)
    fail(ErrorCode::NotSkew, "submaximal Pfaffians need an odd-size matrix");
  std::vector<Poly> v;
  for (int k = 0; k < A.size(); ++k) {
    Poly p = pfaffian(A.minor_matrix(k));
    v.push_back(k % 2 == 0 ? p : -p);
  }
  return v;
}

FreeComplex buchsbaum_eisenbud_complex(const SkewMatrix& A,
                                       const std::vector<long long>& gen_degrees) {
  const GradedRing& r = A.ring();
  int n = A.size();
  if (static_cast<int>(gen_degrees.size()) != n)
    fail(ErrorCode::DegreesInconsistent, "degree data size mismatch");
  if (n % 2 == 0) fail(ErrorCode::NotSkew, "odd size required");
  // A : F^*(t) -> F forces t = -(g_i + g_j + deg A_ij) for nonzero entries
  std::optional<long long> twist;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A.entry(i, j).is_zero()) continue;
      auto d = A.entry(i, j).homogeneous_degree();
      if (!d) fail(ErrorCode::DegreesInconsistent, "inhomogeneous entry");
      long long t = -(gen_degrees[i] + gen_degrees[j] + *d);
      if (twist && *twist != t)
        fail(ErrorCode::DegreesInconsistent, "no consistent twist for the degree data");
      twist = t;
    }
  if (!twist) fail(ErrorCode::DegreesInconsistent, "zero matrix has no twist");
  FreeModule F0(r, {0});
  FreeModule F(r, gen_degrees);
  FreeModule Fd = F.dual(*twist);
  FreeModule Tail(r, {-*twist});
  std::vector<Poly> v = submaximal_pfaffians(A);
  ModuleMap d1(F0, F, {v});
  std::vector<std::vector<Poly>> mid(n, std::vector<Poly>(n, Poly::zero(r)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mid[i][j] = A.entry(i, j);
  ModuleMap d2(F, Fd, std::move(mid));
  std::vector<std::vector<Poly>> last(n, std::vector<Poly>(1, Poly::zero(r)));
  for (int i = 0; i < n; ++i) last[i][0] = v[i];
  ModuleMap d3(Fd, Tail, std::move(last));
  return FreeComplex({F0, F, Fd, Tail}, {d1, d2, d3});
}

namespace {

Poly poly_det(const GradedRing& r, const std::vector<std::vector<Poly>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Poly::from_int(r, 1);
  if (n == 1) return m[0][0];
  Poly acc = Poly::zero(r);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (int i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(r, sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<Poly> minors_of(const GradedRing& r, const std::vector<std::vector<Poly>>& m,
                            int rows, int cols, int k) {
  if (k == 0) return {Poly::from_int(r, 1)};
  std::vector<Poly> out;
  std::vector<std::vector<int>> rsel, csel;
  subsets_of_size(rows, k, rsel);
  subsets_of_size(cols, k, csel);
  for (const auto& rs : rsel)
    for (const auto& cs : csel) {
      std::vector<std::vector<Poly>> sub;
      for (int i : rs) {
        std::vector<Poly> row;
        for (int j : cs) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      Poly d = poly_det(r, sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

}  // namespace

std::vector<Poly> minor_ideal(const ModuleMap& M, int k) {
  std::vector<std::vector<Poly>> m(M.rows());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) m[i].push_back(M.entry(i, j));
  return minors_of(M.ring(), m, M.rows(), M.cols(), k);
}

bool check_rank_condition(const ModuleMap& d1) {
  int h = d1.rows();
  if (h > d1.cols())
    fail(ErrorCode::InvalidArgument, "rank condition expects h <= n");
  if (h == 1) return true;  // 0-minors on both sides generate (1)
  std::vector<Poly> full = minor_ideal(d1, h - 1);
  std::vector<std::vector<Poly>> rest(d1.rows() - 1);
  for (int i = 1; i < d1.rows(); ++i)
    for (int j = 0; j < d1.cols(); ++j) rest[i - 1].push_back(d1.entry(i, j));
  std::vector<Poly> pruned = minors_of(d1.ring(), rest, d1.rows() - 1, d1.cols(), h - 1);
  return ideal_equal(d1.ring(), full, pruned);
}

AlgebraOverS finite_algebra_presentation(const GradedRing& T, const std::vector<Poly>& t_ideal,
                                         const std::vector<std::string>& s_vars) {
  return AlgebraOverS::from_quotient(T, t_ideal, s_vars);
}

AlgebraRelations recover_algebra_relations(const GorensteinCertificate& cert,
                                           const AlgebraOverS& A) {
  const GradedRing& S = A.s_ring();
  int r = A.f0().rank();
  // extended ring S[x_g], one variable per non-unit generator
  std::vector<std::string> names = S.vars();
  std::vector<int> weights = S.weights();
  std::vector<std::string> new_vars;
  for (int g = 1; g < r; ++g) {
    std::string nm = A.gen_names()[g];
    for (auto& ch : nm)
      if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    if (nm.empty() || !std::isalpha(static_cast<unsigned char>(nm[0])) ||
        std::find(names.begin(), names.end(), nm) != names.end())
      nm = "g" + std::to_string(g);
    names.push_back(nm);
    new_vars.push_back(nm);
    weights.push_back(static_cast<int>(A.f0().degree(g)));
  }
  GradedRing ext = GradedRing::make(names, weights, S.field());
  std::vector<int> s_map(S.nvars());
  for (int i = 0; i < S.nvars(); ++i) s_map[i] = i;
  auto to_ext = [&](const Poly& p) { return p.map_vars(ext, s_map); };
  auto gen_var = [&](int g) {
    // g = 0 is the unit
    return g == 0 ? Poly::from_int(ext, 1) : Poly::variable(ext, S.nvars() + g - 1);
  };

  AlgebraRelations out;
  out.extended_ring = ext;
  out.new_vars = new_vars;
  const ModuleMap& d1 = cert.symmetric_res.complex.d(1);
  for (int c = 0; c < d1.cols(); ++c) {
    Poly rel = Poly::zero(ext);
    for (int i = 0; i < r; ++i) {
      if (d1.entry(i, c).is_zero()) continue;
      rel += to_ext(d1.entry(i, c)) * gen_var(i);
    }
    if (!rel.is_zero()) out.relations.push_back({rel, "column", -1});
  }
  for (int g = 1; g < r; ++g)
    for (int h = g; h < r; ++h) {
      const Vec& prod = A.product_in_f0(g, h);
      Poly rel = gen_var(g) * gen_var(h);
      for (int i = 0; i < r; ++i)
        if (!prod[i].is_zero()) rel -= to_ext(prod[i]) * gen_var(i);
      out.relations.push_back({rel, "square", g});
    }
  // the recovered relations must present R: compare Hilbert series
  std::vector<Poly> gens;
  for (const auto& rl : out.relations) gens.push_back(rl.relation);
  HilbertData hq = hilbert_series(buchberger_ideal(ext, gens));
  if (!same_series(hq, A.hilbert()))
    fail(ErrorCode::NotAnAlgebra, "recovered relations do not present the algebra");
  return out;
}

}  // namespace symres
