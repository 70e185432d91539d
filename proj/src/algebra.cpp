#include "symres/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "symres/linalg.hpp"

namespace symres {

namespace {

// all monomials of the ring with the given weighted degree
std::vector<Monomial> monomials_of_degree(const GradedRing& r, long long deg) {
  std::vector<Monomial> out;
  int n = r.nvars();
  std::vector<int> e(n, 0);
  std::function<void(int, long long)> rec = [&](int pos, long long rem) {
    if (pos == n) {
      if (rem == 0) out.push_back(r.monomial(e));
      return;
    }
    for (int k = 0;; ++k) {
      long long used = static_cast<long long>(k) * r.weights()[pos];
      if (used > rem) break;
      e[pos] = k;
      rec(pos + 1, rem - used);
    }
    e[pos] = 0;
  };
  rec(0, deg);
  return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  for (const auto& l : leads)
    if (l.divides(m)) return true;
  return false;
}

}  // namespace

AlgebraOverS AlgebraOverS::from_quotient(const GradedRing& T, std::vector<Poly> ideal_gens,
                                         const std::vector<std::string>& s_vars) {
  AlgebraOverS A;
  A.t_ring_ = T;
  A.t_to_s_var_.assign(T.nvars(), -1);
  std::vector<std::uint8_t> non_s(T.nvars(), 1);
  std::vector<std::string> s_names;
  std::vector<int> s_weights;
  for (const auto& name : s_vars) {
    auto idx = T.var_index(name);
    if (!idx) fail(ErrorCode::UnknownVariable, "S-variable '" + name + "' not in the ring");
    non_s[*idx] = 0;
  }
  for (int v = 0; v < T.nvars(); ++v) {
    if (non_s[v]) continue;
    A.t_to_s_var_[v] = static_cast<int>(A.s_var_idx_.size());
    A.s_var_idx_.push_back(v);
    s_names.push_back(T.vars()[v]);
    s_weights.push_back(T.weights()[v]);
  }
  if (s_names.empty()) fail(ErrorCode::InvalidArgument, "no S-variables given");
  A.s_ring_ = GradedRing::make(s_names, s_weights, T.field());

  bool has_non_s = false;
  for (auto b : non_s) has_non_s = has_non_s || (b != 0);
  A.t_elim_ = has_non_s ? T.with_order({OrderKind::Block, non_s}) : T;
  for (auto& g : ideal_gens)
    if (!g.is_homogeneous())
      fail(ErrorCode::DegreesInconsistent, "ideal generators must be homogeneous");
  A.t_ideal_ = ideal_gens;
  std::vector<Poly> elim_gens;
  for (const auto& g : ideal_gens)
    if (!g.is_zero()) elim_gens.push_back(g.in_ring(A.t_elim_));
  A.t_gb_ = buchberger_ideal(A.t_elim_, elim_gens);

  std::vector<Monomial> leads;
  for (const auto& g : A.t_gb_.gens) leads.push_back(g[0].leading_monomial());
  for (const auto& l : leads)
    if (l.is_unit()) fail(ErrorCode::NotAnAlgebra, "the quotient ring is zero");

  // finiteness: the initial ideal needs a pure power of every non-S variable
  for (int v = 0; v < T.nvars(); ++v) {
    if (!non_s[v]) continue;
    bool covered = false;
    for (const auto& l : leads) {
      bool pure = l[v] > 0;
      for (int u = 0; u < T.nvars() && pure; ++u)
        if (u != v && l[u] > 0) pure = false;
      if (pure) {
        covered = true;
        break;
      }
    }
    if (!covered)
      fail(ErrorCode::NotFiniteOverS, "no pure power of " + T.vars()[v] + " in the initial ideal");
  }

  // module generators live among the standard monomials in the non-S variables
  std::vector<Monomial> pure_leads;
  for (const auto& l : leads) {
    bool pure_non_s = true;
    for (int v = 0; v < T.nvars() && pure_non_s; ++v)
      if (!non_s[v] && l[v] > 0) pure_non_s = false;
    if (pure_non_s) pure_leads.push_back(l);
  }
  std::vector<Monomial> candidates;
  {
    std::vector<int> bound(T.nvars(), 1);
    for (int v = 0; v < T.nvars(); ++v) {
      if (!non_s[v]) continue;
      int b = 0;
      for (const auto& l : pure_leads) {
        bool pure_v = l[v] > 0;
        for (int u = 0; u < T.nvars() && pure_v; ++u)
          if (u != v && l[u] > 0) pure_v = false;
        if (pure_v) b = b == 0 ? l[v] : std::min(b, l[v]);
      }
      bound[v] = b;  // nonzero by the finiteness check
    }
    std::vector<int> e(T.nvars(), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == T.nvars()) {
        Monomial m = A.t_elim_.monomial(e);
        if (!divisible_by_any(m, pure_leads)) candidates.push_back(m);
        return;
      }
      if (!non_s[pos]) {
        rec(pos + 1);
        return;
      }
      for (int k = 0; k < bound[pos]; ++k) {
        e[pos] = k;
        rec(pos + 1);
      }
      e[pos] = 0;
    };
    rec(0);
  }
  std::sort(candidates.begin(), candidates.end(), [](const Monomial& a, const Monomial& b) {
    if (a.weighted_degree() != b.weighted_degree())
      return a.weighted_degree() < b.weighted_degree();
    return a.exps() < b.exps();
  });

  // prune to minimal module generators, degree by degree: keep a candidate iff
  // its class is independent of S_+·(kept) in that degree
  std::vector<Monomial> kept;
  {
    const FieldSpec field = T.field();
    std::map<long long, std::vector<Monomial>> by_deg;
    for (const auto& m : candidates) by_deg[m.weighted_degree()].push_back(m);
    for (const auto& [deg, cands] : by_deg) {
      std::vector<Monomial> basis;
      for (const auto& m : monomials_of_degree(A.t_elim_, deg))
        if (!divisible_by_any(m, leads)) basis.push_back(m);
      std::map<std::vector<int>, int> basis_idx;
      for (size_t k = 0; k < basis.size(); ++k) basis_idx[basis[k].exps()] = static_cast<int>(k);
      std::vector<std::vector<Scalar>> rows;
      for (const auto& u : kept) {
        long long need = deg - u.weighted_degree();
        if (need <= 0) continue;
        for (const auto& vmono : monomials_of_degree(A.t_elim_, need)) {
          bool s_only = true;
          for (int v = 0; v < T.nvars() && s_only; ++v)
            if (non_s[v] && vmono[v] > 0) s_only = false;
          if (!s_only) continue;
          Poly nf = normal_form(Poly::term(A.t_elim_, vmono * u, Scalar::one(field)), A.t_gb_);
          std::vector<Scalar> vec(basis.size(), Scalar::zero(field));
          for (const auto& t : nf.terms()) vec[basis_idx.at(t.m.exps())] = t.c;
          rows.push_back(std::move(vec));
        }
      }
      int base_rank = linalg::rank(rows);
      for (const auto& cand : cands) {
        std::vector<Scalar> vec(basis.size(), Scalar::zero(field));
        vec[basis_idx.at(cand.exps())] = Scalar::one(field);
        rows.push_back(vec);
        int new_rank = linalg::rank(rows);
        if (new_rank > base_rank) {
          kept.push_back(cand);
          base_rank = new_rank;
        } else {
          rows.pop_back();
        }
      }
    }
  }
  if (kept.empty() || kept.front().weighted_degree() != 0)
    fail(ErrorCode::NotAnAlgebra, "the class of 1 is missing from the generators");

  std::vector<long long> degs;
  for (const auto& m : kept) {
    degs.push_back(m.weighted_degree());
    A.gen_reps_.push_back(Poly::term(A.t_elim_, m, Scalar::one(T.field())));
    A.gen_names_.push_back(A.gen_reps_.back().to_string());
  }
  A.f0_ = FreeModule(A.s_ring_, degs);

  // relations: ker(S^r -> R) via syzygies in T, then elimination of the non-S
  // variables
  {
    int r = A.f0_.rank();
    std::vector<Poly> row;
    std::vector<long long> src_degs;
    for (const auto& w : A.gen_reps_) {
      row.push_back(w);
      src_degs.push_back(*w.homogeneous_degree());
    }
    for (const auto& f : elim_gens) {
      row.push_back(f);
      src_degs.push_back(*f.homogeneous_degree());
    }
    ModuleMap W(FreeModule(A.t_elim_, {0}), FreeModule(A.t_elim_, src_degs), {row});
    ModuleMap S = syzygies(W);
    std::vector<Vec> kt;
    for (int j = 0; j < S.cols(); ++j) {
      std::vector<Poly> c;
      for (int i = 0; i < r; ++i) c.push_back(S.entry(i, j));
      Vec v(A.t_elim_, std::move(c));
      if (!v.is_zero()) kt.push_back(std::move(v));
    }
    FreeModule KT(A.t_elim_, A.f0_.degrees());
    auto gb = groebner_generators(KT, kt, ModuleTermOrder::elimination(A.t_elim_, non_s));
    std::vector<Vec> s_cols;
    for (const auto& g : gb) {
      bool s_only = true;
      for (int i = 0; i < r && s_only; ++i)
        for (const auto& t : g[i].terms()) {
          for (int v = 0; v < T.nvars(); ++v)
            if (non_s[v] && t.m[v] > 0) {
              s_only = false;
              break;
            }
          if (!s_only) break;
        }
      if (!s_only) continue;
      std::vector<Poly> c;
      for (int i = 0; i < r; ++i) c.push_back(g[i].map_vars(A.s_ring_, A.t_to_s_var_));
      s_cols.push_back(Vec(A.s_ring_, std::move(c)));
    }
    auto mins = minimal_generators(A.f0_, s_cols);
    A.pres_ = ModuleMap::from_columns(A.f0_, module_for_columns(A.f0_, mins), mins);
  }
  A.pres_gb_ = buchberger(A.f0_, A.pres_.columns());
  A.products_.assign(A.f0_.rank(), std::vector<Vec>(A.f0_.rank()));
  return A;
}

AlgebraOverS AlgebraOverS::from_presentation(const ModuleMap& presentation,
                                             std::vector<std::string> gen_names) {
  AlgebraOverS A;
  A.s_ring_ = presentation.ring();
  A.f0_ = presentation.target();
  if (A.f0_.rank() == 0 || A.f0_.degree(0) != 0)
    fail(ErrorCode::InvalidArgument, "presentation needs a degree-0 unit generator first");
  for (int i = 1; i < A.f0_.rank(); ++i)
    if (A.f0_.degree(i) <= 0)
      fail(ErrorCode::InvalidArgument, "non-unit generators must have positive degree");
  A.pres_ = presentation;
  A.pres_gb_ = buchberger(A.f0_, A.pres_.columns());
  if (gen_names.empty()) {
    gen_names.push_back("1");
    for (int i = 1; i < A.f0_.rank(); ++i) gen_names.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(gen_names.size()) != A.f0_.rank())
    fail(ErrorCode::InvalidArgument, "generator name count mismatch");
  A.gen_names_ = std::move(gen_names);
  A.products_.assign(A.f0_.rank(), std::vector<Vec>(A.f0_.rank()));
  A.build_products_by_lifting();
  return A;
}

Poly AlgebraOverS::s_to_t(const Poly& p) const { return p.map_vars(t_elim_, s_var_idx_); }

Vec AlgebraOverS::express_in_generators(const Poly& t_elem) const {
  if (!has_quotient_data())
    fail(ErrorCode::InvalidArgument, "express_in_generators needs quotient data");
  Poly nf = normal_form(t_elem.in_ring(t_elim_), t_gb_);
  Vec out = Vec::zero(s_ring_, f0_.rank());
  std::map<std::vector<int>, std::vector<Term>> by_part;
  for (const auto& t : nf.terms()) {
    std::vector<int> non_s_part(t_elim_.nvars(), 0);
    std::vector<int> s_part(t_elim_.nvars(), 0);
    for (int v = 0; v < t_elim_.nvars(); ++v) {
      if (t_to_s_var_[v] >= 0)
        s_part[v] = t.m[v];
      else
        non_s_part[v] = t.m[v];
    }
    by_part[non_s_part].push_back({t_elim_.monomial(s_part), t.c});
  }
  for (auto& [part, terms] : by_part) {
    Monomial u = t_elim_.monomial(part);
    Poly s_coef = Poly::from_terms(t_elim_, terms).map_vars(s_ring_, t_to_s_var_);
    int idx = -1;
    for (size_t k = 0; k < gen_reps_.size(); ++k)
      if (gen_reps_[k].leading_monomial() == u) {
        idx = static_cast<int>(k);
        break;
      }
    if (idx >= 0) {
      out[idx] += s_coef;
      continue;
    }
    Vec rew = rewrite_standard_monomial(u);
    for (int k = 0; k < f0_.rank(); ++k)
      if (!rew[k].is_zero()) out[k] += s_coef * rew[k];
  }
  return out;
}

Vec AlgebraOverS::rewrite_standard_monomial(const Monomial& u) const {
  auto it = rewrite_cache_.find(u.exps());
  if (it != rewrite_cache_.end()) return it->second;
  const FieldSpec field = t_elim_.field();
  long long deg = u.weighted_degree();
  std::vector<Monomial> leads;
  for (const auto& g : t_gb_.gens) leads.push_back(g[0].leading_monomial());
  std::vector<Monomial> basis;
  for (const auto& m : monomials_of_degree(t_elim_, deg))
    if (!divisible_by_any(m, leads)) basis.push_back(m);
  std::map<std::vector<int>, int> basis_idx;
  for (size_t k = 0; k < basis.size(); ++k) basis_idx[basis[k].exps()] = static_cast<int>(k);
  struct Unknown {
    int gen;
    Monomial v;
  };
  std::vector<Unknown> unknowns;
  std::vector<std::vector<Scalar>> cols;
  for (int k = 0; k < f0_.rank(); ++k) {
    long long need = deg - f0_.degree(k);
    if (need < 0) continue;
    for (const auto& vmono : monomials_of_degree(t_elim_, need)) {
      bool s_only = true;
      for (int v = 0; v < t_elim_.nvars() && s_only; ++v)
        if (t_to_s_var_[v] < 0 && vmono[v] > 0) s_only = false;
      if (!s_only) continue;
      Poly prod = normal_form(
          Poly::term(t_elim_, vmono * gen_reps_[k].leading_monomial(), Scalar::one(field)),
          t_gb_);
      std::vector<Scalar> col(basis.size(), Scalar::zero(field));
      for (const auto& t : prod.terms()) col[basis_idx.at(t.m.exps())] = t.c;
      unknowns.push_back({k, vmono});
      cols.push_back(std::move(col));
    }
  }
  std::vector<std::vector<Scalar>> mat(basis.size(),
                                       std::vector<Scalar>(unknowns.size(), Scalar::zero(field)));
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t rix = 0; rix < basis.size(); ++rix) mat[rix][c] = cols[c][rix];
  std::vector<Scalar> rhs(basis.size(), Scalar::zero(field));
  rhs[basis_idx.at(u.exps())] = Scalar::one(field);
  auto sol = linalg::solve(mat, rhs, field);
  if (!sol)
    fail(ErrorCode::NotAnAlgebra, "standard monomial not expressible over the generators");
  Vec out = Vec::zero(s_ring_, f0_.rank());
  for (size_t c = 0; c < unknowns.size(); ++c) {
    if ((*sol)[c].is_zero()) continue;
    out[unknowns[c].gen] +=
        Poly::term(t_elim_, unknowns[c].v, (*sol)[c]).map_vars(s_ring_, t_to_s_var_);
  }
  rewrite_cache_.emplace(u.exps(), out);
  return out;
}

const Vec& AlgebraOverS::product_in_f0(int i, int j) const {
  Vec& slot = products_[i][j];
  if (slot.rank() == 0) {
    if (i == 0) {
      slot = Vec::unit(s_ring_, f0_.rank(), j, Poly::from_int(s_ring_, 1));
    } else if (j == 0) {
      slot = Vec::unit(s_ring_, f0_.rank(), i, Poly::from_int(s_ring_, 1));
    } else if (has_quotient_data()) {
      slot = express_in_generators(gen_reps_[i] * gen_reps_[j]);
    } else {
      fail(ErrorCode::NotAnAlgebra, "no product data for generator pair");
    }
  }
  return slot;
}

bool AlgebraOverS::is_zero_in_r(const Vec& v) const { return is_member(v, pres_gb_); }

HilbertData AlgebraOverS::hilbert() const { return hilbert_series(pres_gb_); }

void AlgebraOverS::build_products_by_lifting() {
  const FieldSpec field = s_ring_.field();
  int r = f0_.rank();
  for (int g = 1; g < r; ++g) {
    long long dg = f0_.degree(g);
    // find M : F_0(-dg) -> F_0 with M e_0 = e_g and M·im(pres) ⊆ im(pres);
    // column j of M is then a representative of (gen g)·(gen j)
    struct Unknown {
      int i, j;
      Monomial mono;
    };
    std::vector<Unknown> unknowns;
    for (int j = 1; j < r; ++j)
      for (int i = 0; i < r; ++i) {
        long long d = f0_.degree(j) + dg - f0_.degree(i);
        if (d < 0) continue;
        for (const auto& m : monomials_of_degree(s_ring_, d)) unknowns.push_back({i, j, m});
      }
    std::map<std::pair<long long, std::vector<int>>, int> coord;
    auto coord_of = [&](long long block, const Monomial& m) {
      auto key = std::make_pair(block, m.exps());
      auto it = coord.find(key);
      if (it != coord.end()) return it->second;
      int id = static_cast<int>(coord.size());
      coord.emplace(key, id);
      return id;
    };
    std::vector<std::vector<std::pair<int, Scalar>>> ucols(unknowns.size());
    std::vector<std::pair<int, Scalar>> rhs_entries;
    for (int c = 0; c < pres_.cols(); ++c) {
      Vec col = pres_.column(c);
      Vec fixed = Vec::unit(s_ring_, r, g, col[0]);
      Vec nf = normal_form(fixed, pres_gb_);
      for (int i = 0; i < nf.rank(); ++i)
        for (const auto& t : nf[i].terms())
          rhs_entries.push_back({coord_of(static_cast<long long>(c) * r + i, t.m), t.c});
      for (size_t uix = 0; uix < unknowns.size(); ++uix) {
        const auto& u = unknowns[uix];
        if (col[u.j].is_zero()) continue;
        Vec contrib =
            Vec::unit(s_ring_, r, u.i, col[u.j].times_monomial(u.mono, Scalar::one(field)));
        Vec nfc = normal_form(contrib, pres_gb_);
        for (int i = 0; i < nfc.rank(); ++i)
          for (const auto& t : nfc[i].terms())
            ucols[uix].push_back({coord_of(static_cast<long long>(c) * r + i, t.m), t.c});
      }
    }
    int nrows = static_cast<int>(coord.size());
    std::vector<std::vector<Scalar>> mat(
        nrows, std::vector<Scalar>(unknowns.size(), Scalar::zero(field)));
    for (size_t uix = 0; uix < unknowns.size(); ++uix)
      for (const auto& [row, val] : ucols[uix]) mat[row][uix] += val;
    std::vector<Scalar> rhs(nrows, Scalar::zero(field));
    for (const auto& [row, val] : rhs_entries) rhs[row] -= val;
    auto sol = linalg::solve(mat, rhs, field);
    if (!sol)
      fail(ErrorCode::NotAnAlgebra, "no multiplication lift for generator " + gen_names_[g]);
    for (int j = 1; j < r; ++j) {
      Vec prod = Vec::zero(s_ring_, r);
      for (size_t uix = 0; uix < unknowns.size(); ++uix) {
        if (unknowns[uix].j != j || (*sol)[uix].is_zero()) continue;
        prod[unknowns[uix].i] += Poly::term(s_ring_, unknowns[uix].mono, (*sol)[uix]);
      }
      products_[g][j] = std::move(prod);
    }
  }
  // the table must be commutative and associative in R
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < r; ++j)
      if (!is_zero_in_r(product_in_f0(i, j) - product_in_f0(j, i)))
        fail(ErrorCode::NotAnAlgebra, "product table is not commutative");
  auto mult_elem = [&](const Vec& v, int k) {
    Vec out = Vec::zero(s_ring_, r);
    for (int a = 0; a < r; ++a) {
      if (v[a].is_zero()) continue;
      const Vec& p = product_in_f0(a, k);
      for (int t = 0; t < r; ++t) out[t] += v[a] * p[t];
    }
    return out;
  };
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < r; ++j)
      for (int k = 1; k < r; ++k)
        if (!is_zero_in_r(mult_elem(product_in_f0(i, j), k) -
                          mult_elem(product_in_f0(i, k), j)))
          fail(ErrorCode::NotAnAlgebra, "product table is not associative");
}

}  // namespace symres
