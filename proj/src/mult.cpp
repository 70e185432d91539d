#include "symres/mult.hpp"

namespace symres {

int TensorLevel::index_of(int i, int a, int j, int b) const {
  for (size_t k = 0; k < basis.size(); ++k) {
    const Pair& p = basis[k];
    if (p.i == i && p.a == a && p.j == j && p.b == b) return static_cast<int>(k);
  }
  fail(ErrorCode::InvalidArgument, "tensor basis element not found");
}

int SymLevel::index_of(int i, int a, int j, int b) const {
  for (size_t k = 0; k < basis.size(); ++k) {
    const Pair& p = basis[k];
    if (p.i == i && p.a == a && p.j == j && p.b == b) return static_cast<int>(k);
  }
  fail(ErrorCode::InvalidArgument, "symmetric-square basis element not found");
}

TensorLevel tensor_level(const FreeComplex& F, int n, int top) {
  TensorLevel lvl;
  std::vector<long long> degs;
  for (int i = 0; i <= n; ++i) {
    int j = n - i;
    if (i > F.length() || j > F.length() || i > top || j > top) continue;
    for (int a = 0; a < F.module(i).rank(); ++a)
      for (int b = 0; b < F.module(j).rank(); ++b) {
        lvl.basis.push_back({i, a, j, b});
        degs.push_back(F.module(i).degree(a) + F.module(j).degree(b));
      }
  }
  lvl.module = FreeModule(F.ring(), degs);
  return lvl;
}

ModuleMap tensor_delta(const FreeComplex& F, const TensorLevel& from, const TensorLevel& to) {
  const GradedRing& r = F.ring();
  std::vector<Vec> cols;
  for (const auto& p : from.basis) {
    Vec col = Vec::zero(r, to.module.rank());
    // d(x) ⊗ y
    if (p.i >= 1) {
      const ModuleMap& d = F.d(p.i);
      for (int t = 0; t < d.rows(); ++t) {
        if (d.entry(t, p.a).is_zero()) continue;
        col[to.index_of(p.i - 1, t, p.j, p.b)] += d.entry(t, p.a);
      }
    }
    // (-1)^i x ⊗ d(y)
    if (p.j >= 1) {
      const ModuleMap& d = F.d(p.j);
      Scalar sign = Scalar::from_int(p.i % 2 == 0 ? 1 : -1, r.field());
      for (int t = 0; t < d.rows(); ++t) {
        if (d.entry(t, p.b).is_zero()) continue;
        col[to.index_of(p.i, p.a, p.j - 1, t)] += d.entry(t, p.b).scaled(sign);
      }
    }
    cols.push_back(std::move(col));
  }
  return ModuleMap::from_columns(to.module, from.module, cols);
}

namespace {

// image of a tensor basis element under the canonical projection pi
struct Projected {
  int index;    // -1 when the class vanishes
  int sign;     // +1 / -1
};

Projected project_pair(const SymLevel& lvl, int i, int a, int j, int b) {
  if (i < j) return {lvl.index_of(i, a, j, b), +1};
  if (i > j) {
    int sign = (i % 2 == 1 && j % 2 == 1) ? -1 : +1;  // (-1)^{ij}
    return {lvl.index_of(j, b, i, a), sign};
  }
  // diagonal block
  if (i % 2 == 1) {
    if (a == b) return {-1, +1};
    if (a < b) return {lvl.index_of(i, a, j, b), +1};
    return {lvl.index_of(i, b, j, a), -1};
  }
  if (a <= b) return {lvl.index_of(i, a, j, b), +1};
  return {lvl.index_of(i, b, j, a), +1};
}

SymLevel sym_level(const FreeComplex& F, int n, int top) {
  SymLevel lvl;
  std::vector<long long> degs;
  for (int i = 0; 2 * i <= n; ++i) {
    int j = n - i;
    if (i > F.length() || j > F.length() || i > top || j > top) continue;
    if (i < j) {
      for (int a = 0; a < F.module(i).rank(); ++a)
        for (int b = 0; b < F.module(j).rank(); ++b) {
          lvl.basis.push_back({i, a, j, b});
          degs.push_back(F.module(i).degree(a) + F.module(j).degree(b));
        }
    } else {
      int rank = F.module(i).rank();
      for (int a = 0; a < rank; ++a)
        for (int b = (i % 2 == 1 ? a + 1 : a); b < rank; ++b) {
          lvl.basis.push_back({i, a, j, b});
          degs.push_back(F.module(i).degree(a) + F.module(i).degree(b));
        }
    }
  }
  lvl.module = FreeModule(F.ring(), degs);
  return lvl;
}

ModuleMap projection_map(const GradedRing& r, const TensorLevel& tl, const SymLevel& sl) {
  std::vector<Vec> cols;
  for (const auto& p : tl.basis) {
    Vec col = Vec::zero(r, sl.module.rank());
    Projected pr = project_pair(sl, p.i, p.a, p.j, p.b);
    if (pr.index >= 0) col[pr.index] = Poly::from_int(r, pr.sign);
    cols.push_back(std::move(col));
  }
  return ModuleMap::from_columns(sl.module, tl.module, cols);
}

// section of pi: a symmetric-square basis element as a tensor
ModuleMap section_map(const GradedRing& r, const SymLevel& sl, const TensorLevel& tl) {
  std::vector<Vec> cols;
  for (const auto& p : sl.basis) {
    Vec col = Vec::zero(r, tl.module.rank());
    col[tl.index_of(p.i, p.a, p.j, p.b)] = Poly::from_int(r, 1);
    cols.push_back(std::move(col));
  }
  return ModuleMap::from_columns(tl.module, sl.module, cols);
}

}  // namespace

SymSquare sym_square(const FreeComplex& F, int top) {
  SymSquare S;
  std::vector<TensorLevel> tensor;
  for (int n = 0; n <= top; ++n) {
    tensor.push_back(tensor_level(F, n, top));
    S.levels.push_back(sym_level(F, n, top));
  }
  S.delta_bar.push_back(ModuleMap());  // unused slot 0
  for (int n = 1; n <= top; ++n) {
    ModuleMap delta = tensor_delta(F, tensor[n], tensor[n - 1]);
    ModuleMap pi_prev = projection_map(F.ring(), tensor[n - 1], S.levels[n - 1]);
    ModuleMap sec = section_map(F.ring(), S.levels[n], tensor[n]);
    S.delta_bar.push_back(pi_prev.compose(delta).compose(sec));
  }
  return S;
}

Vec MultStructure::mu_on(int i, int a, int j, int b) const {
  int n = i + j;
  return mu[n].column(tensor[n].index_of(i, a, j, b));
}

MultStructure build_multiplication(const AlgebraOverS& A, const Resolution& res) {
  const FreeComplex& F = res.complex;
  const GradedRing& r = F.ring();
  if (!F.module(0).same_module(A.f0()))
    fail(ErrorCode::IncompatibleModule, "resolution does not resolve the algebra's module");
  int top = F.length();
  MultStructure M;
  M.top = top;
  for (int n = 0; n <= top; ++n) M.tensor.push_back(tensor_level(F, n, top));
  M.sym = sym_square(F, top);
  M.delta.push_back(ModuleMap());
  for (int n = 1; n <= top; ++n)
    M.delta.push_back(tensor_delta(F, M.tensor[n], M.tensor[n - 1]));
  for (int n = 0; n <= top; ++n)
    M.pi.push_back(projection_map(r, M.tensor[n], M.sym.levels[n]));

  // beta_0 from the product table of the algebra generators
  {
    std::vector<Vec> cols;
    for (const auto& p : M.sym.levels[0].basis) cols.push_back(A.product_in_f0(p.a, p.b));
    M.beta.push_back(
        ModuleMap::from_columns(F.module(0), M.sym.levels[0].module, cols));
  }
  // beta_n: the e_0 ⊗ g columns are forced to g; the rest lift through d_n
  for (int n = 1; n <= top; ++n) {
    ModuleMap rhs = M.beta[n - 1].compose(M.sym.delta_bar[n]);
    LiftSolver solver(F.d(n), false);
    std::vector<Vec> cols;
    for (size_t k = 0; k < M.sym.levels[n].basis.size(); ++k) {
      const auto& p = M.sym.levels[n].basis[k];
      if (p.i == 0 && p.a == 0) {
        cols.push_back(Vec::unit(r, F.module(n).rank(), p.b, Poly::from_int(r, 1)));
        continue;
      }
      auto x = solver.lift(rhs.column(static_cast<int>(k)));
      if (!x)
        fail(ErrorCode::LiftFailed,
             "multiplication lift failed in homological degree " + std::to_string(n));
      cols.push_back(std::move(*x));
    }
    M.beta.push_back(ModuleMap::from_columns(F.module(n), M.sym.levels[n].module, cols));
  }
  for (int n = 0; n <= top; ++n) M.mu.push_back(M.beta[n].compose(M.pi[n]));
  return M;
}

bool check_leibniz(const MultStructure& m, const FreeComplex& F) {
  for (int n = 1; n <= m.top; ++n)
    if (!(F.d(n).compose(m.mu[n]) == m.mu[n - 1].compose(m.delta[n]))) return false;
  return true;
}

bool check_unit(const MultStructure& m, const FreeComplex& F) {
  for (int n = 0; n <= m.top; ++n)
    for (int b = 0; b < F.module(n).rank(); ++b) {
      Vec unit = Vec::unit(F.ring(), F.module(n).rank(), b, Poly::from_int(F.ring(), 1));
      if (!(m.mu_on(0, 0, n, b) == unit)) return false;
      if (!(m.mu_on(n, b, 0, 0) == unit)) return false;
    }
  return true;
}

bool check_commutativity(const MultStructure& m, const FreeComplex& F) {
  for (int n = 0; n <= m.top; ++n)
    for (const auto& p : m.tensor[n].basis) {
      Vec ab = m.mu_on(p.i, p.a, p.j, p.b);
      Vec ba = m.mu_on(p.j, p.b, p.i, p.a);
      Scalar sign = Scalar::from_int((p.i % 2 == 1 && p.j % 2 == 1) ? -1 : 1, F.ring().field());
      if (!(ab == ba.scaled(sign))) return false;
    }
  return true;
}

bool check_relations_stable(const MultStructure& m, const FreeComplex& F) {
  // delta maps the commutativity relations into themselves: pi∘delta kills
  // x⊗y - (-1)^{|x||y|} y⊗x
  const GradedRing& r = F.ring();
  for (int n = 1; n <= m.top; ++n) {
    const TensorLevel& tl = m.tensor[n];
    ModuleMap pidelta = m.pi[n - 1].compose(m.delta[n]);
    for (const auto& p : tl.basis) {
      Vec rel = Vec::zero(r, tl.module.rank());
      rel[tl.index_of(p.i, p.a, p.j, p.b)] += Poly::from_int(r, 1);
      Scalar sign = Scalar::from_int((p.i % 2 == 1 && p.j % 2 == 1) ? -1 : 1, r.field());
      rel[tl.index_of(p.j, p.b, p.i, p.a)] -= Poly::constant(r, sign);
      if (!pidelta.apply(rel).is_zero()) return false;
    }
  }
  return true;
}

void check_homotopy_associativity(const MultStructure& m, const FreeComplex& F) {
  const GradedRing& r = F.ring();
  int top = m.top;
  // triple tensor levels
  struct Triple {
    int i, a, j, b, k, c;
  };
  std::vector<std::vector<Triple>> basis(top + 1);
  std::vector<FreeModule> modules(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<long long> degs;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        int k = n - i - j;
        if (i > F.length() || j > F.length() || k > F.length()) continue;
        for (int a = 0; a < F.module(i).rank(); ++a)
          for (int b = 0; b < F.module(j).rank(); ++b)
            for (int c = 0; c < F.module(k).rank(); ++c) {
              basis[n].push_back({i, a, j, b, k, c});
              degs.push_back(F.module(i).degree(a) + F.module(j).degree(b) +
                             F.module(k).degree(c));
            }
      }
    modules[n] = FreeModule(r, degs);
  }
  auto index3 = [&](int n, int i, int a, int j, int b, int k, int c) {
    for (size_t t = 0; t < basis[n].size(); ++t) {
      const Triple& p = basis[n][t];
      if (p.i == i && p.a == a && p.j == j && p.b == b && p.k == k && p.c == c)
        return static_cast<int>(t);
    }
    fail(ErrorCode::InvalidArgument, "triple tensor index not found");
  };
  // rho_n = mu(mu ⊗ id) - mu(id ⊗ mu)
  std::vector<ModuleMap> rho(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<Vec> cols;
    for (const auto& p : basis[n]) {
      Vec acc = Vec::zero(r, F.module(n).rank());
      // mu(mu(x⊗y)⊗z)
      {
        Vec xy = m.mu_on(p.i, p.a, p.j, p.b);
        for (int t = 0; t < xy.rank(); ++t) {
          if (xy[t].is_zero()) continue;
          Vec w = m.mu_on(p.i + p.j, t, p.k, p.c);
          for (int s = 0; s < acc.rank(); ++s) acc[s] += xy[t] * w[s];
        }
      }
      // - mu(x⊗mu(y⊗z))
      {
        Vec yz = m.mu_on(p.j, p.b, p.k, p.c);
        for (int t = 0; t < yz.rank(); ++t) {
          if (yz[t].is_zero()) continue;
          Vec w = m.mu_on(p.i, p.a, p.j + p.k, t);
          for (int s = 0; s < acc.rank(); ++s) acc[s] -= yz[t] * w[s];
        }
      }
      cols.push_back(std::move(acc));
    }
    rho[n] = ModuleMap::from_columns(F.module(n), modules[n], cols);
  }
  // triple differential
  auto delta3 = [&](int n) {
    std::vector<Vec> cols;
    for (const auto& p : basis[n]) {
      Vec col = Vec::zero(r, modules[n - 1].rank());
      if (p.i >= 1) {
        const ModuleMap& d = F.d(p.i);
        for (int t = 0; t < d.rows(); ++t)
          if (!d.entry(t, p.a).is_zero())
            col[index3(n - 1, p.i - 1, t, p.j, p.b, p.k, p.c)] += d.entry(t, p.a);
      }
      if (p.j >= 1) {
        const ModuleMap& d = F.d(p.j);
        Scalar sg = Scalar::from_int(p.i % 2 == 0 ? 1 : -1, r.field());
        for (int t = 0; t < d.rows(); ++t)
          if (!d.entry(t, p.b).is_zero())
            col[index3(n - 1, p.i, p.a, p.j - 1, t, p.k, p.c)] += d.entry(t, p.b).scaled(sg);
      }
      if (p.k >= 1) {
        const ModuleMap& d = F.d(p.k);
        Scalar sg = Scalar::from_int((p.i + p.j) % 2 == 0 ? 1 : -1, r.field());
        for (int t = 0; t < d.rows(); ++t)
          if (!d.entry(t, p.c).is_zero())
            col[index3(n - 1, p.i, p.a, p.j, p.b, p.k - 1, t)] += d.entry(t, p.c).scaled(sg);
      }
      cols.push_back(std::move(col));
    }
    return ModuleMap::from_columns(modules[n - 1], modules[n], cols);
  };
  // build the homotopy degree by degree
  std::vector<ModuleMap> h;
  {
    if (top >= 1) {
      h.push_back(lift_through(F.d(1), rho[0]));
    } else if (!rho[0].is_zero()) {
      fail(ErrorCode::NotNullHomotopic, "rho nonzero on a length-0 resolution");
    }
  }
  for (int n = 1; n <= top; ++n) {
    ModuleMap rem = rho[n] - h[n - 1].compose(delta3(n));
    if (n + 1 <= top) {
      h.push_back(lift_through(F.d(n + 1), rem));
    } else if (!rem.is_zero()) {
      fail(ErrorCode::NotNullHomotopic,
           "associativity homotopy does not close at the top degree");
    }
  }
}

}  // namespace symres
