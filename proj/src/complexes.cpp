#include "symres/complexes.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <sstream>

namespace symres {

FreeComplex::FreeComplex(std::vector<FreeModule> modules, std::vector<ModuleMap> differentials)
    : modules_(std::move(modules)), diffs_(std::move(differentials)) {
  if (modules_.empty()) fail(ErrorCode::InvalidArgument, "complex needs at least one module");
  if (diffs_.size() + 1 != modules_.size())
    fail(ErrorCode::InvalidArgument, "differential count mismatch");
  for (size_t i = 0; i < diffs_.size(); ++i) {
    if (!diffs_[i].target().same_module(modules_[i]) ||
        !diffs_[i].source().same_module(modules_[i + 1]))
      fail(ErrorCode::IncompatibleModule,
           "differential endpoints mismatch at " + std::to_string(i + 1));
  }
  for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!diffs_[i].compose(diffs_[i + 1]).is_zero())
      fail(ErrorCode::InvalidArgument,
           "d_" + std::to_string(i + 1) + " o d_" + std::to_string(i + 2) + " != 0");
  }
}

bool FreeComplex::is_minimal() const {
  for (const auto& d : diffs_)
    if (d.has_unit_entry()) return false;
  return true;
}

long long BettiTable::rank(int i, long long j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

nlohmann::ordered_json BettiTable::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int imax = -1;
  for (const auto& [key, r] : entries) imax = std::max(imax, key.first);
  for (int i = 0; i <= imax; ++i) {
    nlohmann::ordered_json degs = nlohmann::ordered_json::object();
    for (const auto& [key, r] : entries)
      if (key.first == i && r != 0) degs[std::to_string(key.second)] = r;
    rows.push_back({{"i", i}, {"degrees", degs}});
  }
  return nlohmann::ordered_json{{"betti", rows}};
}

std::string BettiTable::to_string() const { return to_json().dump(); }

// minimal homogeneous generators of the submodule generated by cols:
// degree-greedy membership pruning (graded Nakayama)
std::vector<Vec> minimal_generators(const FreeModule& F, std::vector<Vec> cols) {
  std::vector<std::pair<long long, size_t>> order;
  for (size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].is_zero()) continue;
    auto d = cols[k].homogeneous_degree(F);
    if (!d) fail(ErrorCode::DegreesInconsistent, "inhomogeneous generator");
    order.push_back({*d, k});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec> kept;
  for (const auto& [deg, k] : order) {
    if (kept.empty()) {
      kept.push_back(cols[k]);
      continue;
    }
    GroebnerBasis gb = buchberger(F, kept);
    if (!is_member(cols[k], gb)) kept.push_back(cols[k]);
  }
  return kept;
}

FreeModule module_for_columns(const FreeModule& ambient, const std::vector<Vec>& cols) {
  std::vector<long long> degs;
  for (const auto& c : cols) {
    auto d = c.homogeneous_degree(ambient);
    if (!d) fail(ErrorCode::DegreesInconsistent, "inhomogeneous column");
    degs.push_back(*d);
  }
  return FreeModule(ambient.ring(), std::move(degs));
}

Resolution resolve(const ModuleMap& presentation, int max_length) {
  for (int j = 0; j < presentation.cols(); ++j) {
    if (!presentation.column(j).is_homogeneous(presentation.target()))
      fail(ErrorCode::DegreesInconsistent, "presentation must be homogeneous");
  }
  std::vector<FreeModule> modules{presentation.target()};
  std::vector<ModuleMap> diffs;
  std::vector<Vec> cols = minimal_generators(presentation.target(), presentation.columns());
  while (!cols.empty()) {
    if (static_cast<int>(diffs.size()) >= max_length)
      fail(ErrorCode::LengthExceeded,
           "resolution exceeds max_length=" + std::to_string(max_length));
    ModuleMap d = ModuleMap::from_columns(modules.back(),
                                          module_for_columns(modules.back(), cols), cols);
    modules.push_back(d.source());
    LiftSolver solver(d, true);
    diffs.push_back(std::move(d));
    cols = minimal_generators(modules.back(), solver.syzygy_generators());
  }
  FreeComplex complex(std::move(modules), std::move(diffs));
  // unit entries can only come from a non-minimally presented cokernel
  if (!complex.is_minimal()) complex = minimalize(complex);
  return Resolution{std::move(complex), presentation, true};
}

FreeComplex minimalize(const FreeComplex& c) {
  const GradedRing& ring = c.ring();
  int len = c.length();
  std::vector<std::vector<long long>> degs(len + 1);
  for (int i = 0; i <= len; ++i) degs[i] = c.module(i).degrees();
  // mats[i] = matrix of d_{i+1}
  std::vector<std::vector<std::vector<Poly>>> mats(len);
  for (int i = 1; i <= len; ++i) {
    mats[i - 1].assign(c.d(i).rows(), std::vector<Poly>(c.d(i).cols(), Poly::zero(ring)));
    for (int r = 0; r < c.d(i).rows(); ++r)
      for (int s = 0; s < c.d(i).cols(); ++s) mats[i - 1][r][s] = c.d(i).entry(r, s);
  }

  auto erase_row = [](std::vector<std::vector<Poly>>& m, int r) { m.erase(m.begin() + r); };
  auto erase_col = [](std::vector<std::vector<Poly>>& m, int s) {
    for (auto& row : m) row.erase(row.begin() + s);
  };

  while (true) {
    int pi = -1, pr = -1, ps = -1;
    for (int i = 0; i < len && pi < 0; ++i) {
      for (size_t r = 0; r < mats[i].size() && pi < 0; ++r)
        for (size_t s = 0; s < mats[i][r].size(); ++s) {
          const Poly& e = mats[i][r][s];
          if (!e.is_zero() && e.is_constant()) {
            pi = i;
            pr = static_cast<int>(r);
            ps = static_cast<int>(s);
            break;
          }
        }
    }
    if (pi < 0) break;
    auto& d = mats[pi];
    Scalar u = d[pr][ps].constant_coeff();
    Scalar uinv = u.inverse();
    int nrows = static_cast<int>(d.size());
    int ncols = static_cast<int>(d[0].size());
    // clear row pr by column operations: col_j -= (d[pr][j]/u) col_ps
    for (int j = 0; j < ncols; ++j) {
      if (j == ps || d[pr][j].is_zero()) continue;
      Poly f = d[pr][j].scaled(uinv);
      for (int r = 0; r < nrows; ++r)
        if (!d[r][ps].is_zero()) d[r][j] -= f * d[r][ps];
    }
    // clearing column ps needs no arithmetic: the base change only touches
    // the cancelled row/column, which get deleted
    erase_row(d, pr);
    erase_col(d, ps);
    if (pi + 1 < len) erase_row(mats[pi + 1], ps);  // row is zero after base change
    if (pi - 1 >= 0) erase_col(mats[pi - 1], pr);   // column is zero after base change
    degs[pi].erase(degs[pi].begin() + pr);
    degs[pi + 1].erase(degs[pi + 1].begin() + ps);
  }

  // drop trailing rank-0 modules
  int last = len;
  while (last > 0 && degs[last].empty()) --last;
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> diffs;
  for (int i = 0; i <= last; ++i) modules.push_back(FreeModule(ring, degs[i]));
  for (int i = 1; i <= last; ++i) {
    ModuleMap m(modules[i - 1], modules[i], mats[i - 1]);
    diffs.push_back(std::move(m));
  }
  return FreeComplex(std::move(modules), std::move(diffs));
}

FreeComplex dualize(const FreeComplex& c, long long twist) {
  int len = c.length();
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> diffs;
  for (int i = 0; i <= len; ++i) modules.push_back(c.module(len - i).dual(twist));
  for (int i = 1; i <= len; ++i) diffs.push_back(c.d(len + 1 - i).transpose(twist));
  return FreeComplex(std::move(modules), std::move(diffs));
}

bool homology_is_zero(const FreeComplex& c, int i) {
  if (i <= 0 || i >= c.length())
    fail(ErrorCode::InvalidArgument, "homology position out of range");
  ModuleMap kernel_gens = syzygies(c.d(i));
  if (kernel_gens.cols() == 0) return true;
  GroebnerBasis image = buchberger(c.module(i), c.d(i + 1).columns());
  for (int j = 0; j < kernel_gens.cols(); ++j)
    if (!is_member(kernel_gens.column(j), image)) return false;
  return true;
}

bool left_end_injective(const FreeComplex& c) {
  if (c.length() == 0) return true;
  return syzygies(c.d(c.length())).cols() == 0;
}

bool is_exact_resolution_shape(const FreeComplex& c) {
  for (int i = 1; i < c.length(); ++i)
    if (!homology_is_zero(c, i)) return false;
  return left_end_injective(c);
}

ChainMap lift_map(const ModuleMap& f0, const Resolution& resA, const Resolution& resB) {
  const FreeComplex& A = resA.complex;
  const FreeComplex& B = resB.complex;
  if (!f0.source().same_module(A.module(0)) || !f0.target().same_module(B.module(0)))
    fail(ErrorCode::IncompatibleModule, "lift_map: f0 endpoints mismatch");
  if (A.length() >= 1) {
    GroebnerBasis imB = buchberger(B.module(0), B.d(1).columns());
    ModuleMap f0d = f0.compose(A.d(1));
    for (int j = 0; j < f0d.cols(); ++j)
      if (!is_member(f0d.column(j), imB))
        fail(ErrorCode::NotInImage, "f0 does not descend to the cokernels", j);
  }
  ChainMap out;
  out.maps.push_back(f0);
  for (int i = 1; i <= A.length(); ++i) {
    ModuleMap rhs = out.maps.back().compose(A.d(i));
    if (i > B.length()) {
      if (!rhs.is_zero())
        fail(ErrorCode::NotInImage, "chain map cannot extend past the target resolution");
      out.maps.push_back(ModuleMap::zero(FreeModule(A.ring(), {}), A.module(i)));
      continue;
    }
    out.maps.push_back(lift_through(B.d(i), rhs));
  }
  return out;
}

Homotopy null_homotopy(const ChainMap& f, const Resolution& resA, const Resolution& resB) {
  const FreeComplex& A = resA.complex;
  const FreeComplex& B = resB.complex;
  Homotopy h;
  if (f.maps.empty()) return h;
  // h_0 with d^B_1 h_0 = f_0 (exists iff the induced map on cokernels is zero)
  if (B.length() < 1) {
    if (!f.maps[0].is_zero())
      fail(ErrorCode::NotNullHomotopic, "induced map on augmentation targets is nonzero");
    h.maps.push_back(ModuleMap::zero(FreeModule(A.ring(), {}), A.module(0)));
  } else {
    try {
      h.maps.push_back(lift_through(B.d(1), f.maps[0]));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotInImage)
        fail(ErrorCode::NotNullHomotopic, "induced map on augmentation targets is nonzero");
      throw;
    }
  }
  for (int i = 1; i < static_cast<int>(f.maps.size()); ++i) {
    ModuleMap rem = f.maps[i] - h.maps[i - 1].compose(A.d(i));
    if (i + 1 > B.length()) {
      if (!rem.is_zero())
        fail(ErrorCode::NotNullHomotopic, "homotopy does not close at the top degree");
      h.maps.push_back(ModuleMap::zero(FreeModule(A.ring(), {}), A.module(i)));
    } else {
      h.maps.push_back(lift_through(B.d(i + 1), rem));
    }
  }
  return h;
}

BettiTable betti(const FreeComplex& c) {
  BettiTable t;
  for (int i = 0; i <= c.length(); ++i)
    for (long long g : c.module(i).degrees()) t.entries[{i, g}] += 1;
  return t;
}

HilbertData hilbert_from_betti(const BettiTable& b, const GradedRing& ring) {
  HilbertData h;
  h.weights = ring.weights();
  for (const auto& [key, r] : b.entries) {
    long long sign = key.first % 2 == 0 ? 1 : -1;
    h.numerator[key.second] += sign * r;
    if (h.numerator[key.second] == 0) h.numerator.erase(key.second);
  }
  return h;
}

}  // namespace symres
