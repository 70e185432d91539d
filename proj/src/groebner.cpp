#include "symres/groebner.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace symres {

Cmp ModuleTermOrder::compare(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
  if (!elim_vars.empty()) {
    // weighted degree in the eliminated variables decides first
    long long da = 0, db = 0;
    const auto& w = ring.weights();
    for (int v = 0; v < ring.nvars(); ++v) {
      if (!elim_vars[v]) continue;
      da += static_cast<long long>(ma[v]) * w[v];
      db += static_cast<long long>(mb[v]) * w[v];
    }
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  }
  bool ta = split >= 0 && ca >= split;
  bool tb = split >= 0 && cb >= split;
  if (ta != tb) return ta ? Cmp::LT : Cmp::GT;  // head block dominates
  if (ta && !tail_leads.empty()) {
    // Schreyer: compare images a·lm(g_ca) vs b·lm(g_cb) under the head order
    // (position-over-term), ties broken by position
    const Lead& la = tail_leads[ca - split];
    const Lead& lb = tail_leads[cb - split];
    if (la.comp != lb.comp) return la.comp < lb.comp ? Cmp::GT : Cmp::LT;
    Cmp c = ring.compare(ma * la.m, mb * lb.m);
    if (c != Cmp::EQ) return c;
    if (ca != cb) return ca < cb ? Cmp::GT : Cmp::LT;
    return Cmp::EQ;
  }
  // position-over-term
  if (ca != cb) return ca < cb ? Cmp::GT : Cmp::LT;
  return ring.compare(ma, mb);
}

namespace {

struct STerm {
  int comp;
  Monomial m;
  Scalar c;
};
using SVec = std::vector<STerm>;  // strictly descending under the active order

SVec to_svec(const Vec& v, const ModuleTermOrder& ord, int comp_offset = 0) {
  SVec out;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({i + comp_offset, t.m, t.c});
  std::sort(out.begin(), out.end(), [&](const STerm& a, const STerm& b) {
    return ord.compare(a.comp, a.m, b.comp, b.m) == Cmp::GT;
  });
  return out;
}

Vec from_svec(const SVec& v, const GradedRing& ring, int rank, int comp_offset = 0) {
  std::vector<std::vector<Term>> per(rank);
  for (const auto& t : v) {
    int c = t.comp - comp_offset;
    if (c < 0 || c >= rank) continue;
    per[c].push_back({t.m, t.c});
  }
  std::vector<Poly> comps;
  comps.reserve(rank);
  for (int i = 0; i < rank; ++i) comps.push_back(Poly::from_terms(ring, std::move(per[i])));
  return Vec(ring, std::move(comps));
}

// a + c·x^u·b
SVec svec_axpy(const SVec& a, const Scalar& c, const Monomial& u, const SVec& b,
               const ModuleTermOrder& ord) {
  SVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].m * u;
    Cmp cmp = ord.compare(a[i].comp, a[i].m, b[j].comp, bm);
    if (cmp == Cmp::GT) {
      out.push_back(a[i++]);
    } else if (cmp == Cmp::LT) {
      out.push_back({b[j].comp, std::move(bm), b[j].c * c});
      ++j;
    } else {
      Scalar s = a[i].c + b[j].c * c;
      if (!s.is_zero()) out.push_back({a[i].comp, a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].comp, b[j].m * u, b[j].c * c});
  return out;
}

struct BasisElem {
  SVec v;             // lead coefficient normalized to 1
  long long sugar;    // degree bound
  bool alive = true;  // false once superseded during inter-reduction
};

class GBEngine {
 public:
  // The product criterion must stay off when the run is also producing
  // syzygies: the pairs it skips are exactly the Koszul syzygies.
  GBEngine(ModuleTermOrder order, std::vector<long long> comp_degrees,
           bool use_product_criterion)
      : ord_(std::move(order)),
        comp_deg_(std::move(comp_degrees)),
        use_product_(use_product_criterion) {
    weights_ = ord_.ring.weights();
  }

  const ModuleTermOrder& order() const { return ord_; }

  long long term_degree(const STerm& t) const {
    return t.m.weighted_degree() + comp_deg_[t.comp];
  }

  void add_input(SVec v) {
    if (v.empty()) return;
    long long sug = 0;
    for (const auto& t : v) sug = std::max(sug, term_degree(t));
    insert_element(std::move(v), sug);
  }

  // full normal form against current basis; lead components of reducers are
  // restricted to < comp_limit (use INT_MAX for all)
  SVec reduce(SVec work, int comp_limit) const {
    SVec done;
    while (!work.empty()) {
      const STerm lead = work.front();
      int g = find_reducer(lead, comp_limit);
      if (g < 0) {
        done.push_back(lead);
        work.erase(work.begin());
        continue;
      }
      const BasisElem& be = basis_[g];
      Monomial u = lead.m.divide_by(be.v.front().m);
      work = svec_axpy(work, -lead.c, u, be.v, ord_);
    }
    return done;
  }

  // process queued pairs; pairs whose lead component >= comp_limit stay queued
  void complete(int comp_limit) {
    while (true) {
      auto it = std::find_if(pairs_.begin(), pairs_.end(),
                             [&](const Pair& p) { return p.comp < comp_limit; });
      if (it == pairs_.end()) break;
      // take the minimal pair below the limit (set is sorted)
      Pair p = *it;
      pairs_.erase(it);
      const BasisElem& gi = basis_[p.i];
      const BasisElem& gj = basis_[p.j];
      if (!gi.alive || !gj.alive) continue;
      Monomial ui = p.lcm.divide_by(gi.v.front().m);
      Monomial uj = p.lcm.divide_by(gj.v.front().m);
      SVec s = svec_axpy(svec_mul(gi.v, ui), Scalar::from_int(-1, field()), uj, gj.v, ord_);
      SVec r = reduce(std::move(s), std::numeric_limits<int>::max());
      if (!r.empty()) insert_element(std::move(r), p.sugar);
    }
  }

  const std::vector<BasisElem>& basis() const { return basis_; }

  FieldSpec field() const { return ord_.ring.field(); }

 private:
  struct Pair {
    long long sugar;
    int comp;
    Monomial lcm;
    int i, j;
    bool operator<(const Pair& o) const {
      if (sugar != o.sugar) return sugar < o.sugar;
      if (comp != o.comp) return comp < o.comp;
      if (lcm.exps() != o.lcm.exps()) return lcm.exps() < o.lcm.exps();
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  SVec svec_mul(const SVec& a, const Monomial& u) const {
    SVec out;
    out.reserve(a.size());
    for (const auto& t : a) out.push_back({t.comp, t.m * u, t.c});
    return out;
  }

  int find_reducer(const STerm& t, int comp_limit) const {
    for (size_t g = 0; g < basis_.size(); ++g) {
      const BasisElem& be = basis_[g];
      if (!be.alive) continue;
      const STerm& lt = be.v.front();
      if (lt.comp >= comp_limit) continue;
      if (lt.comp == t.comp && lt.m.divides(t.m)) return static_cast<int>(g);
    }
    return -1;
  }

  void insert_element(SVec v, long long sugar) {
    // normalize lead coefficient to 1
    Scalar inv = v.front().c.inverse();
    if (!inv.is_one())
      for (auto& t : v) t.c *= inv;
    int t = static_cast<int>(basis_.size());
    const STerm& lt = v.front();

    // Gebauer-Moeller update of the pair set
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (!basis_[i].alive) continue;
      const STerm& li = basis_[i].v.front();
      if (li.comp != lt.comp) continue;
      Monomial l = li.m.lcm(lt.m, weights_);
      cands.push_back({i, std::move(l), li.m.coprime(lt.m)});
    }
    // M criterion: drop candidates whose lcm is a proper multiple of another's
    std::vector<bool> keep(cands.size(), true);
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) continue;
      for (size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (cands[b].lcm.divides(cands[a].lcm) && cands[b].lcm != cands[a].lcm) {
          keep[a] = false;
        }
      }
    }
    // F criterion: among equal lcms keep the first; the product criterion
    // (valid for rank-1 lead components only) kills the whole class
    bool rank1 = use_product_ && (ord_.split == 1 || (ord_.split < 0 && comp_deg_.size() == 1));
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) continue;
      bool klass_coprime = cands[a].coprime;
      for (size_t b = a + 1; b < cands.size(); ++b) {
        if (keep[b] && cands[b].lcm == cands[a].lcm) {
          klass_coprime = klass_coprime || cands[b].coprime;
          keep[b] = false;
        }
      }
      if (rank1 && klass_coprime) keep[a] = false;
    }
    // B criterion on queued pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      bool drop = false;
      if (p.comp == lt.comp && lt.m.divides(p.lcm)) {
        const Monomial& li = basis_[p.i].v.front().m;
        const Monomial& lj = basis_[p.j].v.front().m;
        Monomial lit = li.lcm(lt.m, weights_);
        Monomial ljt = lj.lcm(lt.m, weights_);
        if (lit != p.lcm && ljt != p.lcm) drop = true;
      }
      it = drop ? pairs_.erase(it) : std::next(it);
    }
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) continue;
      long long sug = std::max(
          basis_[cands[a].i].sugar +
              cands[a].lcm.weighted_degree() - basis_[cands[a].i].v.front().m.weighted_degree(),
          sugar + cands[a].lcm.weighted_degree() - lt.m.weighted_degree());
      pairs_.insert(Pair{sug, lt.comp, cands[a].lcm, cands[a].i, t});
    }
    basis_.push_back(BasisElem{std::move(v), sugar, true});
  }

  ModuleTermOrder ord_;
  std::vector<long long> comp_deg_;
  bool use_product_;
  std::vector<int> weights_;
  std::vector<BasisElem> basis_;
  std::set<Pair> pairs_;
};

// minimal + tail-reduced + lead-normalized, deterministic order
std::vector<SVec> inter_reduce(std::vector<SVec> elems, const GBEngine& eng) {
  const auto& ord = eng.order();
  // drop elements whose lead is divisible by another's lead (prefer earlier
  // insertion on ties, i.e. equal leads)
  std::vector<bool> keep(elems.size(), true);
  for (size_t a = 0; a < elems.size(); ++a) {
    if (!keep[a] || elems[a].empty()) continue;
    for (size_t b = 0; b < elems.size(); ++b) {
      if (a == b || !keep[a]) continue;
      if (!keep[b] || elems[b].empty()) continue;
      const STerm& la = elems[a].front();
      const STerm& lb = elems[b].front();
      if (la.comp == lb.comp && lb.m.divides(la.m)) {
        if (la.m == lb.m && a < b) continue;  // keep the earlier one
        keep[a] = false;
      }
    }
  }
  std::vector<SVec> kept;
  for (size_t a = 0; a < elems.size(); ++a)
    if (keep[a] && !elems[a].empty()) kept.push_back(std::move(elems[a]));
  // tail-reduce each against the others
  ModuleTermOrder o = ord;
  for (size_t a = 0; a < kept.size(); ++a) {
    SVec reduced;
    SVec work = kept[a];
    bool first = true;
    while (!work.empty()) {
      STerm lead = work.front();
      int r = -1;
      if (!first) {
        for (size_t b = 0; b < kept.size(); ++b) {
          if (b == a) continue;
          const STerm& lb = kept[b].front();
          if (lb.comp == lead.comp && lb.m.divides(lead.m)) {
            r = static_cast<int>(b);
            break;
          }
        }
      }
      if (r < 0) {
        reduced.push_back(lead);
        work.erase(work.begin());
        first = false;
      } else {
        Monomial u = lead.m.divide_by(kept[r].front().m);
        work = svec_axpy(work, -lead.c, u, kept[r], o);
      }
    }
    kept[a] = std::move(reduced);
  }
  // canonical order: ascending leads
  std::sort(kept.begin(), kept.end(), [&](const SVec& x, const SVec& y) {
    return o.compare(x.front().comp, x.front().m, y.front().comp, y.front().m) == Cmp::LT;
  });
  return kept;
}

}  // namespace

GroebnerBasis buchberger(const FreeModule& F, const std::vector<Vec>& gens) {
  ModuleTermOrder ord = ModuleTermOrder::pot(F.ring());
  GBEngine eng(ord, F.degrees(), /*use_product_criterion=*/F.rank() == 1);
  bool homog = true;
  for (const auto& g : gens) {
    if (g.rank() != F.rank())
      fail(ErrorCode::IncompatibleModule, "generator rank does not match module");
    homog = homog && g.is_homogeneous(F);
    eng.add_input(to_svec(g, ord));
  }
  eng.complete(std::numeric_limits<int>::max());
  std::vector<SVec> raw;
  for (const auto& be : eng.basis()) raw.push_back(be.v);
  auto red = inter_reduce(std::move(raw), eng);
  GroebnerBasis out;
  out.module = F;
  out.homogeneous = homog;
  for (const auto& v : red) out.gens.push_back(from_svec(v, F.ring(), F.rank()));
  return out;
}

GroebnerBasis buchberger_ideal(const GradedRing& r, const std::vector<Poly>& gens) {
  FreeModule F(r, {0});
  std::vector<Vec> vs;
  for (const auto& g : gens)
    if (!g.is_zero()) vs.push_back(Vec(r, {g}));
  return buchberger(F, vs);
}

std::vector<Vec> groebner_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                     const ModuleTermOrder& ord) {
  GBEngine eng(ord, F.degrees(), false);
  for (const auto& g : gens) eng.add_input(to_svec(g, ord));
  eng.complete(std::numeric_limits<int>::max());
  std::vector<SVec> raw;
  for (const auto& be : eng.basis()) raw.push_back(be.v);
  auto red = inter_reduce(std::move(raw), eng);
  std::vector<Vec> out;
  for (const auto& v : red) out.push_back(from_svec(v, F.ring(), F.rank()));
  return out;
}

namespace {
Vec nf_impl(const Vec& v, const GroebnerBasis& G) {
  ModuleTermOrder ord = ModuleTermOrder::pot(G.ring());
  GBEngine eng(ord, G.module.degrees(), false);
  for (const auto& g : G.gens) eng.add_input(to_svec(g, ord));
  // no completion: G is already a Groebner basis
  SVec r = eng.reduce(to_svec(v, ord), std::numeric_limits<int>::max());
  return from_svec(r, G.ring(), G.module.rank());
}
}  // namespace

Vec normal_form(const Vec& v, const GroebnerBasis& G) {
  if (v.rank() != G.module.rank())
    fail(ErrorCode::IncompatibleModule, "normal_form: rank mismatch");
  if (!v.ring().same_ring(G.ring()))
    fail(ErrorCode::IncompatibleModule, "normal_form: ring mismatch");
  return nf_impl(v, G);
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  if (G.module.rank() != 1)
    fail(ErrorCode::IncompatibleModule, "polynomial normal form needs a rank-1 module");
  return normal_form(Vec(f.ring(), {f}), G)[0];
}

bool is_member(const Vec& v, const GroebnerBasis& G) { return normal_form(v, G).is_zero(); }
bool is_member(const Poly& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

// ---------------------------------------------------------------------------
// LiftSolver: Groebner basis of the augmented module [M | id]

struct LiftSolver::Impl {
  ModuleMap M;
  ModuleTermOrder ord;
  std::unique_ptr<GBEngine> eng;
  int head_rank;
  GroebnerBasis image;
  std::vector<Vec> syz;
  bool with_syz;

  Impl(const ModuleMap& m, bool with_syzygies) : M(m), with_syz(with_syzygies) {
    const GradedRing& ring = M.ring();
    head_rank = M.target().rank();
    int nc = M.source().rank();
    ord.ring = ring;
    ord.split = head_rank;
    ord.tail_leads.resize(nc);
    ModuleTermOrder head = ModuleTermOrder::pot(ring);
    for (int j = 0; j < nc; ++j) {
      Vec col = M.column(j);
      SVec s = to_svec(col, head);
      if (s.empty())
        ord.tail_leads[j] = {0, Monomial::unit(ring.nvars())};
      else
        ord.tail_leads[j] = {s.front().comp, s.front().m};
    }
    std::vector<long long> cdeg = M.target().degrees();
    for (int j = 0; j < nc; ++j) cdeg.push_back(M.source().degree(j));
    // product criterion only when no syzygies are collected (see GBEngine)
    eng = std::make_unique<GBEngine>(ord, cdeg, !with_syz && head_rank == 1);
    for (int j = 0; j < nc; ++j) {
      Vec col = M.column(j);
      SVec s = to_svec(col, ord);
      // the tail unit term ranks below every head term
      s.push_back({head_rank + j, Monomial::unit(ring.nvars()), Scalar::one(ring.field())});
      eng->add_input(std::move(s));
    }
    eng->complete(with_syz ? std::numeric_limits<int>::max() : head_rank);
    collect();
  }

  void collect() {
    std::vector<SVec> head_elems;
    std::vector<SVec> tail_elems;
    for (const auto& be : eng->basis()) {
      if (be.v.front().comp < head_rank) {
        // restrict to head components for the image basis
        SVec h;
        for (const auto& t : be.v)
          if (t.comp < head_rank) h.push_back(t);
        head_elems.push_back(std::move(h));
      } else {
        tail_elems.push_back(be.v);
      }
    }
    auto red = inter_reduce(std::move(head_elems), *eng);
    image.module = M.target();
    image.homogeneous = true;
    for (const auto& v : red) image.gens.push_back(from_svec(v, M.ring(), head_rank));
    if (with_syz) {
      auto sred = inter_reduce(std::move(tail_elems), *eng);
      for (const auto& v : sred)
        syz.push_back(from_svec(v, M.ring(), M.source().rank(), head_rank));
    }
  }

  std::optional<Vec> lift(const Vec& b) const {
    SVec work = to_svec(b, ord);
    // reduce using only head-led elements; the tail records -x with M x = b
    SVec done;
    while (!work.empty()) {
      const STerm lead = work.front();
      if (lead.comp >= head_rank) {
        done.push_back(lead);
        work.erase(work.begin());
        continue;
      }
      int g = -1;
      const auto& basis = eng->basis();
      for (size_t k = 0; k < basis.size(); ++k) {
        const auto& lt = basis[k].v.front();
        if (lt.comp == lead.comp && lt.comp < head_rank && lt.m.divides(lead.m)) {
          g = static_cast<int>(k);
          break;
        }
      }
      if (g < 0) return std::nullopt;  // head term irreducible: not in image
      Monomial u = lead.m.divide_by(basis[g].v.front().m);
      work = svec_axpy(work, -lead.c, u, basis[g].v, ord);
    }
    Vec x = from_svec(done, M.ring(), M.source().rank(), head_rank);
    return -x;
  }
};

LiftSolver::LiftSolver(const ModuleMap& M, bool with_syzygies)
    : impl_(std::make_unique<Impl>(M, with_syzygies)) {}
LiftSolver::~LiftSolver() = default;
LiftSolver::LiftSolver(LiftSolver&&) noexcept = default;

std::optional<Vec> LiftSolver::lift(const Vec& b) const { return impl_->lift(b); }
const GroebnerBasis& LiftSolver::image_basis() const { return impl_->image; }
const std::vector<Vec>& LiftSolver::syzygy_generators() const { return impl_->syz; }

ModuleMap syzygies(const ModuleMap& M) {
  LiftSolver solver(M, true);
  const std::vector<Vec>& syz = solver.syzygy_generators();
  // generator degrees of the syzygy module come from the homogeneous columns
  std::vector<long long> degs;
  for (const auto& s : syz) {
    auto d = s.homogeneous_degree(M.source());
    if (!d) fail(ErrorCode::DegreesInconsistent, "inhomogeneous syzygy");
    degs.push_back(*d);
  }
  FreeModule Fsyz(M.ring(), std::move(degs));
  return ModuleMap::from_columns(M.source(), Fsyz, syz);
}

ModuleMap lift_through(const ModuleMap& M, const ModuleMap& B) {
  if (!M.target().same_module(B.target()))
    fail(ErrorCode::IncompatibleModule, "lift_through: targets differ");
  LiftSolver solver(M, false);
  std::vector<Vec> cols;
  for (int j = 0; j < B.cols(); ++j) {
    auto x = solver.lift(B.column(j));
    if (!x)
      fail(ErrorCode::NotInImage, "column " + std::to_string(j) + " not in image", j);
    cols.push_back(std::move(*x));
  }
  ModuleMap X = ModuleMap::from_columns(M.source(), B.source(), cols);
  if (!(M.compose(X) == B)) fail(ErrorCode::LiftFailed, "lift verification failed");
  return X;
}

// ---------------------------------------------------------------------------
// Hilbert series of quotients by initial modules

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.weighted_degree() < b.weighted_degree() ||
           (a.weighted_degree() == b.weighted_degree() && a.exps() < b.exps());
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool divisible = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

using Numer = std::map<long long, long long>;

void numer_add(Numer& a, const Numer& b, long long shift, long long scale) {
  for (const auto& [d, c] : b) {
    a[d + shift] += c * scale;
    if (a[d + shift] == 0) a.erase(d + shift);
  }
}

// numerator of Hilb(S / monomial ideal) over prod(1 - T^{w_i})
Numer hilb_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {{0, 1}};
  // unit monomial generator: quotient is zero
  if (gens.front().weighted_degree() == 0) return {};
  bool pairwise_coprime = true;
  for (size_t a = 0; a < gens.size() && pairwise_coprime; ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (!gens[a].coprime(gens[b])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Numer acc{{0, 1}};
    for (const auto& m : gens) {
      Numer next;
      numer_add(next, acc, 0, 1);
      numer_add(next, acc, m.weighted_degree(), -1);
      acc = std::move(next);
    }
    return acc;
  }
  // pivot: x^e with x the most shared variable, e its minimal positive exponent
  int nvars = gens.front().nvars();
  int best_var = -1, best_count = 0;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& m : gens)
      if (m[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  int emin = 0;
  for (const auto& m : gens)
    if (m[best_var] > 0) emin = emin == 0 ? m[best_var] : std::min(emin, m[best_var]);
  std::vector<int> pe(nvars, 0);
  pe[best_var] = emin;
  Monomial pivot(pe, static_cast<long long>(emin) * weights[best_var]);
  // Hilb(S/I) = Hilb(S/(I+p)) + T^{deg p} Hilb(S/(I:p))
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    std::vector<int> e(m.exps());
    long long w = m.weighted_degree();
    int common = std::min(e[best_var], emin);
    e[best_var] -= common;
    w -= static_cast<long long>(common) * weights[best_var];
    colon.push_back(Monomial(std::move(e), w));
  }
  Numer out = hilb_numerator(std::move(plus), weights);
  Numer right = hilb_numerator(std::move(colon), weights);
  numer_add(out, right, pivot.weighted_degree(), 1);
  return out;
}

}  // namespace

std::vector<long long> HilbertData::expand(int bound) const {
  // series = numerator * prod_i 1/(1 - T^{w_i})
  std::vector<long long> coeffs(bound + 1, 0);
  for (const auto& [d, c] : numerator)
    if (d >= 0 && d <= bound) coeffs[d] += c;
  for (int w : weights) {
    // multiply by 1/(1 - T^w): prefix sums with stride w
    for (int d = w; d <= bound; ++d) coeffs[d] += coeffs[d - w];
  }
  return coeffs;
}

long long HilbertData::dimension() const {
  if (numerator.empty()) return -1;  // zero module: dimension of empty support
  // pole order at T=1: #weights - multiplicity of root 1 in the numerator
  Numer p = numerator;
  long long ord = 0;
  while (true) {
    long long sum = 0;
    for (const auto& [d, c] : p) sum += c;
    if (sum != 0) break;
    // divide by (1 - T): q with p = (1-T) q; p(T) = sum c_d T^d
    // synthetic: q_d = -(c_{>d} cumulated); do from top degree down
    Numer q;
    long long acc = 0;
    if (p.empty()) break;
    long long dmax = p.rbegin()->first;
    long long dmin = p.begin()->first;
    for (long long d = dmax; d > dmin; --d) {
      auto it = p.find(d);
      acc += it == p.end() ? 0 : it->second;
      if (acc != 0) q[d - 1] = -acc;
    }
    p = std::move(q);
    ++ord;
  }
  return static_cast<long long>(weights.size()) - ord;
}

Rational HilbertData::multiplicity() const {
  if (numerator.empty()) return Rational(0);
  Numer p = numerator;
  while (true) {
    long long sum = 0;
    for (const auto& [d, c] : p) sum += c;
    if (sum != 0) break;
    Numer q;
    long long acc = 0;
    long long dmax = p.rbegin()->first;
    long long dmin = p.begin()->first;
    for (long long d = dmax; d > dmin; --d) {
      auto it = p.find(d);
      acc += it == p.end() ? 0 : it->second;
      if (acc != 0) q[d - 1] = -acc;
    }
    p = std::move(q);
  }
  long long value = 0;
  for (const auto& [d, c] : p) value += c;
  Rational denom = 1;
  for (int w : weights) denom *= w;
  return Rational(value) / denom;
}

bool HilbertData::operator==(const HilbertData& o) const {
  return numerator == o.numerator && weights == o.weights;
}

std::string HilbertData::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (numerator.empty()) out << "0";
  for (const auto& [d, c] : numerator) {
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    long long a = c > 0 ? c : -c;
    if (a != 1 || d == 0) out << a;
    if (d != 0) {
      if (a != 1) out << "*";
      out << "T";
      if (d != 1) out << "^" << d;
    }
    first = false;
  }
  out << " / (";
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) out << "*";
    out << "(1-T";
    if (weights[i] != 1) out << "^" << weights[i];
    out << ")";
  }
  out << ")";
  return out.str();
}

HilbertData hilbert_series(const GroebnerBasis& gb) {
  const GradedRing& r = gb.ring();
  HilbertData h;
  h.weights = r.weights();
  // per component: lead monomials form a monomial ideal
  std::vector<std::vector<Monomial>> lead_by_comp(gb.module.rank());
  ModuleTermOrder ord = ModuleTermOrder::pot(r);
  for (const auto& g : gb.gens) {
    SVec s = to_svec(g, ord);
    lead_by_comp[s.front().comp].push_back(s.front().m);
  }
  for (int j = 0; j < gb.module.rank(); ++j) {
    Numer nj = hilb_numerator(lead_by_comp[j], r.weights());
    numer_add(h.numerator, nj, gb.module.degree(j), 1);
  }
  return h;
}

bool same_series(const HilbertData& a, const HilbertData& b) {
  // a.num / prod_a == b.num / prod_b  <=>  a.num * prod_b == b.num * prod_a
  auto mul_denom = [](const std::map<long long, long long>& num, const std::vector<int>& ws) {
    std::map<long long, long long> acc = num;
    for (int w : ws) {
      std::map<long long, long long> next;
      for (const auto& [d, c] : acc) {
        next[d] += c;
        next[d + w] -= c;
      }
      acc.clear();
      for (const auto& [d, c] : next)
        if (c != 0) acc[d] = c;
    }
    return acc;
  };
  return mul_denom(a.numerator, b.weights) == mul_denom(b.numerator, a.weights);
}

long long krull_dimension(const GroebnerBasis& gb) {
  const GradedRing& r = gb.ring();
  int n = r.nvars();
  ModuleTermOrder ord = ModuleTermOrder::pot(r);
  std::vector<std::vector<Monomial>> lead_by_comp(gb.module.rank());
  for (const auto& g : gb.gens) {
    SVec s = to_svec(g, ord);
    lead_by_comp[s.front().comp].push_back(s.front().m);
  }
  long long best = -1;
  for (int j = 0; j < gb.module.rank(); ++j) {
    auto gens = minimalize_monomials(lead_by_comp[j]);
    if (!gens.empty() && gens.front().weighted_degree() == 0) continue;  // zero component
    // max |V| with no generator supported inside V
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (size <= best) continue;
      bool ok = true;
      for (const auto& m : gens) {
        bool inside = true;
        for (int v = 0; v < n && inside; ++v)
          if (m[v] > 0 && !(mask & (1u << v))) inside = false;
        if (inside) {
          ok = false;
          break;
        }
      }
      if (ok) best = size;
    }
  }
  return best;
}

bool ideal_equal(const GroebnerBasis& I, const GroebnerBasis& J) {
  if (I.gens.size() != J.gens.size()) return false;
  for (size_t k = 0; k < I.gens.size(); ++k)
    if (!(I.gens[k] == J.gens[k])) return false;
  return true;
}

bool ideal_equal(const GradedRing& r, const std::vector<Poly>& I, const std::vector<Poly>& J) {
  return ideal_equal(buchberger_ideal(r, I), buchberger_ideal(r, J));
}

std::vector<Poly> intersect_ideals(const GradedRing& r, const std::vector<Poly>& I,
                                   const std::vector<Poly>& J) {
  std::vector<Poly> fi, fj;
  for (const auto& f : I)
    if (!f.is_zero()) fi.push_back(f);
  for (const auto& f : J)
    if (!f.is_zero()) fj.push_back(f);
  if (fi.empty()) return {};
  if (fj.empty()) return {};
  // syzygies of the 1-row matrix [I | -J]; the I-part evaluates intersections
  std::vector<long long> degs;
  std::vector<std::vector<Poly>> row(1);
  for (const auto& f : fi) {
    row[0].push_back(f);
    degs.push_back(*f.homogeneous_degree());
  }
  for (const auto& f : fj) {
    row[0].push_back(-f);
    degs.push_back(*f.homogeneous_degree());
  }
  FreeModule tgt(r, {0});
  FreeModule src(r, degs);
  ModuleMap M(tgt, src, row);
  ModuleMap N = syzygies(M);
  std::vector<Poly> out;
  for (int j = 0; j < N.cols(); ++j) {
    Poly p = Poly::zero(r);
    for (size_t k = 0; k < fi.size(); ++k) p += fi[k] * N.entry(static_cast<int>(k), j);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> submodule_colon(const ModuleMap& M, const Vec& v) {
  auto dv = v.homogeneous_degree(M.target());
  if (!dv && !v.is_zero())
    fail(ErrorCode::DegreesInconsistent, "colon of inhomogeneous element");
  if (v.is_zero()) return {Poly::from_int(M.ring(), 1)};
  std::vector<long long> degs{*dv};
  for (int j = 0; j < M.cols(); ++j) degs.push_back(M.source().degree(j));
  std::vector<Vec> cols;
  cols.push_back(v);
  for (int j = 0; j < M.cols(); ++j) cols.push_back(M.column(j));
  FreeModule src(M.ring(), degs);
  ModuleMap aug = ModuleMap::from_columns(M.target(), src, cols);
  ModuleMap N = syzygies(aug);
  std::vector<Poly> out;
  for (int j = 0; j < N.cols(); ++j)
    if (!N.entry(0, j).is_zero()) out.push_back(N.entry(0, j));
  return out;
}

GroebnerBasis annihilator(const ModuleMap& presentation) {
  const GradedRing& r = presentation.ring();
  if (presentation.target().rank() == 0)
    return buchberger_ideal(r, {Poly::from_int(r, 1)});
  std::vector<Poly> acc;
  for (int i = 0; i < presentation.target().rank(); ++i) {
    Vec ei = Vec::unit(r, presentation.target().rank(), i, Poly::from_int(r, 1));
    std::vector<Poly> anni = submodule_colon(presentation, ei);
    if (i == 0)
      acc = std::move(anni);
    else
      acc = intersect_ideals(r, acc, anni);
    if (acc.empty()) break;  // annihilator is zero
  }
  return buchberger_ideal(r, acc);
}

}  // namespace symres
