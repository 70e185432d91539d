#include "symres/gorenstein.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <random>

#include "symres/linalg.hpp"

namespace symres {

bool GorensteinCertificate::all_checks_passed() const {
  for (const auto& c : transcript)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json GorensteinCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["codimension"] = codim;
  j["m"] = m;
  j["twist"] = twist;
  j["sign"] = sign;
  j["field"] = field;
  j["method"] = method;
  j["seed"] = seed;
  nlohmann::ordered_json shape = nlohmann::ordered_json::array();
  for (int i = 0; i <= symmetric_res.complex.length(); ++i) {
    nlohmann::ordered_json degs = nlohmann::ordered_json::array();
    for (long long d : symmetric_res.complex.module(i).degrees()) degs.push_back(d);
    shape.push_back(degs);
  }
  j["shape"] = shape;
  j["betti"] = betti_table.to_json()["betti"];
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : transcript) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  nlohmann::ordered_json mats = nlohmann::ordered_json::object();
  if (symmetric_res.complex.length() >= 1) {
    int mid = m + 1;
    if (mid <= symmetric_res.complex.length()) {
      const ModuleMap& dm = symmetric_res.complex.d(mid);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int i = 0; i < dm.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int jx = 0; jx < dm.cols(); ++jx) row.push_back(dm.entry(i, jx).to_string());
        rows.push_back(row);
      }
      mats["middle"] = rows;
    }
  }
  j["matrices"] = mats;
  return j;
}

long long codimension(const AlgebraOverS& A) {
  GroebnerBasis ann = annihilator(A.presentation());
  long long dim_r = krull_dimension(ann);
  return A.s_ring().nvars() - dim_r;
}

bool check_perfect(const AlgebraOverS& A, const Resolution& res) {
  long long c = codimension(A);
  if (res.complex.length() != c) return false;
  if (c == 0) return true;
  FreeComplex D = dualize(res.complex, 0);
  if (!left_end_injective(D)) return false;  // Ext^0 = 0
  for (int i = 1; i < D.length(); ++i)
    if (!homology_is_zero(D, i)) return false;  // Ext^{c-i} = 0
  return true;
}

DiamondResult check_diamond_partial(const AlgebraOverS& A) {
  if (A.f0().rank() == 1)
    return {true, "cyclic: the induced map S/ann -> R is an isomorphism"};
  GroebnerBasis ann = annihilator(A.presentation());
  long long dim_stilde = krull_dimension(ann);
  HilbertData hr = A.hilbert();
  if (hr.dimension() != dim_stilde)
    return {false, "dimension mismatch: dim R = " + std::to_string(hr.dimension()) +
                       ", dim S~ = " + std::to_string(dim_stilde)};
  HilbertData hs = hilbert_series(ann);
  if (!(hr.multiplicity() == hs.multiplicity()))
    return {false, "multiplicity mismatch: e(R) = " + hr.multiplicity().str() +
                       ", e(S~) = " + hs.multiplicity().str()};
  if (ann.gens.empty())
    return {true, "multiplicity check passed and S~ = S is a domain"};
  if (ann.gens.size() == 1) {
    const Poly& g = ann.gens[0][0];
    bool linear = true;
    for (const auto& t : g.terms())
      if (t.m.total_degree() > 1) linear = false;
    if (linear)
      return {true, "multiplicity check passed and ann is principal with a linear generator"};
  }
  return {false, "multiplicity check passed, primality not certified"};
}

long long discover_twist(const FreeComplex& c) {
  int len = c.length();
  auto d0 = c.module(0).sorted_degrees();
  auto dc = c.module(len).sorted_degrees();
  if (d0.empty() || dc.empty()) fail(ErrorCode::NoTwistExists, "empty end modules");
  // sorted(F_0) must equal sorted(-t - g : g in F_len)
  long long t = -(dc.back() + d0.front());
  for (int i = 0; i <= len; ++i) {
    auto lhs = c.module(i).sorted_degrees();
    auto rhs = c.module(len - i).dual(t).sorted_degrees();
    if (lhs != rhs)
      fail(ErrorCode::NoTwistExists,
           "no twist makes the degree tables palindromic (tried t=" + std::to_string(t) + ")");
  }
  return t;
}

namespace {

Resolution as_resolution(FreeComplex c) {
  ModuleMap pres = c.length() >= 1 ? c.d(1) : ModuleMap::zero(c.module(0), FreeModule(c.ring(), {}));
  return Resolution{std::move(c), pres, true};
}

// degree-0 module homomorphisms coker(dD_1) -> coker(dF_1), as matrices
// D_0 -> F_0; returns a basis of the solution space
std::vector<ModuleMap> hom_space_basis(const FreeComplex& D, const FreeComplex& F) {
  const GradedRing& r = F.ring();
  const FieldSpec field = r.field();
  struct Unknown {
    int i, j;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < F.module(0).rank(); ++i)
    for (int j = 0; j < D.module(0).rank(); ++j) {
      long long d = D.module(0).degree(j) - F.module(0).degree(i);
      if (d < 0) continue;
      std::function<void(std::vector<int>&, int, long long)> rec =
          [&](std::vector<int>& e, int pos, long long rem) {
            if (pos == r.nvars()) {
              if (rem == 0) unknowns.push_back({i, j, r.monomial(e)});
              return;
            }
            for (int k = 0;; ++k) {
              long long used = static_cast<long long>(k) * r.weights()[pos];
              if (used > rem) break;
              e[pos] = k;
              rec(e, pos + 1, rem - used);
            }
            e[pos] = 0;
          };
      std::vector<int> e(r.nvars(), 0);
      rec(e, 0, d);
    }
  GroebnerBasis imF = F.length() >= 1 ? buchberger(F.module(0), F.d(1).columns())
                                      : buchberger(F.module(0), {});
  // constraints: NF(U · (dD_1 col c)) = 0 for every column c
  std::map<std::pair<long long, std::vector<int>>, int> coord;
  auto coord_of = [&](long long block, const Monomial& m) {
    auto key = std::make_pair(block, m.exps());
    auto it = coord.find(key);
    if (it != coord.end()) return it->second;
    int id = static_cast<int>(coord.size());
    coord.emplace(key, id);
    return id;
  };
  int ncols_d = D.length() >= 1 ? D.d(1).cols() : 0;
  std::vector<std::vector<std::pair<int, Scalar>>> entries(unknowns.size());
  for (int c = 0; c < ncols_d; ++c) {
    Vec col = D.d(1).column(c);
    for (size_t ux = 0; ux < unknowns.size(); ++ux) {
      const auto& u = unknowns[ux];
      if (col[u.j].is_zero()) continue;
      Vec contrib = Vec::unit(r, F.module(0).rank(), u.i,
                              col[u.j].times_monomial(u.mono, Scalar::one(field)));
      Vec nf = normal_form(contrib, imF);
      for (int i = 0; i < nf.rank(); ++i)
        for (const auto& t : nf[i].terms())
          entries[ux].push_back({coord_of(static_cast<long long>(c) * F.module(0).rank() + i, t.m),
                                 t.c});
    }
  }
  std::vector<std::vector<Scalar>> mat(coord.size(),
                                       std::vector<Scalar>(unknowns.size(), Scalar::zero(field)));
  for (size_t ux = 0; ux < unknowns.size(); ++ux)
    for (const auto& [row, val] : entries[ux]) mat[row][ux] += val;
  auto kernel = linalg::kernel(mat, static_cast<int>(unknowns.size()), field);
  std::vector<ModuleMap> basis;
  for (const auto& k : kernel) {
    std::vector<std::vector<Poly>> a(F.module(0).rank(),
                                     std::vector<Poly>(D.module(0).rank(), Poly::zero(r)));
    for (size_t ux = 0; ux < unknowns.size(); ++ux)
      if (!k[ux].is_zero())
        a[unknowns[ux].i][unknowns[ux].j] += Poly::term(r, unknowns[ux].mono, k[ux]);
    basis.push_back(ModuleMap(F.module(0), D.module(0), std::move(a)));
  }
  return basis;
}

std::optional<ChainMap> try_lift_iso(const ModuleMap& u0, const Resolution& resD,
                                     const Resolution& resF) {
  ChainMap psi;
  try {
    psi = lift_map(u0, resD, resF);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (const auto& p : psi.maps)
    if (!p.is_graded_invertible()) return std::nullopt;
  return psi;
}

}  // namespace

std::optional<Identification> find_identification(const Resolution& res, long long twist,
                                                  unsigned seed, std::string* why) {
  const FreeComplex& F = res.complex;
  FreeComplex D = dualize(F, twist);
  Resolution resD = as_resolution(D);
  std::vector<ModuleMap> basis = hom_space_basis(D, F);
  if (basis.empty()) {
    if (why) *why = "Hom space of degree-0 module maps is zero";
    return std::nullopt;
  }
  // deterministic sweep: single basis elements first, then seeded combinations
  for (const auto& b : basis) {
    if (!b.is_graded_invertible()) continue;
    if (auto psi = try_lift_iso(b, resD, res))
      return Identification{twist, std::move(*psi), seed};
  }
  std::mt19937 rng(seed);
  const FieldSpec field = F.ring().field();
  for (int attempt = 0; attempt < 24; ++attempt) {
    ModuleMap cand = ModuleMap::zero(F.module(0), D.module(0));
    for (const auto& b : basis) {
      long long c = field.is_rational() ? static_cast<long long>(rng() % 7) - 3
                                        : static_cast<long long>(rng() % field.p);
      cand = cand + b.scaled(Scalar::from_int(c, field));
    }
    if (!cand.is_graded_invertible()) continue;
    if (auto psi = try_lift_iso(cand, resD, res))
      return Identification{twist, std::move(*psi), seed};
  }
  if (why)
    *why = "no invertible chain lift found among " + std::to_string(basis.size()) +
           " Hom-space basis elements";
  return std::nullopt;
}

namespace {

Poly dot(const Vec& a, const Vec& b) {
  Poly s = Poly::zero(a.ring());
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

void record(std::vector<CheckRecord>& transcript, const std::string& name, bool pass,
            const std::string& detail = "") {
  transcript.push_back({name, pass, detail});
}

}  // namespace

bool betti_palindrome(const BettiTable& b, int c, long long t) {
  for (const auto& [key, rank] : b.entries)
    if (b.rank(c - key.first, -t - key.second) != rank) return false;
  return true;
}

GorensteinCertificate duality_maps(const AlgebraOverS& A, const Resolution& res,
                                   const MultStructure& mult, long long twist, unsigned seed) {
  const FreeComplex& F = res.complex;
  int c = F.length();
  if (c % 2 == 0)
    fail(ErrorCode::OddCodimRequired, "codimension " + std::to_string(c) + " is even");
  int m = (c - 1) / 2;
  GorensteinCertificate cert;
  cert.codim = c;
  cert.m = m;
  cert.twist = twist;
  cert.sign = m % 2 == 0 ? 1 : -1;
  cert.field = F.ring().field().to_string();
  cert.method = "symmetrize";
  cert.seed = seed;

  std::string why;
  auto ident = find_identification(res, twist, seed, &why);
  if (!ident) fail(ErrorCode::NotGorenstein, "no Gorenstein identification: " + why);
  const ChainMap& psi = ident->psi;
  record(cert.transcript, "identification_lift_invertible", true);

  // sigma = psi_0^{-1}(e_0)
  ModuleMap psi0_inv = psi.maps[0].graded_inverse();
  Vec e0 = Vec::unit(F.ring(), F.module(0).rank(), 0, Poly::from_int(F.ring(), 1));
  Vec sigma = psi0_inv.apply(e0);
  cert.socle = sigma;

  // t_i(a)(b) = sigma(mu(a ⊗ b))
  FreeComplex D = dualize(F, twist);
  std::vector<ModuleMap> tmaps;
  for (int i = 0; i <= c; ++i) {
    int rows = F.module(c - i).rank();
    int cols = F.module(i).rank();
    std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols, Poly::zero(F.ring())));
    for (int col = 0; col < cols; ++col)
      for (int row = 0; row < rows; ++row) {
        Vec prod = mult.mu_on(i, col, c - i, row);
        a[row][col] = dot(sigma, prod);
      }
    tmaps.push_back(ModuleMap(D.module(i), F.module(i), std::move(a)));
  }
  // t_0 sends e_0 to sigma
  record(cert.transcript, "t0_maps_e0_to_socle", tmaps[0].apply(e0) == sigma);
  // Lemma 3.1 sign identities
  bool signs_ok = true;
  for (int i = 1; i <= c; ++i) {
    Scalar sg = Scalar::from_int(i % 2 == 1 ? 1 : -1, F.ring().field());
    ModuleMap lhs = tmaps[i - 1].compose(F.d(i));
    ModuleMap rhs = F.d(c + 1 - i).transpose(twist).compose(tmaps[i]).scaled(sg);
    if (!(lhs == rhs)) signs_ok = false;
  }
  record(cert.transcript, "sign_identities", signs_ok);
  if (!signs_ok) fail(ErrorCode::NotGorenstein, "Lemma-type sign identities failed");
  // t_{c-i} = t_i^*
  bool duality_ok = true;
  for (int i = 0; i <= c; ++i)
    if (!(tmaps[c - i] == tmaps[i].transpose(twist))) duality_ok = false;
  record(cert.transcript, "t_transpose_symmetry", duality_ok);
  if (!duality_ok) fail(ErrorCode::NotGorenstein, "t_{c-i} != t_i^*");
  // invertibility of every t_i
  for (int i = 0; i <= c; ++i)
    if (!tmaps[i].is_graded_invertible())
      fail(ErrorCode::TNotInvertible,
           "t_" + std::to_string(i) + " is not invertible (diamond or Gorenstein failure)");
  record(cert.transcript, "t_maps_invertible", true);

  cert.t_maps = std::move(tmaps);
  cert.symmetric_res = res;  // not yet spliced
  cert.betti_table = betti(F);
  return cert;
}

namespace {

// splice F_0..F_m with the dual tail through the middle map psi_mid
Resolution splice_symmetric(const FreeComplex& F, long long twist, int m,
                            const ModuleMap& middle) {
  int c = F.length();
  FreeComplex D = dualize(F, twist);
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> diffs;
  for (int i = 0; i <= m; ++i) modules.push_back(F.module(i));
  for (int i = m + 1; i <= c; ++i) modules.push_back(D.module(i));
  for (int i = 1; i <= m; ++i) diffs.push_back(F.d(i));
  diffs.push_back(middle);
  for (int i = m + 2; i <= c; ++i) diffs.push_back(D.d(i));
  return Resolution{FreeComplex(std::move(modules), std::move(diffs)),
                    F.length() >= 1 ? F.d(1) : ModuleMap(), true};
}

void certify_spliced(GorensteinCertificate& cert) {
  const FreeComplex& G = cert.symmetric_res.complex;
  int c = G.length();
  int m = cert.m;
  const ModuleMap& mid = G.d(m + 1);
  Scalar sg = Scalar::from_int(cert.sign, G.ring().field());
  bool symmetric = mid.transpose(cert.twist) == mid.scaled(sg);
  record(cert.transcript, "middle_map_symmetry", symmetric,
         cert.sign == 1 ? "symmetric" : "alternating");
  if (!symmetric) fail(ErrorCode::MiddleMapNotSymmetric, "spliced middle map lost symmetry");
  if (cert.sign == -1) {
    bool zero_diag = true;
    for (int i = 0; i < std::min(mid.rows(), mid.cols()); ++i)
      if (!mid.entry(i, i).is_zero()) zero_diag = false;
    record(cert.transcript, "middle_map_zero_diagonal", zero_diag);
    if (!zero_diag) fail(ErrorCode::MiddleMapNotSymmetric, "alternating map has nonzero diagonal");
  }
  record(cert.transcript, "spliced_minimal", G.is_minimal());
  record(cert.transcript, "spliced_exact", is_exact_resolution_shape(G));
  record(cert.transcript, "betti_palindrome", betti_palindrome(betti(G), c, cert.twist));
  cert.betti_table = betti(G);
}

}  // namespace

GorensteinCertificate symmetrize(const AlgebraOverS& A, const Resolution& res, unsigned seed) {
  const FreeComplex& F = res.complex;
  long long c = codimension(A);
  if (c % 2 == 0)
    fail(ErrorCode::OddCodimRequired, "codimension " + std::to_string(c) + " is even");
  if (F.length() != c)
    fail(ErrorCode::NotGorenstein, "resolution length " + std::to_string(F.length()) +
                                       " != codimension " + std::to_string(c) +
                                       " (module is not perfect)");
  long long twist = discover_twist(F);
  MultStructure mult = build_multiplication(A, res);
  GorensteinCertificate cert = duality_maps(A, res, mult, twist, seed);
  record(cert.transcript, "perfect", check_perfect(A, res));
  // middle map: d~ = d_{m+1} ∘ t_{m+1}^{-1}
  int m = cert.m;
  ModuleMap middle = F.d(m + 1).compose(cert.t_maps[m + 1].graded_inverse());
  cert.symmetric_res = splice_symmetric(F, twist, m, middle);
  certify_spliced(cert);
  return cert;
}

GorensteinCertificate verify_symmetric_resolution(const Resolution& res) {
  const FreeComplex& G = res.complex;
  int c = G.length();
  if (c % 2 == 0 || c < 1)
    fail(ErrorCode::ShapeMismatch, "length " + std::to_string(c) + " is not odd");
  int m = (c - 1) / 2;
  GorensteinCertificate cert;
  cert.codim = c;
  cert.m = m;
  cert.sign = m % 2 == 0 ? 1 : -1;
  cert.field = G.ring().field().to_string();
  cert.method = "verify";

  // F_0 = S ⊕ F_0'
  bool has_unit_slot = false;
  for (long long d : G.module(0).degrees()) has_unit_slot = has_unit_slot || d == 0;
  record(cert.transcript, "unit_generator_present", has_unit_slot);
  if (!has_unit_slot) fail(ErrorCode::ShapeMismatch, "F_0 has no degree-0 generator");

  cert.twist = discover_twist(G);

  // tail literally transposes the head
  bool shape_ok = true;
  for (int k = 1; k <= m; ++k) {
    if (!G.module(m + 1 + k).same_module(G.module(m + 1 - k).dual(cert.twist))) shape_ok = false;
    else if (!(G.d(m + 1 + k) == G.d(m + 1 - k).transpose(cert.twist))) shape_ok = false;
  }
  record(cert.transcript, "palindromic_shape", shape_ok);
  if (!shape_ok) fail(ErrorCode::ShapeMismatch, "tail differentials are not the transposed head");

  const ModuleMap& mid = G.d(m + 1);
  Scalar sg = Scalar::from_int(cert.sign, G.ring().field());
  bool symmetric =
      mid.source().same_module(G.module(m).dual(cert.twist)) &&
      mid.transpose(cert.twist) == mid.scaled(sg);
  record(cert.transcript, "middle_map_symmetry", symmetric,
         cert.sign == 1 ? "symmetric" : "alternating");
  if (!symmetric)
    fail(ErrorCode::MiddleMapNotSymmetric,
         std::string("middle map is not ") + (cert.sign == 1 ? "symmetric" : "alternating"));
  if (cert.sign == -1) {
    for (int i = 0; i < std::min(mid.rows(), mid.cols()); ++i)
      if (!mid.entry(i, i).is_zero())
        fail(ErrorCode::MiddleMapNotSymmetric, "alternating middle map has nonzero diagonal");
  }

  record(cert.transcript, "minimal", G.is_minimal());
  if (!G.is_minimal()) fail(ErrorCode::ShapeMismatch, "resolution is not minimal");
  bool exact = is_exact_resolution_shape(G);
  record(cert.transcript, "exact", exact);
  if (!exact) fail(ErrorCode::ShapeMismatch, "complex is not exact");

  FreeComplex D = dualize(G, cert.twist);
  bool dual_exact = is_exact_resolution_shape(D);
  record(cert.transcript, "dual_exact", dual_exact);
  if (!dual_exact) fail(ErrorCode::DualNotExact, "dual complex has homology");

  // comparison map: identity on the head, (-1)^m identity on the tail
  bool cmp_ok = true;
  {
    std::vector<ModuleMap> w;
    for (int i = 0; i <= c; ++i) {
      if (!D.module(i).same_module(G.module(i))) {
        cmp_ok = false;
        break;
      }
      ModuleMap wi = ModuleMap::identity(G.module(i));
      if (i > m) wi = wi.scaled(sg);
      w.push_back(std::move(wi));
    }
    if (cmp_ok)
      for (int i = 1; i <= c; ++i)
        if (!(w[i - 1].compose(D.d(i)) == G.d(i).compose(w[i]))) cmp_ok = false;
  }
  record(cert.transcript, "comparison_map_unit_scalar", cmp_ok);
  if (!cmp_ok) fail(ErrorCode::ShapeMismatch, "comparison chain map does not commute");

  cert.symmetric_res = res;
  cert.betti_table = betti(G);
  record(cert.transcript, "betti_palindrome", betti_palindrome(cert.betti_table, c, cert.twist));
  return cert;
}

GorensteinCertificate symmetrize_by_averaging(const AlgebraOverS& A, const Resolution& res,
                                              unsigned seed) {
  const FreeComplex& F = res.complex;
  long long c = codimension(A);
  if (c % 2 == 0)
    fail(ErrorCode::OddCodimRequired, "codimension " + std::to_string(c) + " is even");
  if (F.length() != c)
    fail(ErrorCode::NotGorenstein, "resolution length != codimension");
  if (F.ring().field().p == 2)
    fail(ErrorCode::InvalidArgument, "averaging needs 2 invertible");
  int m = (static_cast<int>(c) - 1) / 2;
  long long twist = discover_twist(F);

  GorensteinCertificate cert;
  cert.codim = static_cast<int>(c);
  cert.m = m;
  cert.twist = twist;
  cert.sign = m % 2 == 0 ? 1 : -1;
  cert.field = F.ring().field().to_string();
  cert.method = "averaging";
  cert.seed = seed;

  std::string why;
  auto ident = find_identification(res, twist, seed, &why);
  if (!ident) fail(ErrorCode::NotGorenstein, "no Gorenstein identification: " + why);
  const ChainMap& psi = ident->psi;

  // reflected chain map psi^_i = (-1)^m (psi_{c-i})^T and the average
  Scalar sg = Scalar::from_int(cert.sign, F.ring().field());
  Scalar half = Scalar::from_int(2, F.ring().field()).inverse();
  std::vector<ModuleMap> v;
  for (int i = 0; i <= c; ++i) {
    ModuleMap reflected = psi.maps[c - i].transpose(twist).scaled(sg);
    v.push_back((psi.maps[i] + reflected).scaled(half));
  }
  // still a chain map
  FreeComplex D = dualize(F, twist);
  for (int i = 1; i <= c; ++i)
    if (!(v[i - 1].compose(D.d(i)) == F.d(i).compose(v[i])))
      fail(ErrorCode::LiftFailed, "averaged map is not a chain map");
  for (int i = 0; i <= c; ++i)
    if (!v[i].is_graded_invertible())
      fail(ErrorCode::AveragedMapNotInvertible,
           "averaged chain map degenerates at level " + std::to_string(i));
  record(cert.transcript, "averaged_map_invertible", true);

  ModuleMap middle = F.d(m + 1).compose(v[m + 1]);
  cert.symmetric_res = splice_symmetric(F, twist, m, middle);
  certify_spliced(cert);
  return cert;
}

}  // namespace symres
