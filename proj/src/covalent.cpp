#include "carterlink/covalent.hpp"
#include "carterlink/qform.hpp"
#include "carterlink/stratify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace carterlink {

namespace {

std::vector<std::vector<int>> gram_of_subset(const AssociatedSubset& s) {
  const RootSystem& sys = get_root_system(s.primary);
  const int n = static_cast<int>(s.roots.size());
  std::vector<std::vector<int>> g(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = static_cast<int>(sys.inner(s.roots[i], s.roots[j]));
  return g;
}

// integer coefficients of `gamma` over the subset basis, or empty when the
// exact solution is not integral
std::vector<int> integer_coeffs(const Coord& gamma, const AssociatedSubset& s,
                                const RatMatrix& binv) {
  const RootSystem& sys = get_root_system(s.primary);
  std::vector<Rat> rhs(s.roots.size());
  for (size_t i = 0; i < s.roots.size(); ++i) rhs[i] = static_cast<long long>(sys.inner(gamma, s.roots[i]));
  std::vector<Rat> t = binv.mul(rhs);
  std::vector<int> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    if (rat_den(t[i]) != 1) return {};
    out[i] = static_cast<int>(rat_num(t[i]).convert_to<long long>());
  }
  // confirm reconstruction (gamma must lie in the span)
  std::vector<long long> rec(gamma.size(), 0);
  for (size_t i = 0; i < s.roots.size(); ++i)
    for (size_t j = 0; j < gamma.size(); ++j) rec[j] += static_cast<long long>(out[i]) * s.roots[i][j];
  for (size_t j = 0; j < gamma.size(); ++j)
    if (rec[j] != gamma[j]) return {};
  return out;
}

std::vector<std::vector<int>> int_matrix_inverse(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  RatMatrix rm(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rm.at(i, j) = m[i][j];
  auto inv = rm.inverse();
  if (!inv) return {};
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rat_den(inv->at(i, j)) != 1) return {};
      out[i][j] = static_cast<int>(rat_num(inv->at(i, j)).convert_to<long long>());
    }
  return out;
}

CovalentPair derive_d_pair(int l, int k) {
  // Chain presentation; the new D_l basis root is -(e_1 + e_2) = the formula
  //   beta_{k+1} = -(tau_1 + 2 sum_{i=2..k} tau_i + tau_{k+1} + taubar_{k+1}).
  CovalentPair p;
  p.tilde = {Family::Dak, l, k};
  p.dynkin = {Family::D, l, 0};
  for (int i = 1; i < l; ++i) p.vertex_names.push_back("t" + std::to_string(i));
  p.vertex_names.push_back("tb" + std::to_string(k + 1));

  RootSystemId ambient{'D', l};
  AssociatedSubset chain = dlak_chain_subset(l, k, ambient);
  p.gram = gram_of_subset(chain);

  p.M.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i + 1 < l; ++i) p.M[i][i] = 1;
  // row l-1: beta_{k+1} over the tilde basis
  p.M[l - 1][0] = -1;
  for (int i = 1; i < k; ++i) p.M[l - 1][i] = -2;
  p.M[l - 1][k] = -1;     // tau_{k+1}
  p.M[l - 1][l - 1] = -1; // taubar_{k+1}
  p.Minv = int_matrix_inverse(p.M);
  if (p.Minv.empty()) throw std::logic_error("D-pair map is not unimodular");
  p.changed_vertices = 1;
  return p;
}

// For the E pairs the map is derived: find a Dynkin-associated subset inside
// the span of the canonical tilde realization replacing as few basis roots as
// possible, expressed integrally over the tilde basis with unimodular matrix.
CovalentPair derive_e_pair(const CarterId& tilde_id, const CarterId& dynkin_id) {
  const CarterDiagram& tilde = diagram(tilde_id);
  const CarterDiagram& dyn = diagram(dynkin_id);
  RootSystemId ambient{'E', tilde_id.l};
  const RootSystem& sys = get_root_system(ambient);
  auto tilde_sub = embed(tilde, ambient);
  if (!tilde_sub) throw std::logic_error("tilde diagram does not embed in its own rank");

  RatMatrix btilde = partial_cartan(*tilde_sub);
  auto btinv_opt = btilde.inverse();
  RatMatrix btinv = *btinv_opt;

  DynkinExtension fake{tilde_id, ambient, *tilde_sub};
  std::vector<Coord> universe = partial_root_system(fake);
  std::set<Coord> tilde_roots(tilde_sub->roots.begin(), tilde_sub->roots.end());

  const int l = dyn.size();
  auto gram = dyn.gram();
  std::vector<int> assign(l, -1);
  std::vector<Coord> chosen(l);
  CovalentPair best;
  bool found = false;

  // iterative deepening over the number of non-tilde roots in the solution
  for (int budget = 0; budget <= l && !found; ++budget) {
    std::function<bool(int, int)> dfs = [&](int v, int used) {
      if (v == l) {
        // accepted only when unimodular over the tilde basis
        std::vector<std::vector<int>> M(l);
        for (int i = 0; i < l; ++i) {
          M[i] = integer_coeffs(chosen[i], *tilde_sub, btinv);
          if (M[i].empty()) return false;
        }
        auto Minv = int_matrix_inverse(M);
        if (Minv.empty()) return false;
        best.tilde = tilde_id;
        best.dynkin = dynkin_id;
        for (int i = 0; i < tilde.size(); ++i) best.vertex_names.push_back(tilde.vertex_name(i));
        best.gram = tilde.gram();
        best.M = std::move(M);
        best.Minv = std::move(Minv);
        best.changed_vertices = 0;
        for (int i = 0; i < l; ++i) {
          bool unit = std::count(best.M[i].begin(), best.M[i].end(), 0) == l - 1 &&
                      std::count(best.M[i].begin(), best.M[i].end(), 1) == 1;
          if (!unit) ++best.changed_vertices;
        }
        return true;
      }
      for (const Coord& cand : universe) {
        bool is_tilde = tilde_roots.count(cand) > 0;
        if (!is_tilde && used >= budget) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
          if (chosen[u] == cand) ok = false;
          else if (sys.inner(chosen[u], cand) != gram[u][v]) ok = false;
        }
        if (!ok) continue;
        chosen[v] = cand;
        if (dfs(v + 1, used + (is_tilde ? 0 : 1))) return true;
      }
      return false;
    };
    found = dfs(0, 0);
  }
  if (!found) throw std::logic_error("no unimodular covalent map found for " + tilde_id.name());
  return best;
}

} // namespace

AssociatedSubset dlak_chain_subset(int l, int k, RootSystemId ambient) {
  if (ambient.family != 'D' || ambient.rank < l)
    throw std::invalid_argument("chain presentation wants a D ambient of rank >= l");
  const RootSystem& sys = get_root_system(ambient);
  const int m = ambient.rank;
  AssociatedSubset s;
  s.diagram = {Family::Dak, l, k};
  s.primary = ambient;
  auto evec = [&](int i, int sign_i, int j, int sign_j) {
    std::vector<int> e(m, 0);
    e[i - 1] = sign_i;
    e[j - 1] = sign_j;
    return sys.from_euclidean(e);
  };
  for (int i = 1; i < l; ++i) s.roots.push_back(evec(i, 1, i + 1, -1));
  s.roots.push_back(evec(k + 1, 1, k + 2, 1));
  for (const Coord& r : s.roots)
    if (!sys.contains(r)) throw std::logic_error("chain presentation root missing");
  return s;
}

CovalentPair transition_map(const CarterId& tilde) {
  if (tilde.fam == Family::Dak) return derive_d_pair(tilde.l, tilde.k);
  if (tilde.fam == Family::Eak && (tilde.l == 6 || tilde.l == 7))
    return derive_e_pair(tilde, CarterId{Family::E, tilde.l, 0});
  if (tilde.is_dynkin()) {
    // identity pair: a Dynkin diagram is trivially covalent to itself
    const CarterDiagram& d = diagram(tilde);
    CovalentPair p;
    p.tilde = p.dynkin = tilde;
    for (int v = 0; v < d.size(); ++v) p.vertex_names.push_back(d.vertex_name(v));
    p.gram = d.gram();
    p.M.assign(d.size(), std::vector<int>(d.size(), 0));
    for (int v = 0; v < d.size(); ++v) p.M[v][v] = 1;
    p.Minv = p.M;
    p.changed_vertices = 0;
    return p;
  }
  throw std::invalid_argument("unsupported covalent pair for " + tilde.name());
}

namespace {

// tilde realization inside `primary` matching pair.gram
AssociatedSubset realize_tilde(const CovalentPair& pair, RootSystemId primary) {
  const RootSystem& sys = get_root_system(primary);
  if (pair.tilde.fam == Family::Dak && primary.family == 'D')
    return dlak_chain_subset(pair.tilde.l, pair.tilde.k, primary);
  if (pair.tilde.fam == Family::Eak || pair.tilde.is_dynkin()) {
    auto sub = embed(diagram(pair.tilde), primary);
    if (!sub) throw std::invalid_argument("tilde diagram does not embed in " + primary.name());
    return *sub;
  }
  (void)sys;
  throw std::invalid_argument("unsupported primary for this pair");
}

} // namespace

BijectionReport verify_bijection(const CovalentPair& pair, RootSystemId primary) {
  BijectionReport rep;
  const RootSystem& sys = get_root_system(primary);
  AssociatedSubset tilde_sub = realize_tilde(pair, primary);
  if (gram_of_subset(tilde_sub) != pair.gram) {
    rep.ok = false;
    rep.detail = "tilde realization does not match the pair presentation";
    return rep;
  }
  const int l = static_cast<int>(pair.M.size());

  // image basis: rows of M over the tilde roots
  AssociatedSubset dyn_sub;
  dyn_sub.diagram = pair.dynkin;
  dyn_sub.primary = primary;
  for (int i = 0; i < l; ++i) {
    Coord img(sys.rank(), 0);
    for (int j = 0; j < l; ++j)
      for (int t = 0; t < sys.rank(); ++t) img[t] += pair.M[i][j] * tilde_sub.roots[j][t];
    if (!sys.contains(img)) {
      rep.ok = false;
      rep.detail = "image of a basis vector is not a root";
      return rep;
    }
    dyn_sub.roots.push_back(std::move(img));
  }

  if (pair.tilde.fam == Family::Dak) {
    // the substituted basis root attaches to tau_2 only, realizing the
    // D_l tree in the chain presentation
    const Coord& nb = dyn_sub.roots[l - 1];
    for (int j = 0; j + 1 < l; ++j) {
      long long ip = sys.inner(nb, dyn_sub.roots[j]);
      if (ip != (j == 1 ? -1 : 0)) {
        rep.ok = false;
        rep.detail = "image basis does not realize the covalent Dynkin tree";
        return rep;
      }
    }
  }

  RatMatrix btilde = partial_cartan(tilde_sub);
  RatMatrix btinv = *btilde.inverse();
  RatMatrix bdyn = partial_cartan(dyn_sub);
  RatMatrix bdinv = *bdyn.inverse();

  DynkinExtension fp{pair.tilde, primary, tilde_sub};
  DynkinExtension fr{pair.dynkin, primary, dyn_sub};
  std::vector<Coord> P = partial_root_system(fp);
  std::vector<Coord> R = partial_root_system(fr);
  rep.size_p = static_cast<long long>(P.size());
  rep.size_r = static_cast<long long>(R.size());
  if (rep.size_p != rep.size_r) {
    rep.ok = false;
    rep.detail = "|P| != |R|";
    return rep;
  }
  // The two bases are unimodular images of each other, so the partial root
  // system and the root subsystem coincide as sets: the bijection carried by
  // M re-expresses each root's integer coordinates over the new basis.
  std::set<Coord> Rset(R.begin(), R.end());
  std::set<Coord> Pset(P.begin(), P.end());
  if (Pset != Rset) {
    rep.ok = false;
    rep.detail = "P and R differ as root sets";
    return rep;
  }
  for (const Coord& gamma : P) {
    std::vector<int> t = integer_coeffs(gamma, tilde_sub, btinv);
    if (t.empty()) {
      rep.ok = false;
      rep.detail = "a root of P is not integral over the tilde basis";
      return rep;
    }
    std::vector<int> s = integer_coeffs(gamma, dyn_sub, bdinv);
    if (s.empty()) {
      rep.ok = false;
      rep.detail = "a root of R is not integral over the image basis";
      return rep;
    }
    // coordinate transport: coords over S = coords over S-tilde times M^{-1}
    for (int j = 0; j < l; ++j) {
      long long acc = 0;
      for (int i = 0; i < l; ++i) acc += static_cast<long long>(t[i]) * pair.Minv[i][j];
      if (acc != s[j]) {
        rep.ok = false;
        rep.detail = "coordinate transport through M^{-1} is inconsistent";
        return rep;
      }
    }
  }
  return rep;
}

TransportReport transport_linkage(const CovalentPair& pair) {
  TransportReport rep;
  const LinkageSystem& lt = linkage_system(pair.tilde);
  const LinkageSystem& ld = linkage_system(pair.dynkin);
  rep.tilde_size = static_cast<long long>(lt.vertices.size());
  rep.dynkin_size = static_cast<long long>(ld.vertices.size());
  for (const auto& part : lt.parts) rep.tilde_parts.push_back(part.members.size());
  for (const auto& part : ld.parts) rep.dynkin_parts.push_back(part.members.size());
  std::sort(rep.tilde_parts.begin(), rep.tilde_parts.end());
  std::sort(rep.dynkin_parts.begin(), rep.dynkin_parts.end());
  rep.ok = rep.tilde_size == rep.dynkin_size && rep.tilde_parts == rep.dynkin_parts;
  return rep;
}

} // namespace carterlink
