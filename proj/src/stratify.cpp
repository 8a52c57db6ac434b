#include "carterlink/stratify.hpp"
#include "carterlink/qform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carterlink {

namespace {

std::vector<RootSystemId> extension_targets(int base_rank) {
  const int r = base_rank + 1;
  std::vector<RootSystemId> out;
  for (char fam : {'A', 'D', 'E'}) {
    RootSystemId id{fam, r};
    if (id.valid()) out.push_back(id);
  }
  return out;
}

// integer products of gamma against the subset roots (no range restriction)
std::vector<long long> raw_products(const Coord& gamma, const AssociatedSubset& s,
                                    const RootSystem& sys) {
  std::vector<long long> v(s.roots.size());
  for (size_t i = 0; i < s.roots.size(); ++i) v[i] = sys.inner(gamma, s.roots[i]);
  return v;
}

} // namespace

std::vector<DynkinExtension> dynkin_extensions(const CarterDiagram& d, int max_rank) {
  std::vector<DynkinExtension> out;
  if (d.size() + 1 > max_rank) return out;
  for (RootSystemId target : extension_targets(d.size())) {
    auto sub = embed(d, target);
    if (sub) out.push_back({d.id, target, std::move(*sub)});
  }
  return out;
}

DynkinExtension standard_extension(const CarterId& base, RootSystemId ext) {
  if (!base.is_dynkin()) throw std::invalid_argument("standard_extension: Dynkin bases only");
  const CarterDiagram& d = diagram(base);
  const int l = d.size();
  if (ext.rank != l + 1 || !ext.valid())
    throw std::invalid_argument("standard_extension: rank mismatch");
  const RootSystem& sys = get_root_system(ext);

  // node(v): 1-based Bourbaki index of the simple root carrying vertex v.
  std::vector<int> node(l, 0);
  bool ok = true;
  if (base.fam == Family::A) {
    if (ext.family == 'A') {
      // chain nodes 2..l+1, the new simple root sits at node 1
      for (int v = 0; v < l; ++v) node[v] = linear_position(d, v) + 1;
    } else if (ext.family == 'D') {
      // chain nodes l..1 (the D_{l+1} fork vertex attaches at position 2)
      for (int v = 0; v < l; ++v) node[v] = l + 1 - linear_position(d, v);
    } else {
      // E_{l+1}: chain nodes 1,3,4,...,l+1
      for (int v = 0; v < l; ++v) {
        int p = linear_position(d, v);
        node[v] = p == 1 ? 1 : p + 1;
      }
    }
  } else if (base.fam == Family::D) {
    if (ext.family == 'D') {
      // D_{l+1} nodes 2..l+1; fork of the base at node l-1.
      node[d.n_alpha] = l - 1;         // beta_1
      node[0] = l;                     // alpha_1 (prong)
      node[2] = l + 1;                 // alpha_3 (prong)
      node[1] = l - 2;                 // alpha_2
      // tail from alpha_2: beta_2, alpha_4, beta_3, ... at nodes l-3, l-4, ...
      int nxt_alpha = 3, nxt_beta = 1; // beta_2 is beta index 1 (0-based)
      for (int t = 1; t <= l - 4; ++t) {
        int v = (t % 2 == 1) ? d.n_alpha + nxt_beta++ : nxt_alpha++;
        node[v] = l - 2 - t;
      }
    } else if (ext.family == 'E') {
      // E_{l+1} minus node 1 is D_l with fork at node 4 (neighbours 2, 3, 5).
      node[d.n_alpha] = 4;
      node[0] = 2;
      node[2] = 3;
      node[1] = 5;
      int nxt_alpha = 3, nxt_beta = 1;
      for (int t = 1; t <= l - 4; ++t) {
        int v = (t % 2 == 1) ? d.n_alpha + nxt_beta++ : nxt_alpha++;
        node[v] = 5 + t;
      }
    } else {
      ok = false;
    }
  } else { // E base
    if (ext.family != 'E') throw std::invalid_argument("E_l extends only inside the E family");
    // our E_l names onto Bourbaki nodes 1..l of E_{l+1}
    node[d.n_alpha + 1] = 1; // beta_2
    node[0] = 3;             // alpha_1
    node[d.n_alpha] = 4;     // beta_1
    node[1] = 5;             // alpha_2
    node[d.n_alpha + 2] = 6; // beta_3
    node[2] = 2;             // alpha_3
    if (l >= 7) node[3] = 7; // alpha_4
  }
  if (!ok) throw std::invalid_argument("unsupported standard extension");

  DynkinExtension e;
  e.base = base;
  e.ext = ext;
  e.subset.diagram = base;
  e.subset.primary = ext;
  for (int v = 0; v < l; ++v) {
    Coord c(ext.rank, 0);
    c[node[v] - 1] = 1;
    e.subset.roots.push_back(std::move(c));
  }
  auto rep = validate(d, e.subset);
  if (!rep.ok) throw std::logic_error("standard_extension produced an invalid subset");
  return e;
}

Coord standard_extension_new_root(const DynkinExtension& e) {
  const RootSystem& sys = get_root_system(e.ext);
  std::vector<char> used(e.ext.rank + 1, 0);
  for (const Coord& r : e.subset.roots) {
    int idx = -1;
    int nz = 0;
    for (int i = 0; i < e.ext.rank; ++i)
      if (r[i] != 0) { ++nz; idx = i; }
    if (nz != 1 || r[idx] != 1) throw std::invalid_argument("not a standard extension subset");
    used[idx + 1] = 1;
  }
  for (int i = 1; i <= e.ext.rank; ++i)
    if (!used[i]) return sys.simple_root(i - 1);
  throw std::logic_error("no free simple root");
}

std::vector<Coord> partial_root_system(const DynkinExtension& e) {
  const RootSystem& sys = get_root_system(e.ext);
  const int l = static_cast<int>(e.subset.roots.size());
  RatMatrix b = partial_cartan(e.subset);
  auto binv = b.inverse();
  if (!binv) throw std::logic_error("singular subset Gram matrix");
  std::vector<Coord> out;
  for (const Coord& gamma : sys.roots()) {
    auto prod = raw_products(gamma, e.subset, sys);
    std::vector<Rat> rhs(prod.begin(), prod.end());
    std::vector<Rat> t = binv->mul(rhs);
    // reconstruct sum t_i * root_i and compare with gamma
    std::vector<Rat> rec(e.ext.rank, Rat(0));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < e.ext.rank; ++j) rec[j] += t[i] * e.subset.roots[i][j];
    bool dependent = true;
    for (int j = 0; j < e.ext.rank; ++j)
      if (rec[j] != gamma[j]) { dependent = false; break; }
    if (dependent) out.push_back(gamma);
  }
  return out;
}

StratumLabels component_from_stratum(const DynkinExtension& e) {
  const RootSystem& sys = get_root_system(e.ext);
  StratumLabels out;
  std::vector<Coord> partial = partial_root_system(e);
  std::set<Coord> partial_set(partial.begin(), partial.end());
  const RatMatrix& binv = partial_cartan_inverse(e.base);
  for (const Coord& gamma : sys.roots()) {
    if (partial_set.count(gamma)) continue;
    out.stratum.push_back(gamma);
    Label v = label_vector(gamma, e.subset); // throws when outside {-1,0,1}
    if (is_zero(v)) {
      ++out.zero_label_roots;
      continue;
    }
    out.by_label[v].push_back(gamma);
    if (!out.pval.count(v)) out.pval.emplace(v, binv.qform(v));
  }
  return out;
}

PairingReport verify_pairings(const DynkinExtension& e) {
  PairingReport rep;
  const RootSystem& sys = get_root_system(e.ext);
  const Coord mu = sys.maximal_root();
  const bool d_shape = e.base.fam == Family::D && e.ext.family == 'D';
  const bool e7_shape = e.base.fam == Family::E && e.base.l == 7 && e.ext.family == 'E';
  const bool a5_shape = e.base.fam == Family::A && e.base.l == 5 && e.ext.family == 'E';
  if (!d_shape && !e7_shape && !a5_shape) {
    rep.ok = false;
    rep.detail = "unsupported shape for the mu_max pairing";
    return rep;
  }
  Coord tau_new(e.ext.rank, 0);
  if (d_shape) tau_new = standard_extension_new_root(e);

  StratumLabels st = component_from_stratum(e);
  std::set<Coord> stratum_set(st.stratum.begin(), st.stratum.end());
  std::set<Coord> seen;
  for (const Coord& phi : st.stratum) {
    bool positive = false;
    for (int x : phi)
      if (x != 0) { positive = x > 0; break; }
    if (!positive || seen.count(phi)) continue;
    Coord delta(e.ext.rank);
    for (int i = 0; i < e.ext.rank; ++i) delta[i] = mu[i] - phi[i] + tau_new[i];
    if (!d_shape) {
      // delta = mu_max - phi; phi = mu_max pairs with zero and is excluded
      bool zero = std::all_of(delta.begin(), delta.end(), [](int x) { return x == 0; });
      if (zero) continue;
    }
    if (!stratum_set.count(delta)) {
      rep.ok = false;
      rep.detail = "pair image is not a stratum root";
      return rep;
    }
    auto lphi = label_vector(phi, e.subset);
    auto ldelta = label_vector(delta, e.subset);
    if (ldelta != negate_label(lphi)) {
      rep.ok = false;
      rep.detail = "labels of the pair are not opposite";
      return rep;
    }
    seen.insert(phi);
    seen.insert(delta);
    rep.positive_pairs.emplace_back(phi, delta);
  }
  rep.distinct_labels = static_cast<int>(st.by_label.size());
  return rep;
}

PairingReport negated_label_pairs(const DynkinExtension& e) {
  PairingReport rep;
  StratumLabels st = component_from_stratum(e);
  std::map<Label, std::vector<Coord>> pos_by_label;
  for (const auto& [label, roots] : st.by_label)
    for (const Coord& r : roots) {
      bool positive = false;
      for (int x : r)
        if (x != 0) { positive = x > 0; break; }
      if (positive) pos_by_label[label].push_back(r);
    }
  std::set<Label> used;
  for (const auto& [label, roots] : pos_by_label) {
    if (used.count(label)) continue;
    Label neg = negate_label(label);
    auto it = pos_by_label.find(neg);
    if (it == pos_by_label.end() || neg == label) continue;
    used.insert(label);
    used.insert(neg);
    for (const Coord& a : roots)
      for (const Coord& b : it->second) rep.positive_pairs.emplace_back(a, b);
  }
  rep.distinct_labels = static_cast<int>(st.by_label.size());
  return rep;
}

std::vector<CrossPair> cross_stratum_pairs(const DynkinExtension& a, const DynkinExtension& b,
                                           bool negated) {
  std::vector<CrossPair> out;
  StratumLabels sa = component_from_stratum(a);
  StratumLabels sb = component_from_stratum(b);
  for (const auto& [label, roots_a] : sa.by_label) {
    Label want = negated ? negate_label(label) : label;
    auto it = sb.by_label.find(want);
    if (it == sb.by_label.end()) continue;
    for (const Coord& ra : roots_a) {
      bool positive = false;
      for (int x : ra)
        if (x != 0) { positive = x > 0; break; }
      if (!positive) continue;
      for (const Coord& rb : it->second) {
        bool bpos = false;
        for (int x : rb)
          if (x != 0) { bpos = x > 0; break; }
        if (bpos) out.push_back({ra, rb, label});
      }
    }
  }
  return out;
}

AssembledSystem assemble_system(const CarterDiagram& d, int max_rank) {
  AssembledSystem out;
  out.diagram = d.id;
  for (const DynkinExtension& e : dynkin_extensions(d, max_rank)) {
    StratumLabels st = component_from_stratum(e);
    out.zero_vectors_excluded += st.zero_label_roots;
    for (const auto& [label, roots] : st.by_label) out.all_labels.insert(label);
    out.by_extension.emplace(e.ext.name(), std::move(st));
  }

  // A single subset per extension target can miss extension classes where the
  // diagram has symmetries the ambient Weyl group cannot realize (D_4 and
  // D_4(a_1): the three prong choices). Whenever the inequality solutions are
  // not all covered, walk further lexicographic embeddings; every stratum is a
  // genuine realization, so this only ever adds realized vectors.
  auto covered = [&]() {
    for (const Label& v : inequality_solutions(d))
      if (!out.all_labels.count(v)) return false;
    return true;
  };
  if (d.size() + 1 <= max_rank && !covered()) {
    for (RootSystemId target : extension_targets(d.size())) {
      size_t budget = 64;
      auto subs = embeddings(d, target, budget);
      int cls = 2;
      for (const auto& sub : subs) {
        DynkinExtension e{d.id, target, sub};
        StratumLabels st = component_from_stratum(e);
        bool adds = false;
        for (const auto& [label, roots] : st.by_label)
          if (!out.all_labels.count(label)) { adds = true; break; }
        if (!adds) continue;
        for (const auto& [label, roots] : st.by_label) out.all_labels.insert(label);
        out.by_extension.emplace(target.name() + "#" + std::to_string(cls++), std::move(st));
        if (covered()) break;
      }
      if (covered()) break;
    }
  }

  for (const auto& [na, sa] : out.by_extension)
    for (const auto& [nb, sb] : out.by_extension) {
      if (na == nb || sa.by_label.empty()) continue;
      bool included = true;
      for (const auto& [label, roots] : sa.by_label)
        if (!sb.by_label.count(label)) { included = false; break; }
      if (included) out.inclusions.emplace_back(na, nb);
    }
  return out;
}

} // namespace carterlink
