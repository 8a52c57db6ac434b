#include "carterlink/carter.hpp"
#include "carterlink/matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace carterlink {

namespace {

// Incremental fraction-free row echelon over the integers; supports push/pop.
class IndepTracker {
 public:
  explicit IndepTracker(int dim) : dim_(dim) {}

  bool try_push(const Coord& c) {
    std::vector<Int> v(c.begin(), c.end());
    for (const auto& row : rows_) {
      int p = pivot_of(row);
      if (v[p] != 0) {
        Int f = v[p];
        Int g = row[p];
        for (int j = 0; j < dim_; ++j) v[j] = v[j] * g - row[j] * f;
      }
    }
    bool nonzero = std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    if (!nonzero) return false;
    rows_.push_back(std::move(v));
    return true;
  }

  void pop() { rows_.pop_back(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  static int pivot_of(const std::vector<Int>& row) {
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) return static_cast<int>(j);
    return -1;
  }
  int dim_;
  std::vector<std::vector<Int>> rows_;
};

// Chordless (induced) cycles of the unsigned diagram graph, each reported
// once with its minimal vertex first. Admissibility constrains only these:
// a cycle with a chord decomposes into shorter ones.
std::vector<std::vector<int>> chordless_cycles(const std::vector<std::vector<int>>& gram) {
  const int n = static_cast<int>(gram.size());
  auto adj = [&](int i, int j) { return i != j && gram[i][j] != 0; };
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> inpath(n, 0);

  std::function<void(int)> dfs = [&](int s) {
    int last = path.back();
    for (int nxt = s + 1; nxt < n; ++nxt) {
      if (inpath[nxt] || !adj(last, nxt)) continue;
      bool chord = false;
      for (size_t t = 1; t + 1 < path.size(); ++t)
        if (adj(nxt, path[t])) { chord = true; break; }
      if (chord) continue;
      if (path.size() >= 2 && adj(nxt, s)) {
        if (path[1] < nxt) {
          auto cyc = path;
          cyc.push_back(nxt);
          cycles.push_back(cyc);
        }
        continue; // extending past nxt would leave the chord (nxt, s)
      }
      path.push_back(nxt);
      inpath[nxt] = 1;
      dfs(s);
      inpath[nxt] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(inpath.begin(), inpath.end(), 0);
    inpath[s] = 1;
    dfs(s);
  }
  return cycles;
}

// Dynkin shapes among trees: chain, or one degree-3 vertex with arm lengths
// (1,1,n), (1,2,2), (1,2,3), (1,2,4).
bool tree_is_dynkin(const std::vector<std::vector<int>>& gram) {
  const int n = static_cast<int>(gram.size());
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && gram[i][j] != 0) ++deg[i];
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] >= 4) return false;
    if (deg[i] == 3) {
      if (branch >= 0) return false;
      branch = i;
    }
  }
  if (branch < 0) return true; // chain = A_n
  std::vector<int> arms;
  for (int j = 0; j < n; ++j) {
    if (j == branch || gram[branch][j] == 0) continue;
    int len = 1, prev = branch, cur = j;
    for (;;) {
      int nxt = -1;
      for (int t = 0; t < n; ++t)
        if (t != prev && t != cur && gram[cur][t] != 0) { nxt = t; break; }
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return false;
  if (arms[0] != 1) return false;
  if (arms[1] == 1) return true;                 // D_n
  return arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4; // E_6/7/8
}

std::string cycle_to_string(const std::vector<int>& cyc, const CarterDiagram& d) {
  std::ostringstream os;
  for (size_t i = 0; i < cyc.size(); ++i) os << (i ? "-" : "") << d.vertex_name(cyc[i]);
  return os.str();
}

} // namespace

ValidationReport validate(const CarterDiagram& d, const AssociatedSubset& s) {
  ValidationReport rep;
  const RootSystem& sys = get_root_system(s.primary);
  const int n = d.size();
  if (static_cast<int>(s.roots.size()) != n) {
    rep.ok = false;
    rep.issues.push_back({"size", "subset has " + std::to_string(s.roots.size()) +
                                      " roots, diagram has " + std::to_string(n) + " vertices"});
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (!sys.contains(s.roots[i])) {
      rep.ok = false;
      rep.issues.push_back({"membership", d.vertex_name(i) + " is not a root of " + s.primary.name()});
    }
  }
  if (!rep.ok) return rep;

  IndepTracker tracker(sys.rank());
  for (int i = 0; i < n; ++i)
    if (!tracker.try_push(s.roots[i])) {
      rep.ok = false;
      rep.issues.push_back({"independence",
                            "root at " + d.vertex_name(i) + " depends on earlier roots"});
      break;
    }

  auto g = d.gram();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long ip = sys.inner(s.roots[i], s.roots[j]);
      if (ip != g[i][j]) {
        rep.ok = false;
        rep.issues.push_back({"gram", "(" + d.vertex_name(i) + "," + d.vertex_name(j) +
                                          ") = " + std::to_string(ip) + ", edge wants " +
                                          std::to_string(g[i][j])});
      }
    }

  for (const auto& cyc : chordless_cycles(g)) {
    if (cyc.size() % 2 != 0) {
      rep.ok = false;
      rep.issues.push_back({"cycle-even", cycle_to_string(cyc, d)});
    }
    int solid = 0, dotted = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int sgn = g[cyc[i]][cyc[(i + 1) % cyc.size()]];
      (sgn < 0 ? solid : dotted) += 1;
    }
    if (solid == 0 || dotted == 0) {
      rep.ok = false;
      rep.issues.push_back({"cycle-signs", cycle_to_string(cyc, d)});
    }
  }

  if (d.is_tree() && !tree_is_dynkin(g)) {
    rep.ok = false;
    rep.issues.push_back({"tree-dynkin", "tree shape is not a Dynkin diagram"});
  }
  return rep;
}

namespace {

struct EmbedSearch {
  const CarterDiagram& d;
  const RootSystem& sys;
  const std::vector<Coord>* restrict_roots; // optional universe restriction
  std::vector<std::vector<int>> gram;
  size_t want = 1;
  bool existence_only = false;
  std::vector<AssociatedSubset> found;
  std::vector<int> assign; // root indices per fill position
  std::vector<int> order;  // fill sequence over diagram vertices
  IndepTracker tracker;

  EmbedSearch(const CarterDiagram& dg, const RootSystem& rs, const std::vector<Coord>* restr)
      : d(dg), sys(rs), restrict_roots(restr), gram(dg.gram()), tracker(rs.rank()) {
    // Most-constrained fill order: start at vertex 0, then repeatedly take the
    // unplaced vertex with the most placed neighbours (smallest index on
    // ties). Filling a disconnected-from-placed vertex would leave the
    // pairwise constraints idle and blow the search up on chain diagrams.
    const int n = d.size();
    std::vector<char> placed(n, 0);
    order.push_back(0);
    placed[0] = 1;
    while (static_cast<int>(order.size()) < n) {
      int best = -1, best_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int deg = 0;
        for (int u : d.neighbors(v))
          if (placed[u]) ++deg;
        if (deg > best_deg) {
          best_deg = deg;
          best = v;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  const std::vector<Coord>& universe() const {
    return restrict_roots ? *restrict_roots : sys.roots();
  }

  bool dfs(int pos) {
    const int n = d.size();
    if (pos == n) {
      AssociatedSubset s;
      s.diagram = d.id;
      s.primary = sys.id();
      s.roots.resize(n);
      for (int i = 0; i < n; ++i) s.roots[order[i]] = universe()[assign[i]];
      found.push_back(std::move(s));
      return found.size() >= want;
    }
    const auto& uni = universe();
    const int v = order[pos];
    // In existence mode the first vertex is pinned to one representative root;
    // the Weyl group acts transitively on roots, so this loses no solutions.
    // Valid only over the full root system.
    const size_t limit = (pos == 0 && existence_only) ? 1 : uni.size();
    for (size_t c = 0; c < limit; ++c) {
      const Coord& cand = uni[c];
      bool ok = true;
      for (int q = 0; q < pos; ++q) {
        if (sys.inner(uni[assign[q]], cand) != gram[order[q]][v]) { ok = false; break; }
      }
      if (!ok) continue;
      if (!tracker.try_push(cand)) continue;
      assign[pos] = static_cast<int>(c);
      if (dfs(pos + 1)) return true;
      tracker.pop();
    }
    return false;
  }

  void run() {
    assign.assign(d.size(), -1);
    dfs(0);
  }
};

} // namespace

std::vector<AssociatedSubset> embeddings(const CarterDiagram& d, RootSystemId primary,
                                         size_t count, bool existence_only) {
  const RootSystem& sys = get_root_system(primary);
  if (sys.rank() < d.size()) return {};
  EmbedSearch es(d, sys, nullptr);
  es.want = count;
  es.existence_only = existence_only;
  es.run();
  return std::move(es.found);
}

bool embeddable(const CarterDiagram& d, RootSystemId primary) {
  return !embeddings(d, primary, 1, /*existence_only=*/true).empty();
}

std::optional<AssociatedSubset> embed(const CarterDiagram& d, RootSystemId primary) {
  if (!embeddable(d, primary)) return std::nullopt;
  auto sols = embeddings(d, primary, 1, /*existence_only=*/false);
  if (sols.empty()) return std::nullopt;
  return sols.front();
}

std::optional<CarterDiagram> diagram_of_subset(const std::vector<Coord>& roots,
                                               const RootSystem& sys) {
  CarterDiagram d;
  d.id = CarterId{Family::A, static_cast<int>(roots.size()), 0};
  d.n_alpha = static_cast<int>(roots.size()); // caller decides the bicoloring
  d.n_beta = 0;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      long long ip = sys.inner(roots[i], roots[j]);
      if (ip != 0 && ip != 1 && ip != -1) return std::nullopt;
      if (ip != 0)
        d.edges.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(ip)});
    }
  return d;
}

AssociatedSubset similarity_normalize(const AssociatedSubset& s) {
  const CarterDiagram& d = diagram(s.diagram);
  const RootSystem& sys = get_root_system(s.primary);
  const int n = d.size();

  std::vector<std::pair<int, int>> pairs; // adjacency pairs of the *subset*
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sys.inner(s.roots[i], s.roots[j]) != 0) pairs.emplace_back(i, j);

  // Try all sign flips with flip[0] = +1; pick the lexicographically least
  // edge-sign vector, ties broken by the flip mask. 2^(n-1) <= 1024 cases.
  std::vector<int> best_signs;
  unsigned best_mask = 0;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> flip(n, 1);
    for (int v = 1; v < n; ++v)
      if (mask & (1u << (v - 1))) flip[v] = -1;
    std::vector<int> signs;
    signs.reserve(pairs.size());
    for (auto [i, j] : pairs)
      signs.push_back(static_cast<int>(sys.inner(s.roots[i], s.roots[j])) * flip[i] * flip[j]);
    if (best_signs.empty() || signs < best_signs) {
      best_signs = signs;
      best_mask = mask;
    }
  }
  AssociatedSubset out = s;
  for (int v = 1; v < n; ++v)
    if (best_mask & (1u << (v - 1))) out.roots[v] = negate(out.roots[v]);
  return out;
}


} // namespace carterlink
