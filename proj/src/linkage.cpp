#include "carterlink/linkage.hpp"
#include "carterlink/qform.hpp"

#include <algorithm>
#include <stdexcept>

namespace carterlink {

bool is_zero(const Label& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

Label negate_label(const Label& v) {
  Label r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Label label_vector(const Coord& gamma, const AssociatedSubset& s) {
  const RootSystem& sys = get_root_system(s.primary);
  Label v(s.roots.size());
  for (size_t i = 0; i < s.roots.size(); ++i) {
    long long ip = sys.inner(gamma, s.roots[i]);
    if (ip < -1 || ip > 1)
      throw std::domain_error("label outside {-1,0,1} at position " + std::to_string(i));
    v[i] = static_cast<int>(ip);
  }
  return v;
}

bool is_linkage_candidate(const Label& v, const RatMatrix& binv) {
  return binv.qform(v) < 2;
}

std::vector<int> dual_reflect_unbounded(const std::vector<int>& v, int vertex,
                                        const std::vector<std::vector<int>>& gram) {
  // s*_t(v) = v - v[t] * (column t of the Gram matrix)
  std::vector<int> r = v;
  const int c = v[vertex];
  if (c == 0) return r;
  for (size_t i = 0; i < v.size(); ++i) r[i] -= c * gram[i][vertex];
  return r;
}

Label dual_reflect(const Label& v, int vertex, const CarterDiagram& d) {
  auto r = dual_reflect_unbounded(v, vertex, d.gram());
  for (int x : r)
    if (x < -1 || x > 1)
      throw std::domain_error("dual reflection left {-1,0,1}: not a linkage vector");
  return r;
}

namespace {

// Iterate vectors in {-1,0,1}^l with some coordinates pinned.
// visit(label) is called for each assignment of the free coordinates.
template <typename F>
void scan_pinned(int l, const std::vector<std::pair<int, int>>& pinned, F&& visit) {
  std::vector<int> free_pos;
  Label v(l, 0);
  std::vector<char> is_pinned(l, 0);
  for (auto [pos, val] : pinned) {
    v[pos] = val;
    is_pinned[pos] = 1;
  }
  for (int i = 0; i < l; ++i)
    if (!is_pinned[i]) free_pos.push_back(i);
  long long total = 1;
  for (size_t i = 0; i < free_pos.size(); ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i : free_pos) {
      v[i] = static_cast<int>(c % 3) - 1;
      c /= 3;
    }
    visit(v);
  }
}

} // namespace

std::vector<Label> inequality_solutions(const CarterDiagram& d) {
  const RatMatrix& binv = partial_cartan_inverse(d.id);
  std::vector<Label> out;
  scan_pinned(d.size(), {}, [&](const Label& v) {
    if (!is_zero(v) && is_linkage_candidate(v, binv)) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> solve_gamma8(const CarterDiagram& d, int i, int j) {
  if (!d.has_branch_point()) throw std::invalid_argument("solve_gamma8: no branch point");
  if (i < 1 || j < 1 || i >= j || j > 3) throw std::invalid_argument("solve_gamma8: bad type");
  const int k = 6 - i - j; // complementary index in {1,2,3}
  const RatMatrix& binv = partial_cartan_inverse(d.id);
  std::vector<std::pair<int, int>> pinned = {
      {i - 1, 0}, {j - 1, 0}, {k - 1, 1}, {d.n_alpha, 0} /* beta_1 */};
  std::vector<Label> out;
  scan_pinned(d.size(), pinned, [&](const Label& v) {
    if (is_linkage_candidate(v, binv)) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> solve_beta_unicolored(const CarterDiagram& d) {
  if (!d.has_branch_point()) throw std::invalid_argument("solve_beta_unicolored: no branch point");
  const RatMatrix& binv = partial_cartan_inverse(d.id);
  std::vector<std::pair<int, int>> pinned = {{0, 0}, {1, 0}, {2, 0}, {d.n_alpha, 0}};
  std::vector<Label> out;
  scan_pinned(d.size(), pinned, [&](const Label& v) {
    if (!is_zero(v) && is_linkage_candidate(v, binv)) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

int LinkageSystem::index_of(const Label& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

LoctetDecomposition detect_loctets(const CarterDiagram& d, const LinkageSystem& sys) {
  if (!d.has_branch_point())
    throw std::invalid_argument("detect_loctets: diagram has no branch point");
  LoctetDecomposition out;
  const int b1 = d.n_alpha;
  std::vector<char> assigned(sys.vertices.size(), 0);

  auto alpha_support = [&](const Label& v) {
    std::vector<int> sup;
    for (int t = 0; t < 3; ++t)
      if (v[t] != 0) sup.push_back(t + 1);
    return sup;
  };

  for (size_t vi = 0; vi < sys.vertices.size(); ++vi) {
    if (assigned[vi]) continue;
    const Label& v = sys.vertices[vi];
    if (alpha_support(v).empty()) continue;

    // The loctet is the orbit of v under the four star reflections.
    std::set<Label> orbit{v};
    std::vector<Label> frontier{v};
    const std::array<int, 4> star = {0, 1, 2, b1};
    while (!frontier.empty()) {
      std::vector<Label> next;
      for (const Label& u : frontier)
        for (int t : star) {
          Label w = dual_reflect(u, t, d);
          if (orbit.insert(w).second) next.push_back(w);
        }
      frontier = std::move(next);
    }
    if (orbit.size() != 8)
      throw std::runtime_error("star orbit of size " + std::to_string(orbit.size()) +
                               " != 8: broken loctet");
    // Identify cell 8: a single +1 alpha label among the first three, beta_1 = 0.
    Loctet loc;
    const Label* cell8 = nullptr;
    for (const Label& u : orbit) {
      auto sup = alpha_support(u);
      if (sup.size() == 1 && u[sup[0] - 1] == 1 && u[b1] == 0) {
        if (cell8) throw std::runtime_error("ambiguous cell 8 in loctet");
        cell8 = &u;
      }
    }
    if (!cell8) throw std::runtime_error("loctet without a cell 8");
    const int kpos = alpha_support(*cell8)[0]; // 1-based complementary index
    loc.i = kpos == 1 ? 2 : 1;
    loc.j = kpos == 3 ? 2 : 3;
    // spindle order: 8 -s*_{a_k}- 7 -s*_{b_1}- 6 -s*_{a_i}- 4, -s*_{a_j}- 5,
    // and the skew half 1 -s*_{a_k}- 2 -s*_{b_1}- 3.
    loc.cells[7] = *cell8;
    loc.cells[6] = dual_reflect(loc.cells[7], kpos - 1, d);
    loc.cells[5] = dual_reflect(loc.cells[6], b1, d);
    loc.cells[3] = dual_reflect(loc.cells[5], loc.i - 1, d);
    loc.cells[4] = dual_reflect(loc.cells[5], loc.j - 1, d);
    loc.cells[2] = dual_reflect(loc.cells[4], loc.i - 1, d);
    loc.cells[1] = dual_reflect(loc.cells[2], b1, d);
    loc.cells[0] = dual_reflect(loc.cells[1], kpos - 1, d);
    {
      std::set<Label> check(loc.cells.begin(), loc.cells.end());
      if (check != orbit) throw std::runtime_error("loctet spindle does not close");
    }
    for (const Label& u : orbit) {
      int idx = sys.index_of(u);
      if (idx < 0) throw std::runtime_error("loctet cell not a system vertex");
      if (assigned[idx]) throw std::runtime_error("loctets overlap");
      assigned[idx] = 1;
    }
    out.loctets.push_back(std::move(loc));
  }

  for (size_t vi = 0; vi < sys.vertices.size(); ++vi) {
    if (assigned[vi]) continue;
    const Label& v = sys.vertices[vi];
    if (!alpha_support(v).empty() || v[b1] != 0)
      throw std::runtime_error("leftover vector is not beta-unicolored");
    out.beta_unicolored.push_back(v);
  }
  std::sort(out.beta_unicolored.begin(), out.beta_unicolored.end());
  return out;
}

} // namespace carterlink
