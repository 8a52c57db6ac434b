#include "carterlink/carter.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace carterlink {

std::string CarterId::name() const {
  std::ostringstream os;
  switch (fam) {
    case Family::A: os << 'A' << l; break;
    case Family::D: os << 'D' << l; break;
    case Family::E: os << 'E' << l; break;
    case Family::Dak: os << 'D' << l << 'a' << k; break;
    case Family::Eak: os << 'E' << l << 'a' << k; break;
  }
  return os.str();
}

std::optional<CarterId> CarterId::parse(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  char f = s[0];
  if (f != 'A' && f != 'D' && f != 'E') return std::nullopt;
  size_t i = 1;
  int l = 0;
  while (i < s.size() && isdigit(s[i])) l = l * 10 + (s[i++] - '0');
  if (l == 0) return std::nullopt;
  CarterId id;
  id.l = l;
  if (i == s.size()) {
    id.fam = f == 'A' ? Family::A : f == 'D' ? Family::D : Family::E;
    id.k = 0;
    return id;
  }
  if (s[i] != 'a' || f == 'A') return std::nullopt;
  ++i;
  int k = 0;
  while (i < s.size() && isdigit(s[i])) k = k * 10 + (s[i++] - '0');
  if (i != s.size() || k == 0) return std::nullopt;
  id.fam = f == 'D' ? Family::Dak : Family::Eak;
  id.k = k;
  return id;
}

bool CarterId::valid(int max_rank) const {
  if (l < 1 || l > max_rank) return false;
  switch (fam) {
    case Family::A: return k == 0;
    case Family::D: return k == 0 && l >= 4;
    case Family::E: return k == 0 && l >= 6 && l <= 8;
    case Family::Dak: return l >= 4 && k >= 1 && k <= (l - 2) / 2;
    case Family::Eak:
      if (l == 6) return k >= 1 && k <= 2;
      if (l == 7) return k >= 1 && k <= 4;
      if (l == 8) return k >= 1 && k <= 8;
      return false;
  }
  return false;
}

bool CarterId::operator<(const CarterId& o) const {
  if (l != o.l) return l < o.l;
  if (fam != o.fam) return static_cast<int>(fam) < static_cast<int>(o.fam);
  return k < o.k;
}

std::string CarterDiagram::vertex_name(int v) const {
  if (v < n_alpha) return "a" + std::to_string(v + 1);
  return "b" + std::to_string(v - n_alpha + 1);
}

int CarterDiagram::vertex_index(const std::string& name) const {
  if (name.size() < 2) return -1;
  int num = std::atoi(name.c_str() + 1);
  if (num < 1) return -1;
  if (name[0] == 'a') return num <= n_alpha ? num - 1 : -1;
  if (name[0] == 'b') return num <= n_beta ? n_alpha + num - 1 : -1;
  return -1;
}

std::vector<std::vector<int>> CarterDiagram::gram() const {
  const int n = size();
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (const auto& e : edges) {
    g[e.u][e.v] = e.sign;
    g[e.v][e.u] = e.sign;
  }
  return g;
}

std::vector<int> CarterDiagram::neighbors(int v) const {
  std::vector<int> r;
  for (const auto& e : edges) {
    if (e.u == v) r.push_back(e.v);
    if (e.v == v) r.push_back(e.u);
  }
  std::sort(r.begin(), r.end());
  return r;
}

int CarterDiagram::edge_sign(int u, int v) const {
  for (const auto& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.sign;
  return 0;
}

bool CarterDiagram::has_branch_point() const {
  if (n_alpha < 3 || n_beta < 1) return false;
  const int b1 = n_alpha;
  return edge_sign(0, b1) != 0 && edge_sign(1, b1) != 0 && edge_sign(2, b1) != 0;
}

bool CarterDiagram::is_tree() const {
  return static_cast<int>(edges.size()) == size() - 1;
}

namespace {

CarterDiagram make(CarterId id, int na, int nb, std::vector<DiagramEdge> es) {
  CarterDiagram d;
  d.id = id;
  d.n_alpha = na;
  d.n_beta = nb;
  d.edges = std::move(es);
  std::sort(d.edges.begin(), d.edges.end(), [](const DiagramEdge& a, const DiagramEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return d;
}

// A_l: the chain alpha_1 - beta_1 - alpha_2 - beta_2 - ..., all solid.
CarterDiagram build_A(int l) {
  const int na = (l + 1) / 2, nb = l / 2;
  auto vert = [&](int pos) { // 1-based linear position
    return pos % 2 == 1 ? (pos - 1) / 2 : na + pos / 2 - 1;
  };
  std::vector<DiagramEdge> es;
  for (int p = 1; p < l; ++p) es.push_back({std::min(vert(p), vert(p + 1)),
                                            std::max(vert(p), vert(p + 1)), -1});
  return make({Family::A, l, 0}, na, nb, std::move(es));
}

// D_l: star beta_1(alpha_1, alpha_2, alpha_3) with the tail
// alpha_2 - beta_2 - alpha_4 - beta_3 - alpha_5 - ...
CarterDiagram build_D(int l) {
  const int tail = l - 4;
  const int na = 3 + tail / 2, nb = 1 + (tail + 1) / 2;
  const int b1 = na;
  std::vector<DiagramEdge> es = {{0, b1, -1}, {1, b1, -1}, {2, b1, -1}};
  int prev = 1; // alpha_2
  for (int t = 1; t <= tail; ++t) {
    int v = (t % 2 == 1) ? b1 + (t + 1) / 2 /* beta_{1 + (t+1)/2} */
                         : 3 + t / 2 - 1;   /* alpha_{3 + t/2} */
    es.push_back({std::min(prev, v), std::max(prev, v), -1});
    prev = v;
  }
  return make({Family::D, l, 0}, na, nb, std::move(es));
}

// D_l(a_k): 4-cycle beta_1 - alpha_2 - beta_2 - alpha_3 - beta_1 with the
// single dotted edge {alpha_2, beta_2}; alpha_1 on beta_1; a tail of
// l-4-k vertices from alpha_1 (beta_3, alpha_.., ...) and a tail of k-1
// vertices from beta_2 (alpha_.., beta_.., ...). D_4(a_1) is the bare cycle.
CarterDiagram build_Dak(int l, int k) {
  if (l == 4) {
    // alpha_1, alpha_2, beta_1, beta_2; dotted {alpha_2, beta_1}
    return make({Family::Dak, 4, 1}, 2, 2,
                {{0, 2, -1}, {0, 3, -1}, {1, 2, 1}, {1, 3, -1}});
  }
  const int ta = l - k - 4;
  const int tb = k - 1;
  const int na = 3 + (ta / 2) + ((tb + 1) / 2);
  const int nb = 2 + ((ta + 1) / 2) + (tb / 2);
  const int b1 = na, b2 = na + 1;
  std::vector<DiagramEdge> es = {
      {0, b1, -1}, {1, b1, -1}, {2, b1, -1}, {1, b2, 1}, {2, b2, -1}};
  int next_alpha = 3, next_beta = 2; // 0-based alpha_4 / beta_3 counters
  int prev = 0;                      // alpha_1
  for (int t = 1; t <= ta; ++t) {
    int v = (t % 2 == 1) ? na + next_beta++ : next_alpha++;
    es.push_back({std::min(prev, v), std::max(prev, v), -1});
    prev = v;
  }
  prev = b2;
  for (int t = 1; t <= tb; ++t) {
    int v = (t % 2 == 1) ? next_alpha++ : na + next_beta++;
    es.push_back({std::min(prev, v), std::max(prev, v), -1});
    prev = v;
  }
  return make({Family::Dak, l, k}, na, nb, std::move(es));
}

// E_6/7/8: chain beta_2 - alpha_1 - beta_1 - alpha_2 - beta_3 - alpha_4 - beta_4
// truncated to rank, with alpha_3 on beta_1. Bicolored split 3+3, 4+3, 4+4.
CarterDiagram build_E(int l) {
  const int na = (l + 1) / 2, nb = l - na;
  const int b1 = na, b2 = na + 1, b3 = na + 2;
  std::vector<DiagramEdge> es = {{0, b1, -1}, {0, b2, -1}, {1, b1, -1}, {1, b3, -1}, {2, b1, -1}};
  if (l >= 7) es.push_back({3, b3, -1});
  if (l == 8) es.push_back({3, na + 3, -1});
  return make({Family::E, l, 0}, na, nb, std::move(es));
}

CarterDiagram build_Eak(int l, int k) {
  // Vertex blocks: alpha_1..alpha_3(4), beta_1..beta_3(4).
  auto E = [&](int na, int nb, std::vector<DiagramEdge> es) {
    return make({Family::Eak, l, k}, na, nb, std::move(es));
  };
  const int A1 = 0, A2 = 1, A3 = 2, A4 = 3;
  if (l == 6) {
    const int B1 = 3, B2 = 4, B3 = 5;
    if (k == 1)
      return E(3, 3, {{A1, B1, -1},
                      {A2, B1, -1}, {A2, B2, 1},
                      {A3, B1, -1}, {A3, B2, -1}, {A3, B3, -1}});
    return E(3, 3, {{A1, B1, -1}, {A1, B3, 1},
                    {A2, B1, -1}, {A2, B2, 1},
                    {A3, B1, -1}, {A3, B2, -1}, {A3, B3, -1}});
  }
  if (l == 7) {
    const int B1 = 3, B2 = 4, B3 = 5, B4 = 6;
    switch (k) {
      case 1:
        return E(3, 4, {{A1, B1, -1}, {A1, B4, -1},
                        {A2, B1, -1}, {A2, B2, 1},
                        {A3, B1, -1}, {A3, B2, -1}, {A3, B3, -1}});
      case 2:
        return E(3, 4, {{A1, B1, -1},
                        {A2, B1, -1}, {A2, B2, 1}, {A2, B4, -1},
                        {A3, B1, -1}, {A3, B2, -1}, {A3, B3, -1}});
      case 3:
        return E(3, 4, {{A1, B1, -1}, {A1, B3, 1},
                        {A2, B1, -1}, {A2, B2, 1}, {A2, B4, -1},
                        {A3, B1, -1}, {A3, B2, -1}, {A3, B3, -1}});
      default:
        return E(3, 4, {{A1, B1, -1}, {A1, B3, -1}, {A1, B4, 1},
                        {A2, B1, -1}, {A2, B2, 1}, {A2, B4, -1},
                        {A3, B1, -1}, {A3, B2, -1}, {A3, B3, 1}});
    }
  }
  // l == 8: representatives extracted from a search over Phi(E_8) root
  // subsets, one conjugacy class per index, starlike-canonicalized.
  const int B1 = 4, B2 = 5, B3 = 6, B4 = 7;
  switch (k) {
    case 1:
      return E(4, 4, {{A1, B1, -1},
                      {A2, B1, -1}, {A2, B4, -1},
                      {A3, B1, -1}, {A3, B3, -1}, {A3, B4, 1},
                      {A4, B2, -1}, {A4, B3, -1}});
    case 2:
      return E(4, 4, {{A1, B1, -1},
                      {A2, B1, -1}, {A2, B4, -1},
                      {A3, B1, -1}, {A3, B3, -1}, {A3, B4, 1},
                      {A4, B2, -1}, {A4, B4, -1}});
    case 3:
      return E(4, 4, {{A1, B1, -1},
                      {A2, B1, -1}, {A2, B3, -1}, {A2, B4, -1},
                      {A3, B1, -1}, {A3, B2, -1}, {A3, B4, 1},
                      {A4, B4, -1}});
    case 4:
      return E(4, 4, {{A1, B1, -1}, {A1, B4, -1},
                      {A2, B1, -1}, {A2, B3, -1},
                      {A3, B1, 1}, {A3, B3, -1}, {A3, B4, -1},
                      {A4, B2, -1}, {A4, B4, -1}});
    case 5:
      return E(4, 4, {{A1, B1, -1},
                      {A2, B1, -1}, {A2, B4, -1},
                      {A3, B1, -1}, {A3, B3, -1}, {A3, B4, 1},
                      {A4, B2, -1}, {A4, B3, -1}, {A4, B4, -1}});
    case 6:
      return E(4, 4, {{A1, B1, -1}, {A1, B4, -1},
                      {A2, B1, -1}, {A2, B3, -1}, {A2, B4, 1},
                      {A3, B1, -1}, {A3, B2, -1}, {A3, B3, 1},
                      {A4, B2, -1}, {A4, B3, -1}});
    case 7:
      return E(4, 4, {{A1, B1, -1},
                      {A2, B1, -1}, {A2, B3, -1}, {A2, B4, -1},
                      {A3, B1, -1}, {A3, B2, -1}, {A3, B4, 1},
                      {A4, B2, -1}, {A4, B3, 1}, {A4, B4, -1}});
    default:
      return E(4, 4, {{A1, B1, -1}, {A1, B3, -1}, {A1, B4, -1},
                      {A2, B1, -1}, {A2, B2, -1}, {A2, B4, 1},
                      {A3, B1, 1}, {A3, B2, -1}, {A3, B3, -1},
                      {A4, B2, -1}, {A4, B3, 1}, {A4, B4, -1}});
  }
}

CarterDiagram build(const CarterId& id) {
  switch (id.fam) {
    case Family::A: return build_A(id.l);
    case Family::D: return build_D(id.l);
    case Family::E: return build_E(id.l);
    case Family::Dak: return build_Dak(id.l, id.k);
    case Family::Eak: return build_Eak(id.l, id.k);
  }
  throw std::logic_error("unreachable");
}

} // namespace

const CarterDiagram& diagram(const CarterId& id) {
  if (!id.valid(10)) throw std::invalid_argument("invalid Carter diagram id: " + id.name());
  static std::mutex mu;
  static std::map<CarterId, std::unique_ptr<CarterDiagram>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, std::make_unique<CarterDiagram>(build(id))).first;
  return *it->second;
}

std::vector<CarterDiagram> catalog(int max_rank) {
  if (max_rank < 3) throw std::invalid_argument("catalog: max_rank must be >= 3");
  if (max_rank > 10) throw std::invalid_argument("catalog: rank cap is 10");
  std::vector<CarterId> ids;
  for (int l = 1; l <= max_rank; ++l) {
    ids.push_back({Family::A, l, 0});
    if (l >= 4) ids.push_back({Family::D, l, 0});
    for (int k = 1; k <= (l - 2) / 2 && l >= 4; ++k) ids.push_back({Family::Dak, l, k});
    if (l >= 6 && l <= 8) {
      ids.push_back({Family::E, l, 0});
      const int kmax = l == 6 ? 2 : l == 7 ? 4 : 8;
      for (int k = 1; k <= kmax; ++k) ids.push_back({Family::Eak, l, k});
    }
  }
  std::sort(ids.begin(), ids.end());
  std::vector<CarterDiagram> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(diagram(id));
  return out;
}

} // namespace carterlink
