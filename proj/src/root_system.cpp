#include "carterlink/root_system.hpp"

#include <algorithm>
#include <mutex>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace carterlink {

bool RootSystemId::valid() const {
  if (rank < 1 || rank > kMaxBuildRank) return false;
  switch (family) {
    case 'A': return rank >= 1;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    default: return false;
  }
}

std::string RootSystemId::name() const {
  return std::string(1, family) + std::to_string(rank);
}

Coord negate(const Coord& c) {
  Coord r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
  return r;
}

std::vector<std::vector<int>> cartan_matrix(RootSystemId id) {
  const int l = id.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto bond = [&](int a, int b) { c[a][b] = c[b][a] = -1; }; // 0-based
  switch (id.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'D':
      // Bourbaki: chain 1..l-2, nodes l-1 and l both attached to l-2.
      for (int i = 0; i + 1 < l - 1; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4.
      bond(0, 2);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    default:
      throw std::invalid_argument("bad family");
  }
  return c;
}

long long classical_root_count(RootSystemId id) {
  const long long l = id.rank;
  switch (id.family) {
    case 'A': return l * (l + 1);
    case 'D': return 2 * l * (l - 1);
    case 'E': return id.rank == 6 ? 72 : id.rank == 7 ? 126 : 240;
    default: return 0;
  }
}

std::string RootSystem::key(const Coord& c) {
  std::ostringstream os;
  for (int v : c) os << v << ',';
  return os.str();
}

RootSystem::RootSystem(RootSystemId id) : id_(id) {
  if (!id.valid()) throw std::invalid_argument("invalid root system id " + id.name());
  cartan_ = cartan_matrix(id);
  const int l = id.rank;

  std::vector<Coord> frontier;
  auto add = [&](const Coord& c) {
    auto k = key(c);
    if (index_.count(k)) return false;
    index_.emplace(std::move(k), 0);
    roots_.push_back(c);
    frontier.push_back(c);
    return true;
  };
  for (int i = 0; i < l; ++i) {
    Coord s(l, 0);
    s[i] = 1;
    add(s);
    add(negate(s));
  }
  while (!frontier.empty()) {
    std::vector<Coord> next;
    for (const Coord& r : frontier)
      for (int i = 0; i < l; ++i) {
        Coord m = simple_root(i);
        Coord nr = reflect(r, m);
        auto k = key(nr);
        if (!index_.count(k)) {
          index_.emplace(std::move(k), 0);
          roots_.push_back(nr);
          next.push_back(nr);
        }
      }
    frontier = std::move(next);
  }
  std::sort(roots_.begin(), roots_.end());
  for (size_t i = 0; i < roots_.size(); ++i) index_[key(roots_[i])] = static_cast<int>(i);

  for (const Coord& r : roots_) {
    bool pos = false;
    for (int v : r)
      if (v != 0) { pos = v > 0; break; }
    if (pos) positive_.push_back(r);
  }
  // highest root: maximal coordinate sum (unique for irreducible systems)
  long long best = -1;
  for (const Coord& r : positive_) {
    long long s = 0;
    for (int v : r) s += v;
    if (s > best) {
      best = s;
      maximal_ = r;
    }
  }
}

Coord RootSystem::simple_root(int i) const {
  Coord s(id_.rank, 0);
  s[i] = 1;
  return s;
}

long long RootSystem::inner(const Coord& a, const Coord& b) const {
  const int l = id_.rank;
  if (static_cast<int>(a.size()) != l || static_cast<int>(b.size()) != l)
    throw std::invalid_argument("inner: dimension mismatch");
  long long s = 0;
  for (int i = 0; i < l; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < l; ++j)
      if (b[j] != 0) s += static_cast<long long>(a[i]) * cartan_[i][j] * b[j];
  }
  return s;
}

Coord RootSystem::reflect(const Coord& v, const Coord& mirror) const {
  long long c = inner(mirror, v); // (m, m) = 2 cancels the usual factor
  Coord r = v;
  for (int i = 0; i < id_.rank; ++i) r[i] -= static_cast<int>(c) * mirror[i];
  return r;
}

bool RootSystem::contains(const Coord& c) const { return index_.count(key(c)) != 0; }

Coord RootSystem::from_euclidean(const std::vector<int>& e) const {
  const int l = id_.rank;
  // Invert the triangular change of basis by peeling coefficients.
  if (id_.family == 'A') {
    if (static_cast<int>(e.size()) != l + 1) throw std::invalid_argument("A_l wants l+1 e-coords");
    // tau_i = e_i - e_{i+1}; coefficient of tau_i is e_1 + ... + e_i.
    Coord c(l);
    int acc = 0;
    for (int i = 0; i < l; ++i) {
      acc += e[i];
      c[i] = acc;
    }
    return c;
  }
  if (id_.family == 'D') {
    if (static_cast<int>(e.size()) != l) throw std::invalid_argument("D_l wants l e-coords");
    // tau_i = e_i - e_{i+1} (i < l), tau_l = e_{l-1} + e_l.
    // c_i = e_1+..+e_i for i <= l-2; c_{l-1} = (s - e_l... ) solved directly:
    Coord c(l);
    int acc = 0;
    for (int i = 0; i < l - 2; ++i) {
      acc += e[i];
      c[i] = acc;
    }
    // remaining two coordinates from e_{l-1}, e_l and the accumulated sum:
    // e_{l-1} = c_{l-1} + c_l - c_{l-2}... derive:
    // x := c_{l-1} (coeff of e_{l-1}-e_l), y := c_l (coeff of e_{l-1}+e_l)
    // e-coord l-1: prefix contributions give c_{l-2} at position l-1? Work it out:
    // position l-1 gets -c_{l-2} ... Simpler: solve 2x2:
    //   e[l-2] (that is e_{l-1}) = c_{l-2}*(-1)?  ... use direct reconstruction below.
    // Reconstruct: sum over i<l-2 of c_i*(e_i - e_{i+1}) has value at e_{l-1}:
    //   -c_{l-3}?  Positions: e_{l-1} appears in tau_{l-2} = e_{l-2}-e_{l-1} (coeff c_{l-2}),
    //   tau_{l-1} = e_{l-1}-e_l, tau_l = e_{l-1}+e_l.
    int cl2 = (l >= 3) ? c[l - 3] : 0; // c_{l-2} in 1-based is c[l-3] 0-based
    // e_{l-1} = -cl2 + x + y, e_l = -x + y
    int sum = e[l - 2] + e[l - 1] + cl2; // = 2y
    int diff = e[l - 2] - e[l - 1] + cl2; // = 2x
    if (sum % 2 != 0 || diff % 2 != 0) throw std::invalid_argument("not in the D_l root lattice");
    c[l - 2] = diff / 2;
    c[l - 1] = sum / 2;
    return c;
  }
  throw std::invalid_argument("from_euclidean supports A and D only");
}

const RootSystem& get_root_system(RootSystemId id) {
  static std::mutex mu;
  static std::map<RootSystemId, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, std::make_unique<RootSystem>(id)).first;
  return *it->second;
}

} // namespace carterlink
