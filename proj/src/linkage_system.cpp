#include "carterlink/linkage.hpp"
#include "carterlink/qform.hpp"
#include "carterlink/stratify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace carterlink {

namespace {

// Parallel scan of {-1,0,1}^l for inequality solutions.
std::vector<Label> inequality_solutions_jobs(const CarterDiagram& d, int jobs) {
  const RatMatrix& binv = partial_cartan_inverse(d.id);
  const int l = d.size();
  long long total = 1;
  for (int i = 0; i < l; ++i) total *= 3;
  auto scan_range = [&](long long lo, long long hi, std::vector<Label>& out) {
    Label v(l);
    for (long long code = lo; code < hi; ++code) {
      long long c = code;
      for (int i = 0; i < l; ++i) {
        v[i] = static_cast<int>(c % 3) - 1;
        c /= 3;
      }
      if (!is_zero(v) && is_linkage_candidate(v, binv)) out.push_back(v);
    }
  };
  std::vector<Label> all;
  if (jobs <= 1) {
    scan_range(0, total, all);
  } else {
    std::vector<std::vector<Label>> chunks(jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      long long lo = total * t / jobs, hi = total * (t + 1) / jobs;
      threads.emplace_back([&, lo, hi, t] { scan_range(lo, hi, chunks[t]); });
    }
    for (auto& th : threads) th.join();
    for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

} // namespace

LinkageSystem enumerate_system(const CarterDiagram& d, int jobs) {
  LinkageSystem sys;
  sys.diagram = d.id;

  AssembledSystem assembled = assemble_system(d);
  sys.zero_vectors_excluded = assembled.zero_vectors_excluded;
  for (const auto& [name, st] : assembled.by_extension) {
    std::set<Label> labels;
    for (const auto& [label, roots] : st.by_label) labels.insert(label);
    sys.per_extension.emplace(name, std::move(labels));
  }

  sys.vertices.assign(assembled.all_labels.begin(), assembled.all_labels.end());
  std::sort(sys.vertices.begin(), sys.vertices.end());

  // Close under dual reflections; any escape is a realization gap.
  std::set<Label> vertex_set(sys.vertices.begin(), sys.vertices.end());
  for (const Label& v : sys.vertices)
    for (int t = 0; t < d.size(); ++t) {
      Label w = dual_reflect(v, t, d); // throws if the orbit leaves {-1,0,1}
      if (!vertex_set.count(w))
        throw std::runtime_error("stratum labels not closed under dual reflections for " +
                                 d.id.name());
    }

  for (int u = 0; u < static_cast<int>(sys.vertices.size()); ++u)
    for (int t = 0; t < d.size(); ++t) {
      Label w = dual_reflect(sys.vertices[u], t, d);
      int v = sys.index_of(w);
      if (v > u) sys.edges.push_back({u, v, t});
    }

  // Connected parts with their constant B^vee value.
  const RatMatrix& binv = partial_cartan_inverse(d.id);
  std::vector<int> part_of(sys.vertices.size(), -1);
  std::vector<std::vector<int>> adj(sys.vertices.size());
  for (const auto& e : sys.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (size_t s = 0; s < sys.vertices.size(); ++s) {
    if (part_of[s] >= 0) continue;
    int pid = static_cast<int>(sys.parts.size());
    LinkagePart part;
    std::vector<int> stack{static_cast<int>(s)};
    part_of[s] = pid;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      part.members.push_back(u);
      for (int v : adj[u])
        if (part_of[v] < 0) {
          part_of[v] = pid;
          stack.push_back(v);
        }
    }
    std::sort(part.members.begin(), part.members.end());
    part.p = binv.qform(sys.vertices[part.members.front()]);
    for (int m : part.members)
      if (binv.qform(sys.vertices[m]) != part.p)
        throw std::runtime_error("B^vee is not constant on a connected part");
    sys.parts.push_back(std::move(part));
  }

  // Type tag: the smallest extension family whose stratum covers the part.
  for (auto& part : sys.parts) {
    char tag = '?';
    for (char fam : {'A', 'D', 'E'}) {
      for (const auto& [name, labels] : sys.per_extension) {
        if (name[0] != fam) continue;
        bool covers = true;
        for (int m : part.members)
          if (!labels.count(sys.vertices[m])) { covers = false; break; }
        if (covers) { tag = fam; break; }
      }
      if (tag != '?') break;
    }
    part.type = tag;
  }

  // Reconcile with the inequality route.
  std::vector<Label> ineq = inequality_solutions_jobs(d, jobs);
  std::set_difference(ineq.begin(), ineq.end(), sys.vertices.begin(), sys.vertices.end(),
                      std::back_inserter(sys.inequality_only));
  std::set_difference(sys.vertices.begin(), sys.vertices.end(), ineq.begin(), ineq.end(),
                      std::back_inserter(sys.realized_only));
  if (!sys.realized_only.empty())
    throw std::runtime_error("realized vector fails the inequality: criterion violated");
  return sys;
}

const LinkageSystem& linkage_system(const CarterId& id, int jobs) {
  static std::mutex mu;
  static std::map<CarterId, std::unique_ptr<LinkageSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, std::make_unique<LinkageSystem>(enumerate_system(diagram(id), jobs)))
             .first;
  return *it->second;
}

} // namespace carterlink
