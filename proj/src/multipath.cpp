#include "mpx/multipath.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

namespace mpx {

bool is_multipath(const Digraph& g, const std::vector<int>& edge_ids) {
  std::vector<char> in_used(static_cast<std::size_t>(g.n_vertices), 0);
  std::vector<char> out_used(static_cast<std::size_t>(g.n_vertices), 0);
  std::vector<int> succ(static_cast<std::size_t>(g.n_vertices), -1);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.n_edges()) fail(ErrorKind::InvalidEdgeId, "edge id " + std::to_string(e));
    auto [s, t] = g.edges[static_cast<std::size_t>(e)];
    if (out_used[static_cast<std::size_t>(s)] || in_used[static_cast<std::size_t>(t)])
      return false;
    out_used[static_cast<std::size_t>(s)] = 1;
    in_used[static_cast<std::size_t>(t)] = 1;
    succ[static_cast<std::size_t>(s)] = t;
  }
  // within the selection every vertex has out-degree <= 1, so cycle detection
  // is a walk along the unique successor chain
  for (int e : edge_ids) {
    int start = g.source(e);
    int v = succ[static_cast<std::size_t>(start)];
    while (v != -1 && v != start) v = succ[static_cast<std::size_t>(v)];
    if (v == start) return false;
  }
  return true;
}

std::uint64_t default_enumeration_budget() {
  if (const char* env = std::getenv("MPX_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

namespace {

// DFS over edge ids in increasing order. Path components are tracked through
// `other_end`: for a path endpoint v, other_end[v] is the opposite endpoint
// (itself for an isolated vertex). Adding edge (s,t) closes a cycle exactly
// when other_end[s] == t.
struct Enumerator {
  const Digraph& g;
  std::atomic<std::uint64_t>& produced;
  std::uint64_t budget;
  std::vector<char> in_used, out_used;
  std::vector<int> other_end;
  std::vector<int> current;
  std::vector<std::vector<int>> out;

  Enumerator(const Digraph& g, std::atomic<std::uint64_t>& produced, std::uint64_t budget)
      : g(g), produced(produced), budget(budget) {
    in_used.assign(static_cast<std::size_t>(g.n_vertices), 0);
    out_used.assign(static_cast<std::size_t>(g.n_vertices), 0);
    other_end.resize(static_cast<std::size_t>(g.n_vertices));
    for (int v = 0; v < g.n_vertices; ++v) other_end[static_cast<std::size_t>(v)] = v;
  }

  bool try_add(int e, int& a, int& b) {
    auto [s, t] = g.edges[static_cast<std::size_t>(e)];
    if (out_used[static_cast<std::size_t>(s)] || in_used[static_cast<std::size_t>(t)])
      return false;
    if (other_end[static_cast<std::size_t>(s)] == t) return false;  // would close a cycle
    a = other_end[static_cast<std::size_t>(s)];
    b = other_end[static_cast<std::size_t>(t)];
    other_end[static_cast<std::size_t>(a)] = b;
    other_end[static_cast<std::size_t>(b)] = a;
    out_used[static_cast<std::size_t>(s)] = 1;
    in_used[static_cast<std::size_t>(t)] = 1;
    return true;
  }

  void undo(int e, int a, int b) {
    auto [s, t] = g.edges[static_cast<std::size_t>(e)];
    out_used[static_cast<std::size_t>(s)] = 0;
    in_used[static_cast<std::size_t>(t)] = 0;
    other_end[static_cast<std::size_t>(a)] = s;
    other_end[static_cast<std::size_t>(s)] = a;
    other_end[static_cast<std::size_t>(b)] = t;
    other_end[static_cast<std::size_t>(t)] = b;
  }

  void emit() {
    if (produced.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
      fail(ErrorKind::BudgetExceeded, "multipath enumeration budget exceeded");
    out.push_back(current);
  }

  void extend(int start) {
    emit();
    for (int e = start; e < g.n_edges(); ++e) {
      int a, b;
      if (!try_add(e, a, b)) continue;
      current.push_back(e);
      extend(e + 1);
      current.pop_back();
      undo(e, a, b);
    }
  }

  // all multipaths whose minimum edge id is `first`
  void branch(int first) {
    int a, b;
    if (!try_add(first, a, b)) return;
    current.push_back(first);
    extend(first + 1);
    current.pop_back();
    undo(first, a, b);
  }
};

}  // namespace

PathPoset enumerate_multipaths(const Digraph& g, const EnumerationOptions& opts) {
  std::atomic<std::uint64_t> produced{0};
  int m = g.n_edges();
  std::vector<std::vector<std::vector<int>>> parts(static_cast<std::size_t>(m));

  bool parallel = opts.parallel && m > 1;
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int first = 0; first < m; ++first) {
    if (error) continue;
    try {
      Enumerator en(g, produced, opts.budget);
      en.branch(first);
      parts[static_cast<std::size_t>(first)] = std::move(en.out);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  PathPoset poset;
  poset.multipaths.push_back({});  // the empty multipath
  if (produced.fetch_add(1) + 1 > opts.budget)
    fail(ErrorKind::BudgetExceeded, "multipath enumeration budget exceeded");
  for (auto& part : parts)
    for (auto& mp : part) poset.multipaths.push_back(std::move(mp));
  std::sort(poset.multipaths.begin(), poset.multipaths.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return poset;
}

SimplicialComplex multipath_complex(const Digraph& g, const EnumerationOptions& opts) {
  auto poset = enumerate_multipaths(g, opts);
  std::vector<std::vector<int>> faces;
  faces.reserve(poset.size() - 1);
  for (auto& mp : poset.multipaths)
    if (!mp.empty()) faces.push_back(std::move(mp));
  return SimplicialComplex::from_faces(g.n_edges(), std::move(faces));
}

void to_json(nlohmann::json& j, const PathPoset& p) {
  j = nlohmann::json{{"multipaths", p.multipaths}};
}

void from_json(const nlohmann::json& j, PathPoset& p) {
  p.multipaths = j.at("multipaths").get<std::vector<std::vector<int>>>();
}

}  // namespace mpx
