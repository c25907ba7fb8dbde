#ifndef MPX_TEST_HELPERS_HPP
#define MPX_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "mpx/digraph.hpp"
#include "mpx/simplicial.hpp"

namespace mpx::test {

// Deterministic xorshift so every test run sees the same instances.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Random digraph (cycles allowed) with at most max_edges edges.
inline Digraph random_digraph(Rng& rng, int max_vertices, int max_edges) {
  int n = 2 + rng.below(max_vertices - 1);
  std::vector<std::pair<int, int>> edges;
  int want = 1 + rng.below(max_edges);
  for (int attempt = 0; attempt < 8 * want && static_cast<int>(edges.size()) < want; ++attempt) {
    int a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end()) continue;
    edges.emplace_back(a, b);
  }
  return make_digraph(n, std::move(edges));
}

// Random acyclic digraph: edges respect the vertex order.
inline Digraph random_dag(Rng& rng, int max_vertices, int max_edges) {
  int n = 2 + rng.below(max_vertices - 1);
  std::vector<std::pair<int, int>> edges;
  int want = 1 + rng.below(max_edges);
  for (int attempt = 0; attempt < 8 * want && static_cast<int>(edges.size()) < want; ++attempt) {
    int a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end()) continue;
    edges.emplace_back(a, b);
  }
  return make_digraph(n, std::move(edges));
}

// Random small complex from random facets.
inline SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_facets) {
  int n = 1 + rng.below(max_vertices);
  int k = 1 + rng.below(max_facets);
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < k; ++i) {
    std::vector<int> f;
    for (int v = 0; v < n; ++v)
      if (rng.next() & 1) f.push_back(v);
    if (f.empty()) f.push_back(rng.below(n));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets), n);
}

// Boundary of the (d+1)-dimensional cross-polytope: a triangulated d-sphere
// with 2(d+1) vertices, optionally relabeled.
inline SimplicialComplex cross_polytope_sphere(int d, Rng* relabel = nullptr,
                                               int n_vertices = -1) {
  int pairs = d + 1;
  std::vector<int> label(static_cast<std::size_t>(2 * pairs));
  std::iota(label.begin(), label.end(), 0);
  if (relabel)
    for (int i = 2 * pairs - 1; i > 0; --i)
      std::swap(label[static_cast<std::size_t>(i)],
                label[static_cast<std::size_t>(relabel->below(i + 1))]);
  std::vector<std::vector<int>> facets;
  for (int pick = 0; pick < (1 << pairs); ++pick) {
    std::vector<int> f;
    for (int i = 0; i < pairs; ++i)
      f.push_back(label[static_cast<std::size_t>(2 * i + ((pick >> i) & 1))]);
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets),
                                        n_vertices < 0 ? 2 * pairs : n_vertices);
}

// Solid k-simplex.
inline SimplicialComplex solid_simplex(int k) {
  std::vector<int> top(static_cast<std::size_t>(k) + 1);
  std::iota(top.begin(), top.end(), 0);
  return SimplicialComplex::from_facets({top});
}

// Boundary of the k-simplex, a (k-1)-sphere.
inline SimplicialComplex simplex_boundary(int k) {
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= k; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace mpx::test

#endif
