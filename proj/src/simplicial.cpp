#include "mpx/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace mpx {

namespace {

const std::vector<std::vector<int>> kNoFaces;

std::vector<int> sorted_unique(std::vector<int> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int n_vertices,
                                                std::vector<std::vector<int>> faces) {
  SimplicialComplex x;
  x.n_vertices_ = n_vertices;
  for (auto& f : faces) {
    if (f.empty()) continue;
    f = sorted_unique(std::move(f));
    if (f.front() < 0 || f.back() >= n_vertices)
      fail(ErrorKind::VertexOutOfRange, "face vertex out of range");
    int d = static_cast<int>(f.size()) - 1;
    if (d >= static_cast<int>(x.by_dim_.size())) x.by_dim_.resize(d + 1);
    x.by_dim_[d].push_back(std::move(f));
  }
  for (auto& dim : x.by_dim_) {
    std::sort(dim.begin(), dim.end());
    dim.erase(std::unique(dim.begin(), dim.end()), dim.end());
  }
  while (!x.by_dim_.empty() && x.by_dim_.back().empty()) x.by_dim_.pop_back();
  return x;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> facet_list,
                                                 std::optional<int> n_vertices) {
  std::set<std::vector<int>> closed;
  std::vector<int> sub;
  int max_vertex = -1;
  for (auto& facet : facet_list) {
    facet = sorted_unique(std::move(facet));
    if (facet.empty()) fail(ErrorKind::UnsupportedParameter, "empty facet");
    max_vertex = std::max(max_vertex, facet.back());
    int k = static_cast<int>(facet.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      sub.clear();
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(facet[i]);
      closed.insert(sub);
    }
  }
  int n = n_vertices.value_or(max_vertex + 1);
  return from_faces(n, {closed.begin(), closed.end()});
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int d) const {
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kNoFaces;
  return by_dim_[d];
}

long SimplicialComplex::n_faces(int d) const { return static_cast<long>(faces(d).size()); }

std::size_t SimplicialComplex::total_faces() const {
  std::size_t t = 0;
  for (const auto& dim : by_dim_) t += dim.size();
  return t;
}

bool SimplicialComplex::has_face(const std::vector<int>& f) const {
  return face_index(f) >= 0;
}

int SimplicialComplex::face_index(const std::vector<int>& f) const {
  int d = static_cast<int>(f.size()) - 1;
  const auto& dim = faces(d);
  auto it = std::lower_bound(dim.begin(), dim.end(), f);
  if (it == dim.end() || *it != f) return -1;
  return static_cast<int>(it - dim.begin());
}

const std::vector<std::vector<int>>& SimplicialComplex::facets() const {
  if (facets_cached_) return facets_;
  std::vector<std::vector<char>> maximal(by_dim_.size());
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    maximal[d].assign(by_dim_[d].size(), 1);
  std::vector<int> sub;
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    for (const auto& f : by_dim_[d]) {
      for (std::size_t k = 0; k < f.size(); ++k) {
        sub = f;
        sub.erase(sub.begin() + static_cast<long>(k));
        maximal[d - 1][face_index(sub)] = 0;
      }
    }
  }
  facets_.clear();
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
      if (maximal[d][i]) facets_.push_back(by_dim_[d][i]);
  std::sort(facets_.begin(), facets_.end());
  facets_cached_ = true;
  return facets_;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f(by_dim_.size());
  for (std::size_t d = 0; d < by_dim_.size(); ++d) f[d] = static_cast<long>(by_dim_[d].size());
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    long fd = static_cast<long>(by_dim_[d].size());
    chi += (d % 2 == 0) ? fd : -fd;
  }
  return chi;
}

SimplicialComplex matching_complex(const UndirectedGraph& h) {
  int m = h.n_edges();
  std::vector<char> used(h.n_vertices, 0);
  std::vector<int> current;
  std::vector<std::vector<int>> faces;
  auto rec = [&](auto&& self, int start) -> void {
    if (!current.empty()) faces.push_back(current);
    for (int i = start; i < m; ++i) {
      auto [a, b] = h.edges[i];
      if (used[a] || used[b]) continue;
      used[a] = used[b] = 1;
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
      used[a] = used[b] = 0;
    }
  };
  rec(rec, 0);
  return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (x.empty()) {
    // identity up to the vertex shift; keep y's labels only when x has no
    // declared vertices either
    if (x.n_vertices() == 0) return y;
  }
  int nx = x.n_vertices();
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> xf{{}}, yf{{}};
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& f : x.faces(d)) xf.push_back(f);
  for (int d = 0; d <= y.dim(); ++d) {
    for (const auto& f : y.faces(d)) {
      auto g = f;
      for (int& v : g) v += nx;
      yf.push_back(std::move(g));
    }
  }
  for (const auto& a : xf)
    for (const auto& b : yf) {
      if (a.empty() && b.empty()) continue;
      auto f = a;
      f.insert(f.end(), b.begin(), b.end());
      faces.push_back(std::move(f));
    }
  return SimplicialComplex::from_faces(nx + y.n_vertices(), std::move(faces));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  auto two_points = SimplicialComplex::from_facets({{0}, {1}});
  return join(x, two_points);
}

SimplicialComplex cross_polytope_subcomplex(CrossPolytopeVariant variant, int n) {
  // Edge ids in gen_family(BL, n): (v_a, v_{a+1}) = 2a, (v_{a+1}, v_a) = 2a+1.
  std::vector<std::pair<int, int>> pairs;
  if (variant == CrossPolytopeVariant::PRIME) {
    if (n < 1) fail(ErrorKind::UnsupportedParameter, "PRIME needs n >= 1");
    int count = (n + 1) / 2;  // segments v_{2i} -- v_{2i+1}
    for (int i = 0; i < count; ++i) pairs.emplace_back(4 * i, 4 * i + 1);
  } else {
    if (n < 4 || n % 4 != 0) fail(ErrorKind::UnsupportedParameter, "DOUBLE_PRIME needs n = 4k");
    int k = n / 4;
    for (int j = 0; j < k; ++j) {
      // {(v_{4j}, v_{4j+1}), (v_{4j+2}, v_{4j+1})} and
      // {(v_{4j+3}, v_{4j+2}), (v_{4j+3}, v_{4j+4})}
      pairs.emplace_back(8 * j, 8 * j + 3);
      pairs.emplace_back(8 * j + 5, 8 * j + 6);
    }
  }
  std::vector<std::vector<int>> facets;
  int count = static_cast<int>(pairs.size());
  for (unsigned pick = 0; pick < (1u << count); ++pick) {
    std::vector<int> facet;
    for (int i = 0; i < count; ++i)
      facet.push_back((pick & (1u << i)) ? pairs[i].second : pairs[i].first);
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(std::move(facets), 2 * n);
}

bool is_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y) {
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& f : x.faces(d))
      if (!y.has_face(f)) return false;
  return true;
}

namespace {

// Per-vertex isomorphism invariant: number of incident faces in each dimension
// plus the f-vector of the vertex link (degree refinement).
std::vector<std::vector<long>> vertex_invariants(const SimplicialComplex& x) {
  std::vector<std::vector<long>> inv(static_cast<std::size_t>(x.n_vertices()),
                                     std::vector<long>(static_cast<std::size_t>(x.dim()) + 1, 0));
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& f : x.faces(d))
      for (int v : f) ++inv[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
  return inv;
}

struct IsoSearch {
  const SimplicialComplex& x;
  const SimplicialComplex& y;
  std::vector<std::vector<int>> x_incident;  // faces (global index) per vertex
  std::vector<const std::vector<int>*> x_face_ptr;
  std::vector<int> mapping;       // x vertex -> y vertex
  std::vector<char> used;         // y vertex taken
  std::vector<int> order;         // vertex assignment order
  std::vector<std::vector<int>> candidates;  // per x vertex
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  bool face_ok(int xv) const {
    // every fully-mapped face through xv must land on a face of y
    std::vector<int> image;
    for (int fi : x_incident[static_cast<std::size_t>(xv)]) {
      const auto& f = *x_face_ptr[static_cast<std::size_t>(fi)];
      image.clear();
      bool full = true;
      for (int v : f) {
        if (mapping[static_cast<std::size_t>(v)] < 0) {
          full = false;
          break;
        }
        image.push_back(mapping[static_cast<std::size_t>(v)]);
      }
      if (!full) continue;
      std::sort(image.begin(), image.end());
      if (!y.has_face(image)) return false;
    }
    return true;
  }

  bool search(std::size_t pos) {
    if (++nodes > budget) fail(ErrorKind::BudgetExceeded, "isomorphism search budget exceeded");
    if (pos == order.size()) return true;
    int xv = order[pos];
    for (int yv : candidates[static_cast<std::size_t>(xv)]) {
      if (used[static_cast<std::size_t>(yv)]) continue;
      mapping[static_cast<std::size_t>(xv)] = yv;
      used[static_cast<std::size_t>(yv)] = 1;
      if (face_ok(xv) && search(pos + 1)) return true;
      mapping[static_cast<std::size_t>(xv)] = -1;
      used[static_cast<std::size_t>(yv)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const SimplicialComplex& x,
                                               const SimplicialComplex& y,
                                               std::uint64_t budget) {
  if (x.n_vertices() != y.n_vertices() || x.dim() != y.dim()) return std::nullopt;
  if (x.f_vector() != y.f_vector()) return std::nullopt;
  if (x.n_vertices() == 0) return std::vector<int>{};

  auto xinv = vertex_invariants(x);
  auto yinv = vertex_invariants(y);
  {
    auto xs = xinv, ys = yinv;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (xs != ys) return std::nullopt;
  }

  IsoSearch s{x, y, {}, {}, {}, {}, {}, {}, 0, budget};
  s.x_incident.resize(static_cast<std::size_t>(x.n_vertices()));
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& f : x.faces(d)) {
      int fi = static_cast<int>(s.x_face_ptr.size());
      s.x_face_ptr.push_back(&f);
      for (int v : f) s.x_incident[static_cast<std::size_t>(v)].push_back(fi);
    }
  s.mapping.assign(static_cast<std::size_t>(x.n_vertices()), -1);
  s.used.assign(static_cast<std::size_t>(y.n_vertices()), 0);
  s.candidates.resize(static_cast<std::size_t>(x.n_vertices()));
  for (int xv = 0; xv < x.n_vertices(); ++xv)
    for (int yv = 0; yv < y.n_vertices(); ++yv)
      if (xinv[static_cast<std::size_t>(xv)] == yinv[static_cast<std::size_t>(yv)])
        s.candidates[static_cast<std::size_t>(xv)].push_back(yv);
  s.order.resize(static_cast<std::size_t>(x.n_vertices()));
  for (int v = 0; v < x.n_vertices(); ++v) s.order[static_cast<std::size_t>(v)] = v;
  // most constrained vertices first
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return s.candidates[static_cast<std::size_t>(a)].size() <
           s.candidates[static_cast<std::size_t>(b)].size();
  });
  if (s.search(0)) return s.mapping;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const SimplicialComplex& x) {
  j = nlohmann::json{{"n_vertices", x.n_vertices()}, {"facets", x.facets()}};
}

void from_json(const nlohmann::json& j, SimplicialComplex& x) {
  auto facets = j.at("facets").get<std::vector<std::vector<int>>>();
  int n = j.at("n_vertices").get<int>();
  if (facets.empty())
    x = SimplicialComplex::from_faces(n, {});
  else
    x = SimplicialComplex::from_facets(std::move(facets), n);
}

}  // namespace mpx
