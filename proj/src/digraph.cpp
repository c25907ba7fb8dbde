#include "mpx/digraph.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace mpx {

Digraph make_digraph(int n_vertices, std::vector<std::pair<int, int>> edge_list) {
  if (n_vertices < 0) fail(ErrorKind::UnsupportedParameter, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& [s, t] : edge_list) {
    if (s < 0 || s >= n_vertices || t < 0 || t >= n_vertices)
      fail(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(s) + "," + std::to_string(t) +
                                            ") out of range for n=" + std::to_string(n_vertices));
    if (s == t) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(s));
    if (!seen.insert({s, t}).second)
      fail(ErrorKind::DuplicateEdge,
           "duplicate edge (" + std::to_string(s) + "," + std::to_string(t) + ")");
  }
  return Digraph{n_vertices, std::move(edge_list)};
}

UndirectedGraph make_undirected(int n_vertices, std::vector<std::pair<int, int>> edge_list) {
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edge_list) {
    if (a < 0 || a >= n_vertices || b < 0 || b >= n_vertices)
      fail(ErrorKind::VertexOutOfRange, "undirected edge out of range");
    if (a == b) fail(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) fail(ErrorKind::DuplicateEdge, "duplicate undirected edge");
  }
  std::sort(edge_list.begin(), edge_list.end());
  return UndirectedGraph{n_vertices, std::move(edge_list)};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::BL: return "BL";
    case Family::BP: return "BP";
    case Family::W: return "W";
    case Family::BLHAT: return "BLHAT";
    case Family::K: return "K";
    case Family::C: return "C";
    case Family::TT: return "TT";
    case Family::BP_MINUS1: return "BP_MINUS1";
    case Family::BP_MINUS2: return "BP_MINUS2";
    case Family::BP_MINUS_STAR: return "BP_MINUS_STAR";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "I") return Family::I;
  if (name == "BL") return Family::BL;
  if (name == "BP") return Family::BP;
  if (name == "W") return Family::W;
  if (name == "BLHAT") return Family::BLHAT;
  if (name == "K") return Family::K;
  if (name == "C") return Family::C;
  if (name == "TT") return Family::TT;
  if (name == "BP_MINUS1" || name == "TAP1") return Family::BP_MINUS1;
  if (name == "BP_MINUS2" || name == "TAP2") return Family::BP_MINUS2;
  if (name == "BP_MINUS_STAR" || name == "TAPSTAR") return Family::BP_MINUS_STAR;
  return std::nullopt;
}

namespace {

std::vector<std::pair<int, int>> bl_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(i + 1, i);
  }
  return e;
}

std::vector<std::pair<int, int>> bp_edges(int n) {
  // e_i = (i, i+1), e'_i = (i+1, i), indices mod n+1, interleaved by i.
  std::vector<std::pair<int, int>> e;
  int m = n + 1;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);
    e.emplace_back((i + 1) % m, i);
  }
  return e;
}

void require_min(Family f, int n, int minimum) {
  if (n < minimum)
    fail(ErrorKind::UnsupportedParameter,
         family_name(f) + "_n needs n >= " + std::to_string(minimum));
}

}  // namespace

Digraph gen_family(Family family, int n) {
  switch (family) {
    case Family::I: {
      require_min(family, n, 0);
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
      return make_digraph(n + 1, std::move(e));
    }
    case Family::BL: {
      require_min(family, n, 0);
      return make_digraph(n + 1, bl_edges(n));
    }
    case Family::W: {
      require_min(family, n, 1);
      auto e = bl_edges(n);
      e.erase(std::find(e.begin(), e.end(), std::pair<int, int>{1, 0}));
      e.emplace_back(n, n + 1);
      return make_digraph(n + 2, std::move(e));
    }
    case Family::BLHAT: {
      require_min(family, n, 1);
      auto e = bl_edges(n);
      e.emplace_back(n, n + 1);
      return make_digraph(n + 2, std::move(e));
    }
    case Family::BP: {
      require_min(family, n, 2);
      return make_digraph(n + 1, bp_edges(n));
    }
    case Family::K: {
      require_min(family, n, 1);
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) e.emplace_back(i, j);
      return make_digraph(n, std::move(e));
    }
    case Family::C: {
      require_min(family, n, 1);
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i <= n; ++i) e.emplace_back(i, (i + 1) % (n + 1));
      return make_digraph(n + 1, std::move(e));
    }
    case Family::TT: {
      require_min(family, n, 0);
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
      return make_digraph(n + 1, std::move(e));
    }
    case Family::BP_MINUS1:
    case Family::BP_MINUS2:
    case Family::BP_MINUS_STAR: {
      require_min(family, n, 2);
      int removed = family == Family::BP_MINUS1 ? 1 : family == Family::BP_MINUS2 ? 2 : 3;
      auto e = bp_edges(n);
      int m = n + 1;
      for (int j = 0; j < removed; ++j) {
        auto it = std::find(e.begin(), e.end(), std::pair<int, int>{(j + 1) % m, j});
        e.erase(it);
      }
      return make_digraph(m, std::move(e));
    }
  }
  fail(ErrorKind::UnsupportedParameter, "unknown family");
}

int indegree(const Digraph& g, int v) {
  int d = 0;
  for (const auto& [s, t] : g.edges) d += (t == v);
  return d;
}

int outdegree(const Digraph& g, int v) {
  int d = 0;
  for (const auto& [s, t] : g.edges) d += (s == v);
  return d;
}

Digraph t_operation(const Digraph& g, int t, int u) {
  if (t < 0 || t >= g.n_vertices || u < 0 || u >= g.n_vertices)
    fail(ErrorKind::VertexOutOfRange, "t_operation vertex out of range");
  int din = indegree(g, t), dout = outdegree(g, t);
  if ((din > 0) == (dout > 0))
    fail(ErrorKind::IneligibleVertex,
         "vertex " + std::to_string(t) + " must have exactly one of indegree, outdegree zero");
  // Gluing W_2 (vertices v_0..v_3, edges (v_0,v_1),(v_1,v_2),(v_2,v_1),(v_2,v_3)):
  // b plays the role adjacent to t, a the pendant endpoint. The pendant edge
  // always leaves v_2, i.e. points away from the b <-> t reversal.
  int a = g.n_vertices, b = g.n_vertices + 1;
  auto e = g.edges;
  e.emplace_back(b, t);
  e.emplace_back(t, b);
  if (din == 0) {
    e.emplace_back(u, t);  // t = v_1, u = v_0, b = v_2, a = v_3
    e.emplace_back(b, a);
  } else {
    e.emplace_back(t, u);  // t = v_2, u = v_3, b = v_1, a = v_0
    e.emplace_back(a, b);
  }
  return make_digraph(g.n_vertices + 2, std::move(e));
}

Digraph blow_up_at(const Digraph& g, int v) {
  if (v < 0 || v >= g.n_vertices) fail(ErrorKind::VertexOutOfRange, "blow_up_at vertex");
  if (indegree(g, v) == 0 || outdegree(g, v) == 0) return g;
  int v_out = g.n_vertices;
  auto e = g.edges;
  for (auto& [s, t] : e)
    if (s == v) s = v_out;
  return make_digraph(g.n_vertices + 1, std::move(e));
}

std::vector<int> blow_up_out_vertices(const Digraph& g) {
  std::vector<int> out(g.n_vertices, -1);
  int next = g.n_vertices;
  for (int v = 0; v < g.n_vertices; ++v)
    if (indegree(g, v) > 0 && outdegree(g, v) > 0) out[v] = next++;
  return out;
}

Digraph blow_up(const Digraph& g) {
  auto out = blow_up_out_vertices(g);
  int n = g.n_vertices;
  for (int v = 0; v < g.n_vertices; ++v) n += (out[v] >= 0);
  auto e = g.edges;
  for (auto& [s, t] : e)
    if (out[s] >= 0) s = out[s];
  return make_digraph(n, std::move(e));
}

UndirectedGraph underlying(const Digraph& g) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [s, t] : g.edges) pairs.insert({std::min(s, t), std::max(s, t)});
  return UndirectedGraph{g.n_vertices, {pairs.begin(), pairs.end()}};
}

bool is_acyclic(const Digraph& g) {
  std::vector<std::vector<int>> adj(g.n_vertices);
  for (const auto& [s, t] : g.edges) adj[s].push_back(t);
  std::vector<int> color(g.n_vertices, 0);  // 0 new, 1 on stack, 2 done
  for (int root = 0; root < g.n_vertices; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == adj[v].size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = adj[v][i++];
      if (color[w] == 1) return false;
      if (color[w] == 0) {
        color[w] = 1;
        stack.emplace_back(w, 0);
      }
    }
  }
  return true;
}

bool is_bipartite(const UndirectedGraph& h) {
  std::vector<std::vector<int>> adj(h.n_vertices);
  for (const auto& [a, b] : h.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> side(h.n_vertices, -1);
  for (int root = 0; root < h.n_vertices; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

void to_json(nlohmann::json& j, const Digraph& g) {
  j = nlohmann::json{{"n_vertices", g.n_vertices}, {"edges", g.edges}};
}

void from_json(const nlohmann::json& j, Digraph& g) {
  g = make_digraph(j.at("n_vertices").get<int>(),
                   j.at("edges").get<std::vector<std::pair<int, int>>>());
}

void to_json(nlohmann::json& j, const UndirectedGraph& h) {
  j = nlohmann::json{{"n_vertices", h.n_vertices}, {"edges", h.edges}};
}

void from_json(const nlohmann::json& j, UndirectedGraph& h) {
  h = make_undirected(j.at("n_vertices").get<int>(),
                      j.at("edges").get<std::vector<std::pair<int, int>>>());
}

}  // namespace mpx
