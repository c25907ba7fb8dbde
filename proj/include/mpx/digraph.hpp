#ifndef MPX_DIGRAPH_HPP
#define MPX_DIGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mpx/errors.hpp"

namespace mpx {

// Directed graph without loops or repeated edges; at most two antiparallel
// edges per vertex pair. Edge ids are positions in the edge list.
struct Digraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int n_edges() const { return static_cast<int>(edges.size()); }
  int source(int e) const { return edges[e].first; }
  int target(int e) const { return edges[e].second; }

  bool operator==(const Digraph&) const = default;
};

struct UndirectedGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // stored with first < second, sorted

  int n_edges() const { return static_cast<int>(edges.size()); }

  bool operator==(const UndirectedGraph&) const = default;
};

// Validating constructor. Edge ids follow list order.
Digraph make_digraph(int n_vertices, std::vector<std::pair<int, int>> edge_list);

UndirectedGraph make_undirected(int n_vertices, std::vector<std::pair<int, int>> edge_list);

enum class Family { I, BL, BP, W, BLHAT, K, C, TT, BP_MINUS1, BP_MINUS2, BP_MINUS_STAR };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

Digraph gen_family(Family family, int n);

int indegree(const Digraph& g, int v);
int outdegree(const Digraph& g, int v);

// Glues a copy of W_2 at a vertex t of indegree 0 or outdegree 0, attaching
// the pendant edge of the copy to u. Two fresh vertices are appended.
Digraph t_operation(const Digraph& g, int t, int u);

// Splits v into v_in (keeps index v) and v_out (fresh, appended) when v has
// positive in- and outdegree; otherwise returns g unchanged.
Digraph blow_up_at(const Digraph& g, int v);

// Blows up every original vertex once. v_in of vertex k keeps index k; the
// v_out indices are appended in increasing order of k, which makes the result
// independent of any processing order.
Digraph blow_up(const Digraph& g);

// v_out index assigned to each split vertex by blow_up, -1 when not split.
std::vector<int> blow_up_out_vertices(const Digraph& g);

UndirectedGraph underlying(const Digraph& g);

bool is_acyclic(const Digraph& g);

bool is_bipartite(const UndirectedGraph& h);

void to_json(nlohmann::json& j, const Digraph& g);
void from_json(const nlohmann::json& j, Digraph& g);
void to_json(nlohmann::json& j, const UndirectedGraph& h);
void from_json(const nlohmann::json& j, UndirectedGraph& h);

}  // namespace mpx

#endif
