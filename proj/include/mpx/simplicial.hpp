#ifndef MPX_SIMPLICIAL_HPP
#define MPX_SIMPLICIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mpx/digraph.hpp"
#include "mpx/errors.hpp"

namespace mpx {

// Abstract simplicial complex with integer-labeled vertices. Faces are stored
// sorted, grouped by dimension, each dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  // `faces` must already be downward closed (nonempty faces only).
  static SimplicialComplex from_faces(int n_vertices, std::vector<std::vector<int>> faces);

  // Downward closure of the given facets; dominated entries are absorbed.
  static SimplicialComplex from_facets(std::vector<std::vector<int>> facet_list,
                                       std::optional<int> n_vertices = std::nullopt);

  int n_vertices() const { return n_vertices_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  const std::vector<std::vector<int>>& faces(int d) const;
  long n_faces(int d) const;
  std::size_t total_faces() const;

  bool has_face(const std::vector<int>& sorted_face) const;
  // Index of a face within its dimension's lexicographic order, -1 if absent.
  int face_index(const std::vector<int>& sorted_face) const;

  const std::vector<std::vector<int>>& facets() const;

  std::vector<long> f_vector() const;
  long euler_characteristic() const;

  bool operator==(const SimplicialComplex& other) const {
    return n_vertices_ == other.n_vertices_ && by_dim_ == other.by_dim_;
  }

 private:
  int n_vertices_ = 0;
  std::vector<std::vector<std::vector<int>>> by_dim_;
  mutable std::vector<std::vector<int>> facets_;
  mutable bool facets_cached_ = false;
};

// Complex of nonempty matchings of h; vertices are edge ids of h.
SimplicialComplex matching_complex(const UndirectedGraph& h);

// Vertex set is the disjoint union (y's ids shifted by x.n_vertices()).
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

SimplicialComplex suspension(const SimplicialComplex& x);

enum class CrossPolytopeVariant { PRIME, DOUBLE_PRIME };

// The explicit cross-polytope inside X(BL_n): a join of 0-spheres whose
// vertices are edge ids of gen_family(BL, n). PRIME pairs antiparallel edges
// on every other segment; DOUBLE_PRIME (n divisible by 4) uses the skewed
// pairs that share a source or a target vertex.
SimplicialComplex cross_polytope_subcomplex(CrossPolytopeVariant variant, int n);

bool is_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y);

// Exhaustive backtracking with (per-dimension incidence) vertex invariants;
// absence of a returned bijection is a certificate.
std::optional<std::vector<int>> are_isomorphic(const SimplicialComplex& x,
                                               const SimplicialComplex& y,
                                               std::uint64_t budget = 20'000'000);

void to_json(nlohmann::json& j, const SimplicialComplex& x);
void from_json(const nlohmann::json& j, SimplicialComplex& x);

}  // namespace mpx

#endif
