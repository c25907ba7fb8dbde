#ifndef MPX_MULTIPATH_HPP
#define MPX_MULTIPATH_HPP

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mpx/digraph.hpp"
#include "mpx/simplicial.hpp"

namespace mpx {

// All multipaths of a digraph (edge-id sets, empty one included), ordered by
// cardinality then lexicographically. Containment is subset order.
struct PathPoset {
  std::vector<std::vector<int>> multipaths;

  std::size_t size() const { return multipaths.size(); }
  bool operator==(const PathPoset&) const = default;
};

bool is_multipath(const Digraph& g, const std::vector<int>& edge_ids);

// Cap on the number of generated multipaths; MPX_BUDGET overrides.
std::uint64_t default_enumeration_budget();

struct EnumerationOptions {
  std::uint64_t budget = default_enumeration_budget();
  bool parallel = true;  // fan out over the first selected edge id
};

PathPoset enumerate_multipaths(const Digraph& g, const EnumerationOptions& opts = {});

// Complex on the edge ids of g whose faces are the nonempty multipaths.
SimplicialComplex multipath_complex(const Digraph& g, const EnumerationOptions& opts = {});

void to_json(nlohmann::json& j, const PathPoset& p);
void from_json(const nlohmann::json& j, PathPoset& p);

}  // namespace mpx

#endif
