#ifndef MPX_SHELLABILITY_HPP
#define MPX_SHELLABILITY_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mpx/simplicial.hpp"

namespace mpx {

struct Shelling {
  std::vector<std::vector<int>> order;
};
struct NotShellable {
  std::uint64_t nodes_explored = 0;
};
struct ShellingTimeout {
  std::uint64_t budget = 0;
};

// A certified facet order, a proof-of-exhaustion negative, or a timeout.
struct ShellingOutcome {
  std::variant<Shelling, NotShellable, ShellingTimeout> value;
  std::uint64_t nodes = 0;

  bool found() const { return std::holds_alternative<Shelling>(value); }
  bool not_shellable() const { return std::holds_alternative<NotShellable>(value); }
  bool timed_out() const { return std::holds_alternative<ShellingTimeout>(value); }
};

// Non-pure (Bjorner-Wachs) shelling condition: for every j >= 2 the
// intersection of F_j with the union of its predecessors is nonempty and pure
// of dimension dim(F_j) - 1.
bool is_shelling(const SimplicialComplex& x, const std::vector<std::vector<int>>& order);

ShellingOutcome find_shelling(const SimplicialComplex& x, std::uint64_t budget = 10'000'000);

void to_json(nlohmann::json& j, const ShellingOutcome& o);

}  // namespace mpx

#endif
