#include "mpx/shellability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace mpx {

namespace {

std::uint64_t face_mask(const std::vector<int>& f) {
  std::uint64_t m = 0;
  for (int v : f) {
    if (v >= 64) fail(ErrorKind::UnsupportedParameter, "shellability supports at most 64 vertices");
    m |= std::uint64_t(1) << v;
  }
  return m;
}

// Bjorner-Wachs condition for appending facet F after `placed`:
// the codim-1 faces F \ {v} realized as intersections with placed facets
// determine a `missing` vertex set; every other intersection must lie under
// one of them.
bool can_append(std::uint64_t f, const std::vector<std::uint64_t>& placed) {
  if (placed.empty()) return true;
  int sz = std::popcount(f);
  if (sz < 2) return false;  // a vertex facet meets nothing in codimension 1
  std::uint64_t missing = 0;
  for (std::uint64_t p : placed) {
    std::uint64_t inter = f & p;
    if (std::popcount(inter) == sz - 1) missing |= f & ~inter;
  }
  if (missing == 0) return false;  // intersection empty or not pure of codim 1
  for (std::uint64_t p : placed)
    if (((f & ~p) & missing) == 0) return false;
  return true;
}

}  // namespace

bool is_shelling(const SimplicialComplex& x, const std::vector<std::vector<int>>& order) {
  auto facets = x.facets();
  auto sorted_order = order;
  for (auto& f : sorted_order) std::sort(f.begin(), f.end());
  {
    auto a = facets;
    auto b = sorted_order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail(ErrorKind::NotAFacetPermutation, "order is not a permutation of the facets");
  }
  std::vector<std::uint64_t> placed;
  for (const auto& f : sorted_order) {
    std::uint64_t m = face_mask(f);
    if (!can_append(m, placed)) return false;
    placed.push_back(m);
  }
  return true;
}

namespace {

struct ShellSearch {
  std::vector<std::uint64_t> facets;  // in candidate order
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool timed_out = false;
  std::vector<std::size_t> order;
  std::vector<std::uint64_t> placed;
  std::unordered_set<std::uint64_t> dead;  // failed placed-sets (by facet index mask)

  bool dfs(std::uint64_t placed_mask) {
    if (order.size() == facets.size()) return true;
    if (dead.contains(placed_mask)) return false;
    if (++nodes > budget) {
      timed_out = true;
      return false;
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (placed_mask & (std::uint64_t(1) << i)) continue;
      if (!can_append(facets[i], placed)) continue;
      order.push_back(i);
      placed.push_back(facets[i]);
      if (dfs(placed_mask | (std::uint64_t(1) << i))) return true;
      order.pop_back();
      placed.pop_back();
      if (timed_out) return false;
    }
    dead.insert(placed_mask);
    return false;
  }
};

}  // namespace

ShellingOutcome find_shelling(const SimplicialComplex& x, std::uint64_t budget) {
  auto facet_list = x.facets();
  if (facet_list.size() > 64)
    fail(ErrorKind::UnsupportedParameter, "shellability search supports at most 64 facets");
  // candidates by decreasing dimension, then lexicographically
  std::stable_sort(facet_list.begin(), facet_list.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a < b;
                   });
  ShellSearch s;
  s.budget = budget;
  for (const auto& f : facet_list) s.facets.push_back(face_mask(f));
  if (s.dfs(0)) {
    Shelling found;
    for (std::size_t i : s.order) found.order.push_back(facet_list[i]);
    return ShellingOutcome{std::move(found), s.nodes};
  }
  if (s.timed_out) return ShellingOutcome{ShellingTimeout{budget}, s.nodes};
  return ShellingOutcome{NotShellable{s.nodes}, s.nodes};
}

void to_json(nlohmann::json& j, const ShellingOutcome& o) {
  if (o.found()) {
    j = nlohmann::json{{"result", "shelling"},
                       {"order", std::get<Shelling>(o.value).order},
                       {"nodes", o.nodes}};
  } else if (o.not_shellable()) {
    j = nlohmann::json{{"result", "not_shellable"}, {"nodes", o.nodes}};
  } else {
    j = nlohmann::json{{"result", "timeout"}, {"nodes", o.nodes}};
  }
}

}  // namespace mpx
