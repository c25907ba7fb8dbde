#ifndef MPX_HOMOLOGY_HPP
#define MPX_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mpx/simplicial.hpp"
#include "mpx/snf.hpp"

namespace mpx {

struct HomologyGroup {
  int dim = 0;
  long betti = 0;
  std::vector<mpz_class> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// Per-degree groups; zero groups are stored too (degrees -1..dim for reduced,
// 0..dim for unreduced). JSON output lists only the nonzero ones.
struct HomologyResult {
  bool reduced = true;
  std::vector<HomologyGroup> groups;

  const HomologyGroup* group(int dim) const;
  long betti(int dim) const;
  bool operator==(const HomologyResult&) const = default;
};

struct HomologyOptions {
  int threads = 0;  // 0 = library default; 1 forces the serial path
};

// Boundary matrix from i-faces (columns) to (i-1)-faces (rows), alternating
// signs in the global vertex order. Index 0 is the augmentation row when
// `with_augmentation` is set.
std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& x,
                                               bool with_augmentation = true);

HomologyResult reduced_homology(const SimplicialComplex& x, const HomologyOptions& opts = {});
HomologyResult unreduced_homology(const SimplicialComplex& x, const HomologyOptions& opts = {});

// Largest k with vanishing reduced homology in all degrees <= k;
// nullopt means every reduced group vanishes. Certifies only the homological
// part of k-connectivity.
std::optional<int> homological_connectivity(const SimplicialComplex& x,
                                            const HomologyOptions& opts = {});
std::optional<int> homological_connectivity(const HomologyResult& reduced);

namespace reference {

// Serial baseline: dense SNF degree by degree, no threading.
HomologyResult reduced_homology_dense(const SimplicialComplex& x);

}  // namespace reference

void to_json(nlohmann::json& j, const HomologyResult& h);
void from_json(const nlohmann::json& j, HomologyResult& h);

}  // namespace mpx

#endif
