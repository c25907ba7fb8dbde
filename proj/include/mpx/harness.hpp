#ifndef MPX_HARNESS_HPP
#define MPX_HARNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mpx/digraph.hpp"
#include "mpx/homology.hpp"

namespace mpx {

// floor((n-1)/2) - 1, the polygon connectivity bound
int nu(int n);
// floor((2n-1)/3 - 2), the chessboard connectivity bound
int mu(int n);

enum class CheckFamily { BL, BP, W, BLHAT, TAP1, TAP2, TAPSTAR, C };

std::string check_family_name(CheckFamily f);
std::optional<CheckFamily> parse_check_family(const std::string& name);
Family graph_family(CheckFamily f);

// Unreduced homology implied by the closed-form statements; colliding case
// rows for small n stack additively (validated against the brute-force
// golden for BP_2).
struct ExpectedHomology {
  CheckFamily family;
  int n = 0;
  std::map<int, long> betti;  // degree -> rank, zero degrees omitted
  bool conjectural = false;
};

ExpectedHomology expected_homology(CheckFamily family, int n);

enum class Verdict { MATCH, MISMATCH, SKIPPED };

struct VerificationReport {
  std::string family;
  int n = 0;
  Verdict verdict = Verdict::SKIPPED;
  bool conjectural = false;
  std::string expected;  // rendered group string
  std::string computed;
  std::string note;
  double seconds = 0.0;
};

std::string render_betti(const std::map<int, long>& betti);
std::map<int, long> betti_map(const HomologyResult& h);

VerificationReport run_check(CheckFamily family, int n, bool reduced = false);

// Certifies the multipath complex of an acyclic digraph against the matching
// complex of the underlying graph of its blow-up via explicit isomorphism.
VerificationReport verify_matching_iso(const Digraph& g);

// Homological connectivity of X(K_n) against mu(n); also records whether the
// first group above mu(n) is nonzero (the sharpness conjecture).
VerificationReport verify_omega(int n);

void to_json(nlohmann::json& j, const VerificationReport& r);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

}  // namespace mpx

#endif
