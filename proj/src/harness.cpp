#include "mpx/harness.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mpx/multipath.hpp"

namespace mpx {

namespace {

int floordiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int nu(int n) {
  if (n < 1) fail(ErrorKind::UnsupportedParameter, "nu needs n >= 1");
  return floordiv(n - 1, 2) - 1;
}

int mu(int n) {
  if (n < 1) fail(ErrorKind::UnsupportedParameter, "mu needs n >= 1");
  return floordiv(2 * n - 7, 3);  // floor((2n-1)/3 - 2)
}

std::string check_family_name(CheckFamily f) {
  switch (f) {
    case CheckFamily::BL: return "BL";
    case CheckFamily::BP: return "BP";
    case CheckFamily::W: return "W";
    case CheckFamily::BLHAT: return "BLHAT";
    case CheckFamily::TAP1: return "TAP1";
    case CheckFamily::TAP2: return "TAP2";
    case CheckFamily::TAPSTAR: return "TAPSTAR";
    case CheckFamily::C: return "C";
  }
  return "?";
}

std::optional<CheckFamily> parse_check_family(const std::string& name) {
  if (name == "BL" || name == "bl") return CheckFamily::BL;
  if (name == "BP" || name == "bp") return CheckFamily::BP;
  if (name == "W" || name == "w") return CheckFamily::W;
  if (name == "BLHAT" || name == "blhat") return CheckFamily::BLHAT;
  if (name == "TAP1" || name == "tap1") return CheckFamily::TAP1;
  if (name == "TAP2" || name == "tap2") return CheckFamily::TAP2;
  if (name == "TAPSTAR" || name == "tapstar") return CheckFamily::TAPSTAR;
  if (name == "C" || name == "c") return CheckFamily::C;
  return std::nullopt;
}

Family graph_family(CheckFamily f) {
  switch (f) {
    case CheckFamily::BL: return Family::BL;
    case CheckFamily::BP: return Family::BP;
    case CheckFamily::W: return Family::W;
    case CheckFamily::BLHAT: return Family::BLHAT;
    case CheckFamily::TAP1: return Family::BP_MINUS1;
    case CheckFamily::TAP2: return Family::BP_MINUS2;
    case CheckFamily::TAPSTAR: return Family::BP_MINUS_STAR;
    case CheckFamily::C: return Family::C;
  }
  fail(ErrorKind::UnsupportedParameter, "unknown family");
}

ExpectedHomology expected_homology(CheckFamily family, int n) {
  ExpectedHomology e{family, n, {}, false};
  auto add = [&](int deg, long k) { e.betti[deg] += k; };
  auto sphere = [&](int d) {
    add(0, 1);
    add(d, 1);
  };
  int min_n = (family == CheckFamily::BP || family == CheckFamily::TAP1 ||
               family == CheckFamily::TAP2 || family == CheckFamily::TAPSTAR)
                  ? 2
                  : 1;
  if (n < min_n)
    fail(ErrorKind::UnsupportedParameter,
         check_family_name(family) + " table needs n >= " + std::to_string(min_n));
  switch (family) {
    case CheckFamily::BL:
      sphere((n - 1) / 2);
      break;
    case CheckFamily::BP:
      add(0, 1);
      add(n - 1, 2);
      switch (n % 4) {
        case 1:
        case 2: add((n - 1) / 2, 1); break;
        case 3: add((n - 1) / 2, 3); break;
        case 0: add((n - 1) / 2 + 1, 1); break;
      }
      break;
    case CheckFamily::W:
      if (n % 4 == 0 || n % 4 == 1)
        add(0, 1);  // contractible
      else
        sphere((n - 1) / 2);
      break;
    case CheckFamily::BLHAT:
      if (n % 2 == 0)
        add(0, 1);
      else
        sphere((n - 1) / 2);
      break;
    case CheckFamily::TAP1:
      e.conjectural = true;
      add(0, 1);
      add(n - 1, 1);
      if (n % 4 == 1) add((n - 1) / 2, 1);
      if (n % 4 == 2) add((n - 2) / 2, 1);
      if (n % 4 == 3) add((n - 2) / 2 + 1, 2);
      break;
    case CheckFamily::TAP2:
      e.conjectural = true;
      add(0, 1);
      add(n - 1, 1);
      if (n % 4 == 2) add((n - 2) / 2, 1);
      if (n % 4 == 3) add((n - 2) / 2 + 1, 1);
      break;
    case CheckFamily::TAPSTAR:
      sphere(n - 1);
      break;
    case CheckFamily::C:
      sphere(n - 1);
      break;
  }
  return e;
}

std::string render_betti(const std::map<int, long>& betti) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [dim, b] : betti) {
    if (b == 0) continue;
    if (!first) out << " ";
    first = false;
    out << "H" << dim << "=Z";
    if (b != 1) out << "^" << b;
  }
  if (first) out << "0";
  return out.str();
}

std::map<int, long> betti_map(const HomologyResult& h) {
  std::map<int, long> m;
  for (const auto& g : h.groups)
    if (g.betti != 0) m[g.dim] = g.betti;
  return m;
}

namespace {

bool has_torsion(const HomologyResult& h) {
  for (const auto& g : h.groups)
    if (!g.torsion.empty()) return true;
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerificationReport run_check(CheckFamily family, int n, bool reduced) {
  VerificationReport r;
  r.family = check_family_name(family);
  r.n = n;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto expected = expected_homology(family, n);
    r.conjectural = expected.conjectural;
    auto want = expected.betti;
    if (reduced) {
      if (--want[0] == 0) want.erase(0);
    }
    auto g = gen_family(graph_family(family), n);
    auto x = multipath_complex(g);
    auto h = reduced ? reduced_homology(x) : unreduced_homology(x);
    auto got = betti_map(h);
    r.expected = render_betti(want);
    r.computed = render_betti(got);
    bool match = (got == want) && !has_torsion(h);
    r.verdict = match ? Verdict::MATCH : Verdict::MISMATCH;
    if (!match && expected.conjectural) r.note = "counterexample candidate";
    if (has_torsion(h)) r.note = "torsion present";
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::BudgetExceeded) {
      r.verdict = Verdict::SKIPPED;
      r.note = err.what();
    } else {
      throw;
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

VerificationReport verify_matching_iso(const Digraph& g) {
  if (!is_acyclic(g)) fail(ErrorKind::NotAcyclic, "matching-complex check needs an acyclic digraph");
  VerificationReport r;
  r.family = "matching";
  r.n = g.n_edges();
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto x = multipath_complex(g);
    auto m = matching_complex(underlying(blow_up(g)));
    auto bijection = are_isomorphic(x, m);
    r.verdict = bijection ? Verdict::MATCH : Verdict::MISMATCH;
    r.expected = "isomorphic";
    r.computed = bijection ? "isomorphic" : "not isomorphic";
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::BudgetExceeded) {
      r.verdict = Verdict::SKIPPED;
      r.note = err.what();
    } else {
      throw;
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

VerificationReport verify_omega(int n) {
  if (n < 2) fail(ErrorKind::UnsupportedParameter, "verify_omega needs n >= 2");
  VerificationReport r;
  r.family = "omega";
  r.n = n;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto x = multipath_complex(gen_family(Family::K, n));
    auto h = reduced_homology(x);
    auto conn = homological_connectivity(h);
    int bound = mu(n);
    bool match = !conn.has_value() || *conn >= bound;
    r.verdict = match ? Verdict::MATCH : Verdict::MISMATCH;
    r.expected = "connectivity >= " + std::to_string(bound);
    r.computed = "connectivity " + (conn ? std::to_string(*conn) : std::string("inf"));
    long above = h.betti(bound + 1);
    r.note = "H~_{mu+1} rank " + std::to_string(above) +
             (above != 0 ? " (sharpness conjecture holds)" : " (sharpness conjecture fails here)");
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::BudgetExceeded) {
      r.verdict = Verdict::SKIPPED;
      r.note = err.what();
    } else {
      throw;
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

namespace {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MATCH: return "MATCH";
    case Verdict::MISMATCH: return "MISMATCH";
    case Verdict::SKIPPED: return "SKIPPED";
  }
  return "?";
}

}  // namespace

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"family", r.family},     {"n", r.n},
                     {"verdict", verdict_name(r.verdict)}, {"conjectural", r.conjectural},
                     {"expected", r.expected}, {"computed", r.computed},
                     {"note", r.note},         {"seconds", r.seconds}};
}

std::string report_csv_header() { return "family,n,verdict,homology,seconds"; }

std::string report_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << r.family << "," << r.n << "," << verdict_name(r.verdict) << ",\"" << r.computed << "\","
      << r.seconds;
  return out.str();
}

}  // namespace mpx
