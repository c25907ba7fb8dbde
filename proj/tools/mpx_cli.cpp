// Command-line surface over the multipath-complex library.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mpx/digraph.hpp"
#include "mpx/harness.hpp"
#include "mpx/homology.hpp"
#include "mpx/multipath.hpp"
#include "mpx/shellability.hpp"
#include "mpx/simplicial.hpp"

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void write_output(const std::string& out_path, const json& j) {
  if (out_path.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump() << "\n";
}

struct VerifyJob {
  std::string suite;
  int n = 0;
};

// Deterministic corpus of small acyclic digraphs for the matching suite:
// random-looking but fixed-seed DAGs with at most 8 edges.
std::vector<mpx::Digraph> acyclic_corpus(int count) {
  std::vector<mpx::Digraph> out;
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  while (static_cast<int>(out.size()) < count) {
    int n = 3 + static_cast<int>(next() % 5);  // 3..7 vertices
    std::vector<std::pair<int, int>> edges;
    int target_edges = 2 + static_cast<int>(next() % 7);  // 2..8
    int attempts = 0;
    while (static_cast<int>(edges.size()) < target_edges && attempts < 64) {
      ++attempts;
      int a = static_cast<int>(next() % static_cast<std::uint64_t>(n));
      int b = static_cast<int>(next() % static_cast<std::uint64_t>(n));
      if (a == b) continue;
      if (a > b) std::swap(a, b);  // edges follow the vertex order: acyclic
      if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end()) continue;
      edges.emplace_back(a, b);
    }
    if (edges.empty()) continue;
    out.push_back(mpx::make_digraph(n, std::move(edges)));
  }
  return out;
}

int run_verify(const std::string& suite, int max_n, int jobs, const std::string& format) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = {"bl", "bp", "w", "blhat", "tap1", "tap2", "tapstar", "omega", "matching"};
  else
    suites = {suite};

  std::vector<VerifyJob> jobs_list;
  std::vector<mpx::Digraph> matching_graphs;
  for (const auto& s : suites) {
    auto cap = [&](int dflt) { return max_n > 0 ? max_n : dflt; };
    if (s == "bl" || s == "w" || s == "blhat")
      for (int n = 1; n <= cap(10); ++n) jobs_list.push_back({s, n});
    else if (s == "bp")
      for (int n = 2; n <= cap(9); ++n) jobs_list.push_back({s, n});
    else if (s == "tap1" || s == "tap2")
      for (int n = 3; n <= cap(10); ++n) jobs_list.push_back({s, n});
    else if (s == "tapstar")
      for (int n = 2; n <= cap(10); ++n) jobs_list.push_back({s, n});
    else if (s == "omega")
      for (int n = 2; n <= std::min(cap(5), 5); ++n) jobs_list.push_back({s, n});
    else if (s == "matching") {
      matching_graphs.push_back(mpx::gen_family(mpx::Family::TT, 3));
      for (int n = 1; n <= std::min(cap(6), 6); ++n)
        matching_graphs.push_back(mpx::gen_family(mpx::Family::I, n));
      for (auto& g : acyclic_corpus(25)) matching_graphs.push_back(std::move(g));
      for (int i = 0; i < static_cast<int>(matching_graphs.size()); ++i)
        jobs_list.push_back({"matching", i});
    } else {
      std::cerr << "unknown suite: " << s << "\n";
      return 2;
    }
  }

  std::vector<mpx::VerificationReport> reports(jobs_list.size());
#ifdef _OPENMP
  if (jobs <= 0) jobs = 1;
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
#endif
  for (int i = 0; i < static_cast<int>(jobs_list.size()); ++i) {
    const auto& job = jobs_list[static_cast<std::size_t>(i)];
    mpx::VerificationReport r;
    if (job.suite == "omega")
      r = mpx::verify_omega(job.n);
    else if (job.suite == "matching")
      r = mpx::verify_matching_iso(matching_graphs[static_cast<std::size_t>(job.n)]);
    else
      r = mpx::run_check(*mpx::parse_check_family(job.suite), job.n);
    reports[static_cast<std::size_t>(i)] = std::move(r);
  }

  bool failed = false;
  if (format == "csv") std::cout << mpx::report_csv_header() << "\n";
  for (const auto& r : reports) {
    if (format == "csv") {
      std::cout << mpx::report_csv_row(r) << "\n";
    } else {
      json j = r;
      std::cout << j.dump() << "\n";
    }
    if (r.verdict == mpx::Verdict::MISMATCH && !r.conjectural) failed = true;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipath complexes: generators, homology, verification"};
  app.require_subcommand(1);

  std::string family_name, in_path, out_path, a_path, b_path;
  std::string suite = "all", format = "json";
  int n = 0, max_n = 0, jobs = 1;
  bool count_only = false, reduced = false;
  std::uint64_t budget = 10'000'000;

  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  gen->add_option("--family", family_name, "I|BL|BP|W|BLHAT|K|C|TT|TAP1|TAP2|TAPSTAR")->required();
  gen->add_option("--n", n, "family index")->required();
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* multipaths = app.add_subcommand("multipaths", "enumerate the path poset");
  multipaths->add_option("--in", in_path, "digraph JSON")->required();
  multipaths->add_flag("--count-only", count_only, "print only the number of multipaths");

  auto* complex_cmd = app.add_subcommand("complex", "build the multipath complex");
  complex_cmd->add_option("--in", in_path, "digraph JSON")->required();
  complex_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* homology_cmd = app.add_subcommand("homology", "integer homology of a complex");
  homology_cmd->add_option("--in", in_path, "complex JSON")->required();
  homology_cmd->add_flag("--reduced", reduced, "reduced homology");
  homology_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* shelling_cmd = app.add_subcommand("shelling", "search for a shelling order");
  shelling_cmd->add_option("--in", in_path, "complex JSON")->required();
  shelling_cmd->add_option("--budget", budget, "search node budget");

  auto* verify = app.add_subcommand("verify", "run the closed-form verification suites");
  verify->add_option("--suite", suite,
                     "bl|bp|w|blhat|tap1|tap2|tapstar|omega|matching|all")->required();
  verify->add_option("--max-n", max_n, "cap the family index (0 = suite default)");
  verify->add_option("--jobs", jobs, "verification parallelism");
  verify->add_option("--format", format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));

  auto* iso = app.add_subcommand("iso", "exhaustive simplicial isomorphism test");
  iso->add_option("--a", a_path, "first complex JSON")->required();
  iso->add_option("--b", b_path, "second complex JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      auto fam = mpx::parse_family(family_name);
      if (!fam) {
        std::cerr << "unknown family: " << family_name << "\n";
        return 2;
      }
      write_output(out_path, json(mpx::gen_family(*fam, n)));
      return 0;
    }
    if (*multipaths) {
      mpx::Digraph g = read_json_file(in_path);
      auto poset = mpx::enumerate_multipaths(g);
      if (count_only)
        std::cout << poset.size() << "\n";
      else
        std::cout << json(poset).dump() << "\n";
      return 0;
    }
    if (*complex_cmd) {
      mpx::Digraph g = read_json_file(in_path);
      write_output(out_path, json(mpx::multipath_complex(g)));
      return 0;
    }
    if (*homology_cmd) {
      mpx::SimplicialComplex x = read_json_file(in_path);
      auto h = reduced ? mpx::reduced_homology(x) : mpx::unreduced_homology(x);
      if (format == "csv") {
        std::cout << "dim,betti,torsion\n";
        for (const auto& g : h.groups) {
          if (g.trivial()) continue;
          std::cout << g.dim << "," << g.betti << ",";
          for (std::size_t i = 0; i < g.torsion.size(); ++i)
            std::cout << (i ? ";" : "") << g.torsion[i].get_str();
          std::cout << "\n";
        }
      } else {
        std::cout << json(h).dump() << "\n";
      }
      return 0;
    }
    if (*shelling_cmd) {
      mpx::SimplicialComplex x = read_json_file(in_path);
      auto outcome = mpx::find_shelling(x, budget);
      std::cout << json(outcome).dump() << "\n";
      return outcome.found() ? 0 : 1;
    }
    if (*verify) {
      if (format == "json") format = "jsonl";
      return run_verify(suite, max_n, jobs, format);
    }
    if (*iso) {
      mpx::SimplicialComplex xa = read_json_file(a_path);
      mpx::SimplicialComplex xb = read_json_file(b_path);
      auto mapping = mpx::are_isomorphic(xa, xb);
      json j{{"isomorphic", mapping.has_value()}};
      if (mapping) j["mapping"] = *mapping;
      std::cout << j.dump() << "\n";
      return mapping ? 0 : 1;
    }
  } catch (const mpx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
