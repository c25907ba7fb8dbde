// Acceptance gate: one line per criterion, exact integer comparisons only.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mpx/harness.hpp"
#include "mpx/homology.hpp"
#include "mpx/multipath.hpp"
#include "mpx/shellability.hpp"
#include "mpx/simplicial.hpp"
#include "mpx/snf.hpp"

using namespace mpx;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
  if (!ok) ++failures;
  std::printf("criterion %2d [%s] %s (%.1fs)%s%s\n", criterion, ok ? "PASS" : "FAIL", name.c_str(),
              seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

template <class F>
void criterion(int number, const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, name, ok, s, detail);
}

std::map<int, long> reduced_betti(const HomologyResult& h) {
  std::map<int, long> m;
  for (const auto& g : h.groups)
    if (g.betti != 0) m[g.dim] = g.betti;
  return m;
}

bool torsion_free(const HomologyResult& h) {
  for (const auto& g : h.groups)
    if (!g.torsion.empty()) return false;
  return true;
}

bool all_match(CheckFamily fam, int lo, int hi, std::string& detail) {
  for (int n = lo; n <= hi; ++n) {
    auto r = run_check(fam, n);
    if (r.verdict != Verdict::MATCH) {
      detail = check_family_name(fam) + "_" + std::to_string(n) + ": expected " + r.expected +
               ", computed " + r.computed;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "BL_n spheres, n = 1..10", [](std::string& detail) {
    for (int n = 1; n <= 10; ++n) {
      auto h = reduced_homology(multipath_complex(gen_family(Family::BL, n)));
      std::map<int, long> want{{(n - 1) / 2, 1}};
      if (!torsion_free(h) || reduced_betti(h) != want) {
        detail = "BL_" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(2, "BP_n homology table, n = 2..9", [](std::string& detail) {
    return all_match(CheckFamily::BP, 2, 9, detail);
  });

  criterion(3, "BP_n connectivity bounds, n = 2..9", [](std::string& detail) {
    for (int n = 2; n <= 9; ++n) {
      auto h = reduced_homology(multipath_complex(gen_family(Family::BP, n)));
      auto conn = homological_connectivity(h);
      int bound = nu(n);
      if (conn.has_value() && *conn < bound) {
        detail = "BP_" + std::to_string(n) + " connectivity " + std::to_string(*conn) + " < " +
                 std::to_string(bound);
        return false;
      }
      if (n % 4 != 0) {
        // first nonvanishing reduced group sits exactly in degree floor((n-1)/2)
        int first = conn.has_value() ? *conn + 1 : -2;
        if (first != (n - 1) / 2) {
          detail = "BP_" + std::to_string(n) + " first group in degree " + std::to_string(first);
          return false;
        }
      }
    }
    return true;
  });

  criterion(4, "W_n and BLHAT_n sphere-or-contractible, n = 1..10", [](std::string& detail) {
    return all_match(CheckFamily::W, 1, 10, detail) && all_match(CheckFamily::BLHAT, 1, 10, detail);
  });

  criterion(5, "matching-complex isomorphism on acyclic digraphs", [](std::string& detail) {
    std::vector<Digraph> graphs;
    graphs.push_back(gen_family(Family::TT, 3));
    for (int n = 1; n <= 6; ++n) graphs.push_back(gen_family(Family::I, n));
    test::Rng rng(314159);
    while (graphs.size() < 7 + 25) {
      auto g = test::random_dag(rng, 7, 8);
      if (g.n_edges() >= 1 && g.n_edges() <= 8) graphs.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto r = verify_matching_iso(graphs[i]);
      if (r.verdict != Verdict::MATCH) {
        detail = "instance " + std::to_string(i) + " " + r.computed;
        return false;
      }
    }
    return true;
  });

  criterion(6, "edge-removal tables for taP-1 and taP-2, n = 3..10", [](std::string& detail) {
    return all_match(CheckFamily::TAP1, 3, 10, detail) &&
           all_match(CheckFamily::TAP2, 3, 10, detail);
  });

  criterion(7, "taP-* spheres, n = 2..10", [](std::string& detail) {
    return all_match(CheckFamily::TAPSTAR, 2, 10, detail);
  });

  criterion(8, "Omega_n connectivity, n = 2..5", [](std::string& detail) {
    for (int n = 2; n <= 5; ++n) {
      auto r = verify_omega(n);
      if (r.verdict != Verdict::MATCH) {
        detail = "K_" + std::to_string(n) + ": " + r.computed + " vs " + r.expected;
        return false;
      }
    }
    return true;
  });

  criterion(9, "non-shellability of X(BL_n), X(BP_n); shellable simplices", [](std::string& detail) {
    for (int n = 2; n <= 5; ++n) {
      for (Family fam : {Family::BL, Family::BP}) {
        auto out = find_shelling(multipath_complex(gen_family(fam, n)), 200'000'000);
        if (!out.not_shellable()) {
          detail = family_name(fam) + "_" + std::to_string(n) +
                   (out.found() ? " unexpectedly shellable" : " search timed out");
          return false;
        }
      }
    }
    for (int k = 0; k <= 4; ++k) {
      auto out = find_shelling(test::solid_simplex(k));
      if (!out.found() || !is_shelling(test::solid_simplex(k), std::get<Shelling>(out.value).order)) {
        detail = "solid " + std::to_string(k) + "-simplex";
        return false;
      }
    }
    return true;
  });

  criterion(10, "property suites, 100+ instances each", [](std::string& detail) {
    // boundary-of-boundary and Euler consistency
    {
      test::Rng rng(271828);
      for (int i = 0; i < 110; ++i) {
        auto x = test::random_complex(rng, 8, 6);
        auto b = boundary_matrices(x);
        for (std::size_t d = 0; d + 1 < b.size(); ++d)
          for (int c = 0; c < b[d + 1].cols(); ++c) {
            std::map<int, mpz_class> col;
            for (int k = 0; k < b[d + 1].rows(); ++k) {
              mpz_class v = b[d + 1].get(k, c);
              if (v == 0) continue;
              for (int r : b[d].rows_with(k)) col[r] += v * b[d].get(r, k);
            }
            for (const auto& [r, v] : col)
              if (v != 0) {
                detail = "boundary-of-boundary instance " + std::to_string(i);
                return false;
              }
          }
        if (x.empty()) continue;
        auto h = unreduced_homology(x);
        long chi = 0;
        for (const auto& g : h.groups) chi += (g.dim % 2 == 0 ? g.betti : -g.betti);
        if (chi != x.euler_characteristic()) {
          detail = "euler instance " + std::to_string(i);
          return false;
        }
      }
    }
    // suspension shift
    {
      test::Rng rng(161803);
      for (int i = 0; i < 100; ++i) {
        auto x = test::random_complex(rng, 6, 5);
        if (x.empty()) continue;
        auto hb = reduced_betti(reduced_homology(x));
        std::map<int, long> shifted;
        for (const auto& [d, b] : hb) shifted[d + 1] = b;
        if (reduced_betti(reduced_homology(suspension(x))) != shifted) {
          detail = "suspension instance " + std::to_string(i);
          return false;
        }
      }
    }
    // join of spheres (relabeled cross-polytope models)
    {
      test::Rng rng(141421);
      for (int i = 0; i < 100; ++i) {
        int a = rng.below(4), b = rng.below(4);
        auto j = join(test::cross_polytope_sphere(a, &rng), test::cross_polytope_sphere(b, &rng));
        auto h = reduced_homology(j);
        if (!torsion_free(h) || reduced_betti(h) != std::map<int, long>{{a + b + 1, 1}}) {
          detail = "join instance " + std::to_string(i);
          return false;
        }
      }
    }
    // T-operation homology shift
    {
      test::Rng rng(577215);
      int done = 0;
      while (done < 100) {
        auto g = test::random_digraph(rng, 6, 7);
        int t = -1, u = -1;
        for (int v = 0; v < g.n_vertices && t < 0; ++v) {
          bool source = indegree(g, v) == 0 && outdegree(g, v) > 0;
          bool sink = outdegree(g, v) == 0 && indegree(g, v) > 0;
          if (!source && !sink) continue;
          for (int w = 0; w < g.n_vertices && t < 0; ++w) {
            if (w == v) continue;
            auto added = source ? std::make_pair(w, v) : std::make_pair(v, w);
            if (std::find(g.edges.begin(), g.edges.end(), added) == g.edges.end()) {
              t = v;
              u = w;
            }
          }
        }
        if (t < 0) continue;
        auto before = reduced_betti(reduced_homology(multipath_complex(g)));
        auto after = reduced_betti(reduced_homology(multipath_complex(t_operation(g, t, u))));
        std::map<int, long> shifted;
        for (const auto& [d, b] : before) shifted[d + 1] = b;
        if (after != shifted) {
          detail = "t-operation instance " + std::to_string(done);
          return false;
        }
        ++done;
      }
    }
    // enumeration vs the power set on <= 12-edge graphs
    {
      test::Rng rng(662607);
      for (int i = 0; i < 110; ++i) {
        auto g = i % 2 ? test::random_digraph(rng, 7, 12) : test::random_dag(rng, 7, 12);
        PathPoset brute;
        int m = g.n_edges();
        for (int mask = 0; mask < (1 << m); ++mask) {
          std::vector<int> ids;
          for (int e = 0; e < m; ++e)
            if (mask & (1 << e)) ids.push_back(e);
          if (is_multipath(g, ids)) brute.multipaths.push_back(std::move(ids));
        }
        std::sort(brute.multipaths.begin(), brute.multipaths.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                    if (a.size() != b.size()) return a.size() < b.size();
                    return a < b;
                  });
        if (enumerate_multipaths(g) != brute) {
          detail = "enumeration instance " + std::to_string(i);
          return false;
        }
      }
    }
    // SNF divisibility chain against the dense reference
    {
      test::Rng rng(301029);
      for (int i = 0; i < 110; ++i) {
        int rows = 1 + rng.below(7), cols = 1 + rng.below(7);
        std::vector<std::vector<mpz_class>> d(static_cast<std::size_t>(rows),
                                              std::vector<mpz_class>(static_cast<std::size_t>(cols)));
        SparseIntMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c)
            if (rng.next() % 3 == 0) {
              int v = rng.below(19) - 9;
              d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
              if (v != 0) m.set(r, c, v);
            }
        auto s = smith_normal_form(std::move(m));
        if (s.invariant_factors != reference::smith_normal_form_dense(d).invariant_factors) {
          detail = "snf instance " + std::to_string(i);
          return false;
        }
        for (std::size_t k = 0; k < s.invariant_factors.size(); ++k) {
          if (s.invariant_factors[k] <= 0 ||
              (k > 0 && s.invariant_factors[k] % s.invariant_factors[k - 1] != 0)) {
            detail = "divisibility instance " + std::to_string(i);
            return false;
          }
        }
      }
    }
    return true;
  });

  std::printf("%s\n", failures == 0 ? "acceptance: ALL PASS" : "acceptance: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
