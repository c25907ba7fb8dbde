// Compares the OpenMP kernels against the serial reference paths:
// parallel multipath enumeration vs. serial, and sparse parallel homology
// vs. sparse serial and the dense serial baseline.
#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "mpx/digraph.hpp"
#include "mpx/homology.hpp"
#include "mpx/multipath.hpp"

namespace {

template <class F>
double time_of(F&& f, int repeat) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-parallel benchmark"};
  std::string family_name = "BP";
  int n = 7;
  int repeat = 3;
  bool dense = false;
  app.add_option("--family", family_name, "graph family (default BP)");
  app.add_option("--n", n, "family index (default 7)");
  app.add_option("--repeat", repeat, "repetitions; best time is reported");
  app.add_flag("--dense", dense, "also run the dense serial homology baseline");
  CLI11_PARSE(app, argc, argv);

  auto fam = mpx::parse_family(family_name);
  if (!fam) {
    std::fprintf(stderr, "unknown family: %s\n", family_name.c_str());
    return 2;
  }
  auto g = mpx::gen_family(*fam, n);
  std::printf("%s_%d: %d vertices, %d edges\n", family_name.c_str(), n, g.n_vertices, g.n_edges());

  mpx::EnumerationOptions serial_enum{.parallel = false};
  mpx::EnumerationOptions parallel_enum{.parallel = true};
  auto x = mpx::multipath_complex(g);
  std::printf("complex: %zu faces, dim %d\n", x.total_faces(), x.dim());

  double t_enum_s = time_of([&] { mpx::enumerate_multipaths(g, serial_enum); }, repeat);
  double t_enum_p = time_of([&] { mpx::enumerate_multipaths(g, parallel_enum); }, repeat);
  std::printf("enumeration  serial %.4fs  parallel %.4fs  speedup %.2fx\n", t_enum_s, t_enum_p,
              t_enum_s / t_enum_p);

  double t_hom_s = time_of([&] { mpx::reduced_homology(x, {.threads = 1}); }, repeat);
  double t_hom_p = time_of([&] { mpx::reduced_homology(x, {.threads = 0}); }, repeat);
  std::printf("homology     serial %.4fs  parallel %.4fs  speedup %.2fx\n", t_hom_s, t_hom_p,
              t_hom_s / t_hom_p);

  if (dense) {
    double t_dense = time_of([&] { mpx::reference::reduced_homology_dense(x); }, repeat);
    std::printf("homology     dense reference %.4fs\n", t_dense);
  }
  return 0;
}
