#include "mpx/homology.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

namespace mpx {

const HomologyGroup* HomologyResult::group(int dim) const {
  for (const auto& g : groups)
    if (g.dim == dim) return &g;
  return nullptr;
}

long HomologyResult::betti(int dim) const {
  const auto* g = group(dim);
  return g ? g->betti : 0;
}

std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& x,
                                               bool with_augmentation) {
  std::vector<SparseIntMatrix> out;
  if (x.empty()) return out;
  int top = x.dim();
  out.reserve(static_cast<std::size_t>(top) + 1);
  {
    SparseIntMatrix aug(with_augmentation ? 1 : 0, static_cast<int>(x.n_faces(0)));
    if (with_augmentation)
      for (int j = 0; j < aug.cols(); ++j) aug.set(0, j, 1);
    out.push_back(std::move(aug));
  }
  for (int d = 1; d <= top; ++d) {
    const auto& faces = x.faces(d);
    SparseIntMatrix b(static_cast<int>(x.n_faces(d - 1)), static_cast<int>(faces.size()));
    std::vector<int> sub;
    for (std::size_t j = 0; j < faces.size(); ++j) {
      const auto& f = faces[j];
      int sign = 1;
      for (std::size_t k = 0; k < f.size(); ++k) {
        sub = f;
        sub.erase(sub.begin() + static_cast<long>(k));
        b.set(x.face_index(sub), static_cast<int>(j), sign);
        sign = -sign;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

HomologyResult homology_from_smith(const SimplicialComplex& x,
                                   const std::vector<SmithForm>& snf) {
  int top = x.dim();
  auto rank = [&](int d) { return (d >= 0 && d <= top) ? snf[static_cast<std::size_t>(d)].rank() : 0; };
  HomologyResult res;
  res.reduced = true;
  res.groups.push_back({-1, 1 - rank(0), {}});
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.dim = d;
    g.betti = x.n_faces(d) - rank(d) - rank(d + 1);
    if (d + 1 <= top) g.torsion = snf[static_cast<std::size_t>(d + 1)].torsion();
    res.groups.push_back(std::move(g));
  }
  return res;
}

}  // namespace

HomologyResult reduced_homology(const SimplicialComplex& x, const HomologyOptions& opts) {
  if (x.empty()) return HomologyResult{true, {{-1, 1, {}}}};
  auto boundaries = boundary_matrices(x);
  int top = x.dim();
  std::vector<SmithForm> snf(static_cast<std::size_t>(top) + 1);

  int threads = opts.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
  for (int d = 0; d <= top; ++d) {
    if (error) continue;
    try {
      snf[static_cast<std::size_t>(d)] = smith_normal_form(std::move(boundaries[static_cast<std::size_t>(d)]));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return homology_from_smith(x, snf);
}

HomologyResult unreduced_homology(const SimplicialComplex& x, const HomologyOptions& opts) {
  auto red = reduced_homology(x, opts);
  HomologyResult res;
  res.reduced = false;
  for (const auto& g : red.groups) {
    if (g.dim < 0) continue;
    auto h = g;
    if (h.dim == 0 && !x.empty()) ++h.betti;  // H_0 = reduced H_0 + Z
    res.groups.push_back(std::move(h));
  }
  return res;
}

std::optional<int> homological_connectivity(const HomologyResult& reduced) {
  bool seen = false;
  int first_nonzero = 0;
  for (const auto& g : reduced.groups)
    if (!g.trivial() && (!seen || g.dim < first_nonzero)) {
      first_nonzero = g.dim;
      seen = true;
    }
  if (!seen) return std::nullopt;  // all reduced groups vanish
  return first_nonzero - 1;
}

std::optional<int> homological_connectivity(const SimplicialComplex& x,
                                            const HomologyOptions& opts) {
  if (x.empty()) fail(ErrorKind::EmptyComplex, "connectivity of the empty complex");
  return homological_connectivity(reduced_homology(x, opts));
}

namespace reference {

HomologyResult reduced_homology_dense(const SimplicialComplex& x) {
  if (x.empty()) return HomologyResult{true, {{-1, 1, {}}}};
  auto boundaries = boundary_matrices(x);
  std::vector<SmithForm> snf;
  for (auto& b : boundaries) snf.push_back(smith_normal_form_dense(b.dense()));
  return homology_from_smith(x, snf);
}

}  // namespace reference

void to_json(nlohmann::json& j, const HomologyResult& h) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : h.groups) {
    if (g.trivial()) continue;
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : g.torsion) {
      if (t.fits_slong_p())
        torsion.push_back(t.get_si());
      else
        torsion.push_back(t.get_str());
    }
    groups.push_back({{"dim", g.dim}, {"betti", g.betti}, {"torsion", torsion}});
  }
  j = nlohmann::json{{"reduced", h.reduced}, {"groups", groups}};
}

void from_json(const nlohmann::json& j, HomologyResult& h) {
  h.reduced = j.at("reduced").get<bool>();
  h.groups.clear();
  for (const auto& gj : j.at("groups")) {
    HomologyGroup g;
    g.dim = gj.at("dim").get<int>();
    g.betti = gj.at("betti").get<long>();
    for (const auto& t : gj.at("torsion")) {
      if (t.is_string())
        g.torsion.emplace_back(t.get<std::string>());
      else
        g.torsion.emplace_back(t.get<long>());
    }
    h.groups.push_back(std::move(g));
  }
}

}  // namespace mpx
