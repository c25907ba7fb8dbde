#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "mpx/homology.hpp"
#include "mpx/multipath.hpp"
#include "mpx/simplicial.hpp"

using namespace mpx;

TEST_CASE("from_facets closes downward") {
  auto x = SimplicialComplex::from_facets({{0, 1, 2}});
  CHECK(x.f_vector() == std::vector<long>{3, 3, 1});
  CHECK(x.dim() == 2);
  CHECK(x.euler_characteristic() == 1);
  CHECK(x.has_face({0, 2}));
  CHECK_FALSE(x.has_face({3}));
  // dominated facets are absorbed
  auto y = SimplicialComplex::from_facets({{0, 1, 2}, {1, 2}});
  CHECK(y == x);
  CHECK(y.facets() == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("empty and vertex-only complexes") {
  SimplicialComplex empty;
  CHECK(empty.empty());
  CHECK(empty.dim() == -1);
  auto pts = SimplicialComplex::from_facets({{0}, {1}, {2}});
  CHECK(pts.dim() == 0);
  CHECK(pts.euler_characteristic() == 3);
  CHECK(pts.facets().size() == 3);
}

TEST_CASE("face_index is the lexicographic position") {
  auto x = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  CHECK(x.face_index({0, 1}) == 0);
  CHECK(x.face_index({0, 2}) == 1);
  CHECK(x.face_index({1, 2}) == 2);
  CHECK(x.face_index({0, 1, 2}) == -1);
}

TEST_CASE("matching complex") {
  // path on 4 vertices: edges 01, 12, 23; matchings: singletons and {01, 23}
  auto m = matching_complex(make_undirected(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(m.f_vector() == std::vector<long>{3, 1});
  // triangle: three disjoint points
  auto t = matching_complex(make_undirected(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(t.f_vector() == std::vector<long>{3});
}

TEST_CASE("join and suspension") {
  auto pt = SimplicialComplex::from_facets({{0}});
  auto s0 = SimplicialComplex::from_facets({{0}, {1}});
  auto seg = join(pt, pt);
  CHECK(seg.f_vector() == std::vector<long>{2, 1});
  // S^0 * S^0 is the hollow square
  auto square = join(s0, s0);
  CHECK(square.f_vector() == std::vector<long>{4, 4});
  // suspension of S^0 is the same hollow square
  CHECK(are_isomorphic(suspension(s0), square).has_value());
  // the empty complex is a join identity
  SimplicialComplex empty;
  CHECK(join(empty, s0) == s0);
}

TEST_CASE("cross-polytope subcomplexes of the bidirectional line") {
  for (int n = 1; n <= 8; ++n) {
    auto x = multipath_complex(gen_family(Family::BL, n));
    auto prime = cross_polytope_subcomplex(CrossPolytopeVariant::PRIME, n);
    CHECK(is_subcomplex(prime, x));
    auto h = reduced_homology(prime);
    int d = (n - 1) / 2;
    for (const auto& g : h.groups) {
      CHECK(g.torsion.empty());
      CHECK(g.betti == (g.dim == d ? 1 : 0));
    }
    // same dimension as the model sphere (padded to the same vertex count)
    CHECK(are_isomorphic(prime, test::cross_polytope_sphere(d, nullptr, 2 * n)).has_value());
  }
  for (int n : {4, 8}) {
    auto x = multipath_complex(gen_family(Family::BL, n));
    auto dp = cross_polytope_subcomplex(CrossPolytopeVariant::DOUBLE_PRIME, n);
    CHECK(is_subcomplex(dp, x));
    CHECK(
        are_isomorphic(dp, test::cross_polytope_sphere(n / 2 - 1, nullptr, 2 * n)).has_value());
  }
  CHECK_THROWS_AS(cross_polytope_subcomplex(CrossPolytopeVariant::DOUBLE_PRIME, 6), Error);
}

TEST_CASE("is_subcomplex") {
  auto x = test::solid_simplex(3);
  CHECK(is_subcomplex(test::simplex_boundary(3), x));
  CHECK_FALSE(is_subcomplex(x, test::simplex_boundary(3)));
}

TEST_CASE("isomorphism finds relabelings") {
  test::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    auto x = test::random_complex(rng, 7, 5);
    if (x.empty()) continue;
    // apply a random vertex permutation
    int n = x.n_vertices();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = n - 1; k > 0; --k)
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(rng.below(k + 1))]);
    std::vector<std::vector<int>> facets;
    for (auto f : x.facets()) {
      for (int& v : f) v = perm[static_cast<std::size_t>(v)];
      facets.push_back(std::move(f));
    }
    auto y = SimplicialComplex::from_facets(std::move(facets), n);
    auto mapping = are_isomorphic(x, y);
    REQUIRE(mapping.has_value());
    // the returned mapping really carries faces to faces, bijectively
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v : *mapping) {
      REQUIRE(v >= 0);
      REQUIRE(v < n);
      CHECK(!hit[static_cast<std::size_t>(v)]);
      hit[static_cast<std::size_t>(v)] = 1;
    }
    for (int d = 0; d <= x.dim(); ++d)
      for (auto f : x.faces(d)) {
        for (int& v : f) v = (*mapping)[static_cast<std::size_t>(v)];
        std::sort(f.begin(), f.end());
        CHECK(y.has_face(f));
      }
  }
}

TEST_CASE("isomorphism rejects different complexes") {
  // same f-vector (4 vertices, 3 edges): a path vs a triangle with a point
  auto path = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}}, 4);
  auto tri = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}, {3}}, 4);
  CHECK(path.f_vector() == tri.f_vector());
  CHECK_FALSE(are_isomorphic(path, tri).has_value());
  CHECK_FALSE(are_isomorphic(test::solid_simplex(2), test::simplex_boundary(2)).has_value());
}

TEST_CASE("isomorphism budget") {
  // two large discrete sets: every bijection works, so this succeeds fast;
  // shrink the budget to force the error path instead
  auto a = test::cross_polytope_sphere(4);
  try {
    (void)are_isomorphic(a, a, 3);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("complex json round trip uses facets") {
  auto x = multipath_complex(gen_family(Family::BP, 3));
  nlohmann::json j = x;
  CHECK(j.contains("facets"));
  SimplicialComplex back = j;
  CHECK(back == x);
}
