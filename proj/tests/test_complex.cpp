#include <sstream>

#include "doctest.h"
#include "dcollapse/complex.hpp"
#include "dcollapse/errors.hpp"
#include "dcollapse/io.hpp"
#include "test_util.hpp"

using namespace dcollapse;

TEST_CASE("closure materializes every nonempty subset") {
  CHECK(from_generators({Face{1, 2, 3, 4}}).size() == 15);
  CHECK(from_generators({}).empty());
  Complex hollow = testing::hollow_triangle();
  CHECK(hollow.size() == 6);
  CHECK(hollow.maximal_faces().size() == 3);
  CHECK_THROWS_AS(Face::from_unsorted({1, 1, 2}), InputError);
  CHECK(testing::is_closed(from_generators({Face{1, 2, 3}, Face{3, 4}, Face{5}})));
}

TEST_CASE("unique maximal coface, interval and star") {
  Complex tet = testing::tetrahedron();
  Complex sphere = testing::boundary_simplex(4);
  Complex hollow = testing::hollow_triangle();
  CHECK(unique_max_coface(tet, Face{1, 2}) == Face{1, 2, 3, 4});
  CHECK_FALSE(unique_max_coface(sphere, Face{1, 2}).has_value());
  CHECK(unique_max_coface(hollow, Face{1, 2}) == Face{1, 2});
  CHECK_THROWS_AS(unique_max_coface(hollow, Face{1, 4}), DomainError);

  CHECK(interval(tet, Face{1, 2}) == std::vector<Face>{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 4}});
  CHECK(interval(hollow, Face{1, 2}) == std::vector<Face>{{1, 2}});
  CHECK(interval(from_generators({Face{1, 2, 3}}), Face{1}).size() == 4);
  CHECK_THROWS_AS(interval(sphere, Face{1, 2}), DomainError);

  CHECK(star(sphere, Face{1, 2}) == std::vector<Face>{{1, 2}, {1, 2, 3}, {1, 2, 4}});
  CHECK(star(from_generators({Face{1, 2, 3}}), Face{1, 2, 3}) == std::vector<Face>{{1, 2, 3}});
  CHECK(star(hollow, Face{1}) == std::vector<Face>{{1}, {1, 2}, {1, 3}});
}

TEST_CASE("interval is contained in star, with equality iff tau exists") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Complex K = testing::random_complex(seed, 6, 0.4);
    for (const Face& f : K.faces()) {
      auto st = star(K, f);
      if (auto tau = unique_max_coface(K, f)) {
        CHECK(interval(K, f) == st);
      } else {
        CHECK(st.size() > 1);
      }
    }
  }
}

TEST_CASE("skeleton distances") {
  Complex path = from_generators({Face{1, 2}, Face{2, 3}});
  CHECK(skeleton_distance(path, 1, 3) == 2);
  CHECK(skeleton_distance(path, 1, 1) == 0);
  Complex two = from_generators({Face{1, 2}, Face{3, 4}});
  CHECK(skeleton_distance(two, 1, 4) == kUnreachable);
  CHECK_THROWS_AS(skeleton_distance(two, 1, 9), DomainError);

  Complex p5 = from_generators({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{4, 5}});
  CHECK(are_distant(p5, Face{1}, Face{5}));
  CHECK_FALSE(are_distant(p5, Face{1}, Face{3}));
  CHECK_FALSE(are_distant(p5, Face{1, 2}, Face{2, 3}));
}

TEST_CASE("G_k graph") {
  Complex glued = from_generators({Face{1, 2, 3}, Face{2, 3, 4}});
  auto g = g_k_graph(glued.faces(), 2);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  Complex apart = from_generators({Face{1, 2, 3}, Face{4, 5, 6}});
  CHECK(g_k_graph(apart.faces(), 2).edges.empty());
  std::vector<Face> bare{{1, 2, 3}, {2, 3, 4}};
  auto h = g_k_graph(bare, 2);
  CHECK(h.nodes.size() == 2);
  CHECK(h.edges.empty());
}

TEST_CASE("G_d connectivity matches the facet-ridge dual graph") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Complex K = testing::random_pure_complex(seed, 7, 2, 5);
    int k = K.dimension();
    CHECK(g_k_graph(K.faces(), k).connected() == testing::dual_graph_connected(K));
  }
}

TEST_CASE("gluing") {
  Complex two = from_generators({Face{1, 2}, Face{3, 4}});
  FacePairing p;
  p.pairs.push_back(FacePairing::sorted_order(Face{2}, Face{3}));
  Complex path = glue(two, p);
  CHECK(path.size() == 5);
  CHECK(path.maximal_faces().size() == 2);

  FacePairing same;
  same.pairs.push_back(FacePairing::sorted_order(Face{1, 2}, Face{1, 2}));
  CHECK(glue(two, same) == two);

  Complex tri2 = from_generators({Face{1, 2, 3}, Face{4, 5, 6}});
  FacePairing edge;
  edge.pairs.push_back(FacePairing::sorted_order(Face{2, 3}, Face{4, 5}));
  auto f = glue(tri2, edge).f_vector();
  CHECK(f == std::vector<std::size_t>{4, 5, 2});

  FacePairing bad;
  bad.pairs.push_back(FacePairing::sorted_order(Face{1}, Face{2}));
  CHECK_THROWS_AS(glue(two, bad), GluingError);
}

TEST_CASE("glue never increases the face count") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Complex K = testing::random_complex(seed, 7, 0.35);
    auto faces = K.faces();
    FacePairing p;
    for (std::size_t i = 0; i + 1 < faces.size(); ++i)
      if (faces[i].size() == faces.back().size()) {
        p.pairs.push_back(FacePairing::sorted_order(faces[i], faces.back()));
        break;
      }
    std::optional<Complex> g;
    try {
      g = glue(K, p);
    } catch (const GluingError&) {
      continue;
    }
    CHECK(g->size() <= K.size());
  }
}

TEST_CASE("disjoint union and suspension") {
  Complex e = from_generators({Face{1, 2}});
  auto u = disjoint_union(e, e);
  CHECK(u.complex.size() == 6);
  CHECK(disjoint_union(Complex{}, e).complex.size() == 3);

  Complex v = from_generators({Face{1}});
  CHECK(suspension(v).size() == 5);
  CHECK(suspension(Complex{}).size() == 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Complex K = testing::random_complex(seed, 6, 0.5);
    Complex S = suspension(K);
    CHECK(S.size() == 3 * K.size() + 2);
    CHECK(S.maximal_faces().size() == 2 * K.maximal_faces().size());
  }
}

TEST_CASE("canonical digest") {
  Complex a = from_generators({Face{1, 2, 3}, Face{3, 4}});
  Complex b = from_generators({Face{3, 4}, Face{1, 2, 3}});
  CHECK(canonical_digest(a) == canonical_digest(b));
  Complex c = from_generators({Face{1, 2, 3}, Face{4}});
  CHECK_FALSE(canonical_digest(a) == canonical_digest(c));
  CHECK(canonical_digest(Complex{}) == Digest{});
}

TEST_CASE(".cplx round trip") {
  std::istringstream in("# a comment\n# @role x y\nx y z\nz w\n");
  CplxDocument doc = read_cplx(in);
  CHECK(doc.complex.size() == 9);
  CHECK(doc.header("role") == std::string("x y"));
  CHECK(doc.header_face("role") == Face{0, 1});
  std::ostringstream out;
  write_cplx(out, doc.complex, doc.headers);
  std::istringstream back(out.str());
  CplxDocument again = read_cplx(back);
  CHECK(again.complex == doc.complex);
  CHECK(testing::same_labelled(again.complex, doc.complex));

  std::istringstream dup("a b a\n");
  CHECK_THROWS_AS(read_cplx(dup), InputError);
}
