#include <sstream>

#include "doctest.h"
#include "dcollapse/collapse.hpp"
#include "dcollapse/errors.hpp"
#include "dcollapse/io.hpp"
#include "dcollapse/kernels.hpp"
#include "dcollapse/scripts.hpp"
#include "test_util.hpp"

using namespace dcollapse;

TEST_CASE("d-collapsible faces") {
  Complex tet = testing::tetrahedron();
  CHECK(is_d_collapsible_face(tet, Face{1, 2}, 2));
  CHECK_FALSE(is_d_collapsible_face(tet, Face{1, 2, 3}, 2));
  CHECK_FALSE(is_d_collapsible_face(testing::boundary_simplex(4), Face{1, 2}, 2));
  CHECK_THROWS_AS(is_d_collapsible_face(tet, Face{1, 5}, 2), DomainError);
}

TEST_CASE("elementary collapse") {
  Complex tet = testing::tetrahedron();
  CHECK(elementary_collapse(tet, Face{1, 2}, 2).size() == 11);
  Complex hollow = testing::hollow_triangle();
  Complex h2 = elementary_collapse(hollow, Face{1, 2}, 2);
  CHECK(h2.size() == 5);
  CHECK_FALSE(h2.contains(Face{1, 2}));
  CHECK(elementary_collapse(tet, Face{1}, 2) == from_generators({Face{2, 3, 4}}));
  CHECK_THROWS_AS(elementary_collapse(testing::boundary_simplex(4), Face{1, 2}, 2), CollapseError);
}

TEST_CASE("collapsible face listing") {
  Complex k = elementary_collapse(testing::tetrahedron(), Face{1, 2}, 2);
  std::vector<Face> edges;
  for (const Face& f : collapsible_faces(k, 2))
    if (f.size() == 2) edges.push_back(f);
  CHECK(edges == std::vector<Face>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(collapsible_faces(testing::boundary_simplex(4), 2).empty());
  CHECK(collapsible_faces(Complex{}, 2).empty());
}

TEST_CASE("parallel scan agrees with the serial reference") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Workspace ws(testing::random_complex(seed, 8, 0.5));
    for (int d = 1; d <= 4; ++d)
      CHECK(kernels::collapsible_ids_serial(ws, d) == kernels::collapsible_ids_parallel(ws, d));
  }
}

TEST_CASE("greedy decisions") {
  Verdict v = greedy_decide(testing::tetrahedron(), 2);
  CHECK(v.answer == Answer::yes);
  CHECK(check_certificate(testing::tetrahedron(), *v.certificate).ok);
  Verdict h = greedy_decide(testing::hollow_triangle(), 1);
  CHECK(h.answer == Answer::no);
  CHECK(h.exact);
  CHECK(*h.stuck_witness == testing::hollow_triangle());
  GreedyOptions random{GreedyOrder::seeded_random, 5, std::nullopt};
  CHECK(greedy_decide(testing::tetrahedron(), 2, random).answer == Answer::yes);
}

TEST_CASE("exhaustive decisions") {
  CHECK(decide(testing::boundary_simplex(4), 2).answer == Answer::no);
  Verdict v = decide(testing::boundary_simplex(4), 3);
  CHECK(v.answer == Answer::yes);
  CHECK(check_certificate(testing::boundary_simplex(4), *v.certificate).ok);
  CHECK(decide(testing::boundary_simplex(5), 2).answer == Answer::no);
  CHECK(decide(testing::boundary_simplex(5), 3).answer == Answer::no);
  CHECK(decide(testing::boundary_simplex(5), 4).answer == Answer::yes);
  CHECK(decide(Complex{}, 1).answer == Answer::yes);

  SearchOptions tiny;
  tiny.budget = 0;
  Verdict u = decide(testing::boundary_simplex(5), 3, tiny);
  CHECK(u.answer == Answer::unknown);
}

TEST_CASE("greedy agrees with search for d <= 2 and search is order invariant") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Complex K = testing::random_complex(seed, 7, 0.4);
    for (int d = 1; d <= 2; ++d) {
      Verdict exact = decide(K, d);
      REQUIRE(exact.answer != Answer::unknown);
      for (std::uint64_t s = 0; s < 3; ++s) {
        Verdict g = greedy_decide(K, d, {GreedyOrder::seeded_random, s, std::nullopt});
        CHECK(g.answer == exact.answer);
        SearchOptions shuffled;
        shuffled.shuffle_seed = s;
        CHECK(decide(K, d, shuffled).answer == exact.answer);
      }
    }
  }
}

TEST_CASE("certificate checking") {
  Complex tet = testing::tetrahedron();
  Certificate good{2, {{Face{1, 2}, Face{1, 2, 3, 4}}, {Face{1, 3}, Face{1, 3, 4}}, {Face{2, 3}, std::nullopt}}};
  for (VertexId v : {1u, 2u, 3u, 4u}) good.append(Face{v});
  CheckResult g = check_certificate(tet, good);
  CHECK_MESSAGE(g.ok, g.message);

  Certificate bad{2, {{Face{3, 4}, std::nullopt}}};
  CheckResult b = check_certificate(testing::boundary_simplex(4), bad);
  CHECK_FALSE(b.ok);
  CHECK(b.failed_step == std::size_t{0});
  CHECK(b.cofaces_found.size() == 2);

  CHECK_FALSE(check_certificate(tet, Certificate{2, {}}).ok);
  Certificate wrong_tau{2, {{Face{1, 2}, Face{1, 2, 3}}}};
  CHECK_FALSE(check_certificate(tet, wrong_tau).ok);
}

TEST_CASE("certificate text round trip") {
  std::istringstream cx("1 2 3 4\n");
  Complex tet = read_cplx(cx).complex;
  Verdict v = greedy_decide(tet, 2);
  std::ostringstream out;
  write_certificate(out, *v.certificate, tet);
  std::istringstream in(out.str());
  Certificate back = read_certificate(in, tet);
  CHECK(back.d == 2);
  CHECK(back.steps == v.certificate->steps);
}

TEST_CASE("superface script replays to the plain collapse") {
  Complex tet = testing::tetrahedron();
  CHECK(script_superface_collapse(tet, Face{1}, Face{1}, 2).steps.empty());
  Certificate frag = script_superface_collapse(tet, Face{1}, Face{1, 2}, 2);
  Certificate whole{2, {{Face{1, 2}, std::nullopt}}};
  whole.append(frag);
  ReplayResult r = replay_certificate(tet, whole);
  CHECK(r.steps_ok);
  CHECK(r.residue == elementary_collapse(tet, Face{1}, 2));
}

TEST_CASE("normalization") {
  Complex tri = from_generators({Face{1, 2, 3}});
  Certificate c{2, {{Face{1}, std::nullopt}, {Face{2, 3}, std::nullopt}, {Face{2}, std::nullopt}, {Face{3}, std::nullopt}}};
  REQUIRE(check_certificate(tri, c).ok);
  CHECK_FALSE(is_normal_form(tri, c));
  NormalizedCertificate n = normalize_certificate(tri, c);
  CHECK(check_certificate(tri, n.certificate).ok);
  CHECK(is_normal_form(tri, n.certificate));
  CHECK(n.certificate.steps.front().sigma.size() == 2);

  NormalizedCertificate again = normalize_certificate(tri, n.certificate);
  CHECK(is_normal_form(tri, again.certificate));
  CHECK(normalize_certificate(Complex{}, Certificate{2, {}}).certificate.steps.empty());
}

TEST_CASE("graph collapse") {
  // Two triangles sharing {2,3}; L is the far edge {3,4} with its vertices.
  Complex K = from_generators({Face{1, 2, 3}, Face{2, 3, 4}});
  Complex L = from_generators({Face{3, 4}});
  Certificate c = script_graph_collapse(K, L, Face{1, 2}, 2);
  ReplayResult r = replay_certificate(K, c);
  CHECK(r.steps_ok);
  CHECK(r.residue == L);

  Complex apart = from_generators({Face{1, 2, 3}, Face{4, 5, 6}});
  CHECK_THROWS_AS(script_graph_collapse(apart, Complex{}, Face{1, 2}, 2), ScriptError);
}

TEST_CASE("graph collapse on an annulus-like strip") {
  // A strip of four triangles closed into a ring, with one boundary edge of
  // the ring kept in L; the free edge {1,2} starts the collapse.
  Complex K = from_generators({Face{1, 2, 3}, Face{2, 3, 4}, Face{3, 4, 5}, Face{4, 5, 6}, Face{5, 6, 7}});
  Complex L = from_generators({Face{6, 7}, Face{1, 3}});
  auto cond = check_graph_conditions(K, L, Face{1, 2}, 2);
  CHECK_MESSAGE(cond.ok, cond.violation);
  Certificate c = script_graph_collapse(K, L, Face{1, 2}, 2);
  ReplayResult r = replay_certificate(K, c);
  CHECK(r.steps_ok);
  CHECK(r.residue == L);
}

TEST_CASE("subcomplex collapse") {
  Complex K = from_generators({Face{1, 2, 3}, Face{3, 4}});
  Complex Ksub = from_generators({Face{1, 2, 3}});
  Complex Lsub = from_generators({Face{3}});
  Certificate inner = decide(Ksub, 2).certificate.value();
  // The decider collapses everything; rebuild a collapse that keeps {3}.
  Certificate keep{2, {{Face{1, 2}, std::nullopt}, {Face{1, 3}, std::nullopt}, {Face{2, 3}, std::nullopt}, {Face{1}, std::nullopt}, {Face{2}, std::nullopt}}};
  CHECK_THROWS_AS(script_subcomplex_collapse(K, K, Ksub, keep), ScriptError);
  Complex L2 = from_generators({Face{3}});
  Certificate out = script_subcomplex_collapse(K, Ksub, L2, keep);
  ReplayResult r = replay_certificate(K, out);
  CHECK(r.residue == from_generators({Face{3, 4}}));
  CHECK(script_subcomplex_collapse(Ksub, Ksub, Complex{}, inner).steps == inner.steps);

  // A 2-face coface outside K'.
  Complex big = from_generators({Face{1, 2, 3}});
  Complex edge = from_generators({Face{1, 2}});
  Certificate e{2, {{Face{1, 2}, std::nullopt}, {Face{1}, std::nullopt}, {Face{2}, std::nullopt}}};
  CHECK_THROWS_AS(script_subcomplex_collapse(big, edge, Complex{}, e), ScriptError);
}
