#include <map>

#include "doctest.h"
#include "dcollapse/collapse.hpp"
#include "dcollapse/errors.hpp"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/scripts.hpp"
#include "test_util.hpp"

using namespace dcollapse;

TEST_CASE("cone over the cross-polytope boundary") {
  Complex j2 = build_J(2);
  CHECK(j2.vertices().size() == 5);
  CHECK(j2.maximal_faces().size() == 4);
  CHECK(j2.size() == 17);
  CHECK(build_J(3).size() == 53);
  CHECK_THROWS_AS(build_J(1), DomainError);
}

TEST_CASE("chain triangulation keeps the base simplex") {
  for (int d : {2, 3}) {
    HComplex h = build_H(d);
    CHECK(h.complex.dimension() == d);
    std::vector<VertexId> theta;
    for (int i = 0; i <= d; ++i) theta.push_back(static_cast<VertexId>(i));
    CHECK(h.complex.contains(Face(theta)));
    CHECK(testing::is_closed(h.complex));
  }
}

TEST_CASE("quotient has ρ as its only collapsible face") {
  for (int d : {2, 3}) {
    ConnectorBlueprint c = quotient_C(d);
    CHECK(collapsible_faces(c.complex, d) == std::vector<Face>{c.rho});
  }
}

TEST_CASE("connector collapsible faces and certificate") {
  for (auto [d, t] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}}) {
    CAPTURE(d);
    CAPTURE(t);
    const ConnectorBlueprint& bp = connector_blueprint(d, t);
    CHECK(bp.zeta.size() == static_cast<std::size_t>(t));
    CHECK(collapsible_faces(bp.complex, d) == std::vector<Face>{bp.rho});
    const Certificate& cert = connector_certificate(d, t);
    ReplayResult r = replay_certificate(bp.complex, cert);
    CHECK(r.steps_ok);
    CHECK(r.residue == connector_residue(bp));
  }
}

TEST_CASE("connector face counts grow linearly") {
  for (int d : {3, 4}) {
    std::size_t prev = connector_blueprint(d, 1).complex.size();
    std::optional<std::size_t> step;
    for (int t = 2; t <= 6; ++t) {
      std::size_t now = connector_blueprint(d, t).complex.size();
      if (step) CHECK(now - prev == *step);
      step = now - prev;
      prev = now;
    }
  }
}

TEST_CASE("bad complex") {
  BadComplex B = build_bad_complex(3);
  CHECK(B.alpha.size() == 15);
  std::vector<Face> expect = B.lambda;
  expect.push_back(B.sigma_B);
  std::sort(expect.begin(), expect.end());
  CHECK(collapsible_faces(B.complex, 3) == expect);
  CHECK(collapsible_faces(elementary_collapse(B.complex, B.sigma_B, 3), 3).empty());
  CheckResult r = check_certificate(B.complex, bad_complex_certificate(B));
  CHECK_MESSAGE(r.ok, r.message);
  CHECK_THROWS_AS(build_bad_complex(2), DomainError);
}

TEST_CASE("bad complex at d = 4") {
  BadComplex B = build_bad_complex(4);
  CHECK(B.alpha.size() == 64);
  CheckResult r = check_certificate(B.complex, bad_complex_certificate(B));
  CHECK_MESSAGE(r.ok, r.message);
}

namespace {

void check_gadget(const SimplicialGadget& g) {
  const int d = g.d;
  for (const Face& iota : g.initial) {
    for (const Face& base : g.bases.at(iota)) {
      Complex K = g.complex;
      for (const Face& l : g.liberation_of(base)) K = elementary_collapse(K, l, d);
      // (i) ι maximal after the liberation faces go.
      CHECK(maximal_cofaces(K, iota) == std::vector<Face>{iota});
      ComplexBuilder b;
      for (const Face& f : K.faces())
        if (f != iota) b.add_face(f);
      Complex rest = std::move(b).build();
      // (ii) and (iii)
      std::optional<Face> other;
      for (const Face& o : g.initial)
        if (o != iota) other = o;
      Certificate to_empty = gadget_teardown(g, base, std::nullopt);
      CHECK(check_certificate(rest, to_empty).ok);
      if (other) {
        ReplayResult r = replay_certificate(rest, gadget_teardown(g, base, other));
        CHECK(r.steps_ok);
        CHECK(r.residue == full_simplex(*other));
      }
    }
  }
}

}  // namespace

TEST_CASE("simplicial gadgets at d = 4") {
  SimplicialGadget v = build_variable_gadget(4);
  CHECK(v.initial.size() == 2);
  CHECK(v.liberation.size() == 8);
  CHECK(v.attaching.size() == 60);
  SimplicialGadget c = build_clause_gadget(4);
  CHECK(c.liberation.size() == 3);
  CHECK(c.attaching.size() == 1);
  SimplicialGadget m = build_merge_gadget(4);
  CHECK(m.liberation.size() == 2);
  CHECK(m.attaching.size() == 12);
  CHECK(m.liberation == std::vector<Face>{m.at("lambda1"), m.at("lambda2")});
  for (const auto* g : {&v, &c, &m}) check_gadget(*g);
}

TEST_CASE("connector face counts are frozen") {
  // Regression values produced by this construction.
  const std::map<std::pair<int, int>, std::size_t> expected{
      {{2, 0}, 51},  {{2, 1}, 87},   {{2, 2}, 141},  {{3, 0}, 445},  {{3, 1}, 557},
      {{3, 2}, 725}, {{4, 0}, 4959}, {{4, 1}, 5259}, {{4, 2}, 5709}};
  for (const auto& [dt, faces] : expected) {
    CAPTURE(dt.first);
    CAPTURE(dt.second);
    CHECK(connector_blueprint(dt.first, dt.second).complex.size() == faces);
  }
}

TEST_CASE("glued connector keeps σ as its only collapsible face") {
  ComplexBuilder hb;
  for (int i = 1; i <= 9; ++i) hb.name_vertex(static_cast<VertexId>(i), "h" + std::to_string(i));
  hb.add_generator(Face{1, 2});
  hb.add_generator(Face{2, 3});
  hb.add_generator(Face{4, 5, 6});
  hb.add_generator(Face{7, 8, 9});
  Complex host = std::move(hb).build();
  for (int t : {0, 1, 2}) {
    CAPTURE(t);
    std::vector<Face> gamma;
    if (t >= 1) gamma.push_back(Face{4, 5});
    if (t >= 2) gamma.push_back(Face{7, 8});
    GluedConnector g = glue_connector(host, 2, Face{1, 2}, gamma);
    CHECK(g.complex.size() <= host.size() + connector_blueprint(2, t).complex.size());
    for (const Face& f : host.faces()) CHECK(g.complex.contains(f));
    CHECK(g.complex.vertex_name(1) == "h1");
    ComplexBuilder ib;
    ib.add_faces(g.image);
    CHECK(collapsible_faces(std::move(ib).build(), 2) == std::vector<Face>{Face{1, 2}});
    // σ is maximal in the host, so the union collapses back onto host \ {σ}.
    Certificate c = map_certificate(connector_certificate(2, t), g.vertex_map);
    ReplayResult r = replay_certificate(g.complex, c);
    CHECK(r.steps_ok);
    ComplexBuilder rest;
    for (const Face& f : host.faces())
      if (f != Face{1, 2}) rest.add_face(f);
    CHECK(r.residue == std::move(rest).build());
  }
  CHECK_THROWS_AS(glue_connector(host, 2, Face{1, 2}, {Face{1, 2}}), DomainError);
  CHECK_THROWS_AS(glue_connector(host, 2, Face{4, 5, 6}, {}), DomainError);
}

TEST_CASE("full simplex teardown keeps the requested face") {
  Complex K = full_simplex(Face{0, 1, 2, 3, 4});
  ReplayResult r = replay_certificate(K, full_simplex_teardown(Face{0, 1, 2, 3, 4}, Face{1, 3}, 3));
  CHECK(r.steps_ok);
  CHECK(r.residue == full_simplex(Face{1, 3}));
  CHECK(check_certificate(K, full_simplex_teardown(Face{0, 1, 2, 3, 4}, std::nullopt, 3)).ok);
}

TEST_CASE("connector at d = 5") {
  const ConnectorBlueprint& bp = connector_blueprint(5, 1);
  CHECK(collapsible_faces(bp.complex, 5) == std::vector<Face>{bp.rho});
  ReplayResult r = replay_certificate(bp.complex, connector_certificate(5, 1));
  CHECK(r.steps_ok);
  CHECK(r.residue == connector_residue(bp));
}
