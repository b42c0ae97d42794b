#include <sstream>

#include "doctest.h"
#include "dcollapse/collapse.hpp"
#include "dcollapse/errors.hpp"
#include "dcollapse/reduction.hpp"
#include "dcollapse/sat.hpp"
#include "test_util.hpp"

using namespace dcollapse;

TEST_CASE("dimacs parsing") {
  CnfFormula f = parse_dimacs_text("c a comment\np cnf 3 1\n1 2 3 0\n");
  CHECK(f.num_vars == 3);
  CHECK(f.num_clauses() == 2);
  CHECK(f.padded);
  CHECK(f.clauses[0] == f.clauses[1]);

  CnfFormula fig = parse_dimacs_text(testing::kFigureFormula);
  CHECK(fig.num_vars == 4);
  CHECK(fig.num_clauses() == 4);
  CHECK_FALSE(fig.padded);

  // A clause may span lines.
  CHECK(parse_dimacs_text("p cnf 3 2\n1 2\n3 0 -1 -2 -3 0\n").num_clauses() == 2);

  CHECK_THROWS_AS(parse_dimacs_text("p cnf 3 1\n1 1 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_text("p cnf 3 1\n1 -1 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_text("p cnf 3 1\n1 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_text("p cnf 3 1\n1 2 4 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_text("1 2 3 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_text("p cnf 3 2\n1 2 3 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_text("p cnf 3 1\n1 2 x 0\n"), InputError);
  try {
    parse_dimacs_text("p cnf 3 2\n1 2 3 0\n1 2 0\n");
    FAIL("no error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("brute-force oracle") {
  CHECK(sat_oracle(parse_dimacs_text("p cnf 3 2\n1 2 3 0\n1 2 3 0\n")));
  std::ostringstream all;
  all << "p cnf 3 8\n";
  for (int s = 0; s < 8; ++s)
    all << ((s & 1) ? -1 : 1) << ' ' << ((s & 2) ? -2 : 2) << ' ' << ((s & 4) ? -3 : 3) << " 0\n";
  CHECK_FALSE(sat_oracle(parse_dimacs_text(all.str())));
  CnfFormula fig = parse_dimacs_text(testing::kFigureFormula);
  CHECK(satisfies(fig, parse_assignment("FTTF")));
  CHECK_FALSE(satisfies(fig, parse_assignment("TTTT")));
  CnfFormula big;
  big.num_vars = 31;
  big.clauses = {{1, 2, 3}, {1, 2, 3}};
  CHECK_THROWS_AS(sat_oracle(big), BudgetError);
}

TEST_CASE("reduction structure for the figure formula") {
  ReductionOutput out = build_reduction(parse_dimacs_text(testing::kFigureFormula), 4);
  CHECK(out.variables.size() == 4);
  CHECK(out.clauses.size() == 4);
  CHECK(out.merges.size() == 3);
  int occ = 0, merge1 = 0, merge2 = 0, tidy = 0;
  for (const Connection& c : out.connections) {
    if (c.id[0] == 'O') ++occ;
    else if (c.id == "T") ++tidy;
    else if (c.id.ends_with(".1")) ++merge1;
    else ++merge2;
  }
  CHECK(occ == 8);
  CHECK(merge1 == 4);
  CHECK(merge2 == 2);
  CHECK(tidy == 1);
  // x1 occurs once positively and twice negatively.
  CHECK(out.connection("O+1").t() == 1);
  CHECK(out.connection("O-1").t() == 2);
  CHECK(out.connection("T").t() == 4 * 60 + 4 * 1 + 3 * 12);
  CHECK(out.connection("I1.1").gamma == std::vector<Face>{out.merge(2).at("lambda2")});
  CHECK(out.occurrences_of_clause(2) == std::vector<std::string>{"O-1", "O-2", "O+4"});
  CHECK_THROWS_AS(out.connection("X9"), DomainError);
  CHECK_THROWS_AS(build_reduction(parse_dimacs_text(testing::kFigureFormula), 3), DomainError);

  for (const Connection& c : out.connections)
    for (const Face& f : c.image) REQUIRE(out.complex.contains(f));
}

TEST_CASE("variable without occurrences gets empty connections") {
  ReductionOutput out = build_reduction(parse_dimacs_text("p cnf 4 2\n1 2 3 0\n-1 2 -3 0\n"), 4);
  CHECK(out.connection("O+4").t() == 0);
  CHECK(out.connection("O-4").t() == 0);
  CHECK(check_certificate(out.complex, certificate_from_assignment(out, parse_assignment("TTFF"))).ok);
}

TEST_CASE("satisfiable direction on the figure formula") {
  ReductionOutput out = build_reduction(parse_dimacs_text(testing::kFigureFormula), 4);
  Assignment a = parse_assignment("FTTF");
  Certificate cert = certificate_from_assignment(out, a);
  CheckResult r = check_certificate(out.complex, cert);
  CHECK_MESSAGE(r.ok, r.message);
  ActivationReport rep = trace_activation(out, cert);
  CHECK(rep.steps_ok);
  CHECK_MESSAGE(rep.opposite_occurrences_ok, rep.violation);
  CHECK_MESSAGE(rep.merge_needs_occurrence_ok, rep.violation);
  CHECK(rep.tidy_step < cert.size());
  CHECK_THROWS_AS(certificate_from_assignment(out, parse_assignment("TTTT")), DomainError);
  CHECK_THROWS_AS(certificate_from_assignment(out, parse_assignment("FTT")), DomainError);
}

TEST_CASE("activation status along the first phase") {
  ReductionOutput out = build_reduction(parse_dimacs_text(testing::kFigureFormula), 4);
  for (const Connection& c : out.connections) CHECK(activation_status(out, out.complex, c.id) == Activation::intact);
  CHECK(activation_status(out, Complex{}, "T") == Activation::activated);
  // x1 is FALSE: its negative side goes first.
  Certificate cert = certificate_from_assignment(out, parse_assignment("FTTF"));
  const SimplicialGadget& v1 = out.variables[0];
  std::size_t prefix = v1.liberation_of(v1.at("beta-")).size() + connector_certificate(4, out.connection("O-1").t()).size();
  Certificate head = cert;
  head.steps.resize(prefix);
  ReplayResult r = replay_certificate(out.complex, head);
  REQUIRE(r.steps_ok);
  CHECK(activation_status(out, r.residue, "O-1") == Activation::activated);
  CHECK(activation_status(out, r.residue, "O+1") == Activation::intact);
  CHECK_THROWS_AS(activation_status(out, r.residue, "nope"), DomainError);
}

TEST_CASE("padded single clause") {
  CnfFormula f = parse_dimacs_text("p cnf 3 1\n1 2 3 0\n");
  ReductionOutput out = build_reduction(f, 4);
  auto a = sat_oracle(f);
  REQUIRE(a);
  CHECK(check_certificate(out.complex, certificate_from_assignment(out, *a)).ok);
}

TEST_CASE("random satisfiable formulas") {
  int done = 0;
  for (std::uint64_t seed = 1; done < 6; ++seed) {
    CnfFormula f = testing::random_3cnf(seed, 3 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 4));
    auto a = sat_oracle(f);
    if (!a) continue;
    ReductionOutput out = build_reduction(f, 4);
    Certificate cert = certificate_from_assignment(out, *a);
    CHECK(check_certificate(out.complex, cert).ok);
    ActivationReport rep = trace_activation(out, cert);
    CHECK(rep.opposite_occurrences_ok);
    CHECK(rep.merge_needs_occurrence_ok);
    ++done;
  }
}

TEST_CASE("face count grows linearly with repeated clauses") {
  std::vector<std::size_t> sizes;
  for (int n = 2; n <= 6; ++n) {
    std::string text = "p cnf 3 " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) text += "1 2 3 0\n";
    sizes.push_back(build_reduction(parse_dimacs_text(text), 4).complex.size());
  }
  for (std::size_t k = 2; k < sizes.size(); ++k) CHECK(sizes[k] - sizes[k - 1] == sizes[1] - sizes[0]);
}
