#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "dcollapse/errors.hpp"
#include "dcollapse/reduction.hpp"

namespace dcollapse {

const Connection& ReductionOutput::connection(const std::string& id) const {
  auto it = connection_index.find(id);
  if (it == connection_index.end()) throw DomainError("unknown connection '" + id + "'");
  return connections[it->second];
}

std::vector<std::string> ReductionOutput::occurrences_of_clause(int i) const {
  std::vector<std::string> ids;
  for (const ClauseSlot& s : slots.at(static_cast<std::size_t>(i - 1)))
    ids.push_back(std::string("O") + (s.positive ? "+" : "-") + std::to_string(s.var));
  return ids;
}

HeaderList ReductionOutput::headers() const {
  HeaderList h;
  auto face = [&](const Face& f) { return complex.face_name(f); };
  h.emplace_back("d", std::to_string(d));
  h.emplace_back("m", std::to_string(formula.num_vars));
  h.emplace_back("n", std::to_string(formula.num_clauses()));
  h.emplace_back("gluing", "sorted-order");
  for (std::size_t j = 0; j < variables.size(); ++j)
    for (const auto& [role, f] : variables[j].named) h.emplace_back("V" + std::to_string(j + 1) + "." + role, face(f));
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    std::string g = "G" + std::to_string(i + 1) + ".";
    h.emplace_back(g + "iota", face(clauses[i].at("iota")));
    for (const ClauseSlot& s : slots[i]) h.emplace_back(g + "lambda" + std::to_string(s.var), face(s.lambda));
  }
  for (std::size_t k = 0; k < merges.size(); ++k)
    for (const auto& [role, f] : merges[k].named) h.emplace_back("M" + std::to_string(k + 2) + "." + role, face(f));
  for (const Connection& c : connections) {
    h.emplace_back(c.id + ".sigma", face(c.sigma));
    h.emplace_back(c.id + ".t", std::to_string(c.t()));
  }
  return h;
}

namespace {

SimplicialGadget add_gadget(ComplexBuilder& b, SimplicialGadget g) {
  for (const auto& [v, name] : g.complex.symbols().entries()) b.name_vertex(v, name);
  b.reserve_ids(g.complex.id_bound());
  b.add_faces(g.complex.faces());
  return g;
}

void validate(const CnfFormula& f) {
  if (f.clauses.size() < 2) throw DomainError("the reduction needs at least two clauses (pad single clauses)");
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    for (int a = 0; a < 3; ++a) {
      if (c[a] == 0 || std::abs(c[a]) > f.num_vars)
        throw DomainError("clause " + std::to_string(i + 1) + " has an out-of-range literal");
      for (int b = a + 1; b < 3; ++b)
        if (std::abs(c[a]) == std::abs(c[b]))
          throw DomainError("clause " + std::to_string(i + 1) + " repeats a variable");
    }
  }
}

}  // namespace

ReductionOutput build_reduction(const CnfFormula& formula, int d) {
  if (d < 4) throw DomainError("the reduction needs d >= 4, got " + std::to_string(d));
  validate(formula);
  auto start = std::chrono::steady_clock::now();
  ReductionOutput out;
  out.d = d;
  out.formula = formula;
  const int m = formula.num_vars;
  const int n = static_cast<int>(formula.num_clauses());
  ComplexBuilder b;

  for (int j = 1; j <= m; ++j)
    out.variables.push_back(add_gadget(b, build_variable_gadget(d, b.next_id(), "V" + std::to_string(j) + ".")));
  for (int i = 1; i <= n; ++i) {
    out.clauses.push_back(add_gadget(b, build_clause_gadget(d, b.next_id(), "G" + std::to_string(i) + ".")));
    auto lits = formula.clauses[i - 1];
    std::sort(lits.begin(), lits.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });
    std::vector<ClauseSlot> slots;
    for (int k = 0; k < 3; ++k) {
      const SimplicialGadget& g = out.clauses.back();
      slots.push_back({std::abs(lits[k]), lits[k] > 0, g.at("lambda" + std::to_string(k + 1)),
                       g.at("beta" + std::to_string(k + 1))});
    }
    out.slots.push_back(std::move(slots));
  }
  for (int i = 2; i <= n; ++i)
    out.merges.push_back(add_gadget(b, build_merge_gadget(d, b.next_id(), "M" + std::to_string(i) + ".")));

  auto connect = [&](const std::string& id, const Face& sigma, std::vector<Face> gamma) {
    const ConnectorBlueprint& bp = connector_blueprint(d, static_cast<int>(gamma.size()));
    GluedConnector g = attach_connector(b, bp, sigma, gamma, id + ":");
    out.connection_index[id] = out.connections.size();
    out.connections.push_back({id, sigma, std::move(gamma), std::move(g.image), std::move(g.vertex_map)});
  };

  for (int j = 1; j <= m; ++j)
    for (bool positive : {true, false}) {
      std::vector<Face> gamma;
      for (int i = 1; i <= n; ++i)
        for (const ClauseSlot& s : out.slots[i - 1])
          if (s.var == j && s.positive == positive) gamma.push_back(s.lambda);
      const char* sign = positive ? "+" : "-";
      connect(std::string("O") + sign + std::to_string(j), out.variables[j - 1].at(std::string("iota") + sign), gamma);
    }
  connect("I1.1", out.clauses[0].at("iota"), {out.merge(2).at("lambda2")});
  for (int i = 2; i <= n; ++i)
    connect("I" + std::to_string(i) + ".1", out.clauses[i - 1].at("iota"), {out.merge(i).at("lambda1")});
  for (int i = 2; i <= n - 1; ++i)
    connect("I" + std::to_string(i) + ".2", out.merge(i).at("iota"), {out.merge(i + 1).at("lambda2")});
  std::vector<Face> attaching;
  for (const auto* group : {&out.variables, &out.clauses, &out.merges})
    for (const SimplicialGadget& g : *group) attaching.insert(attaching.end(), g.attaching.begin(), g.attaching.end());
  connect("T", out.merge(n).at("iota"), std::move(attaching));

  out.complex = std::move(b).build();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace dcollapse
