#include <algorithm>

#include "dcollapse/errors.hpp"
#include "dcollapse/reduction.hpp"
#include "dcollapse/scripts.hpp"
#include "dcollapse/workspace.hpp"

namespace dcollapse {

namespace {

Certificate connection_script(const ReductionOutput& out, const std::string& id) {
  const Connection& c = out.connection(id);
  return map_certificate(connector_certificate(out.d, c.t()), c.vertex_map);
}

// 2^ι \ {ι} is the boundary of a simplex of dimension d-1; every face is
// maximal once its supersets are gone.
Certificate strip_boundary(const Face& iota, int d) {
  std::vector<Face> faces;
  const std::size_t n = iota.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<VertexId> v;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) v.push_back(iota[k]);
    faces.emplace_back(v);
  }
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
  Certificate cert;
  cert.d = d;
  for (const Face& f : faces) cert.append(f, f);
  return cert;
}

}  // namespace

Certificate certificate_from_assignment(const ReductionOutput& out, const Assignment& assignment) {
  const CnfFormula& f = out.formula;
  if (assignment.size() != static_cast<std::size_t>(f.num_vars))
    throw DomainError("assignment has " + std::to_string(assignment.size()) + " values, formula has " +
                      std::to_string(f.num_vars) + " variables");
  if (!satisfies(f, assignment)) throw DomainError("assignment " + to_string(assignment) + " does not satisfy the formula");
  const int d = out.d;
  const int m = f.num_vars;
  const int n = static_cast<int>(f.num_clauses());
  Certificate cert;
  cert.d = d;
  auto side = [&](int j) { return std::string(assignment[j - 1] ? "+" : "-"); };
  auto other = [&](int j) { return std::string(assignment[j - 1] ? "-" : "+"); };

  // Variables: free the chosen initial face, then its occurrence connection.
  for (int j = 1; j <= m; ++j) {
    const SimplicialGadget& v = out.variables[j - 1];
    for (const Face& l : v.liberation_of(v.at("beta" + side(j)))) cert.append(l);
    cert.append(connection_script(out, "O" + side(j) + std::to_string(j)));
  }
  // Clauses: one satisfied literal frees ι^i.
  for (int i = 1; i <= n; ++i) {
    const auto& slots = out.slots[i - 1];
    auto hit = std::find_if(slots.begin(), slots.end(), [&](const ClauseSlot& s) { return assignment[s.var - 1] == s.positive; });
    cert.append(hit->lambda);
    cert.append(connection_script(out, "I" + std::to_string(i) + ".1"));
  }
  // Merges in order, ending with the tidy connection.
  for (int i = 2; i <= n; ++i) {
    const SimplicialGadget& g = out.merge(i);
    cert.append(g.at("lambda1"));
    cert.append(g.at("lambda2"));
    cert.append(connection_script(out, i < n ? "I" + std::to_string(i) + ".2" : std::string("T")));
  }
  // Variable gadgets down to the other initial face, then that connection.
  for (int j = 1; j <= m; ++j) {
    const SimplicialGadget& v = out.variables[j - 1];
    const Face& keep = v.at("iota" + other(j));
    cert.append(gadget_teardown(v, v.at("beta" + side(j)), keep));
    cert.append(connection_script(out, "O" + other(j) + std::to_string(j)));
    cert.append(strip_boundary(keep, d));
  }
  for (int i = 1; i <= n; ++i) {
    const auto& slots = out.slots[i - 1];
    auto hit = std::find_if(slots.begin(), slots.end(), [&](const ClauseSlot& s) { return assignment[s.var - 1] == s.positive; });
    cert.append(gadget_teardown(out.clauses[i - 1], hit->beta, std::nullopt));
  }
  for (const SimplicialGadget& g : out.merges) cert.append(gadget_teardown(g, g.at("beta"), std::nullopt));
  return cert;
}

Activation activation_status(const ReductionOutput& out, const Complex& residue, const std::string& id) {
  const Connection& c = out.connection(id);
  for (const Face& f : c.image)
    if (!residue.contains(f)) return Activation::activated;
  return Activation::intact;
}

ActivationReport trace_activation(const ReductionOutput& out, const Certificate& cert) {
  ActivationReport rep;
  rep.tidy_step = cert.size();
  Workspace ws(out.complex);
  const std::size_t nc = out.connections.size();
  std::vector<std::vector<std::uint32_t>> owners(ws.face_count());
  for (std::uint32_t c = 0; c < nc; ++c)
    for (const Face& f : out.connections[c].image) owners[*ws.id_of(f)].push_back(c);
  const std::uint32_t tidy = static_cast<std::uint32_t>(out.connection_index.at("T"));
  auto index = [&](const std::string& id) { return out.connection_index.at(id); };

  std::vector<bool> active(nc, false);
  std::vector<std::uint32_t> removed;
  bool tidy_seen = false;
  for (std::size_t k = 0; k < cert.size(); ++k) {
    const CollapseStep& step = cert.steps[k];
    auto id = ws.id_of(step.sigma);
    if (!id || !ws.is_collapsible(*id, out.d)) {
      rep.violation = "step " + std::to_string(k) + " is not a d-collapse";
      return rep;
    }
    removed.clear();
    ws.collapse(*id, removed);
    for (std::uint32_t r : removed)
      for (std::uint32_t c : owners[r]) {
        active[c] = true;
        if (c == tidy && !tidy_seen) {
          tidy_seen = true;
          rep.tidy_step = k;
        }
      }
    if (tidy_seen) continue;
    for (int j = 1; j <= out.formula.num_vars; ++j) {
      std::string js = std::to_string(j);
      if (active[index("O+" + js)] && active[index("O-" + js)] && rep.opposite_occurrences_ok) {
        rep.opposite_occurrences_ok = false;
        rep.violation = "both occurrence connections of x" + js + " active after step " + std::to_string(k);
      }
    }
    for (int i = 1; i <= static_cast<int>(out.formula.num_clauses()); ++i) {
      if (!active[index("I" + std::to_string(i) + ".1")]) continue;
      auto occ = out.occurrences_of_clause(i);
      bool any = std::any_of(occ.begin(), occ.end(), [&](const std::string& o) { return active[index(o)]; });
      if (!any && rep.merge_needs_occurrence_ok) {
        rep.merge_needs_occurrence_ok = false;
        rep.violation = "I" + std::to_string(i) + ".1 active without an occurrence after step " + std::to_string(k);
      }
    }
  }
  rep.steps_ok = true;
  return rep;
}

}  // namespace dcollapse
