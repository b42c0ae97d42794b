#include <algorithm>

#include "dcollapse/errors.hpp"
#include "dcollapse/gadgets.hpp"

namespace dcollapse {

VertexId JVertex::id() const {
  if (kind == Kind::origin) return 0;
  return static_cast<VertexId>(2 * axis - (sign > 0 ? 1 : 0));
}

JVertex JVertex::from_id(VertexId id) {
  if (id == 0) return origin();
  return unit(static_cast<int>((id + 1) / 2), id % 2 == 1 ? 1 : -1);
}

std::string JVertex::name() const {
  if (kind == Kind::origin) return "0";
  return (sign > 0 ? "e" : "-e") + std::to_string(axis);
}

namespace {

void require_d(int d, int lo) {
  if (d < lo) throw DomainError("d must be at least " + std::to_string(lo) + ", got " + std::to_string(d));
}

bool has_negative(const Face& f) {
  return std::any_of(f.begin(), f.end(), [](VertexId v) { return v != 0 && v % 2 == 0; });
}

std::string j_face_name(const Face& f) {
  std::string s = "[";
  for (VertexId v : f) {
    if (s.size() > 1) s += ',';
    s += JVertex::from_id(v).name();
  }
  return s + "]";
}

}  // namespace

Complex build_J(int d) {
  require_d(d, 2);
  ComplexBuilder b;
  b.name_vertex(0, "0");
  for (int i = 1; i <= d; ++i) {
    b.name_vertex(JVertex::unit(i, 1).id(), JVertex::unit(i, 1).name());
    b.name_vertex(JVertex::unit(i, -1).id(), JVertex::unit(i, -1).name());
  }
  for (std::uint32_t signs = 0; signs < (1u << d); ++signs) {
    std::vector<VertexId> v{0};
    for (int i = 1; i <= d; ++i) v.push_back(JVertex::unit(i, (signs >> (i - 1) & 1) ? -1 : 1).id());
    b.add_generator(Face(v));
  }
  return std::move(b).build();
}

HComplex build_H(int d) {
  Complex J = build_J(d);
  HComplex h;
  // Only interior faces and full boundary facets carrying a minus sign get a
  // barycentre. Lower boundary faces stay whole so that sign-flipped copies
  // triangulate alike and the quotient stays simplicial. Negative vertices
  // are listed too, as trivial subdivisions of themselves.
  auto subdivided = [d](const Face& f) {
    return has_negative(f) && (f.contains(0) || f.size() == static_cast<std::size_t>(d));
  };
  std::vector<Face> subdiv;
  for (const Face& f : J.faces())
    if (subdivided(f) || (f.size() == 1 && has_negative(f))) subdiv.push_back(f);

  ComplexBuilder b;
  h.vertices.resize(static_cast<std::size_t>(d) + 1 + subdiv.size());
  h.vertices[0] = {HVertex::Kind::base, JVertex::origin(), {}};
  b.name_vertex(0, "0");
  for (int i = 1; i <= d; ++i) {
    h.vertices[i] = {HVertex::Kind::base, JVertex::unit(i, 1), {}};
    b.name_vertex(static_cast<VertexId>(i), "e" + std::to_string(i));
  }
  std::map<Face, VertexId> id_of;
  for (std::size_t k = 0; k < subdiv.size(); ++k) {
    VertexId id = static_cast<VertexId>(d + 1 + k);
    h.vertices[id] = {HVertex::Kind::subdiv, {}, subdiv[k]};
    id_of.emplace(subdiv[k], id);
    b.name_vertex(id, j_face_name(subdiv[k]));
  }
  auto h_id = [&](VertexId j) {
    if (j == 0) return VertexId{0};
    if (j % 2 == 1) return static_cast<VertexId>((j + 1) / 2);
    return id_of.at(Face{j});
  };

  // A chain σ_1 ⊋ ... ⊋ σ_k of subdivided faces spans, together with any
  // proper subface τ of σ_k free of subdivided faces, a face of H.
  std::vector<std::pair<std::vector<VertexId>, Face>> stack;
  for (const Face& m : J.maximal_faces())
    if (subdivided(m)) stack.push_back({{id_of.at(m)}, m});
  while (!stack.empty()) {
    auto [chain, last] = std::move(stack.back());
    stack.pop_back();
    const std::size_t n = last.size();
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
      std::vector<VertexId> tau;
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1) tau.push_back(last[k]);
      bool clean = true;
      for (std::uint32_t sub = mask; sub && clean; sub = (sub - 1) & mask) {
        std::vector<VertexId> part;
        for (std::size_t k = 0; k < n; ++k)
          if (sub >> k & 1) part.push_back(last[k]);
        if (subdivided(Face(part))) clean = false;
      }
      if (!clean) continue;
      std::vector<VertexId> gen = chain;
      for (VertexId v : tau) gen.push_back(h_id(v));
      b.add_generator(Face::from_unsorted(std::move(gen)));
    }
    for (VertexId v : last) {
      Face next = last.without_vertex(v);
      if (!subdivided(next)) continue;
      auto c = chain;
      c.push_back(id_of.at(next));
      stack.push_back({std::move(c), next});
    }
  }
  std::vector<VertexId> theta(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) theta[i] = static_cast<VertexId>(i);
  b.add_generator(Face(theta));
  h.complex = std::move(b).build();
  return h;
}

ConnectorBlueprint quotient_C(int d) {
  HComplex h = build_H(d);
  const VertexId n = h.complex.id_bound();
  VertexMap map(n, kNoVertex);
  SymbolTable names;
  names.set(0, "0");
  map[0] = 0;
  for (int i = 1; i <= d; ++i) {
    map[i] = static_cast<VertexId>(i);
    names.set(static_cast<VertexId>(i), "e" + std::to_string(i));
  }
  // Sign-pattern faces (no origin) are identified by their axis set.
  std::map<std::vector<int>, VertexId> axis_class;
  VertexId next = static_cast<VertexId>(d) + 1;
  for (VertexId v = static_cast<VertexId>(d) + 1; v < n; ++v) {
    const Face& s = h.vertices[v].subdiv;
    if (s.contains(0)) continue;
    std::vector<int> axes;
    for (VertexId x : s) axes.push_back(JVertex::from_id(x).axis);
    if (axes.size() == 1) {
      map[v] = static_cast<VertexId>(axes[0]);
      continue;
    }
    auto [it, fresh] = axis_class.emplace(axes, next);
    if (fresh) {
      std::string nm = "A{";
      for (std::size_t k = 0; k < axes.size(); ++k) nm += (k ? "," : "") + std::to_string(axes[k]);
      names.set(next, nm + "}");
      ++next;
    }
    map[v] = it->second;
  }
  for (VertexId v = static_cast<VertexId>(d) + 1; v < n; ++v) {
    if (map[v] != kNoVertex) continue;
    map[v] = next;
    names.set(next, std::string(*h.complex.symbols().name(v)));
    ++next;
  }

  ConnectorBlueprint bp;
  bp.d = d;
  bp.t = 0;
  try {
    bp.complex = map_vertices(h.complex, map, std::move(names));
  } catch (const GluingError& e) {
    throw ConstructionError(std::string("quotient of H is not a simplicial complex: ") + e.what());
  }
  std::vector<VertexId> rho;
  for (int i = 1; i <= d; ++i) rho.push_back(static_cast<VertexId>(i));
  bp.rho = Face(rho);
  if (!bp.complex.contains(bp.rho)) throw ConstructionError("ρ is missing from the quotient");
  return bp;
}

}  // namespace dcollapse
