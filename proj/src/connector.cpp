#include <algorithm>
#include <memory>
#include <mutex>

#include "dcollapse/errors.hpp"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/scripts.hpp"

namespace dcollapse {

DComplex build_D(int d, int t, const std::vector<VertexId>& V, VertexId first_id) {
  if (t < 1) throw DomainError("D needs t >= 1");
  if (V.size() != static_cast<std::size_t>(d) + 1) throw DomainError("D needs d+1 outer vertices");
  const int layers = 3 * t;
  DComplex D;
  ComplexBuilder b;
  b.reserve_ids(first_id);
  D.w.assign(static_cast<std::size_t>(d) + 1, std::vector<VertexId>(static_cast<std::size_t>(layers)));
  for (int j = 0; j + 1 < layers; ++j)
    for (int i = 0; i <= d; ++i)
      D.w[i][j] = b.new_vertex("w" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  for (int i = 0; i <= d; ++i) D.w[i][layers - 1] = V[i];

  std::vector<VertexId> core;
  for (int i = 0; i <= d; ++i) core.push_back(D.w[i][0]);
  b.add_generator(Face::from_unsorted(core));
  // Each facet prism between consecutive layers gets the staircase
  // triangulation for the order (layer, axis).
  for (int j = 1; j < layers; ++j)
    for (int omit = 0; omit <= d; ++omit) {
      std::vector<int> axes;
      for (int i = 0; i <= d; ++i)
        if (i != omit) axes.push_back(i);
      for (int s = 1; s <= d; ++s) {
        std::vector<VertexId> f;
        for (int k = 0; k < s; ++k) f.push_back(D.w[axes[k]][j - 1]);
        for (int k = s - 1; k < d; ++k) f.push_back(D.w[axes[k]][j]);
        b.add_generator(Face::from_unsorted(f));
      }
    }
  for (int j = 1; j <= t; ++j) {
    std::vector<VertexId> z;
    for (int i = 0; i < d; ++i) z.push_back(D.w[i][3 * j - 3]);
    D.zeta.push_back(Face::from_unsorted(z));
  }
  D.complex = std::move(b).build();
  return D;
}

namespace {

std::vector<std::vector<VertexId>> adjacency(const Complex& K) {
  std::vector<std::vector<VertexId>> adj(K.id_bound());
  for (const Face& f : K.faces())
    if (f.size() == 2) {
      adj[f[0]].push_back(f[1]);
      adj[f[1]].push_back(f[0]);
    }
  return adj;
}

// Distinct marked faces are distant when no vertex of one lies within
// skeleton distance 2 of the other. Linear in the number of faces.
bool pairwise_distant(const Complex& K, const std::vector<Face>& faces) {
  auto adj = adjacency(K);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(adj.size(), kNone);
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (VertexId v : faces[a]) {
      if (owner[v] != kNone) return false;
      owner[v] = a;
    }
  std::vector<std::size_t> seen(adj.size(), kNone);
  for (std::size_t a = 0; a < faces.size(); ++a) {
    std::vector<VertexId> frontier(faces[a].begin(), faces[a].end());
    for (VertexId v : frontier) seen[v] = a;
    for (int round = 0; round < 2; ++round) {
      std::vector<VertexId> next;
      for (VertexId v : frontier)
        for (VertexId w : adj[v]) {
          if (seen[w] == a) continue;
          seen[w] = a;
          if (owner[w] != kNone && owner[w] != a) return false;
          next.push_back(w);
        }
      frontier = std::move(next);
    }
  }
  return true;
}

}  // namespace

ConnectorBlueprint build_connector(int d, int t) {
  if (t < 0) throw DomainError("t must be non-negative");
  ConnectorBlueprint base = quotient_C(d);
  if (t == 0) return base;
  const Complex& C = base.complex;

  std::unordered_map<Face, int, FaceHash> cofaces;
  for (const Face& f : C.faces())
    if (f.dim() == d)
      for (VertexId v : f) ++cofaces[f.without_vertex(v)];
  auto dist = skeleton_distances(C, base.rho.vertices());
  struct Candidate {
    std::size_t score;
    Face face;
  };
  std::vector<Candidate> candidates;
  for (const Face& f : C.faces()) {
    if (f.dim() != d) continue;
    bool interior = std::all_of(f.begin(), f.end(), [&](VertexId v) { return cofaces[f.without_vertex(v)] == 2; });
    if (!interior) continue;
    std::size_t score = kUnreachable;
    for (VertexId v : f) score = std::min(score, dist[v]);
    candidates.push_back({score, f});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });

  for (const Candidate& cand : candidates) {
    const Face& xi = cand.face;
    std::vector<VertexId> V(xi.begin(), xi.end());
    DComplex D = build_D(d, t, V, C.id_bound());
    ComplexBuilder b;
    for (const auto& [v, n] : C.symbols().entries()) b.name_vertex(v, n);
    for (const auto& [v, n] : D.complex.symbols().entries())
      if (!C.has_vertex(v)) b.name_vertex(v, n);
    for (const Face& f : C.faces())
      if (f != xi) b.add_face(f);
    b.add_faces(D.complex.faces());
    ConnectorBlueprint bp;
    bp.d = d;
    bp.t = t;
    bp.rho = base.rho;
    bp.zeta = D.zeta;
    bp.complex = std::move(b).build();
    bp.xi_used = xi;
    std::vector<Face> marked{bp.rho};
    marked.insert(marked.end(), bp.zeta.begin(), bp.zeta.end());
    if (pairwise_distant(bp.complex, marked)) return bp;
  }
  throw ConstructionError("no interior face of C(ρ) yields distant distinguished faces");
}

const ConnectorBlueprint& connector_blueprint(int d, int t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ConnectorBlueprint>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{d, t}];
  if (!slot) slot = std::make_unique<ConnectorBlueprint>(build_connector(d, t));
  return *slot;
}

Complex connector_residue(const ConnectorBlueprint& bp) {
  ComplexBuilder b;
  for (const auto& [v, n] : bp.complex.symbols().entries()) b.name_vertex(v, n);
  for (const Face& z : bp.zeta) b.add_generator(z);
  for (VertexId v : bp.rho) b.add_generator(bp.rho.without_vertex(v));
  if (bp.rho.size() == 1) {
    // 2^ρ \ {ρ} is empty for a single vertex.
  }
  return std::move(b).build();
}

Complex connector_graph_target(const ConnectorBlueprint& bp) {
  const int d = bp.d;
  std::unordered_map<Face, int, FaceHash> cofaces;
  for (const Face& f : bp.complex.faces())
    if (f.dim() == d)
      for (VertexId v : f) ++cofaces[f.without_vertex(v)];
  ComplexBuilder b;
  for (const auto& [v, n] : bp.complex.symbols().entries()) b.name_vertex(v, n);
  Complex res = connector_residue(bp);
  b.add_faces(res.faces());
  for (const auto& [f, c] : cofaces)
    if (c >= 3) b.add_generator(f);
  return std::move(b).build();
}

Certificate connector_collapse_certificate(const ConnectorBlueprint& bp) {
  Complex target = connector_graph_target(bp);
  Certificate cert = script_graph_collapse(bp.complex, target, bp.rho, bp.d);
  cert.append(script_strip_to_subcomplex(target, connector_residue(bp), bp.d));
  return cert;
}

const Certificate& connector_certificate(int d, int t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Certificate>> cache;
  const ConnectorBlueprint& bp = connector_blueprint(d, t);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{d, t}];
  if (!slot) slot = std::make_unique<Certificate>(connector_collapse_certificate(bp));
  return *slot;
}

namespace {

void check_attachment(int d, const Face& sigma, const std::vector<Face>& gamma) {
  auto ok = [&](const Face& f) { return f.dim() == d - 1; };
  if (!ok(sigma) || !std::all_of(gamma.begin(), gamma.end(), ok))
    throw DomainError("connector faces must be (d-1)-dimensional");
  std::vector<Face> all{sigma};
  all.insert(all.end(), gamma.begin(), gamma.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw DomainError("connector faces must be distinct");
}

}  // namespace

GluedConnector attach_connector(ComplexBuilder& builder, const ConnectorBlueprint& bp, const Face& sigma,
                                const std::vector<Face>& gamma, const std::string& prefix) {
  check_attachment(bp.d, sigma, gamma);
  if (gamma.size() != static_cast<std::size_t>(bp.t)) throw DomainError("γ count does not match the blueprint");
  const Complex& C = bp.complex;
  GluedConnector g;
  g.sigma = sigma;
  g.gamma = gamma;
  g.vertex_map.assign(C.id_bound(), kNoVertex);
  auto pin = [&](const Face& from, const Face& to) {
    for (std::size_t k = 0; k < from.size(); ++k) g.vertex_map[from[k]] = to[k];
  };
  pin(bp.rho, sigma);
  for (std::size_t j = 0; j < gamma.size(); ++j) pin(bp.zeta[j], gamma[j]);
  for (VertexId v : C.vertices())
    if (g.vertex_map[v] == kNoVertex) g.vertex_map[v] = builder.new_vertex(prefix + C.vertex_name(v));
  g.image.reserve(C.size());
  for (const Face& f : C.faces()) g.image.push_back(map_face(f, g.vertex_map));
  std::sort(g.image.begin(), g.image.end());
  g.image.erase(std::unique(g.image.begin(), g.image.end()), g.image.end());
  builder.add_faces(g.image);
  return g;
}

GluedConnector glue_connector(const Complex& host, int d, const Face& sigma, const std::vector<Face>& gamma,
                              std::string_view prefix) {
  check_attachment(d, sigma, gamma);
  if (!host.contains(sigma) || !std::all_of(gamma.begin(), gamma.end(), [&](const Face& f) { return host.contains(f); }))
    throw DomainError("connector faces must belong to the host");
  const ConnectorBlueprint& bp = connector_blueprint(d, static_cast<int>(gamma.size()));
  DisjointUnion du = disjoint_union(host, bp.complex, prefix);
  auto shift = [&](const Face& f) {
    std::vector<VertexId> v(f.begin(), f.end());
    for (VertexId& x : v) x += du.offset;
    return Face::trusted(std::move(v));
  };
  FacePairing pairing;
  pairing.pairs.push_back(FacePairing::sorted_order(shift(bp.rho), sigma));
  for (std::size_t j = 0; j < gamma.size(); ++j)
    pairing.pairs.push_back(FacePairing::sorted_order(shift(bp.zeta[j]), gamma[j]));
  GlueResult glued = glue_with_map(du.complex, pairing);

  GluedConnector g;
  g.complex = std::move(glued.complex);
  g.sigma = sigma;
  g.gamma = gamma;
  g.vertex_map.assign(bp.complex.id_bound(), kNoVertex);
  for (VertexId v : bp.complex.vertices()) g.vertex_map[v] = glued.vertex_map[v + du.offset];
  for (const Face& f : bp.complex.faces()) g.image.push_back(map_face(f, g.vertex_map));
  std::sort(g.image.begin(), g.image.end());
  g.image.erase(std::unique(g.image.begin(), g.image.end()), g.image.end());
  return g;
}

}  // namespace dcollapse
