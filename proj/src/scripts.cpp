#include "dcollapse/scripts.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dcollapse/errors.hpp"
#include "dcollapse/workspace.hpp"

namespace dcollapse {

Certificate superface_steps(const Face& sigma, const Face& sigma_prime, const Face& tau, int d) {
  Certificate out{d, {}};
  // Peel σ' back to σ one vertex at a time. Going from K_{c∪{u}} to K_c
  // collapses c∪{v} for the remaining v ∈ τ \ (c∪{u}), then c itself.
  std::vector<VertexId> peel = face_difference(sigma_prime, sigma);
  std::vector<VertexId> cur(sigma_prime.begin(), sigma_prime.end());
  std::vector<VertexId> rest = face_difference(tau, sigma_prime);
  for (VertexId u : peel) {
    std::vector<VertexId> c;
    for (VertexId x : cur)
      if (x != u) c.push_back(x);
    Face cf = Face::trusted(c);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      Face step = cf.with_vertex(rest[i]);
      std::vector<VertexId> t(step.begin(), step.end());
      t.insert(t.end(), rest.begin() + static_cast<std::ptrdiff_t>(i) + 1, rest.end());
      std::sort(t.begin(), t.end());
      out.append(step, Face::trusted(std::move(t)));
    }
    out.append(cf, cf);
    rest.push_back(u);
    cur = std::move(c);
  }
  return out;
}

Certificate script_superface_collapse(const Complex& K, const Face& sigma, const Face& sigma_prime, int d) {
  if (!is_d_collapsible_face(K, sigma, d))
    throw DomainError("face " + to_string(sigma) + " is not " + std::to_string(d) + "-collapsible");
  if (!sigma.is_subset_of(sigma_prime)) throw DomainError("σ is not contained in σ'");
  if (sigma_prime.dim() > d - 1) throw DomainError("σ' has dimension above d-1");
  Face tau = *unique_max_coface(K, sigma);
  if (!sigma_prime.is_subset_of(tau)) throw DomainError("σ' is not a face of τ(σ)");
  return superface_steps(sigma, sigma_prime, tau, d);
}

// ---------------------------------------------------------------- normal form

NormalizedCertificate normalize_certificate(const Complex& K, const Certificate& cert) {
  if (auto c = check_certificate(K, cert); !c.ok) throw CollapseError(c.message);
  const int d = cert.d;
  Workspace ws(K);
  std::deque<CollapseStep> pending(cert.steps.begin(), cert.steps.end());
  std::vector<CollapseStep> big, small;
  std::vector<std::uint32_t> removed;
  const std::size_t cap = std::max<std::size_t>(1'000'000, 64 * K.size() * (cert.steps.size() + 1));

  while (!pending.empty()) {
    CollapseStep s = std::move(pending.front());
    pending.pop_front();
    auto id = ws.id_of(s.sigma);
    auto tau = id ? ws.collapse_target(*id) : std::nullopt;
    if (!tau) throw CollapseError("internal: rewritten step " + to_string(s.sigma) + " is not collapsible");
    const Face& t = ws.face(*tau);
    if (s.sigma.dim() == d - 1 || *tau == *id) {
      (s.sigma.dim() == d - 1 ? big : small).push_back({s.sigma, t});
      removed.clear();
      ws.collapse(*id, removed);
      continue;
    }
    // A low non-maximal collapse: go through a bigger face of the interval.
    std::vector<VertexId> up(s.sigma.begin(), s.sigma.end());
    auto extra = face_difference(t, s.sigma);
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(d), t.size());
    for (std::size_t i = 0; up.size() < want; ++i) up.push_back(extra[i]);
    std::sort(up.begin(), up.end());
    Face sp = Face::trusted(std::move(up));
    Certificate frag = superface_steps(s.sigma, sp, t, d);
    pending.insert(pending.begin(), frag.steps.begin(), frag.steps.end());
    pending.push_front({sp, std::nullopt});
    if (big.size() + small.size() + pending.size() > cap)
      throw CollapseError("normalization exceeded its step cap");
  }
  NormalizedCertificate out;
  out.certificate.d = d;
  out.certificate.steps = std::move(big);
  out.certificate.steps.insert(out.certificate.steps.end(), small.begin(), small.end());
  out.growth = cert.steps.empty() ? 1.0
                                  : static_cast<double>(out.certificate.size()) / static_cast<double>(cert.size());
  return out;
}

bool is_normal_form(const Complex& K, const Certificate& cert) {
  Workspace ws(K);
  bool low_phase = false;
  std::vector<std::uint32_t> removed;
  for (const CollapseStep& s : cert.steps) {
    auto id = ws.id_of(s.sigma);
    auto tau = id ? ws.collapse_target(*id) : std::nullopt;
    if (!tau || s.sigma.dim() > cert.d - 1) return false;
    if (s.sigma.dim() == cert.d - 1) {
      if (low_phase) return false;
    } else {
      if (*tau != *id) return false;
      low_phase = true;
    }
    removed.clear();
    ws.collapse(*id, removed);
  }
  return true;
}

// ---------------------------------------------------------------- graph collapse

namespace {

struct GraphPlan {
  GraphConditions cond;
  std::vector<Face> order;    // τ_0, τ_1, ...
  std::vector<Face> ridges;   // σ_i for i >= 1 (σ_0 = σ)
};

GraphPlan plan_graph(const Complex& K, const Complex& L, const Face& sigma, int d) {
  GraphPlan p;
  auto fail = [&](std::string why) {
    p.cond.violation = std::move(why);
    return p;
  };
  if (d < 1) return fail("d must be at least 1");
  if (K.dimension() != d) return fail("K is not " + std::to_string(d) + "-dimensional");
  if (!is_subcomplex(L, K)) return fail("L is not a subcomplex of K");
  if (!K.contains(sigma) || L.contains(sigma)) return fail("σ is not a face of K \\ L");
  if (!is_d_collapsible_face(K, sigma, d)) return fail("σ is not d-collapsible in K");
  Face tau0 = *unique_max_coface(K, sigma);
  if (L.contains(tau0)) return fail("τ(σ) lies in L");
  if (tau0.dim() != d) return fail("τ(σ) is not d-dimensional");

  std::vector<Face> diff = face_difference(K, L);
  std::unordered_set<Face, FaceHash> in_diff(diff.begin(), diff.end());
  // Ridge condition, counted over the d-faces of K \ L.
  std::unordered_map<Face, int, FaceHash> cofaces;
  for (const Face& f : diff)
    if (f.dim() == d)
      for (VertexId v : f) {
        Face r = f.without_vertex(v);
        if (in_diff.count(r)) ++cofaces[r];
      }
  for (const Face& f : diff)
    if (f.dim() == d - 1) {
      auto it = cofaces.find(f);
      if (it != cofaces.end() && it->second > 2)
        return fail("ridge condition: (d-1)-face " + K.face_name(f) + " has " + std::to_string(it->second) +
                    " d-cofaces in K \\ L");
    }

  GkGraph g = g_k_graph(diff, d);
  if (!g.connected()) return fail("G_d(K \\ L) is not connected");

  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::size_t start = static_cast<std::size_t>(std::lower_bound(g.nodes.begin(), g.nodes.end(), tau0) - g.nodes.begin());
  std::vector<std::size_t> parent(g.nodes.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> queue{start};
  parent[start] = start;
  for (std::size_t at = 0; at < queue.size(); ++at) {
    std::size_t u = queue[at];
    for (std::size_t w : adj[u])
      if (parent[w] == static_cast<std::size_t>(-1)) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    p.order.push_back(g.nodes[queue[i]]);
    if (i > 0)
      p.ridges.push_back(Face::trusted(face_intersection(g.nodes[queue[i]], g.nodes[parent[queue[i]]])));
  }
  p.cond.ok = true;
  return p;
}

}  // namespace

GraphConditions check_graph_conditions(const Complex& K, const Complex& L, const Face& sigma, int d) {
  return plan_graph(K, L, sigma, d).cond;
}

Certificate script_graph_collapse(const Complex& K, const Complex& L, const Face& sigma, int d) {
  GraphPlan p = plan_graph(K, L, sigma, d);
  if (!p.cond.ok) throw ScriptError("graph collapse: " + p.cond.violation);

  Certificate out{d, {}};
  Workspace ws(K);
  std::vector<std::uint32_t> removed;
  auto apply = [&](const Face& s, const Face& expect) {
    auto id = ws.id_of(s);
    auto tau = id ? ws.collapse_target(*id) : std::nullopt;
    if (!tau || ws.face(*tau) != expect)
      throw ScriptError("graph collapse: step " + K.face_name(s) + " does not free " + K.face_name(expect));
    out.append(s, expect);
    removed.clear();
    ws.collapse(*id, removed);
  };
  apply(sigma, p.order[0]);
  for (std::size_t i = 1; i < p.order.size(); ++i) apply(p.ridges[i - 1], p.order[i]);

  std::vector<Face> rest;
  for (std::uint32_t i = 0; i < ws.face_count(); ++i)
    if (ws.alive(i) && !L.contains(ws.face(i))) rest.push_back(ws.face(i));
  std::stable_sort(rest.begin(), rest.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
  for (const Face& f : rest) apply(f, f);
  return out;
}

Certificate script_subcomplex_collapse(const Complex& K, const Complex& K_sub, const Complex& L_sub,
                                       const Certificate& inner) {
  if (!is_subcomplex(K_sub, K)) throw ScriptError("K' is not a subcomplex of K");
  if (!is_subcomplex(L_sub, K_sub)) throw ScriptError("L' is not a subcomplex of K'");
  auto in_gap = [&](const Face& f) { return K_sub.contains(f) && !L_sub.contains(f); };
  // Checking immediate cofaces suffices: any chain leaving K' \ L' has a first exit.
  for (const Face& eta : K.faces()) {
    if (in_gap(eta) || eta.size() == 1) continue;
    for (VertexId v : eta) {
      Face s = eta.without_vertex(v);
      if (in_gap(s))
        throw ScriptError("superface condition fails: " + K.face_name(s) + " ⊂ " + K.face_name(eta) +
                          " leaves K' \\ L'");
    }
  }
  ReplayResult r = replay_certificate(K_sub, inner);
  if (!r.steps_ok) throw ScriptError("inner collapse is invalid: " + r.message);
  if (!(r.residue == L_sub)) throw ScriptError("inner collapse does not end at L'");
  return inner;
}

Certificate script_strip_to_subcomplex(const Complex& K, const Complex& L, int d) {
  if (!is_subcomplex(L, K)) throw ScriptError("L is not a subcomplex of K");
  std::vector<Face> rest = face_difference(K, L);
  for (const Face& f : rest)
    if (f.dim() > d - 1) throw ScriptError("face " + K.face_name(f) + " of K \\ L is too big to strip");
  std::stable_sort(rest.begin(), rest.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
  Certificate out{d, {}};
  for (const Face& f : rest) out.append(f, f);
  return out;
}

Certificate map_certificate(const Certificate& cert, const VertexMap& map) {
  Certificate out{cert.d, {}};
  out.steps.reserve(cert.steps.size());
  for (const CollapseStep& s : cert.steps)
    out.steps.push_back({map_face(s.sigma, map),
                         s.expected_tau ? std::optional<Face>(map_face(*s.expected_tau, map)) : std::nullopt});
  return out;
}

}  // namespace dcollapse
