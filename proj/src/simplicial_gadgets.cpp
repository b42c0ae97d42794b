#include <algorithm>

#include "dcollapse/errors.hpp"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/scripts.hpp"

namespace dcollapse {

Certificate full_simplex_teardown(const Face& T, std::optional<Face> keep, int d) {
  Certificate cert;
  cert.d = d;
  if (keep && !keep->is_subset_of(T)) throw ScriptError("kept face " + to_string(*keep) + " is not inside " + to_string(T));
  std::vector<VertexId> rest(T.begin(), T.end());
  for (VertexId u : T) {
    if (keep && keep->contains(u)) continue;
    cert.append(Face{u}, Face(rest));
    rest.erase(std::find(rest.begin(), rest.end(), u));
  }
  return cert;
}

Certificate punctured_simplex_teardown(const Face& V, const Face& beta, std::optional<Face> keep, int d) {
  if (!beta.is_subset_of(V)) throw ScriptError("punctured face is not inside the simplex");
  auto pick = std::find_if(beta.begin(), beta.end(), [&](VertexId v) { return !keep || !keep->contains(v); });
  if (pick == beta.end()) throw ScriptError("punctured face lies inside the kept face");
  Face v{*pick};
  Certificate cert = superface_steps(v, beta, V, d);
  cert.d = d;
  cert.append(full_simplex_teardown(V.without_vertex(*pick), std::move(keep), d));
  return cert;
}

std::vector<Face> SimplicialGadget::liberation_of(const Face& base) const {
  std::vector<Face> out;
  for (const Face& f : liberation)
    if (base.is_subset_of(f)) out.push_back(f);
  return out;
}

namespace {

struct GadgetBuilder {
  SimplicialGadget g;
  ComplexBuilder b;
  std::vector<VertexId> ids;
  std::string prefix;

  GadgetBuilder(std::string kind, int d, VertexId first_id, std::string pre) : prefix(std::move(pre)) {
    if (d < 3) throw DomainError("simplicial gadgets need d >= 3");
    g.kind = std::move(kind);
    g.d = d;
    b.reserve_ids(first_id);
  }

  VertexId vertex(const std::string& name) {
    VertexId v = b.new_vertex(prefix + name);
    ids.push_back(v);
    return v;
  }

  SimplicialGadget finish() {
    g.vertices = Face::from_unsorted(ids);
    b.add_generator(g.vertices);
    g.complex = std::move(b).build();
    // Role partition of all (d-1)-faces, i.e. all d-subsets of the vertices.
    const std::size_t n = ids.size(), k = static_cast<std::size_t>(g.d);
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
    do {
      std::vector<VertexId> f;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) f.push_back(g.vertices[i]);
      Face face(f);
      if (std::find(g.initial.begin(), g.initial.end(), face) != g.initial.end()) continue;
      bool lib = false;
      for (const auto& [init, bases] : g.bases)
        for (const Face& base : bases) lib = lib || base.is_subset_of(face);
      (lib ? g.liberation : g.attaching).push_back(face);
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(g.liberation.begin(), g.liberation.end());
    std::sort(g.attaching.begin(), g.attaching.end());
    return std::move(g);
  }
};

}  // namespace

SimplicialGadget build_variable_gadget(int d, VertexId first_id, const std::string& prefix) {
  GadgetBuilder gb("variable", d, first_id, prefix);
  for (const char* s : {"+", "-"}) {
    VertexId p = gb.vertex(std::string("p") + s);
    std::vector<VertexId> q;
    for (int i = 1; i < d; ++i) q.push_back(gb.vertex(std::string("q") + s + std::to_string(i)));
    Face beta(q);
    Face iota = beta.with_vertex(p);
    gb.g.initial.push_back(iota);
    gb.g.bases[iota] = {beta};
    gb.g.named[std::string("iota") + s] = iota;
    gb.g.named[std::string("beta") + s] = beta;
  }
  return gb.finish();
}

SimplicialGadget build_clause_gadget(int d, VertexId first_id, const std::string& prefix) {
  GadgetBuilder gb("clause", d, first_id, prefix);
  std::vector<VertexId> p;
  for (int i = 1; i <= d; ++i) p.push_back(gb.vertex("p" + std::to_string(i)));
  VertexId q = gb.vertex("q");
  Face iota(p);
  gb.g.initial.push_back(iota);
  gb.g.named["iota"] = iota;
  for (int j = 1; j <= 3; ++j) {
    Face beta = iota.without_vertex(p[j - 1]);
    gb.g.bases[iota].push_back(beta);
    gb.g.named["beta" + std::to_string(j)] = beta;
    gb.g.named["lambda" + std::to_string(j)] = beta.with_vertex(q);
  }
  return gb.finish();
}

SimplicialGadget build_merge_gadget(int d, VertexId first_id, const std::string& prefix) {
  GadgetBuilder gb("merge", d, first_id, prefix);
  std::vector<VertexId> p;
  for (int i = 1; i <= d; ++i) p.push_back(gb.vertex("p" + std::to_string(i)));
  VertexId q = gb.vertex("q");
  VertexId r = gb.vertex("r");
  Face iota(p);
  Face beta = iota.without_vertex(p[0]);
  gb.g.initial.push_back(iota);
  gb.g.bases[iota] = {beta};
  gb.g.named["iota"] = iota;
  gb.g.named["beta"] = beta;
  gb.g.named["lambda1"] = beta.with_vertex(q);
  gb.g.named["lambda2"] = beta.with_vertex(r);
  return gb.finish();
}

Certificate gadget_teardown(const SimplicialGadget& g, const Face& base, std::optional<Face> other) {
  Certificate cert;
  cert.d = g.d;
  cert.append(base, base);
  cert.append(punctured_simplex_teardown(g.vertices, base, std::move(other), g.d));
  return cert;
}

}  // namespace dcollapse
