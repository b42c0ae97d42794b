#include <algorithm>

#include "dcollapse/errors.hpp"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/scripts.hpp"

namespace dcollapse {

// Ids: r_1..r_d are 0..d-1, q_1..q_{d-1} are d..2d-2, p is 2d-1.
BadComplex build_bad_complex(int d) {
  if (d < 3) throw DomainError("bad complexes exist only for d >= 3, got " + std::to_string(d));
  BadComplex B;
  B.d = d;
  ComplexBuilder b;
  std::vector<VertexId> r, q;
  for (int i = 1; i <= d; ++i) r.push_back(b.new_vertex("r" + std::to_string(i)));
  for (int i = 1; i < d; ++i) q.push_back(b.new_vertex("q" + std::to_string(i)));
  VertexId p = b.new_vertex("p");
  std::vector<VertexId> all = r;
  all.insert(all.end(), q.begin(), q.end());
  all.push_back(p);
  B.S = Face(all);
  Face Q(q);
  B.iota = Q.with_vertex(p);
  for (VertexId ri : r) B.lambda.push_back(Q.with_vertex(ri));
  B.sigma_B = Face(r);
  b.add_generator(B.S);

  std::vector<bool> pick(all.size(), false);
  std::fill(pick.end() - d, pick.end(), true);
  do {
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) f.push_back(all[i]);
    Face face(f);
    if (face == B.iota || face == B.sigma_B) continue;
    if (std::find(B.lambda.begin(), B.lambda.end(), face) != B.lambda.end()) continue;
    B.alpha.push_back(face);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(B.alpha.begin(), B.alpha.end());

  const ConnectorBlueprint& bp = connector_blueprint(d, static_cast<int>(B.alpha.size()));
  GluedConnector g = attach_connector(b, bp, B.iota, B.alpha, "C:");
  B.connector_map = std::move(g.vertex_map);
  B.connector_image = std::move(g.image);
  B.complex = std::move(b).build();
  return B;
}

Complex bad_complex_R(const BadComplex& B) {
  Face Q = B.iota.without_vertex(B.iota.vertices().back());
  ComplexBuilder b;
  for (VertexId v : B.S) b.name_vertex(v, B.complex.vertex_name(v));
  // Faces of 2^S through Q other than Q and ι all contain some λ_i.
  Complex simplex = full_simplex(B.S);
  for (const Face& f : simplex.faces())
    if (!Q.is_subset_of(f) || f.is_subset_of(B.iota)) b.add_face(f);
  return std::move(b).build();
}

Certificate bad_complex_certificate(const BadComplex& B) {
  const int d = B.d;
  Certificate inner;
  inner.d = d;
  for (const Face& l : B.lambda) inner.append(l);
  Complex simplex = full_simplex(B.S);
  Complex R = bad_complex_R(B);
  Certificate cert = script_subcomplex_collapse(B.complex, simplex, R, inner);
  cert.append(map_certificate(connector_certificate(d, static_cast<int>(B.alpha.size())), B.connector_map));
  Face Q = B.iota.without_vertex(B.iota.vertices().back());
  cert.append(Q, Q);
  cert.append(punctured_simplex_teardown(B.S, Q, std::nullopt, d));
  return cert;
}

}  // namespace dcollapse
