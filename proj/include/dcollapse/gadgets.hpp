#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcollapse/collapse.hpp"
#include "dcollapse/complex.hpp"

namespace dcollapse {

// ---------------------------------------------------------------- cross-polytope

/// A vertex of J: the origin or ±e_axis (axis is 1-based).
struct JVertex {
  enum class Kind { origin, signed_unit };
  Kind kind = Kind::origin;
  int axis = 0;
  int sign = 0;

  static JVertex origin() { return {}; }
  static JVertex unit(int axis, int sign) { return {Kind::signed_unit, axis, sign}; }
  /// Ids: origin 0, +e_i -> 2i-1, -e_i -> 2i.
  VertexId id() const;
  static JVertex from_id(VertexId id);
  std::string name() const;
};

/// A vertex of H: a vertex of ϑ = {0, e_1..e_d} or a face of J outside 2^ϑ.
struct HVertex {
  enum class Kind { base, subdiv };
  Kind kind = Kind::base;
  JVertex base;
  Face subdiv;  ///< face of J, in J ids
};

/// The cone over the boundary of the d-dimensional cross-polytope.
Complex build_J(int d);

struct HComplex {
  Complex complex;
  std::vector<HVertex> vertices;  ///< indexed by vertex id
};

/// Chain triangulation of J that keeps the simplex ϑ whole.
HComplex build_H(int d);

struct ConnectorBlueprint {
  int d = 0;
  int t = 0;
  Face rho;
  std::vector<Face> zeta;
  Complex complex;
  std::optional<Face> xi_used;
};

/// C(ρ): H with the sign-pattern faces of each axis set identified.
ConnectorBlueprint quotient_C(int d);

// ---------------------------------------------------------------- refined connector

struct DComplex {
  Complex complex;
  std::vector<Face> zeta;
  /// w[i][j] for axis i in [0, d] and layer j in [0, 3t); the last layer is V.
  std::vector<std::vector<VertexId>> w;
};

/// Layered triangulation of the simplex on V (d+1 vertices). New vertices get
/// ids from `first_id` upward. Throws DomainError for t < 1.
DComplex build_D(int d, int t, const std::vector<VertexId>& V, VertexId first_id = 0);

ConnectorBlueprint build_connector(int d, int t);
/// Memoized build_connector; safe to call from several threads.
const ConnectorBlueprint& connector_blueprint(int d, int t);

/// L* = (C' \ {ρ}) plus the closure of every (d-1)-face with three or more
/// d-cofaces. The graph collapse targets L*, then strips down to C' \ {ρ}.
Complex connector_graph_target(const ConnectorBlueprint& bp);
/// C' \ {ρ} = (2^ρ \ {ρ}) ∪ 2^{ζ_1} ∪ ... ∪ 2^{ζ_t}.
Complex connector_residue(const ConnectorBlueprint& bp);
/// A certificate for C ↘ C' \ {ρ}.
Certificate connector_collapse_certificate(const ConnectorBlueprint& bp);
/// Memoized connector_collapse_certificate(connector_blueprint(d, t)).
const Certificate& connector_certificate(int d, int t);

struct GluedConnector {
  Complex complex;
  Face sigma;
  std::vector<Face> gamma;
  std::vector<Face> image;  ///< images of all connector faces, sorted
  VertexMap vertex_map;     ///< connector vertex -> result vertex
};

/// host ∪ C_glued(σ; γ_1..γ_t) via disjoint union and sorted-order gluing.
GluedConnector glue_connector(const Complex& host, int d, const Face& sigma, const std::vector<Face>& gamma,
                              std::string_view prefix = "C:");

/// Adds a connector copy to a builder, identifying ρ with σ and ζ_j with γ_j
/// in sorted vertex order. Fresh vertices are named prefix + connector name.
GluedConnector attach_connector(ComplexBuilder& builder, const ConnectorBlueprint& bp, const Face& sigma,
                                const std::vector<Face>& gamma, const std::string& prefix);

// ---------------------------------------------------------------- teardown scripts

/// Collapses the full simplex 2^T to 2^keep by removing vertices of T \ keep.
Certificate full_simplex_teardown(const Face& T, std::optional<Face> keep, int d);

/// Starting from (2^V)_β, i.e. the full simplex with the star of β removed,
/// collapses down to 2^keep (or to nothing).
Certificate punctured_simplex_teardown(const Face& V, const Face& beta, std::optional<Face> keep, int d);

// ---------------------------------------------------------------- bad complex

struct BadComplex {
  int d = 0;
  Complex complex;
  Face S;
  Face iota;
  std::vector<Face> lambda;
  Face sigma_B;
  std::vector<Face> alpha;
  VertexMap connector_map;
  std::vector<Face> connector_image;
};

BadComplex build_bad_complex(int d);

/// B ↘ A ↘ R \ {ι} ↘ ∅ as one certificate.
Certificate bad_complex_certificate(const BadComplex& B);
/// The subcomplex R = {σ ⊆ S : q_1..q_{d-1} ⊆ σ implies σ ⊆ ι}.
Complex bad_complex_R(const BadComplex& B);

// ---------------------------------------------------------------- simplicial gadgets

struct SimplicialGadget {
  std::string kind;
  int d = 0;
  Complex complex;
  Face vertices;
  std::vector<Face> initial;
  std::map<Face, std::vector<Face>> bases;  ///< initial face -> its bases
  std::vector<Face> liberation;
  std::vector<Face> attaching;
  /// Role names: iota+, beta-, lambda2, ...
  std::map<std::string, Face> named;

  const Face& at(const std::string& role) const { return named.at(role); }
  /// Liberation faces containing `base`, sorted.
  std::vector<Face> liberation_of(const Face& base) const;
};

/// Gadget on vertices first_id.. with names prefix + local name.
SimplicialGadget build_variable_gadget(int d, VertexId first_id = 0, const std::string& prefix = "");
SimplicialGadget build_clause_gadget(int d, VertexId first_id = 0, const std::string& prefix = "");
SimplicialGadget build_merge_gadget(int d, VertexId first_id = 0, const std::string& prefix = "");

/// From R \ {ι} (after the liberation faces of `base` and ι are gone) down to
/// 2^{other} when `other` is given, or to nothing.
Certificate gadget_teardown(const SimplicialGadget& g, const Face& base, std::optional<Face> other);

}  // namespace dcollapse
