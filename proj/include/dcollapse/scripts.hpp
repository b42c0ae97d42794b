#pragma once

#include <optional>
#include <string>

#include "dcollapse/collapse.hpp"
#include "dcollapse/complex.hpp"

namespace dcollapse {

/// Steps taking K_{σ'} to K_σ, for σ ⊆ σ' ⊆ τ(σ) and dim σ' <= d-1.
/// Collapsing σ' first and then replaying the fragment equals collapsing σ.
Certificate script_superface_collapse(const Complex& K, const Face& sigma, const Face& sigma_prime, int d);

/// The same fragment computed from σ, σ' and τ alone.
Certificate superface_steps(const Face& sigma, const Face& sigma_prime, const Face& tau, int d);

struct NormalizedCertificate {
  Certificate certificate;
  double growth = 1.0;  ///< output length / input length (1 for empty input)
};

/// Rewrites a valid certificate so that all (d-1)-dimensional collapses come
/// first and every later step removes a single maximal face.
NormalizedCertificate normalize_certificate(const Complex& K, const Certificate& cert);

/// The ordering predicate that normalize_certificate establishes.
bool is_normal_form(const Complex& K, const Certificate& cert);

struct GraphConditions {
  bool ok = false;
  std::string violation;  ///< empty when ok
};

/// Checks the side conditions for collapsing K onto L along G_d(K \ L).
GraphConditions check_graph_conditions(const Complex& K, const Complex& L, const Face& sigma, int d);

/// Collapses K onto L: σ first, then one ridge per d-face in BFS order over
/// G_d(K \ L), then the leftover low-dimensional faces. Throws ScriptError
/// naming the first violated condition.
Certificate script_graph_collapse(const Complex& K, const Complex& L, const Face& sigma, int d);

/// Lifts a collapse K' ↘ L' to K ↘ (K \ K') ∪ L'. Throws ScriptError with a
/// witness pair when some coface of K' \ L' leaves K' \ L'.
Certificate script_subcomplex_collapse(const Complex& K, const Complex& K_sub, const Complex& L_sub,
                                       const Certificate& inner);

/// Removes the faces of K not in L one maximal face at a time, largest first.
/// Requires every face of K \ L to have dimension <= d-1.
Certificate script_strip_to_subcomplex(const Complex& K, const Complex& L, int d);

/// Renames every face of the certificate through a vertex map.
Certificate map_certificate(const Certificate& cert, const VertexMap& map);

}  // namespace dcollapse
