#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcollapse/collapse.hpp"
#include "dcollapse/complex.hpp"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/io.hpp"
#include "dcollapse/sat.hpp"

namespace dcollapse {

/// A glued connector inside F.
struct Connection {
  std::string id;  ///< O+3, O-1, I2.1, I2.2, T
  Face sigma;
  std::vector<Face> gamma;
  std::vector<Face> image;  ///< sorted
  VertexMap vertex_map;     ///< connector vertex -> F vertex
  int t() const { return static_cast<int>(gamma.size()); }
};

/// One literal slot of a clause gadget.
struct ClauseSlot {
  int var = 0;  ///< 1-based
  bool positive = true;
  Face lambda;
  Face beta;
};

struct ReductionOutput {
  int d = 0;
  CnfFormula formula;
  Complex complex;
  std::vector<SimplicialGadget> variables;  ///< V_1..V_m
  std::vector<SimplicialGadget> clauses;    ///< G^1..G^n
  std::vector<SimplicialGadget> merges;     ///< M^2..M^n at index i-2
  std::vector<std::vector<ClauseSlot>> slots;  ///< per clause, ascending variable
  std::vector<Connection> connections;
  std::map<std::string, std::size_t> connection_index;
  double seconds = 0;

  const Connection& connection(const std::string& id) const;
  const SimplicialGadget& merge(int i) const { return merges.at(static_cast<std::size_t>(i - 2)); }
  /// Occurrence connections whose γ faces lie in clause gadget G^i (1-based).
  std::vector<std::string> occurrences_of_clause(int i) const;
  /// Role tags mapped to faces, for .cplx headers.
  HeaderList headers() const;
};

/// F(Φ) for d >= 4. Throws DomainError for smaller d.
ReductionOutput build_reduction(const CnfFormula& formula, int d);

/// The satisfiable-direction collapsing of F, phase by phase.
/// Throws DomainError when the assignment does not satisfy the formula.
Certificate certificate_from_assignment(const ReductionOutput& out, const Assignment& assignment);

enum class Activation { intact, activated };

/// activated iff some face of the connection's image is missing from residue.
Activation activation_status(const ReductionOutput& out, const Complex& residue, const std::string& id);

struct ActivationReport {
  bool steps_ok = false;
  bool opposite_occurrences_ok = true;  ///< never both O+_j and O-_j before T
  bool merge_needs_occurrence_ok = true;  ///< I^i_1 activated implies an occurrence of G^i activated
  std::string violation;
  std::size_t tidy_step = 0;  ///< first step touching T, or the certificate length
};

/// Replays the certificate on F and checks the activation invariants after
/// every step preceding the first change to T.
ActivationReport trace_activation(const ReductionOutput& out, const Certificate& cert);

}  // namespace dcollapse
