#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dcollapse {

/// A 3-CNF formula. Literals are DIMACS style: +j for x_j, -j for ¬x_j.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
  /// True when a single input clause was duplicated to reach two clauses.
  bool padded = false;

  std::size_t num_clauses() const { return clauses.size(); }
};

/// Assignment indexed by variable - 1.
using Assignment = std::vector<bool>;

/// Parses DIMACS CNF. Every clause must have exactly three distinct
/// variables; a lone clause is duplicated. Errors carry line numbers.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_text(const std::string& text);
CnfFormula parse_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);

/// Brute force over all assignments; BudgetError above 30 variables.
std::optional<Assignment> sat_oracle(const CnfFormula& f);

/// "TFFT" style rendering.
std::string to_string(const Assignment& a);
/// Accepts T/F/1/0 characters, optionally comma separated.
Assignment parse_assignment(const std::string& text);

}  // namespace dcollapse
