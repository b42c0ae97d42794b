#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcollapse/complex.hpp"

namespace dcollapse {

/// One elementary d-collapse: remove [σ, τ(σ)].
struct CollapseStep {
  Face sigma;
  std::optional<Face> expected_tau;

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct Certificate {
  int d = 1;
  std::vector<CollapseStep> steps;

  void append(const Certificate& other);
  void append(const Face& sigma, std::optional<Face> tau = std::nullopt);
  std::size_t size() const { return steps.size(); }
};

enum class Answer { yes, no, unknown };
const char* to_string(Answer a);

struct Verdict {
  Answer answer = Answer::unknown;
  /// False for a greedy "no" at d >= 3, where greedy is not complete.
  bool exact = true;
  std::optional<Certificate> certificate;
  std::optional<Complex> stuck_witness;
  std::uint64_t expansions = 0;

  bool collapsible() const { return answer == Answer::yes; }
};

struct ReplayResult {
  bool steps_ok = true;
  std::optional<std::size_t> failed_step;  ///< zero-based
  std::string message;
  std::vector<Face> cofaces_found;  ///< maximal cofaces of the failing σ
  Complex residue;                  ///< complex reached after the valid prefix
};

struct CheckResult {
  bool ok = false;
  std::optional<std::size_t> failed_step;  ///< zero-based; absent if only the residue is nonempty
  std::string message;
  std::vector<Face> cofaces_found;
};

bool is_d_collapsible_face(const Complex& K, const Face& sigma, int d);
Complex elementary_collapse(const Complex& K, const Face& sigma, int d);
std::vector<Face> collapsible_faces(const Complex& K, int d);

enum class GreedyOrder { lexicographic, seeded_random };

struct GreedyOptions {
  GreedyOrder order = GreedyOrder::lexicographic;
  std::uint64_t seed = 0;
  /// Collapsed first when it is d-collapsible in the input.
  std::optional<Face> prefer;
};

Verdict greedy_decide(const Complex& K, int d, const GreedyOptions& options = {});

struct SearchOptions {
  std::uint64_t budget = 10'000'000;  ///< node expansions
  /// Shuffles child order; the verdict must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
  bool split_components = true;
};

Verdict decide(const Complex& K, int d, const SearchOptions& options = {});

/// Replays the steps; stops at the first invalid one.
ReplayResult replay_certificate(const Complex& K, const Certificate& cert);
/// Valid steps that end at the empty complex.
CheckResult check_certificate(const Complex& K, const Certificate& cert);

}  // namespace dcollapse
