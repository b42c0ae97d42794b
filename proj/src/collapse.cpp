#include "dcollapse/collapse.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dcollapse/errors.hpp"
#include "dcollapse/kernels.hpp"
#include "dcollapse/workspace.hpp"

namespace dcollapse {

void Certificate::append(const Certificate& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

void Certificate::append(const Face& sigma, std::optional<Face> tau) {
  steps.push_back({sigma, std::move(tau)});
}

const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

namespace {

void require_d(int d) {
  if (d < 1) throw DomainError("d must be at least 1, got " + std::to_string(d));
}

std::string cofaces_text(const std::vector<Face>& cofaces) {
  std::string out;
  for (const Face& f : cofaces) {
    if (!out.empty()) out += ", ";
    out += to_string(f);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

bool is_d_collapsible_face(const Complex& K, const Face& sigma, int d) {
  require_d(d);
  if (!K.contains(sigma)) throw DomainError("face " + to_string(sigma) + " is not in the complex");
  return sigma.dim() <= d - 1 && unique_max_coface(K, sigma).has_value();
}

Complex elementary_collapse(const Complex& K, const Face& sigma, int d) {
  if (!is_d_collapsible_face(K, sigma, d))
    throw CollapseError("face " + to_string(sigma) + " is not " + std::to_string(d) +
                        "-collapsible; maximal cofaces: " + cofaces_text(maximal_cofaces(K, sigma)));
  Face tau = *unique_max_coface(K, sigma);
  ComplexBuilder b;
  for (const auto& [v, n] : K.symbols().entries()) b.name_vertex(v, n);
  for (const Face& f : K.faces())
    if (!(sigma.is_subset_of(f) && f.is_subset_of(tau))) b.add_face(f);
  return std::move(b).build();
}

std::vector<Face> collapsible_faces(const Complex& K, int d) {
  require_d(d);
  Workspace ws(K);
  std::vector<Face> out;
  for (std::uint32_t id : kernels::collapsible_ids(ws, d)) out.push_back(ws.face(id));
  return out;
}

// ---------------------------------------------------------------- greedy

namespace {

// Candidate faces for the greedy walk; ordered or sampled depending on policy.
class CandidatePool {
 public:
  CandidatePool(GreedyOrder order, std::uint64_t seed, std::size_t n)
      : order_(order), rng_(seed), pos_(n, kAbsent) {}

  void insert(std::uint32_t f) {
    if (order_ == GreedyOrder::lexicographic) {
      sorted_.insert(f);
    } else if (pos_[f] == kAbsent) {
      pos_[f] = items_.size();
      items_.push_back(f);
    }
  }

  void erase(std::uint32_t f) {
    if (order_ == GreedyOrder::lexicographic) {
      sorted_.erase(f);
    } else if (pos_[f] != kAbsent) {
      std::size_t at = pos_[f];
      items_[at] = items_.back();
      pos_[items_[at]] = at;
      items_.pop_back();
      pos_[f] = kAbsent;
    }
  }

  bool empty() const { return order_ == GreedyOrder::lexicographic ? sorted_.empty() : items_.empty(); }

  std::uint32_t pick() {
    if (order_ == GreedyOrder::lexicographic) return *sorted_.begin();
    std::uniform_int_distribution<std::size_t> dist(0, items_.size() - 1);
    return items_[dist(rng_)];
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  GreedyOrder order_;
  std::mt19937_64 rng_;
  std::set<std::uint32_t> sorted_;
  std::vector<std::uint32_t> items_;
  std::vector<std::size_t> pos_;
};

}  // namespace

Verdict greedy_decide(const Complex& K, int d, const GreedyOptions& options) {
  require_d(d);
  Workspace ws(K);
  CandidatePool pool(options.order, options.seed, ws.face_count());
  for (std::uint32_t id : kernels::collapsible_ids(ws, d)) pool.insert(id);

  Verdict v;
  Certificate cert{d, {}};
  std::vector<std::uint32_t> removed;
  std::vector<std::uint32_t> stamp(ws.face_count(), 0);
  std::uint32_t round = 0;

  auto step = [&](std::uint32_t sigma, std::uint32_t tau) {
    cert.append(ws.face(sigma), ws.face(tau));
    removed.clear();
    ws.collapse(sigma, removed);
    ++v.expansions;
    // Only faces below a removed face have a changed star.
    ++round;
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t r : removed) {
      pool.erase(r);
      for (std::uint32_t s : ws.down(r))
        if (ws.alive(s) && stamp[s] != round) {
          stamp[s] = round;
          frontier.push_back(s);
        }
    }
    for (std::size_t at = 0; at < frontier.size(); ++at) {
      std::uint32_t s = frontier[at];
      if (ws.is_collapsible(s, d)) pool.insert(s);
      else pool.erase(s);
      for (std::uint32_t t : ws.down(s))
        if (ws.alive(t) && stamp[t] != round) {
          stamp[t] = round;
          frontier.push_back(t);
        }
    }
  };

  if (options.prefer) {
    auto id = ws.id_of(*options.prefer);
    if (id && ws.is_collapsible(*id, d)) step(*id, *ws.collapse_target(*id));
  }
  while (!ws.empty() && !pool.empty()) {
    std::uint32_t sigma = pool.pick();
    auto tau = ws.is_collapsible(sigma, d) ? ws.collapse_target(sigma) : std::nullopt;
    if (!tau) {
      pool.erase(sigma);
      continue;
    }
    step(sigma, *tau);
  }

  if (ws.empty()) {
    v.answer = Answer::yes;
    v.certificate = std::move(cert);
  } else {
    v.answer = Answer::no;
    v.exact = d <= 2;
    v.stuck_witness = ws.snapshot();
  }
  return v;
}

// ---------------------------------------------------------------- checking

ReplayResult replay_certificate(const Complex& K, const Certificate& cert) {
  require_d(cert.d);
  Workspace ws(K);
  ReplayResult r;
  std::vector<std::uint32_t> removed;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CollapseStep& s = cert.steps[i];
    auto fail = [&](std::string why) {
      r.steps_ok = false;
      r.failed_step = i;
      r.message = "step " + std::to_string(i + 1) + " (" + K.face_name(s.sigma) + "): " + why;
    };
    if (s.sigma.dim() > cert.d - 1) {
      fail("dimension " + std::to_string(s.sigma.dim()) + " exceeds d-1");
      break;
    }
    auto id = ws.id_of(s.sigma);
    if (!id || !ws.alive(*id)) {
      fail("face is not in the current complex");
      break;
    }
    auto tau = ws.collapse_target(*id);
    if (!tau) {
      r.cofaces_found = ws.maximal_cofaces(*id);
      fail("no unique maximal coface; found " + cofaces_text(r.cofaces_found));
      break;
    }
    if (s.expected_tau && ws.face(*tau) != *s.expected_tau) {
      r.cofaces_found = {ws.face(*tau)};
      fail("maximal coface is " + to_string(ws.face(*tau)) + ", expected " + to_string(*s.expected_tau));
      break;
    }
    removed.clear();
    ws.collapse(*id, removed);
  }
  r.residue = ws.snapshot();
  return r;
}

CheckResult check_certificate(const Complex& K, const Certificate& cert) {
  ReplayResult r = replay_certificate(K, cert);
  CheckResult c;
  c.failed_step = r.failed_step;
  c.cofaces_found = std::move(r.cofaces_found);
  if (!r.steps_ok) {
    c.message = std::move(r.message);
    return c;
  }
  if (!r.residue.empty()) {
    c.message = "certificate ends with " + std::to_string(r.residue.size()) + " faces left";
    return c;
  }
  c.ok = true;
  return c;
}

}  // namespace dcollapse
