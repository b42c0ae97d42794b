// Exhaustive d-collapsibility search.
//
// Two reductions keep the tree small without losing exactness:
//  * a maximal face of dimension <= d-1 can always be removed first; if the
//    complex was d-collapsible it stays so (the removal can be spliced into
//    any collapsing at the point where that face disappears);
//  * otherwise only (d-1)-dimensional collapsible faces need to be tried,
//    because every collapsing can be reordered so that lower collapses of
//    non-maximal faces are replaced by (d-1)-dimensional ones.
// Residues proven non-collapsible are remembered by a Zobrist key of their
// alive face set.

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "dcollapse/collapse.hpp"
#include "dcollapse/errors.hpp"
#include "dcollapse/kernels.hpp"
#include "dcollapse/workspace.hpp"

namespace dcollapse {

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
    return static_cast<std::size_t>(k.first ^ (k.second * 0x9e3779b97f4a7c15ULL));
  }
};

constexpr std::size_t kMemoCap = std::size_t{1} << 22;

struct SearchContext {
  int d;
  const SearchOptions& options;
  std::uint64_t expansions = 0;
  std::mt19937_64 rng;
};

class ComponentSearch {
 public:
  ComponentSearch(const Complex& C, SearchContext& ctx) : ws_(C), ctx_(ctx) {}

  Answer run(std::vector<CollapseStep>& out);

 private:
  struct Frame {
    std::vector<std::uint32_t> removed;
    std::size_t steps_before = 0;
    std::vector<std::uint32_t> children;
    std::size_t next = 0;
    std::pair<std::uint64_t, std::uint64_t> key;
  };

  void record(std::uint32_t sigma, std::uint32_t tau) { steps_.push_back({ws_.face(sigma), ws_.face(tau)}); }
  void force(std::vector<std::uint32_t> seeds, std::vector<std::uint32_t>& removed);
  void undo(Frame& f) {
    ws_.restore(f.removed);
    steps_.resize(f.steps_before);
  }
  std::vector<std::uint32_t> children();

  Workspace ws_;
  SearchContext& ctx_;
  std::vector<CollapseStep> steps_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, KeyHash> dead_;
};

void ComponentSearch::force(std::vector<std::uint32_t> seeds, std::vector<std::uint32_t>& removed) {
  const int d = ctx_.d;
  while (!seeds.empty()) {
    std::uint32_t f = seeds.back();
    seeds.pop_back();
    if (!ws_.alive(f) || ws_.face(f).dim() > d - 1 || !ws_.is_maximal(f)) continue;
    record(f, f);
    std::size_t before = removed.size();
    ws_.collapse(f, removed);
    for (std::size_t i = before; i < removed.size(); ++i)
      for (std::uint32_t s : ws_.down(removed[i])) seeds.push_back(s);
  }
}

std::vector<std::uint32_t> ComponentSearch::children() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id : kernels::collapsible_ids(ws_, ctx_.d))
    if (ws_.face(id).dim() == ctx_.d - 1) out.push_back(id);
  if (ctx_.options.shuffle_seed) std::shuffle(out.begin(), out.end(), ctx_.rng);
  return out;
}

Answer ComponentSearch::run(std::vector<CollapseStep>& out) {
  std::vector<Frame> stack;
  Frame root;
  std::vector<std::uint32_t> all(ws_.face_count());
  std::iota(all.begin(), all.end(), 0u);
  std::reverse(all.begin(), all.end());
  force(std::move(all), root.removed);

  // Returns false when the node is a leaf (solved or dead); `solved` tells which.
  auto open = [&](Frame& f, bool& solved, bool& budget_hit) {
    solved = ws_.empty();
    if (solved) return false;
    f.key = ws_.key();
    if (dead_.count(f.key)) return false;
    if (++ctx_.expansions > ctx_.options.budget) {
      budget_hit = true;
      return false;
    }
    f.children = children();
    if (f.children.empty()) {
      if (dead_.size() < kMemoCap) dead_.insert(f.key);
      return false;
    }
    return true;
  };

  bool solved = false, budget_hit = false;
  if (!open(root, solved, budget_hit)) {
    if (solved) {
      out.insert(out.end(), steps_.begin(), steps_.end());
      return Answer::yes;
    }
    return budget_hit ? Answer::unknown : Answer::no;
  }
  stack.push_back(std::move(root));

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.children.size()) {
      if (dead_.size() < kMemoCap) dead_.insert(top.key);
      undo(top);
      stack.pop_back();
      continue;
    }
    std::uint32_t c = top.children[top.next++];
    auto tau = ws_.collapse_target(c);
    if (!tau) continue;

    Frame child;
    child.steps_before = steps_.size();
    record(c, *tau);
    ws_.collapse(c, child.removed);
    std::vector<std::uint32_t> seeds;
    for (std::uint32_t r : child.removed)
      for (std::uint32_t s : ws_.down(r)) seeds.push_back(s);
    force(std::move(seeds), child.removed);

    if (open(child, solved, budget_hit)) {
      stack.push_back(std::move(child));
      continue;
    }
    if (solved) {
      out.insert(out.end(), steps_.begin(), steps_.end());
      return Answer::yes;
    }
    if (budget_hit) return Answer::unknown;
    undo(child);
  }
  return Answer::no;
}

std::vector<Complex> components(const Complex& K) {
  const VertexId n = K.id_bound();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Face& m : K.maximal_faces())
    for (VertexId v : m) parent[find(v)] = find(m[0]);
  std::vector<std::vector<Face>> groups;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (const Face& m : K.maximal_faces()) {
    VertexId r = find(m[0]);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(m);
  }
  std::vector<Complex> out;
  if (groups.size() <= 1) {
    if (!K.empty()) out.push_back(K);
    return out;
  }
  for (const auto& g : groups) out.push_back(subcomplex(K, g));
  return out;
}

}  // namespace

Verdict decide(const Complex& K, int d, const SearchOptions& options) {
  if (d < 1) throw DomainError("d must be at least 1, got " + std::to_string(d));
  SearchContext ctx{d, options, 0, std::mt19937_64(options.shuffle_seed.value_or(0))};
  Verdict v;
  Certificate cert{d, {}};
  std::vector<Complex> parts;
  if (options.split_components) parts = components(K);
  else if (!K.empty()) parts.push_back(K);

  bool unknown = false;
  for (const Complex& part : parts) {
    ComponentSearch search(part, ctx);
    Answer a = search.run(cert.steps);
    if (a == Answer::no) {
      v.answer = Answer::no;
      v.expansions = ctx.expansions;
      return v;
    }
    if (a == Answer::unknown) {
      unknown = true;
      break;
    }
  }
  v.expansions = ctx.expansions;
  if (unknown) {
    v.answer = Answer::unknown;
    v.exact = false;
    return v;
  }
  v.answer = Answer::yes;
  v.certificate = std::move(cert);
  return v;
}

}  // namespace dcollapse
