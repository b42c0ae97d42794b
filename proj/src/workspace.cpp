#include "dcollapse/workspace.hpp"

#include <algorithm>

#include "dcollapse/errors.hpp"

namespace dcollapse {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Workspace::Workspace(Complex K) : base_(std::move(K)) {
  const std::size_t n = base_.size();
  alive_.assign(n, 1);
  alive_count_ = n;

  down_off_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s = base_.face(i).size();
    down_off_[i + 1] = down_off_[i] + static_cast<std::uint32_t>(s == 1 ? 0 : s);
  }
  down_ids_.resize(down_off_[n]);
  const auto sn = static_cast<std::int64_t>(n);
  // Independent hash lookups per face; this is the expensive part on big inputs.
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < sn; ++i) {
    const Face& f = base_.face(static_cast<std::size_t>(i));
    if (f.size() == 1) continue;
    std::uint32_t at = down_off_[i];
    for (VertexId v : f) down_ids_[at++] = static_cast<std::uint32_t>(*base_.index_of(f.without_vertex(v)));
  }

  up_off_.assign(n + 1, 0);
  for (std::uint32_t g : down_ids_) ++up_off_[g + 1];
  for (std::size_t i = 0; i < n; ++i) up_off_[i + 1] += up_off_[i];
  up_ids_.resize(down_ids_.size());
  std::vector<std::uint32_t> fill(up_off_.begin(), up_off_.end() - 1);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t g : down(i)) up_ids_[fill[g]++] = i;

  for (std::uint32_t i = 0; i < n; ++i) {
    key_hi_ ^= splitmix(2 * std::uint64_t{i});
    key_lo_ ^= splitmix(2 * std::uint64_t{i} + 1);
  }
}

std::optional<std::uint32_t> Workspace::id_of(const Face& f) const {
  auto i = base_.index_of(f);
  if (!i) return std::nullopt;
  return static_cast<std::uint32_t>(*i);
}

std::optional<std::uint32_t> Workspace::collapse_target(std::uint32_t sigma) const {
  if (!alive(sigma)) return std::nullopt;
  const Face& s = face(sigma);
  std::vector<VertexId> extra;
  for (std::uint32_t c : up(sigma))
    if (alive(c))
      for (VertexId v : face(c))
        if (!s.contains(v)) {
          extra.push_back(v);
          break;
        }
  if (extra.empty()) return sigma;
  if (extra.size() == 1) {
    for (std::uint32_t c : up(sigma))
      if (alive(c)) return c;
  }
  // σ has a unique maximal coface iff σ together with all its alive
  // one-vertex extensions is itself an alive face.
  std::vector<VertexId> u(s.begin(), s.end());
  u.insert(u.end(), extra.begin(), extra.end());
  std::sort(u.begin(), u.end());
  auto id = base_.index_of(Face::trusted(std::move(u)));
  if (!id || !alive(static_cast<std::uint32_t>(*id))) return std::nullopt;
  return static_cast<std::uint32_t>(*id);
}

bool Workspace::is_maximal(std::uint32_t f) const {
  for (std::uint32_t c : up(f))
    if (alive(c)) return false;
  return true;
}

std::vector<Face> Workspace::maximal_cofaces(std::uint32_t f) const {
  std::vector<Face> out;
  std::vector<std::uint32_t> stack{f};
  std::vector<std::uint32_t> seen{f};
  while (!stack.empty()) {
    std::uint32_t g = stack.back();
    stack.pop_back();
    bool top = true;
    for (std::uint32_t c : up(g)) {
      if (!alive(c)) continue;
      top = false;
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
        seen.push_back(c);
        stack.push_back(c);
      }
    }
    if (top) out.push_back(face(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Workspace::toggle(std::uint32_t f) {
  key_hi_ ^= splitmix(2 * std::uint64_t{f});
  key_lo_ ^= splitmix(2 * std::uint64_t{f} + 1);
}

void Workspace::collapse(std::uint32_t sigma, std::vector<std::uint32_t>& removed) {
  const std::size_t first = removed.size();
  alive_[sigma] = 0;
  removed.push_back(sigma);
  for (std::size_t at = first; at < removed.size(); ++at)
    for (std::uint32_t c : up(removed[at]))
      if (alive_[c]) {
        alive_[c] = 0;
        removed.push_back(c);
      }
  for (std::size_t at = first; at < removed.size(); ++at) toggle(removed[at]);
  alive_count_ -= removed.size() - first;
}

void Workspace::restore(std::span<const std::uint32_t> removed) {
  for (std::uint32_t f : removed) {
    alive_[f] = 1;
    toggle(f);
  }
  alive_count_ += removed.size();
}

Complex Workspace::snapshot() const {
  ComplexBuilder b;
  for (const auto& [v, n] : base_.symbols().entries()) b.name_vertex(v, n);
  for (std::uint32_t i = 0; i < alive_.size(); ++i)
    if (alive_[i]) b.add_face(face(i));
  return std::move(b).build();
}

}  // namespace dcollapse
