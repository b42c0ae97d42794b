#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcollapse/complex.hpp"

namespace dcollapse {

/// Mutable replay state over a fixed complex: faces are switched off as
/// intervals are collapsed and can be switched back on for backtracking.
///
/// Face ids are indices into base().faces(). The incidence structure is
/// built once in CSR form; `down` holds immediate subfaces, `up` immediate
/// cofaces.
class Workspace {
 public:
  explicit Workspace(Complex K);

  const Complex& base() const { return base_; }
  std::size_t face_count() const { return alive_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  bool alive(std::uint32_t f) const { return alive_[f] != 0; }
  bool empty() const { return alive_count_ == 0; }
  const Face& face(std::uint32_t f) const { return base_.face(f); }
  std::optional<std::uint32_t> id_of(const Face& f) const;

  std::span<const std::uint32_t> up(std::uint32_t f) const {
    return {up_ids_.data() + up_off_[f], up_ids_.data() + up_off_[f + 1]};
  }
  std::span<const std::uint32_t> down(std::uint32_t f) const {
    return {down_ids_.data() + down_off_[f], down_ids_.data() + down_off_[f + 1]};
  }

  /// τ(σ) among the alive faces, if σ has a unique alive maximal coface.
  std::optional<std::uint32_t> collapse_target(std::uint32_t sigma) const;
  bool is_collapsible(std::uint32_t sigma, int d) const {
    return face(sigma).dim() <= d - 1 && alive(sigma) && collapse_target(sigma).has_value();
  }
  bool is_maximal(std::uint32_t f) const;
  /// Alive maximal faces containing f.
  std::vector<Face> maximal_cofaces(std::uint32_t f) const;

  /// Removes the alive star of σ and appends the removed ids to `removed`.
  /// For a collapsible σ that star is exactly [σ, τ(σ)].
  void collapse(std::uint32_t sigma, std::vector<std::uint32_t>& removed);
  void restore(std::span<const std::uint32_t> removed);

  /// Order-independent 128-bit key of the alive set.
  std::pair<std::uint64_t, std::uint64_t> key() const { return {key_hi_, key_lo_}; }

  Complex snapshot() const;

 private:
  void toggle(std::uint32_t f);

  Complex base_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::vector<std::uint32_t> down_off_, down_ids_, up_off_, up_ids_;
  std::uint64_t key_hi_ = 0, key_lo_ = 0;
};

}  // namespace dcollapse
