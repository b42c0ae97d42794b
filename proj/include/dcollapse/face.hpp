#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dcollapse {

using VertexId = std::uint32_t;

/// A nonempty, strictly increasing list of vertex ids.
///
/// The empty face is never stored; a default-constructed Face is only a
/// placeholder and is rejected by every operation that expects a face.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<VertexId> vertices);
  /// Throws InputError unless `vertices` is nonempty and strictly increasing.
  explicit Face(std::vector<VertexId> vertices);

  /// Sorts the input; throws InputError on duplicates or empty input.
  static Face from_unsorted(std::vector<VertexId> vertices);
  /// No validation. Caller guarantees a strictly increasing nonempty list.
  static Face trusted(std::vector<VertexId> vertices);

  std::span<const VertexId> vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  VertexId operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool contains(VertexId v) const;
  bool is_subset_of(const Face& other) const;

  Face with_vertex(VertexId v) const;
  Face without_vertex(VertexId v) const;

  friend bool operator==(const Face&, const Face&) = default;
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<VertexId> v_;
};

Face face_union(const Face& a, const Face& b);
/// a \ b as a raw vertex list (may be empty).
std::vector<VertexId> face_difference(const Face& a, const Face& b);
/// a ∩ b as a raw vertex list (may be empty).
std::vector<VertexId> face_intersection(const Face& a, const Face& b);

std::string to_string(const Face& f);

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

}  // namespace dcollapse
