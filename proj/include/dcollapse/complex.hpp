#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dcollapse/face.hpp"

namespace dcollapse {

/// Optional display names for vertex ids. Names are unique within a table.
class SymbolTable {
 public:
  /// Throws InputError if `name` already belongs to a different vertex.
  void set(VertexId id, std::string name);
  std::optional<std::string_view> name(VertexId id) const;
  /// The stored name, or the decimal id when the vertex is unnamed.
  std::string display(VertexId id) const;
  std::optional<VertexId> find(std::string_view name) const;
  bool contains_name(std::string_view name) const { return find(name).has_value(); }
  std::size_t size() const { return names_.size(); }
  const std::unordered_map<VertexId, std::string>& entries() const { return names_; }

 private:
  std::unordered_map<VertexId, std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

/// An immutable finite simplicial complex with every nonempty face stored.
///
/// Faces are kept in lexicographic order; a face's index in `faces()` is
/// stable for the lifetime of the value and is used as its id by the
/// collapse machinery. Copies share storage.
class Complex {
 public:
  Complex();

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::span<const Face> faces() const;
  const Face& face(std::size_t index) const { return faces()[index]; }
  std::span<const Face> maximal_faces() const;
  std::optional<std::size_t> index_of(const Face& f) const;
  bool contains(const Face& f) const { return index_of(f).has_value(); }

  /// -1 for the empty complex.
  int dimension() const;
  /// Sorted vertex ids.
  std::span<const VertexId> vertices() const;
  bool has_vertex(VertexId v) const;
  /// One past the largest vertex id (0 when empty).
  VertexId id_bound() const;
  /// Indices into maximal_faces() of the maximal faces containing v.
  std::span<const std::uint32_t> maximal_faces_at(VertexId v) const;
  /// f_vector()[k] = number of k-dimensional faces.
  std::vector<std::size_t> f_vector() const;

  const SymbolTable& symbols() const;
  std::string vertex_name(VertexId v) const { return symbols().display(v); }
  /// Space separated vertex names.
  std::string face_name(const Face& f) const;

  /// Equality of face sets over identical vertex ids (names are ignored).
  friend bool operator==(const Complex& a, const Complex& b);

 private:
  friend class ComplexBuilder;
  struct Data;
  explicit Complex(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Accumulates faces and vertex names, then freezes them into a Complex.
class ComplexBuilder {
 public:
  ComplexBuilder() = default;

  /// Allocates a fresh vertex id, optionally named.
  VertexId new_vertex(std::string name = {});
  /// Ensures ids below `bound` are never handed out by new_vertex.
  void reserve_ids(VertexId bound);
  VertexId next_id() const { return next_id_; }
  void name_vertex(VertexId v, std::string name);
  const SymbolTable& symbols() const { return symbols_; }

  /// Adds `f` together with all its nonempty subsets.
  void add_generator(const Face& f);
  /// Adds exactly `f`; the caller keeps the family downward closed.
  void add_face(const Face& f);
  void add_faces(std::span<const Face> faces);
  bool contains(const Face& f) const { return faces_.count(f) != 0; }
  bool erase(const Face& f) { return faces_.erase(f) != 0; }
  std::size_t size() const { return faces_.size(); }

  /// Throws ConstructionError if the accumulated family is not downward closed.
  Complex build() &&;

 private:
  std::unordered_set<Face, FaceHash> faces_;
  SymbolTable symbols_;
  VertexId next_id_ = 0;
};

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Old vertex id -> new vertex id (kNoVertex for ids not in the domain).
using VertexMap = std::vector<VertexId>;

struct FacePairing {
  struct Pair {
    Face first;
    Face second;
    std::vector<std::pair<VertexId, VertexId>> bijection;
  };
  std::vector<Pair> pairs;

  /// Pairs the i-th smallest vertex of `a` with the i-th smallest of `b`.
  static Pair sorted_order(const Face& a, const Face& b);
};

struct GkGraph {
  std::vector<Face> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool connected() const;
};

struct GlueResult {
  Complex complex;
  VertexMap vertex_map;
};

struct DisjointUnion {
  Complex complex;
  VertexId offset;  ///< L's vertex v becomes v + offset
};

struct Digest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend bool operator==(const Digest&, const Digest&) = default;
};

/// Smallest complex containing every generator.
Complex from_generators(std::span<const Face> generators, SymbolTable symbols = {});
Complex from_generators(std::initializer_list<Face> generators);

/// The full simplex 2^vertices.
Complex full_simplex(const Face& vertices);

/// τ(σ): the unique maximal face containing σ, if exactly one exists.
std::optional<Face> unique_max_coface(const Complex& K, const Face& sigma);
/// All maximal faces of K containing σ.
std::vector<Face> maximal_cofaces(const Complex& K, const Face& sigma);
/// [σ, τ(σ)] in lexicographic order.
std::vector<Face> interval(const Complex& K, const Face& sigma);
/// All faces of K containing σ, in lexicographic order.
std::vector<Face> star(const Complex& K, const Face& sigma);

std::size_t skeleton_distance(const Complex& K, VertexId u, VertexId v);
/// Multi-source BFS on the 1-skeleton; result indexed by vertex id.
std::vector<std::size_t> skeleton_distances(const Complex& K, std::span<const VertexId> sources);
bool are_distant(const Complex& K, const Face& omega, const Face& eta);

/// G_k over an arbitrary set system.
GkGraph g_k_graph(std::span<const Face> family, int k);

GlueResult glue_with_map(const Complex& K, const FacePairing& pairing);
Complex glue(const Complex& K, const FacePairing& pairing);
/// Image of K under a vertex map. Throws GluingError if a face loses vertices.
Complex map_vertices(const Complex& K, const VertexMap& map, SymbolTable symbols);
Face map_face(const Face& f, const VertexMap& map);

DisjointUnion disjoint_union(const Complex& K, const Complex& L, std::string_view l_prefix = {});
Complex suspension(const Complex& K);
Digest canonical_digest(const Complex& K);

/// Faces of K not in L (L need not be a subcomplex of K).
std::vector<Face> face_difference(const Complex& K, const Complex& L);
/// True iff every face of L is a face of K.
bool is_subcomplex(const Complex& L, const Complex& K);
/// Complex spanned by the given faces of K (downward closure).
Complex subcomplex(const Complex& K, std::span<const Face> generators);

}  // namespace dcollapse
