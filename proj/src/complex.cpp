#include "dcollapse/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "dcollapse/errors.hpp"

namespace dcollapse {

// ---------------------------------------------------------------- symbols

void SymbolTable::set(VertexId id, std::string name) {
  auto hit = ids_.find(name);
  if (hit != ids_.end()) {
    if (hit->second == id) return;
    throw InputError("vertex name '" + name + "' is already used");
  }
  auto old = names_.find(id);
  if (old != names_.end()) ids_.erase(old->second);
  ids_.emplace(name, id);
  names_[id] = std::move(name);
}

std::optional<std::string_view> SymbolTable::name(VertexId id) const {
  auto it = names_.find(id);
  if (it == names_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::string SymbolTable::display(VertexId id) const {
  auto it = names_.find(id);
  return it == names_.end() ? std::to_string(id) : it->second;
}

std::optional<VertexId> SymbolTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- complex

struct Complex::Data {
  std::vector<Face> faces;
  std::unordered_map<Face, std::uint32_t, FaceHash> index;
  std::vector<Face> maximal;
  std::vector<VertexId> vertices;
  std::vector<std::vector<std::uint32_t>> max_at;
  int dim = -1;
  SymbolTable symbols;
};

Complex::Complex() : data_(nullptr) {}
Complex::Complex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

std::size_t Complex::size() const { return data_ ? data_->faces.size() : 0; }

std::span<const Face> Complex::faces() const {
  if (!data_) return {};
  return data_->faces;
}

std::span<const Face> Complex::maximal_faces() const {
  if (!data_) return {};
  return data_->maximal;
}

std::optional<std::size_t> Complex::index_of(const Face& f) const {
  if (!data_ || f.empty()) return std::nullopt;
  auto it = data_->index.find(f);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int Complex::dimension() const { return data_ ? data_->dim : -1; }

std::span<const VertexId> Complex::vertices() const {
  if (!data_) return {};
  return data_->vertices;
}

bool Complex::has_vertex(VertexId v) const {
  auto vs = vertices();
  return std::binary_search(vs.begin(), vs.end(), v);
}

VertexId Complex::id_bound() const {
  auto vs = vertices();
  return vs.empty() ? 0 : vs.back() + 1;
}

std::span<const std::uint32_t> Complex::maximal_faces_at(VertexId v) const {
  if (!data_ || v >= data_->max_at.size()) return {};
  return data_->max_at[v];
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 1), 0);
  for (const Face& f : faces()) ++out[f.size() - 1];
  return out;
}

const SymbolTable& Complex::symbols() const {
  static const SymbolTable none;
  return data_ ? data_->symbols : none;
}

std::string Complex::face_name(const Face& f) const {
  std::string out;
  for (VertexId v : f) {
    if (!out.empty()) out += ' ';
    out += vertex_name(v);
  }
  return out;
}

bool operator==(const Complex& a, const Complex& b) {
  auto fa = a.faces();
  auto fb = b.faces();
  return std::equal(fa.begin(), fa.end(), fb.begin(), fb.end());
}

// ---------------------------------------------------------------- builder

VertexId ComplexBuilder::new_vertex(std::string name) {
  VertexId v = next_id_++;
  if (!name.empty()) symbols_.set(v, std::move(name));
  return v;
}

void ComplexBuilder::reserve_ids(VertexId bound) { next_id_ = std::max(next_id_, bound); }

void ComplexBuilder::name_vertex(VertexId v, std::string name) {
  symbols_.set(v, std::move(name));
  reserve_ids(v + 1);
}

void ComplexBuilder::add_generator(const Face& f) {
  if (f.empty()) throw InputError("empty generator");
  if (faces_.count(f)) return;
  reserve_ids(f.vertices().back() + 1);
  // Subsets of a present face are present, so the walk stops there.
  std::vector<Face> stack{f};
  while (!stack.empty()) {
    Face g = std::move(stack.back());
    stack.pop_back();
    if (!faces_.insert(g).second) continue;
    if (g.size() == 1) continue;
    for (VertexId v : g) {
      Face h = g.without_vertex(v);
      if (!faces_.count(h)) stack.push_back(std::move(h));
    }
  }
}

void ComplexBuilder::add_face(const Face& f) {
  if (f.empty()) throw InputError("empty face");
  reserve_ids(f.vertices().back() + 1);
  faces_.insert(f);
}

void ComplexBuilder::add_faces(std::span<const Face> faces) {
  for (const Face& f : faces) add_face(f);
}

Complex ComplexBuilder::build() && {
  if (faces_.empty()) return Complex();
  auto data = std::make_shared<Complex::Data>();
  data->faces.assign(faces_.begin(), faces_.end());
  faces_.clear();
  std::sort(data->faces.begin(), data->faces.end());
  data->index.reserve(data->faces.size());
  for (std::uint32_t i = 0; i < data->faces.size(); ++i) data->index.emplace(data->faces[i], i);

  std::vector<char> covered(data->faces.size(), 0);
  for (const Face& f : data->faces) {
    data->dim = std::max(data->dim, f.dim());
    if (f.size() == 1) {
      data->vertices.push_back(f[0]);
      continue;
    }
    for (VertexId v : f) {
      auto it = data->index.find(f.without_vertex(v));
      if (it == data->index.end())
        throw ConstructionError("face family is not downward closed at " + to_string(f));
      covered[it->second] = 1;
    }
  }
  std::sort(data->vertices.begin(), data->vertices.end());
  VertexId bound = data->vertices.empty() ? 0 : data->vertices.back() + 1;
  data->max_at.resize(bound);
  for (std::size_t i = 0; i < data->faces.size(); ++i) {
    if (covered[i]) continue;
    auto m = static_cast<std::uint32_t>(data->maximal.size());
    data->maximal.push_back(data->faces[i]);
    for (VertexId v : data->faces[i]) data->max_at[v].push_back(m);
  }
  // Keep only the names of vertices that are present.
  for (VertexId v : data->vertices)
    if (auto n = symbols_.name(v)) data->symbols.set(v, std::string(*n));
  return Complex(std::move(data));
}

// ---------------------------------------------------------------- queries

Complex from_generators(std::span<const Face> generators, SymbolTable symbols) {
  ComplexBuilder b;
  for (const auto& [v, n] : symbols.entries()) b.name_vertex(v, n);
  for (const Face& g : generators) b.add_generator(g);
  return std::move(b).build();
}

Complex from_generators(std::initializer_list<Face> generators) {
  return from_generators(std::span<const Face>(generators.begin(), generators.size()));
}

Complex full_simplex(const Face& vertices) {
  ComplexBuilder b;
  b.add_generator(vertices);
  return std::move(b).build();
}

namespace {

void require_face(const Complex& K, const Face& f) {
  if (!K.contains(f)) throw DomainError("face " + to_string(f) + " is not in the complex");
}

// Maximal faces containing sigma, scanning the shortest incidence list.
template <class Fn>
void for_each_maximal_coface(const Complex& K, const Face& sigma, Fn&& fn) {
  VertexId best = sigma[0];
  for (VertexId v : sigma)
    if (K.maximal_faces_at(v).size() < K.maximal_faces_at(best).size()) best = v;
  auto maxes = K.maximal_faces();
  for (std::uint32_t m : K.maximal_faces_at(best))
    if (sigma.is_subset_of(maxes[m]))
      if (!fn(maxes[m])) return;
}

// All faces sigma ∪ S for S ⊆ extra, appended to out.
void enumerate_between(const Face& sigma, const std::vector<VertexId>& extra, std::vector<Face>& out) {
  const std::size_t n = extra.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> v(sigma.begin(), sigma.end());
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) v.push_back(extra[i]);
    std::sort(v.begin(), v.end());
    out.push_back(Face::trusted(std::move(v)));
  }
}

}  // namespace

std::optional<Face> unique_max_coface(const Complex& K, const Face& sigma) {
  require_face(K, sigma);
  const Face* found = nullptr;
  bool many = false;
  for_each_maximal_coface(K, sigma, [&](const Face& m) {
    if (found) {
      many = true;
      return false;
    }
    found = &m;
    return true;
  });
  if (many || !found) return std::nullopt;
  return *found;
}

std::vector<Face> maximal_cofaces(const Complex& K, const Face& sigma) {
  require_face(K, sigma);
  std::vector<Face> out;
  for_each_maximal_coface(K, sigma, [&](const Face& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> interval(const Complex& K, const Face& sigma) {
  auto tau = unique_max_coface(K, sigma);
  if (!tau) throw DomainError("face " + to_string(sigma) + " has no unique maximal coface");
  std::vector<Face> out;
  enumerate_between(sigma, face_difference(*tau, sigma), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> star(const Complex& K, const Face& sigma) {
  std::set<Face> acc;
  for (const Face& m : maximal_cofaces(K, sigma)) {
    std::vector<Face> part;
    enumerate_between(sigma, face_difference(m, sigma), part);
    acc.insert(part.begin(), part.end());
  }
  return {acc.begin(), acc.end()};
}

std::vector<std::size_t> skeleton_distances(const Complex& K, std::span<const VertexId> sources) {
  const VertexId n = K.id_bound();
  std::vector<std::vector<VertexId>> adj(n);
  for (const Face& f : K.faces())
    if (f.size() == 2) {
      adj[f[0]].push_back(f[1]);
      adj[f[1]].push_back(f[0]);
    }
  std::vector<std::size_t> dist(n, kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (!K.has_vertex(s)) throw DomainError("unknown vertex " + std::to_string(s));
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj[u])
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::size_t skeleton_distance(const Complex& K, VertexId u, VertexId v) {
  if (!K.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  VertexId src[] = {u};
  return skeleton_distances(K, src)[v];
}

bool are_distant(const Complex& K, const Face& omega, const Face& eta) {
  require_face(K, omega);
  require_face(K, eta);
  auto dist = skeleton_distances(K, omega.vertices());
  return std::all_of(eta.begin(), eta.end(), [&](VertexId v) { return dist[v] >= 3; });
}

bool GkGraph::connected() const {
  if (nodes.empty()) return true;
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = nodes.size();
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

GkGraph g_k_graph(std::span<const Face> family, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  GkGraph g;
  std::unordered_set<Face, FaceHash> members(family.begin(), family.end());
  for (const Face& f : family)
    if (f.dim() == k) g.nodes.push_back(f);
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  if (k == 0) return g;  // the empty intersection is never a stored face
  std::unordered_map<Face, std::vector<std::size_t>, FaceHash> by_ridge;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (VertexId v : g.nodes[i]) {
      Face r = g.nodes[i].without_vertex(v);
      if (members.count(r)) by_ridge[r].push_back(i);
    }
  for (auto& [ridge, ids] : by_ridge)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) g.edges.emplace_back(ids[a], ids[b]);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// ---------------------------------------------------------------- gluing

FacePairing::Pair FacePairing::sorted_order(const Face& a, const Face& b) {
  if (a.size() != b.size()) throw DomainError("paired faces differ in size");
  Pair p{a, b, {}};
  for (std::size_t i = 0; i < a.size(); ++i) p.bijection.emplace_back(a[i], b[i]);
  return p;
}

Face map_face(const Face& f, const VertexMap& map) {
  std::vector<VertexId> v;
  v.reserve(f.size());
  for (VertexId x : f) {
    if (x >= map.size() || map[x] == kNoVertex)
      throw DomainError("vertex " + std::to_string(x) + " is outside the map");
    v.push_back(map[x]);
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw GluingError("identification merges two vertices of face " + to_string(f));
  return Face::trusted(std::move(v));
}

Complex map_vertices(const Complex& K, const VertexMap& map, SymbolTable symbols) {
  ComplexBuilder b;
  for (const Face& m : K.maximal_faces()) b.add_generator(map_face(m, map));
  for (VertexId v : K.vertices())
    if (auto n = symbols.name(map[v])) b.name_vertex(map[v], std::string(*n));
  return std::move(b).build();
}

GlueResult glue_with_map(const Complex& K, const FacePairing& pairing) {
  const VertexId n = K.id_bound();
  VertexMap parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : pairing.pairs) {
    require_face(K, p.first);
    require_face(K, p.second);
    if (p.first.size() != p.second.size() || p.bijection.size() != p.first.size())
      throw GluingError("pairing of " + to_string(p.first) + " and " + to_string(p.second) +
                        " is not a bijection");
    std::vector<VertexId> dom, cod;
    for (auto [u, v] : p.bijection) {
      dom.push_back(u);
      cod.push_back(v);
    }
    std::sort(dom.begin(), dom.end());
    std::sort(cod.begin(), cod.end());
    if (!std::equal(dom.begin(), dom.end(), p.first.begin()) ||
        !std::equal(cod.begin(), cod.end(), p.second.begin()))
      throw GluingError("bijection does not match the paired faces " + to_string(p.first) + ", " +
                        to_string(p.second));
    for (auto [u, v] : p.bijection) {
      VertexId a = find(u), b = find(v);
      if (a == b) continue;
      // Smaller id survives, so a host glued to a later copy keeps its ids.
      if (a < b) parent[b] = a;
      else parent[a] = b;
    }
  }
  VertexMap map(n, kNoVertex);
  for (VertexId v : K.vertices()) map[v] = find(v);

  // A class is named after its representative, or else its first named member.
  SymbolTable names;
  for (VertexId v : K.vertices())
    if (map[v] == v)
      if (auto nm = K.symbols().name(v)) names.set(v, std::string(*nm));
  for (VertexId v : K.vertices())
    if (map[v] != v && !names.name(map[v]))
      if (auto nm = K.symbols().name(v)) names.set(map[v], std::string(*nm));
  Complex glued = map_vertices(K, map, std::move(names));
  return {std::move(glued), std::move(map)};
}

Complex glue(const Complex& K, const FacePairing& pairing) { return glue_with_map(K, pairing).complex; }

namespace {

std::string fresh_name(const SymbolTable& taken, std::string base) {
  while (taken.contains_name(base)) base += '\'';
  return base;
}

}  // namespace

DisjointUnion disjoint_union(const Complex& K, const Complex& L, std::string_view l_prefix) {
  ComplexBuilder b;
  const VertexId offset = K.id_bound();
  b.add_faces(K.faces());
  for (const auto& [v, n] : K.symbols().entries()) b.name_vertex(v, n);
  for (const Face& f : L.faces()) {
    std::vector<VertexId> v(f.begin(), f.end());
    for (VertexId& x : v) x += offset;
    b.add_face(Face::trusted(std::move(v)));
  }
  for (VertexId v : L.vertices()) {
    auto n = L.symbols().name(v);
    if (!n && l_prefix.empty()) continue;
    std::string name = std::string(l_prefix) + (n ? std::string(*n) : std::to_string(v));
    b.name_vertex(v + offset, fresh_name(b.symbols(), std::move(name)));
  }
  return {std::move(b).build(), offset};
}

Complex suspension(const Complex& K) {
  ComplexBuilder b;
  const VertexId a = K.id_bound();
  const VertexId c = a + 1;
  for (const auto& [v, n] : K.symbols().entries()) b.name_vertex(v, n);
  b.name_vertex(a, fresh_name(b.symbols(), "a"));
  b.name_vertex(c, fresh_name(b.symbols(), "b"));
  b.add_faces(K.faces());
  b.add_face(Face{a});
  b.add_face(Face{c});
  for (const Face& f : K.faces()) {
    b.add_face(f.with_vertex(a));
    b.add_face(f.with_vertex(c));
  }
  return std::move(b).build();
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Digest canonical_digest(const Complex& K) {
  if (K.empty()) return {};
  Digest d{0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL};
  auto absorb = [&](std::uint64_t w) {
    d.hi = mix(d.hi ^ w);
    d.lo = mix(d.lo + w * 0xff51afd7ed558ccdULL);
  };
  for (const Face& m : K.maximal_faces()) {
    absorb(m.size());
    for (VertexId v : m) absorb(v);
  }
  if (d == Digest{}) d.lo = 1;
  return d;
}

std::vector<Face> face_difference(const Complex& K, const Complex& L) {
  std::vector<Face> out;
  for (const Face& f : K.faces())
    if (!L.contains(f)) out.push_back(f);
  return out;
}

bool is_subcomplex(const Complex& L, const Complex& K) {
  return std::all_of(L.faces().begin(), L.faces().end(), [&](const Face& f) { return K.contains(f); });
}

Complex subcomplex(const Complex& K, std::span<const Face> generators) {
  ComplexBuilder b;
  for (const auto& [v, n] : K.symbols().entries()) b.name_vertex(v, n);
  for (const Face& g : generators) {
    require_face(K, g);
    b.add_generator(g);
  }
  return std::move(b).build();
}

}  // namespace dcollapse
