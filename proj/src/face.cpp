#include "dcollapse/face.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "dcollapse/errors.hpp"

namespace dcollapse {

namespace {

void validate(const std::vector<VertexId>& v) {
  if (v.empty()) throw InputError("face must be nonempty");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i]) throw InputError("face has a duplicate vertex " + std::to_string(v[i]));
    if (v[i - 1] > v[i]) throw InputError("face vertices are not sorted");
  }
}

}  // namespace

Face::Face(std::initializer_list<VertexId> vertices) : v_(vertices) { validate(v_); }

Face::Face(std::vector<VertexId> vertices) : v_(std::move(vertices)) { validate(v_); }

Face Face::from_unsorted(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Face(std::move(vertices));
}

Face Face::trusted(std::vector<VertexId> vertices) {
  Face f;
  f.v_ = std::move(vertices);
  return f;
}

bool Face::contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Face Face::with_vertex(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(v_.size() + 1);
  auto it = std::lower_bound(v_.begin(), v_.end(), v);
  if (it != v_.end() && *it == v) return *this;
  out.insert(out.end(), v_.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, v_.end());
  return trusted(std::move(out));
}

Face Face::without_vertex(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(v_.size());
  for (VertexId x : v_)
    if (x != v) out.push_back(x);
  return trusted(std::move(out));
}

Face face_union(const Face& a, const Face& b) {
  std::vector<VertexId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face::trusted(std::move(out));
}

std::vector<VertexId> face_difference(const Face& a, const Face& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VertexId> face_intersection(const Face& a, const Face& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ f.size();
  for (VertexId v : f) {
    std::uint64_t x = h + 0x9e3779b97f4a7c15ULL + v;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h = x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dcollapse
