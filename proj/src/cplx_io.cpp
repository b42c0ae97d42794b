#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dcollapse/errors.hpp"
#include "dcollapse/io.hpp"

namespace dcollapse {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(text)};
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::optional<std::string> CplxDocument::header(std::string_view tag) const {
  for (const auto& [k, v] : headers)
    if (k == tag) return v;
  return std::nullopt;
}

std::optional<Face> CplxDocument::header_face(std::string_view tag) const {
  auto v = header(tag);
  if (!v) return std::nullopt;
  return parse_face(complex, *v);
}

Face parse_face(const Complex& K, std::string_view tokens) {
  std::vector<VertexId> ids;
  for (const std::string& t : split_tokens(tokens)) {
    if (auto id = K.symbols().find(t)) {
      ids.push_back(*id);
      continue;
    }
    bool numeric = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (numeric) {
      unsigned long long v = std::stoull(t);
      if (v < K.id_bound() && K.has_vertex(static_cast<VertexId>(v)) && !K.symbols().name(static_cast<VertexId>(v))) {
        ids.push_back(static_cast<VertexId>(v));
        continue;
      }
    }
    throw InputError("unknown vertex '" + t + "'");
  }
  if (ids.empty()) throw InputError("empty face");
  return Face::from_unsorted(std::move(ids));
}

CplxDocument read_cplx(std::istream& in) {
  CplxDocument doc;
  ComplexBuilder b;
  std::unordered_map<std::string, VertexId> ids;
  auto id_of = [&](const std::string& tok) {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    VertexId v = b.new_vertex(tok);
    ids.emplace(tok, v);
    return v;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = trim(std::string_view(line).substr(hash + 1));
      if (comment.size() > 1 && comment[0] == '@') {
        auto sp = comment.find_first_of(" \t");
        std::string tag = comment.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
        std::string value = sp == std::string::npos ? std::string() : trim(comment.substr(sp));
        if (tag == "vertices")
          for (const std::string& t : split_tokens(value)) id_of(t);
        else
          doc.headers.emplace_back(tag, value);
      }
      line.resize(hash);
    }
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    std::vector<VertexId> face;
    for (std::size_t k = 0; k < toks.size(); ++k) {
      if (std::find(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(k), toks[k]) != toks.begin() + static_cast<std::ptrdiff_t>(k))
        throw InputError("line " + std::to_string(lineno) + ": vertex '" + toks[k] + "' repeats within a face");
      face.push_back(id_of(toks[k]));
    }
    try {
      b.add_generator(Face::from_unsorted(std::move(face)));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  doc.complex = std::move(b).build();
  return doc;
}

CplxDocument read_cplx_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_cplx(in);
}

void write_cplx(std::ostream& out, const Complex& K, const HeaderList& headers) {
  for (const auto& [tag, value] : headers) out << "# @" << tag << (value.empty() ? "" : " ") << value << '\n';
  std::unordered_map<std::string, VertexId> seen;
  out << "# @vertices";
  for (VertexId v : K.vertices()) {
    std::string name = K.vertex_name(v);
    if (name.find_first_of(" \t#") != std::string::npos || !seen.emplace(name, v).second)
      throw InputError("vertex name '" + name + "' cannot be written unambiguously");
    out << ' ' << name;
  }
  out << '\n';
  for (const Face& m : K.maximal_faces()) out << K.face_name(m) << '\n';
}

void write_cplx_file(const std::filesystem::path& path, const Complex& K, const HeaderList& headers) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_cplx(out, K, headers);
}

}  // namespace dcollapse
