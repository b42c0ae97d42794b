#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcollapse/collapse.hpp"
#include "dcollapse/complex.hpp"

namespace dcollapse {

/// `# @tag value` lines of a .cplx file, in file order.
using HeaderList = std::vector<std::pair<std::string, std::string>>;

struct CplxDocument {
  Complex complex;
  HeaderList headers;

  /// Value of the first header with this tag.
  std::optional<std::string> header(std::string_view tag) const;
  /// A header value read as a face of `complex`.
  std::optional<Face> header_face(std::string_view tag) const;
};

/// Vertex tokens become ids in order of first appearance. A leading
/// `# @vertices` header fixes that order explicitly.
CplxDocument read_cplx(std::istream& in);
CplxDocument read_cplx_file(const std::filesystem::path& path);

/// Writes maximal faces only, one per line, preceded by the headers and a
/// `# @vertices` line listing every vertex in id order.
void write_cplx(std::ostream& out, const Complex& K, const HeaderList& headers = {});
void write_cplx_file(const std::filesystem::path& path, const Complex& K, const HeaderList& headers = {});

/// Resolves whitespace separated vertex tokens against K's symbol table.
/// Unnamed vertices are addressed by their decimal id.
Face parse_face(const Complex& K, std::string_view tokens);

Certificate read_certificate(std::istream& in, const Complex& K);
Certificate read_certificate_file(const std::filesystem::path& path, const Complex& K);
void write_certificate(std::ostream& out, const Certificate& cert, const Complex& K);
void write_certificate_file(const std::filesystem::path& path, const Certificate& cert, const Complex& K);

}  // namespace dcollapse
