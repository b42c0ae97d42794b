#include <fstream>
#include <sstream>

#include "dcollapse/errors.hpp"
#include "dcollapse/io.hpp"

namespace dcollapse {

Certificate read_certificate(std::istream& in, const Complex& K) {
  Certificate cert;
  bool have_d = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (!have_d) {
        std::istringstream ss(line);
        std::string kw;
        int d = 0;
        if (!(ss >> kw >> d) || kw != "d" || d < 1) throw InputError("expected 'd <int>' header");
        cert.d = d;
        have_d = true;
        continue;
      }
      auto arrow = line.find("->");
      CollapseStep s;
      s.sigma = parse_face(K, std::string_view(line).substr(0, arrow));
      if (arrow != std::string::npos) s.expected_tau = parse_face(K, std::string_view(line).substr(arrow + 2));
      cert.steps.push_back(std::move(s));
    } catch (const InputError& e) {
      throw InputError("certificate line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_d) throw InputError("certificate is missing the 'd <int>' header");
  return cert;
}

Certificate read_certificate_file(const std::filesystem::path& path, const Complex& K) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_certificate(in, K);
}

void write_certificate(std::ostream& out, const Certificate& cert, const Complex& K) {
  out << "d " << cert.d << '\n';
  for (const CollapseStep& s : cert.steps) {
    out << K.face_name(s.sigma);
    if (s.expected_tau) out << " -> " << K.face_name(*s.expected_tau);
    out << '\n';
  }
}

void write_certificate_file(const std::filesystem::path& path, const Certificate& cert, const Complex& K) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_certificate(out, cert, K);
}

}  // namespace dcollapse
