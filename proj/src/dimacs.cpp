#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dcollapse/errors.hpp"
#include "dcollapse/sat.hpp"

namespace dcollapse {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

int parse_int(std::size_t line, const std::string& tok) {
  char* end = nullptr;
  errno = 0;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || *end != '\0' || errno == ERANGE || v > 1'000'000'000 || v < -1'000'000'000)
    fail(line, "expected an integer, got '" + tok + "'");
  return static_cast<int>(v);
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<int> current;
  std::size_t clause_line = 0;
  std::string text;
  std::size_t line = 0;

  auto finish_clause = [&](std::size_t at) {
    if (current.size() != 3)
      fail(at, "clause has " + std::to_string(current.size()) + " literals, expected 3");
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (std::abs(current[a]) == std::abs(current[b]))
          fail(at, "clause repeats variable " + std::to_string(std::abs(current[a])));
    f.clauses.push_back({current[0], current[1], current[2]});
    current.clear();
  };

  while (std::getline(in, text)) {
    ++line;
    std::istringstream ls(text);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      if (have_header) fail(line, "duplicate problem line");
      std::string kind, nv, nc, extra;
      if (!(ls >> kind >> nv >> nc) || kind != "cnf" || (ls >> extra))
        fail(line, "problem line must read 'p cnf <vars> <clauses>'");
      f.num_vars = parse_int(line, nv);
      declared_clauses = parse_int(line, nc);
      if (f.num_vars < 0 || declared_clauses < 0) fail(line, "negative counts in problem line");
      have_header = true;
      continue;
    }
    if (!have_header) fail(line, "clause before the problem line");
    do {
      int lit = parse_int(line, tok);
      if (lit == 0) {
        finish_clause(line);
        continue;
      }
      if (std::abs(lit) > f.num_vars)
        fail(line, "variable " + std::to_string(std::abs(lit)) + " exceeds declared count " +
                       std::to_string(f.num_vars));
      if (current.empty()) clause_line = line;
      current.push_back(lit);
    } while (ls >> tok);
  }
  if (!have_header) fail(line, "missing problem line");
  if (!current.empty()) fail(clause_line, "clause is not terminated by 0");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    fail(line, "problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                   std::to_string(f.clauses.size()));
  if (f.clauses.empty()) throw InputError("formula has no clauses");
  if (f.clauses.size() == 1) {
    f.clauses.push_back(f.clauses.front());
    f.padded = true;
  }
  return f;
}

CnfFormula parse_dimacs_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return parse_dimacs(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.num_vars)) return false;
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) sat = sat || a[std::abs(lit) - 1] == (lit > 0);
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> sat_oracle(const CnfFormula& f) {
  if (f.num_vars > 30) throw BudgetError("brute-force oracle handles at most 30 variables");
  // Clauses as (must-be-true mask, must-be-false mask) over variable bits.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : f.clauses) {
    std::uint32_t pos = 0, neg = 0;
    for (int lit : c) (lit > 0 ? pos : neg) |= 1u << (std::abs(lit) - 1);
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto x = static_cast<std::uint32_t>(bits);
    bool ok = true;
    for (auto [pos, neg] : masks)
      if (!(x & pos) && !(~x & neg)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Assignment a(static_cast<std::size_t>(f.num_vars));
    for (int j = 0; j < f.num_vars; ++j) a[j] = (x >> j) & 1;
    return a;
  }
  return std::nullopt;
}

std::string to_string(const Assignment& a) {
  std::string s;
  for (bool b : a) s += b ? 'T' : 'F';
  return s;
}

Assignment parse_assignment(const std::string& text) {
  Assignment a;
  for (char c : text) {
    switch (c) {
      case 'T': case 't': case '1': a.push_back(true); break;
      case 'F': case 'f': case '0': a.push_back(false); break;
      case ',': case ' ': break;
      default: throw InputError(std::string("bad assignment character '") + c + "'");
    }
  }
  return a;
}

}  // namespace dcollapse
