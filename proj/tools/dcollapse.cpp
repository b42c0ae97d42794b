#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dcollapse/collapse.hpp"
#include "dcollapse/errors.hpp"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/io.hpp"
#include "dcollapse/reduction.hpp"
#include "dcollapse/sat.hpp"
#include "json.hpp"

using namespace dcollapse;
using json = nlohmann::ordered_json;

namespace {

constexpr int kYes = 0, kNo = 1, kUnknown = 2, kUsage = 3;

struct UsageError : Error {
  using Error::Error;
};

void require_d(int d) {
  if (d < 1) throw UsageError("--d must be at least 1");
}

void emit(const std::string& path, const Complex& K, const HeaderList& headers) {
  if (path.empty() || path == "-")
    write_cplx(std::cout, K, headers);
  else
    write_cplx_file(path, K, headers);
}

void emit_certificate(const std::string& path, const Certificate& cert, const Complex& K) {
  if (path == "-")
    write_certificate(std::cout, cert, K);
  else
    write_certificate_file(path, cert, K);
}

void write_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

// ------------------------------------------------------------------ decide

struct DecideArgs {
  int d = 0;
  std::string method = "auto";
  std::uint64_t budget = 10'000'000;
  std::optional<std::uint64_t> seed;
  std::string prefer;
  std::string cert_out;
  std::string file;
};

int run_decide(const DecideArgs& a) {
  require_d(a.d);
  CplxDocument doc = read_cplx_file(a.file);
  const Complex& K = doc.complex;
  bool greedy = a.method == "greedy" || (a.method == "auto" && a.d <= 2);
  Verdict v;
  if (greedy) {
    GreedyOptions opt;
    if (a.seed) {
      opt.order = GreedyOrder::seeded_random;
      opt.seed = *a.seed;
    }
    if (!a.prefer.empty()) opt.prefer = parse_face(K, a.prefer);
    v = greedy_decide(K, a.d, opt);
  } else {
    if (!a.prefer.empty()) throw UsageError("--prefer only applies to --method greedy");
    SearchOptions opt;
    opt.budget = a.budget;
    opt.shuffle_seed = a.seed;
    v = decide(K, a.d, opt);
  }
  std::cout << "verdict: " << to_string(v.answer) << '\n';
  std::cout << "method: " << (greedy ? "greedy" : "search") << '\n';
  std::cout << "exact: " << (v.exact ? "true" : "false") << '\n';
  if (!greedy) std::cout << "expansions: " << v.expansions << '\n';
  if (v.certificate) {
    std::cout << "certificate-steps: " << v.certificate->size() << '\n';
    if (!a.cert_out.empty()) {
      emit_certificate(a.cert_out, *v.certificate, K);
      if (a.cert_out != "-") std::cout << "certificate: " << a.cert_out << '\n';
    }
  }
  if (v.stuck_witness) {
    const Complex& w = *v.stuck_witness;
    std::cout << "stuck: " << w.size() << " faces remain, no d-collapsible face; maximal faces:\n";
    for (const Face& f : w.maximal_faces()) std::cout << "  " << K.face_name(f) << '\n';
  }
  switch (v.answer) {
    case Answer::yes: return kYes;
    case Answer::no: return kNo;
    default: return kUnknown;
  }
}

// ------------------------------------------------------------------ certify / faces / stats

int run_certify(int d, const std::string& cert_path, const std::string& file) {
  require_d(d);
  CplxDocument doc = read_cplx_file(file);
  Certificate cert = read_certificate_file(cert_path, doc.complex);
  if (cert.d != d)
    throw UsageError("certificate declares d = " + std::to_string(cert.d) + " but --d is " + std::to_string(d));
  CheckResult r = check_certificate(doc.complex, cert);
  if (r.ok) {
    std::cout << "ok: " << cert.size() << " steps collapse the complex to nothing\n";
    return kYes;
  }
  std::cout << "fail";
  if (r.failed_step) std::cout << " at step " << (*r.failed_step + 1);
  std::cout << ": " << r.message << '\n';
  for (const Face& f : r.cofaces_found) std::cout << "  coface: " << doc.complex.face_name(f) << '\n';
  return kNo;
}

int run_faces(int d, const std::string& file) {
  require_d(d);
  CplxDocument doc = read_cplx_file(file);
  for (const Face& f : collapsible_faces(doc.complex, d)) std::cout << doc.complex.face_name(f) << '\n';
  return kYes;
}

int run_stats(const std::string& file, const std::string& json_out) {
  CplxDocument doc = read_cplx_file(file);
  const Complex& K = doc.complex;
  auto fv = K.f_vector();
  std::cout << "vertices: " << K.vertices().size() << '\n';
  std::cout << "faces: " << K.size() << '\n';
  std::cout << "dimension: " << K.dimension() << '\n';
  std::cout << "maximal-faces: " << K.maximal_faces().size() << '\n';
  for (std::size_t k = 0; k < fv.size(); ++k) std::cout << "dim " << k << ": " << fv[k] << '\n';
  if (!json_out.empty()) {
    json j;
    j["vertices"] = K.vertices().size();
    j["faces"] = K.size();
    j["dimension"] = K.dimension();
    j["maximal_faces"] = K.maximal_faces().size();
    j["f_vector"] = fv;
    write_json(json_out, j);
  }
  return kYes;
}

// ------------------------------------------------------------------ gen

HeaderList connector_headers(const ConnectorBlueprint& bp) {
  const Complex& C = bp.complex;
  HeaderList h{{"d", std::to_string(bp.d)}, {"t", std::to_string(bp.t)}, {"rho", C.face_name(bp.rho)}};
  for (std::size_t j = 0; j < bp.zeta.size(); ++j) h.emplace_back("zeta" + std::to_string(j + 1), C.face_name(bp.zeta[j]));
  return h;
}

HeaderList bad_headers(const BadComplex& B) {
  const Complex& K = B.complex;
  HeaderList h{{"d", std::to_string(B.d)}, {"iota", K.face_name(B.iota)}};
  for (std::size_t i = 0; i < B.lambda.size(); ++i) h.emplace_back("lambda" + std::to_string(i + 1), K.face_name(B.lambda[i]));
  h.emplace_back("sigma_B", K.face_name(B.sigma_B));
  for (std::size_t i = 0; i < B.alpha.size(); ++i) h.emplace_back("alpha" + std::to_string(i + 1), K.face_name(B.alpha[i]));
  return h;
}

HeaderList gadget_headers(const SimplicialGadget& g) {
  const Complex& K = g.complex;
  HeaderList h{{"kind", g.kind}, {"d", std::to_string(g.d)}};
  for (const auto& [role, f] : g.named) h.emplace_back(role, K.face_name(f));
  for (std::size_t i = 0; i < g.liberation.size(); ++i)
    h.emplace_back("liberation" + std::to_string(i + 1), K.face_name(g.liberation[i]));
  for (std::size_t i = 0; i < g.attaching.size(); ++i)
    h.emplace_back("attaching" + std::to_string(i + 1), K.face_name(g.attaching[i]));
  return h;
}

// ------------------------------------------------------------------ reduce / sat

int run_reduce(int d, const std::string& cnf, const std::string& out_path, const std::string& cert_out) {
  CnfFormula f = parse_dimacs_file(cnf);
  ReductionOutput r = build_reduction(f, d);
  write_cplx_file(out_path, r.complex, r.headers());

  json j;
  j["d"] = d;
  j["m"] = f.num_vars;
  j["n"] = f.num_clauses();
  j["padded"] = f.padded;
  json t = json::object();
  for (const Connection& c : r.connections) t[c.id] = c.t();
  j["connections"] = t;
  j["total_faces"] = r.complex.size();
  j["generation_seconds"] = r.seconds;

  int code = kYes;
  std::cout << "faces: " << r.complex.size() << '\n';
  std::cout << "complex: " << out_path << '\n';
  if (!cert_out.empty()) {
    auto assignment = sat_oracle(f);
    j["satisfiable"] = assignment.has_value();
    if (assignment) {
      Certificate cert = certificate_from_assignment(r, *assignment);
      emit_certificate(cert_out, cert, r.complex);
      j["assignment"] = to_string(*assignment);
      j["certificate_steps"] = cert.size();
      std::cout << "assignment: " << to_string(*assignment) << '\n';
      std::cout << "certificate: " << cert_out << " (" << cert.size() << " steps)\n";
    } else {
      std::cout << "unsatisfiable: no certificate written\n";
      code = kNo;
    }
  }
  write_json(out_path + ".json", j);
  return code;
}

int run_sat(const std::string& cnf) {
  CnfFormula f = parse_dimacs_file(cnf);
  auto a = sat_oracle(f);
  if (!a) {
    std::cout << "UNSAT\n";
    return kNo;
  }
  std::cout << "SAT " << to_string(*a) << '\n';
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-collapsibility toolkit"};
  app.require_subcommand(1);
  int code = kYes;

  DecideArgs da;
  auto* decide_cmd = app.add_subcommand("decide", "decide whether a complex is d-collapsible");
  decide_cmd->add_option("--d", da.d, "collapse parameter")->required();
  decide_cmd->add_option("--method", da.method)->check(CLI::IsMember({"greedy", "search", "auto"}));
  decide_cmd->add_option("--budget", da.budget, "node expansions before answering unknown");
  decide_cmd->add_option("--seed", da.seed, "random greedy order / search child order");
  decide_cmd->add_option("--prefer", da.prefer, "greedy collapses this face first");
  decide_cmd->add_option("--cert-out", da.cert_out, "write the certificate here ('-' for stdout)");
  decide_cmd->add_option("file", da.file)->required()->check(CLI::ExistingFile);
  decide_cmd->callback([&] { code = run_decide(da); });

  int cd = 0;
  std::string cert_path, cert_file;
  auto* certify_cmd = app.add_subcommand("certify", "check a collapse certificate");
  certify_cmd->add_option("--d", cd)->required();
  certify_cmd->add_option("--cert", cert_path)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("file", cert_file)->required()->check(CLI::ExistingFile);
  certify_cmd->callback([&] { code = run_certify(cd, cert_path, cert_file); });

  int fd = 0;
  std::string faces_file;
  auto* faces_cmd = app.add_subcommand("faces", "list d-collapsible faces");
  faces_cmd->add_option("--d", fd)->required();
  faces_cmd->add_option("file", faces_file)->required()->check(CLI::ExistingFile);
  faces_cmd->callback([&] { code = run_faces(fd, faces_file); });

  std::string stats_file, stats_json;
  auto* stats_cmd = app.add_subcommand("stats", "face counts by dimension");
  stats_cmd->add_option("file", stats_file)->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--json", stats_json, "also write a JSON summary ('-' for stdout)");
  stats_cmd->callback([&] { code = run_stats(stats_file, stats_json); });

  auto* gen = app.add_subcommand("gen", "generate complexes");
  gen->require_subcommand(1);
  std::string gen_out, gen_cert;
  int gn = 0, gd = 0, gt = 0;
  std::string kind;
  auto* g_simplex = gen->add_subcommand("simplex", "full simplex on 1..n");
  g_simplex->add_option("--n", gn)->required()->check(CLI::Range(1, 24));
  g_simplex->add_option("-o,--out", gen_out);
  g_simplex->callback([&] {
    ComplexBuilder b;
    std::vector<VertexId> v;
    for (int i = 1; i <= gn; ++i) v.push_back(b.new_vertex(std::to_string(i)));
    b.add_generator(Face(v));
    emit(gen_out, std::move(b).build(), {{"n", std::to_string(gn)}});
  });
  auto* g_conn = gen->add_subcommand("connector", "connecting gadget C(ρ; ζ_1..ζ_t)");
  g_conn->add_option("--d", gd)->required()->check(CLI::Range(2, 8));
  g_conn->add_option("--t", gt)->required()->check(CLI::NonNegativeNumber);
  g_conn->add_option("-o,--out", gen_out);
  g_conn->add_option("--cert-out", gen_cert, "certificate for C ↘ C' \\ {ρ}");
  g_conn->callback([&] {
    const ConnectorBlueprint& bp = connector_blueprint(gd, gt);
    emit(gen_out, bp.complex, connector_headers(bp));
    if (!gen_cert.empty()) emit_certificate(gen_cert, connector_certificate(gd, gt), bp.complex);
  });
  auto* g_bad = gen->add_subcommand("bad", "bad complex B(d)");
  g_bad->add_option("--d", gd)->required()->check(CLI::Range(3, 8));
  g_bad->add_option("-o,--out", gen_out);
  g_bad->add_option("--cert-out", gen_cert, "certificate for B ↘ ∅");
  g_bad->callback([&] {
    BadComplex B = build_bad_complex(gd);
    emit(gen_out, B.complex, bad_headers(B));
    if (!gen_cert.empty()) emit_certificate(gen_cert, bad_complex_certificate(B), B.complex);
  });
  auto* g_gadget = gen->add_subcommand("gadget", "simplicial gadget");
  g_gadget->add_option("--kind", kind)->required()->check(CLI::IsMember({"var", "clause", "merge"}));
  g_gadget->add_option("--d", gd)->required()->check(CLI::Range(3, 12));
  g_gadget->add_option("-o,--out", gen_out);
  g_gadget->callback([&] {
    SimplicialGadget g = kind == "var"      ? build_variable_gadget(gd)
                         : kind == "clause" ? build_clause_gadget(gd)
                                            : build_merge_gadget(gd);
    emit(gen_out, g.complex, gadget_headers(g));
  });

  int rd = 0;
  std::string cnf, red_out, red_cert;
  auto* reduce_cmd = app.add_subcommand("reduce", "build the reduction complex of a 3-CNF");
  reduce_cmd->add_option("--d", rd)->required();
  reduce_cmd->add_option("file", cnf)->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("-o,--out", red_out)->required();
  reduce_cmd->add_option("--cert-out", red_cert, "certificate when the formula is satisfiable");
  reduce_cmd->callback([&] { code = run_reduce(rd, cnf, red_out, red_cert); });

  std::string sat_file;
  auto* sat_cmd = app.add_subcommand("sat", "brute-force satisfiability");
  sat_cmd->add_option("file", sat_file)->required()->check(CLI::ExistingFile);
  sat_cmd->callback([&] { code = run_sat(sat_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
