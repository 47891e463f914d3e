// canonr: command-line front end for the canonical R-matrix library.
//
// Every command prints one JSON report
//   {"command", "input_digest", "status", "payload", "timing_ms"}
// and exits 0 on success, 1 on a mathematical negative, 2 on bad input.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "canonr/io.hpp"

using namespace canonr;

namespace {

struct Outcome {
  std::string status;
  Json payload;
  int exit_code = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file", path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

Bimodule parse_bimodule(const Algebra& a, const std::string& spec) {
  if (spec == "regular") return regular_bimodule(a);
  if (spec == "square") return square_bimodule(a);
  if (spec.rfind("free:", 0) == 0) {
    const std::string d = spec.substr(5);
    if (!d.empty() && d.find_first_not_of("0123456789") == std::string::npos && d.size() < 6) {
      const std::size_t n = std::stoul(d);
      if (n > 0) return free_bimodule(a, n);
    }
  }
  throw Error(ErrorKind::ParseError, "bad bimodule \"" + spec + "\" (expected regular, square or free:d)", spec);
}

SolveOptions solve_options(bool force) {
  SolveOptions o;
  o.force = force;
  return o;
}

Outcome cmd_validate(const std::string& file) {
  const Json spec = read_json_file(file);
  try {
    const Algebra a = algebra_from_spec(spec);
    return {"valid",
            Json{{"label", a.label()},
                 {"dim", a.dim()},
                 {"field", field_to_json(a.field())},
                 {"commutative", a.is_commutative()},
                 {"center_dim", center(a).size()}},
            0};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidAlgebra) throw;
    return {"invalid", Json{{"failure", e.what()}}, 1};
  }
}

Outcome cmd_solve(const std::string& file, bool force) {
  const Algebra a = load_algebra_file(file);
  const SolveResult res = solve_rmatrix(a, solve_options(force));
  if (!res.feasible()) {
    return {"infeasible", Json{{"algebra", a.label()}, {"solver", solver_metadata_to_json(res.metadata)}}, 1};
  }
  const bool ok = res.certificate->valid();
  return {ok ? "unique" : "failed", Json{{"certificate", certificate_to_json(*res.certificate)}}, ok ? 0 : 1};
}

Outcome cmd_verify(const std::string& file, const std::string& rfile) {
  const Algebra a = load_algebra_file(file);
  const Json doc = read_json_file(rfile);
  // A solve report, a bare certificate, or a bare tensor.
  const Json* tensor = &doc;
  std::string where;
  if (doc.contains("payload") && doc["payload"].contains("certificate")) {
    tensor = &doc["payload"]["certificate"]["r"];
    where = "/payload/certificate/r";
  } else if (doc.contains("r")) {
    tensor = &doc["r"];
    where = "/r";
  }
  const TensorElement r = tensor_from_json(a, *tensor, where);
  if (r.arity() != 3) throw Error(ErrorKind::ArityMismatch, "an R-matrix has arity 3", where + "/arity");
  const RMatrixCertificate cert = certify(a, r);
  return {cert.valid() ? "verified" : "failed", Json{{"certificate", certificate_to_json(cert)}}, cert.valid() ? 0 : 1};
}

Outcome cmd_classify(const std::string& file, bool force) {
  const Algebra a = load_algebra_file(file);
  const ClassificationReport rep = classify(a, solve_options(force));
  Json payload = classification_to_json(rep);
  payload["algebra"] = a.label();
  return {rep.consistent ? "consistent" : "inconsistent", payload, rep.consistent ? 0 : 1};
}

Outcome cmd_ybe(const std::string& file, const std::string& bimodule, bool force) {
  const Algebra a = load_algebra_file(file);
  const Bimodule v = parse_bimodule(a, bimodule);
  const SolveResult res = solve_rmatrix(a, solve_options(force));
  if (!res.feasible()) return {"infeasible", Json{{"algebra", a.label()}}, 1};
  const YBOperator w = build_omega(*res.certificate, v, force ? SIZE_MAX : 16);
  const YBCheck q = check_qybe(w), b = check_braid(w), c = check_omega_cubed(w);
  const auto [r1, r2] = omega_rank_profile(w);
  const bool ok = q.pass && b.pass && c.pass;
  return {ok ? "passed" : "failed",
          Json{{"algebra", a.label()},
               {"bimodule", bimodule},
               {"qybe", yb_check_to_json(q)},
               {"braid", yb_check_to_json(b)},
               {"omega_cubed", yb_check_to_json(c)},
               {"rank_omega", r1},
               {"rank_omega_squared", r2},
               {"operator", yb_operator_to_json(w)}},
          ok ? 0 : 1};
}

Outcome cmd_audit(const std::string& file, const std::string& triple, bool force) {
  const Algebra a = load_algebra_file(file);
  std::vector<std::string> names;
  std::stringstream ss(triple);
  for (std::string part; std::getline(ss, part, ',');) names.push_back(part);
  if (names.size() != 3) throw Error(ErrorKind::ParseError, "--triple needs three comma-separated bimodules", triple);
  const Bimodule m = parse_bimodule(a, names[0]), n = parse_bimodule(a, names[1]), p = parse_bimodule(a, names[2]);
  const SolveResult res = solve_rmatrix(a, solve_options(force));
  if (!res.feasible()) return {"infeasible", Json{{"algebra", a.label()}}, 1};
  const AuditReport rep = audit_braiding(*res.certificate, m, n, p);
  Json payload = audit_to_json(rep);
  payload["algebra"] = a.label();
  payload["triple"] = names;
  return {rep.all_pass() ? "passed" : "failed", payload, rep.all_pass() ? 0 : 1};
}

void emit(const Json& report, const std::string& out, bool pretty) {
  const std::string text = report.dump(pretty ? 2 : -1) + "\n";
  if (out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::string tmp = out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, out + ": cannot write", out);
    f << text;
  }
  std::filesystem::rename(tmp, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical R-matrices of finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool force = false, pretty = false;
  std::string out, file, rfile, bimodule = "regular", triple;
  app.add_flag("--force", force, "lift the size caps");
  app.add_option("--out", out, "write the report to FILE instead of standard output");
  app.add_flag("--pretty", pretty, "indent the JSON report");

  auto* validate = app.add_subcommand("validate", "parse and validate an algebra file");
  auto* solve = app.add_subcommand("solve", "find the canonical R-matrix");
  auto* verify = app.add_subcommand("verify", "check an R-matrix against every axiom");
  auto* cls = app.add_subcommand("classify", "cross-check R-matrix existence against central simplicity");
  auto* ybe = app.add_subcommand("ybe", "build Omega and check the Yang-Baxter and braid equations");
  auto* audit = app.add_subcommand("audit", "audit the braiding on a triple of bimodules");
  for (auto* sub : {validate, solve, verify, cls, ybe, audit}) sub->add_option("file", file)->required();
  verify->add_option("rmatrix_file", rfile)->required();
  ybe->add_option("--bimodule", bimodule, "regular, square or free:d");
  audit->add_option("--triple", triple, "three bimodules, e.g. regular,square,free:2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json report{{"command", command}};
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    std::string bytes = slurp(file);
    if (command == "verify") bytes += slurp(rfile);
    report["input_digest"] = fnv1a64(bytes);
    Outcome o;
    if (command == "validate") o = cmd_validate(file);
    if (command == "solve") o = cmd_solve(file, force);
    if (command == "verify") o = cmd_verify(file, rfile);
    if (command == "classify") o = cmd_classify(file, force);
    if (command == "ybe") o = cmd_ybe(file, bimodule, force);
    if (command == "audit") o = cmd_audit(file, triple, force);
    report["status"] = o.status;
    report["payload"] = std::move(o.payload);
    code = o.exit_code;
  } catch (const Error& e) {
    report["status"] = "error";
    report["payload"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"location", e.location()}};
    std::cerr << "canonr: " << e.what() << "\n";
    code = 2;
  }
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  try {
    emit(report, out, pretty);
  } catch (const std::exception& e) {
    std::cerr << "canonr: " << e.what() << "\n";
    return 2;
  }
  return code;
}
