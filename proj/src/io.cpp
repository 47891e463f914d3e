#include "canonr/io.hpp"

#include <fstream>
#include <sstream>

namespace canonr {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, (where.empty() ? "/" : where) + ": " + what, where.empty() ? "/" : where);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    parse_fail(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

FieldElement scalar(const Json& j, const FieldDescriptor& f, const std::string& where) {
  const std::string s = text(j, where);
  try {
    return parse_scalar(s, f);
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what(), where);
  }
}

const Json& array(const Json& j, const std::string& where, std::size_t expected_size = std::string::npos) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  if (expected_size != std::string::npos && j.size() != expected_size) {
    parse_fail(where, "expected " + std::to_string(expected_size) + " entries, found " + std::to_string(j.size()));
  }
  return j;
}

Algebra build(const Json& spec, const FieldDescriptor& f, const std::string& where) {
  const std::string kind = text(member(spec, "kind", where), where + "/kind");
  auto sub = [&](const char* key) { return build(member(spec, key, where), f, where + "/" + key); };
  try {
    if (kind == "matrix") {
      const std::size_t n = count(member(spec, "n", where), where + "/n");
      if (n == 0) parse_fail(where + "/n", "matrix size must be at least 1");
      return build_matrix_algebra(n, f);
    }
    if (kind == "quaternion") {
      return build_quaternion(scalar(member(spec, "a", where), f, where + "/a"),
                              scalar(member(spec, "b", where), f, where + "/b"));
    }
    if (kind == "poly_quotient") {
      const Json& mod = array(member(spec, "modulus", where), where + "/modulus");
      std::vector<FieldElement> coeffs;
      for (std::size_t i = 0; i < mod.size(); ++i) {
        coeffs.push_back(scalar(mod[i], f, where + "/modulus/" + std::to_string(i)));
      }
      return build_poly_quotient(coeffs, f);
    }
    if (kind == "tensor") return build_tensor_product(sub("left"), sub("right")).validated();
    if (kind == "direct_sum") return build_direct_sum(sub("left"), sub("right")).validated();
    if (kind == "opposite") return opposite(sub("of")).validated();
    if (kind == "custom") {
      const std::size_t n = count(member(spec, "dim", where), where + "/dim");
      if (n == 0) parse_fail(where + "/dim", "dimension must be at least 1");
      const Json& unit = array(member(spec, "unit", where), where + "/unit", n);
      const Json& table = array(member(spec, "table", where), where + "/table", n);
      Vector u;
      for (std::size_t i = 0; i < n; ++i) u.push_back(scalar(unit[i], f, where + "/unit/" + std::to_string(i)));
      std::vector<FieldElement> c;
      c.reserve(n * n * n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string wi = where + "/table/" + std::to_string(i);
        const Json& row = array(table[i], wi, n);
        for (std::size_t j = 0; j < n; ++j) {
          const std::string wj = wi + "/" + std::to_string(j);
          const Json& entry = array(row[j], wj, n);
          for (std::size_t k = 0; k < n; ++k) c.push_back(scalar(entry[k], f, wj + "/" + std::to_string(k)));
        }
      }
      std::string label = "custom";
      if (auto it = spec.find("label"); it != spec.end()) label = text(*it, where + "/label");
      return Algebra(f, n, std::move(c), std::move(u), label).validated();
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || !e.location().empty()) throw;
    throw Error(e.kind(), where + ": " + e.what(), where);
  }
  parse_fail(where + "/kind", "unknown algebra kind \"" + kind + "\"");
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x);
  return out;
}

Json sparse_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(Json{{"index", e.index}, {"value", e.value.to_string()}});
  return out;
}

}  // namespace

FieldDescriptor field_from_json(const Json& j, const std::string& where) {
  const std::string kind = text(member(j, "kind", where), where + "/kind");
  if (kind == "Q") return FieldDescriptor::rationals();
  if (kind == "GF") {
    const Json& p = member(j, "p", where);
    if (!p.is_number_integer()) parse_fail(where + "/p", "expected an integer");
    const long long value = p.get<long long>();
    if (value < 2) parse_fail(where + "/p", "modulus must be a prime");
    try {
      return FieldDescriptor::prime_field(static_cast<std::uint64_t>(value));
    } catch (const Error& e) {
      throw Error(e.kind(), where + "/p: " + e.what(), where + "/p");
    }
  }
  parse_fail(where + "/kind", "unknown field kind \"" + kind + "\"");
}

Json field_to_json(const FieldDescriptor& f) {
  if (f.kind == FieldKind::Rationals) return Json{{"kind", "Q"}};
  return Json{{"kind", "GF"}, {"p", f.p}};
}

Algebra algebra_from_spec(const Json& spec) {
  const FieldDescriptor f = field_from_json(member(spec, "field", ""), "/field");
  return build(member(spec, "algebra", ""), f, "/algebra");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file", path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what(), "byte " + std::to_string(e.byte));
  }
}

Algebra load_algebra_file(const std::string& path) { return algebra_from_spec(read_json_file(path)); }

Json tensor_to_json(const TensorElement& t) {
  Json coeffs = Json::array();
  for (const auto& e : t.nonzeros()) {
    coeffs.push_back(Json{{"monomial", indices(t.monomial_of(e.index))}, {"value", e.value.to_string()}});
  }
  return Json{{"arity", t.arity()}, {"coeffs", std::move(coeffs)}};
}

TensorElement tensor_from_json(const Algebra& a, const Json& j, const std::string& where) {
  const std::size_t arity = count(member(j, "arity", where), where + "/arity");
  if (arity == 0 || arity > 4) parse_fail(where + "/arity", "arity must be between 1 and 4");
  TensorElement t(a, arity);
  Vector coeffs = t.coeffs();
  const Json& list = array(member(j, "coeffs", where), where + "/coeffs");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string wi = where + "/coeffs/" + std::to_string(i);
    const Json& mon = array(member(list[i], "monomial", wi), wi + "/monomial", arity);
    std::vector<std::size_t> m;
    for (std::size_t l = 0; l < arity; ++l) {
      const std::size_t idx = count(mon[l], wi + "/monomial/" + std::to_string(l));
      if (idx >= a.dim()) parse_fail(wi + "/monomial/" + std::to_string(l), "basis index out of range");
      m.push_back(idx);
    }
    coeffs[t.index_of(m)] += scalar(member(list[i], "value", wi), a.field(), wi + "/value");
  }
  return TensorElement(a, arity, std::move(coeffs));
}

Json check_to_json(const CheckResult& c) {
  Json out{{"pass", c.pass}};
  if (!c.pass) {
    out["failing_elements"] = indices(c.failing_elements);
    out["monomial"] = indices(c.monomial);
    out["lhs"] = c.lhs;
    out["rhs"] = c.rhs;
  }
  return out;
}

Json checks_to_json(const CheckReport& r) {
  Json out = Json::object();
  for (const auto& [id, c] : r) out[id] = check_to_json(c);
  return out;
}

Json solver_metadata_to_json(const SolverMetadata& m) {
  return Json{{"algebra_dim", m.algebra_dim}, {"w_dim", m.w_dim},         {"unknowns", m.unknowns},
              {"equations", m.equations},     {"affine_dim", m.affine_dim}, {"feasible", m.feasible}};
}

Json certificate_to_json(const RMatrixCertificate& c) {
  Json out{{"algebra", c.algebra.label()},
           {"field", field_to_json(c.algebra.field())},
           {"dim", c.algebra.dim()},
           {"r", tensor_to_json(c.r)},
           {"inverse", tensor_to_json(c.inverse)},
           {"checks", checks_to_json(c.checks)},
           {"valid", c.valid()}};
  if (c.solver) out["solver"] = solver_metadata_to_json(*c.solver);
  return out;
}

Json classification_to_json(const ClassificationReport& r) {
  return Json{{"center_dim", r.center_dim},
              {"f_map_bijective", r.f_map_bijective},
              {"epi", r.epi},
              {"commutative", r.commutative},
              {"rmatrix_exists", r.rmatrix_exists},
              {"central_simple", r.central_simple()},
              {"commutative_rule_holds", r.commutative_rule_holds},
              {"consistent", r.consistent}};
}

Json audit_to_json(const AuditReport& r) {
  Json checks = Json::object();
  for (const auto& [id, c] : r.checks) {
    Json entry{{"pass", c.pass}};
    if (!c.pass) {
      entry["detail"] = c.detail;
      entry["witness"] = sparse_to_json(c.witness);
    }
    checks[id] = std::move(entry);
  }
  return Json{{"checks", std::move(checks)}, {"pass", r.all_pass()}};
}

Json sparse_matrix_to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) entries.push_back(Json{{"row", e.index}, {"col", c}, {"value", e.value.to_string()}});
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json yb_operator_to_json(const YBOperator& w) {
  return Json{{"dim", w.dim}, {"label", w.label}, {"omega", sparse_matrix_to_json(w.omega)}};
}

Json yb_check_to_json(const YBCheck& c) {
  Json out{{"pass", c.pass}};
  if (c.witness) out["witness"] = Json{{"col", c.witness->first}, {"row", c.witness->second}};
  return out;
}

}  // namespace canonr
