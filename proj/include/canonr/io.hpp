#pragma once

#include <string>

#include <json.hpp>

#include "canonr/structure.hpp"
#include "canonr/yangbaxter.hpp"

namespace canonr {

using Json = nlohmann::json;

/// {"kind": "Q"} or {"kind": "GF", "p": p}
FieldDescriptor field_from_json(const Json& j, const std::string& where = "/field");
Json field_to_json(const FieldDescriptor& f);

/// Builds and validates the algebra described by an algebra description
/// {"field": ..., "algebra": ...}. Algebra kinds: matrix, quaternion,
/// poly_quotient (coefficients constant term first), tensor, direct_sum,
/// opposite, custom. Throws ParseError with a JSON-pointer location, or the
/// builder's own error (InvalidAlgebra for a custom table that fails validation).
Algebra algebra_from_spec(const Json& spec);
Algebra load_algebra_file(const std::string& path);

/// Reads a whole file as JSON. Throws ParseError.
Json read_json_file(const std::string& path);

/// {"arity": m, "coeffs": [{"monomial": [...], "value": "p/q"}, ...]},
/// nonzero entries in index order, monomials 0-based.
Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Algebra& a, const Json& j, const std::string& where = "");

Json check_to_json(const CheckResult& c);
Json checks_to_json(const CheckReport& r);
Json solver_metadata_to_json(const SolverMetadata& m);
Json certificate_to_json(const RMatrixCertificate& c);
Json classification_to_json(const ClassificationReport& r);
Json audit_to_json(const AuditReport& r);
Json sparse_matrix_to_json(const SparseMatrix& m);
Json yb_operator_to_json(const YBOperator& w);
Json yb_check_to_json(const YBCheck& c);

}  // namespace canonr
