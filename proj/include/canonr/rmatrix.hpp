#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonr/tensor.hpp"

namespace canonr {

/// Outcome of one exact identity check. On failure, `monomial` is the first
/// coordinate where the two sides differ and `failing_elements` lists the
/// algebra basis elements a for which an a-dependent identity fails.
struct CheckResult {
  bool pass = true;
  std::vector<std::size_t> failing_elements;
  std::vector<std::size_t> monomial;
  std::string lhs;
  std::string rhs;
};

using CheckReport = std::map<std::string, CheckResult>;

bool all_pass(const CheckReport& report);

struct SolverMetadata {
  std::size_t algebra_dim = 0;
  std::size_t w_dim = 0;           // dimension of the centralizer space W in A (x) A
  std::size_t unknowns = 0;        // dim A * dim W
  std::size_t equations = 0;       // 2 * dim A^2 normalization equations
  std::size_t affine_dim = 0;      // dimension of the solution set when feasible
  bool feasible = false;
};

/// A canonical R-matrix together with the verifier transcript.
/// `inverse` is R with its first two legs swapped.
struct RMatrixCertificate {
  Algebra algebra;
  TensorElement r;
  TensorElement inverse;
  CheckReport checks;
  std::optional<SolverMetadata> solver;

  bool valid() const { return all_pass(checks); }
};

struct SolveOptions {
  std::size_t max_dim = 20;
  bool force = false;  // lift the size cap
};

struct SolveResult {
  SolverMetadata metadata;
  std::optional<RMatrixCertificate> certificate;  // empty when infeasible

  bool feasible() const { return certificate.has_value(); }
};

/// Finds the canonical R-matrix of a validated algebra.
///
/// The search space is first cut down to A (x) W, where W is the space of
/// w in A (x) A with (a (x) 1) w = w (1 (x) a) for every a; over a field this
/// is exactly the set of R with R^1 (x) aR^2 (x) R^3 = R^1 (x) R^2 (x) R^3 a.
/// The two normalizations R^1R^2 (x) R^3 = R^2 (x) R^3R^1 = 1 (x) 1 are then
/// imposed as an affine system on the W-coordinates. An empty system means no
/// R-matrix exists. A positive-dimensional one contradicts uniqueness over a
/// field and raises NonUniqueSolution. A found R is run through
/// verify_rmatrix before it is returned.
///
/// Throws UnvalidatedAlgebra, UnsupportedSize, NonUniqueSolution.
SolveResult solve_rmatrix(const Algebra& a, const SolveOptions& options = {});

/// Checks every defining identity of a canonical R-matrix directly (the
/// three centralizing conditions, both hexagon identities, invertibility
/// with inverse R^2 (x) R^1 (x) R^3, the three normalizations, cyclic
/// invariance and the two leg identities in the fourfold tensor power).
/// None of the checks relies on the reduction used by the solver.
CheckReport verify_rmatrix(const Algebra& a, const TensorElement& r);

/// Runs the verifier and packages the result.
RMatrixCertificate certify(const Algebra& a, const TensorElement& r);

/// sum_{i,j,k} e_ij (x) e_ki (x) e_jk on the row-major matrix units of M_n.
TensorElement closed_form_matrix_R(const Algebra& matrix_algebra, std::size_t n);
TensorElement closed_form_matrix_R(std::size_t n, const FieldDescriptor& field);

/// The sixteen-term R-matrix of the quaternion algebra (a, b).
TensorElement closed_form_quaternion_R(const Algebra& quaternion, const FieldElement& a, const FieldElement& b);
TensorElement closed_form_quaternion_R(const FieldElement& a, const FieldElement& b);

/// R^1 (x) S^1 (x) R^2 (x) S^2 (x) R^3 (x) S^3 on A (x) B, certified.
/// Throws FieldMismatch.
RMatrixCertificate tensor_rmatrix(const RMatrixCertificate& ra, const RMatrixCertificate& rb);

}  // namespace canonr
