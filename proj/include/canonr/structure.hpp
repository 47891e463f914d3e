#pragma once

#include <cstddef>

#include "canonr/rmatrix.hpp"

namespace canonr {

/// Matrix of A (x) A^op -> End(A), e_i (x) e_j -> (x -> e_i x e_j).
/// Column i * n + j; row k * n + l is the coefficient of e_k in e_i e_l e_j.
ExactMatrix f_map(const Algebra& a);

/// True iff e_i (x) 1 = 1 (x) e_i in A (x) A for every basis element, i.e.
/// iff the unit map k -> A is a ring epimorphism.
bool is_epi_from_base(const Algebra& a);

struct ClassificationReport {
  std::size_t center_dim = 0;
  bool f_map_bijective = false;
  bool epi = false;
  bool commutative = false;
  bool rmatrix_exists = false;
  /// For commutative algebras: R exists only as 1 (x) 1 (x) 1 together with epi.
  bool commutative_rule_holds = true;
  bool consistent = false;

  bool central_simple() const { return center_dim == 1 && f_map_bijective; }
};

/// Runs the center, F-map, epimorphism and solver probes and cross-checks
/// them: consistent means R exists exactly when A is central simple (and,
/// for commutative A, exactly when the unit is an epimorphism, with R = 1 (x) 1 (x) 1).
ClassificationReport classify(const Algebra& a, const SolveOptions& options = {});

}  // namespace canonr
