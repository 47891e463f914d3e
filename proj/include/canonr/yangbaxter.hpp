#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "canonr/bimodule.hpp"

namespace canonr {

/// A linear operator on V (x) V (plain tensor product over the field), with
/// v (x) w at index v * dim + w.
struct YBOperator {
  std::size_t dim = 0;
  SparseMatrix omega;
  std::string label;
};

/// Omega(v (x) w) = R^1 w R^2 (x) R^3 v.
/// Throws UnverifiedCertificate, AlgebraMismatch, UnsupportedSize (dim V > max_dim).
YBOperator build_omega(const RMatrixCertificate& r, const Bimodule& v, std::size_t max_dim = 16);

/// Wraps an arbitrary square matrix of size dim^2. Throws ShapeMismatch.
YBOperator yb_operator(std::size_t dim, SparseMatrix omega, std::string label = "");

enum class LegPair { L12, L13, L23 };

/// Omega acting on the given two legs of V (x) V (x) V.
SparseMatrix leg_embedding(const YBOperator& w, LegPair legs);

struct YBCheck {
  bool pass = true;
  /// First (column, row) of the triple space where the two sides differ.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Omega^12 Omega^13 Omega^23 = Omega^23 Omega^13 Omega^12
YBCheck check_qybe(const YBOperator& w);
/// Omega^12 Omega^23 Omega^12 = Omega^23 Omega^12 Omega^23
YBCheck check_braid(const YBOperator& w);
/// Omega^3 = Omega
YBCheck check_omega_cubed(const YBOperator& w);

/// (rank Omega, rank Omega^2)
std::pair<std::size_t, std::size_t> omega_rank_profile(const YBOperator& w);

}  // namespace canonr
