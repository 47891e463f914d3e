#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "canonr/rmatrix.hpp"

namespace canonr {

/// An A-bimodule on k^dim. left[i] and right[i] are the matrices of
/// m -> e_i m and m -> m e_i.
struct Bimodule {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
  std::string label;

  /// Action of an arbitrary algebra element (coordinate vector).
  SparseMatrix left_action(const Vector& a) const;
  SparseMatrix right_action(const Vector& a) const;
};

/// A with its multiplication on both sides.
Bimodule regular_bimodule(const Algebra& a);
/// A (x) A with a(x (x) y)b = ax (x) yb; basis e_i (x) e_j at i * n + j.
Bimodule square_bimodule(const Algebra& a);
/// A (x) k^d with A acting on the first factor; basis e_i (x) f_s at i * d + s.
Bimodule free_bimodule(const Algebra& a, std::size_t d);

struct BimoduleReport {
  bool pass = true;
  std::string failure;
};

/// Unital left representation, unital right anti-representation, commuting actions.
BimoduleReport validate_bimodule(const Bimodule& m);

/// Basis of M^A = {m : am = ma}, in canonical free-variable form.
std::vector<SparseVector> invariants(const Bimodule& m);

/// M_1 (x)_A M_2 (x)_A ... (x)_A M_k as the quotient of the plain tensor
/// product by the relations m_t a (x) m_{t+1} = m_t (x) a m_{t+1} between
/// neighbouring factors. The ambient basis is mixed radix with the first
/// factor most significant.
///
/// Quotient coordinates are the non-pivot columns of the reduced relation
/// space, in increasing order, so every class has a canonical representative.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  /// Throws AlgebraMismatch.
  explicit QuotientSpace(std::vector<Bimodule> factors);

  const std::vector<Bimodule>& factors() const { return data_->factors; }
  const Algebra& algebra() const { return data_->factors.front().algebra; }
  std::size_t ambient_dim() const { return data_->ambient; }
  std::size_t dim() const { return data_->free.size(); }

  /// Quotient coordinates of an ambient vector.
  SparseVector project(const SparseVector& ambient) const;
  /// Ambient representative of quotient basis vector j.
  SparseVector section(std::size_t j) const;
  std::size_t representative(std::size_t j) const { return data_->free[j]; }

  /// Reduced basis of the relation space.
  std::vector<SparseVector> relations() const;

  /// Quotient as a bimodule: A acts on the left of the first factor and on
  /// the right of the last one. Throws NotWellDefined if the factors are not
  /// actually bimodules.
  Bimodule as_bimodule() const;

 private:
  struct Data {
    std::vector<Bimodule> factors;
    std::size_t ambient = 0;
    std::unique_ptr<RowReducer> relations;
    std::vector<std::size_t> free;
    std::vector<std::int64_t> coordinate;  // ambient column -> quotient index or -1
  };
  std::shared_ptr<const Data> data_;
};

/// A linear map between computed spaces, on their coordinates.
struct QuotientMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  SparseMatrix matrix;
  std::string label;
};

/// Map induced on quotients by an ambient map (columns indexed by the
/// source's ambient basis, rows by the target's). Every relation of the
/// source must land in the relations of the target, otherwise
/// NotWellDefined is thrown.
QuotientMap induce(const QuotientSpace& source, const QuotientSpace& target, const SparseMatrix& ambient,
                   std::string label);

/// c_{M,N}: M (x)_A N -> N (x)_A M, m (x) n -> R^1 n R^2 (x) m R^3.
/// Throws NotWellDefined, AlgebraMismatch.
QuotientMap braiding_map(const RMatrixCertificate& r, const Bimodule& m, const Bimodule& n);
QuotientMap braiding_map(const RMatrixCertificate& r, const QuotientSpace& mn, const QuotientSpace& nm);

/// The bimodule map A (x) A -> M, a (x) b -> a m b (columns at a * n + b).
QuotientMap canonical_morphism(const Bimodule& m, const Vector& element);

/// Coordinates of A (x) M^A are (i, t) -> i * dim M^A + t for e_i (x) v_t,
/// v_t the basis returned by invariants().
/// epsilon: a (x) m -> am.
QuotientMap epsilon_map(const Bimodule& m);
/// zeta: m -> R^1 (x) R^2 m R^3. Throws NotInvariant if some R^2 m R^3 part
/// falls outside M^A (possible only for a bad R).
QuotientMap zeta_map(const RMatrixCertificate& r, const Bimodule& m);
/// alpha: A (x) M^A -> (A (x) M)^{k (x) A}, a (x) m -> a (x) m, the target
/// given in the free-variable basis of the invariants of A (x) M under
/// the action on M only.
QuotientMap alpha_map(const Bimodule& m);
/// eta: k^d -> (A (x) k^d)^A, n -> 1 (x) n.
QuotientMap adjunction_unit(const Algebra& a, std::size_t d);

struct AuditCheck {
  bool pass = true;
  std::string detail;
  SparseVector witness;
};

struct AuditReport {
  std::map<std::string, AuditCheck> checks;

  bool all_pass() const;
};

/// Hexagon (triangle) identities on (M, N, P), symmetry and invertibility of
/// c_{M,N}, the bimodule-map property, and naturality against the f_m / g_n
/// family for a few sampled m, n. A corrupted R shows up as a failed check
/// (a map that is not well defined is recorded as a failure, not thrown).
AuditReport audit_braiding(const RMatrixCertificate& r, const Bimodule& m, const Bimodule& n, const Bimodule& p,
                           std::uint64_t seed = 1);

/// phi_{N,N'}: (A (x) N) (x)_A (A (x) N') -> A (x) N (x) N' against the
/// braiding, for N = k^d1, N' = k^d2.
AuditReport monoidal_F_audit(const RMatrixCertificate& r, std::size_t d1, std::size_t d2);

}  // namespace canonr
