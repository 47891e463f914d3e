#include "canonr/structure.hpp"

namespace canonr {

ExactMatrix f_map(const Algebra& a) {
  const std::size_t n = a.dim();
  ExactMatrix out(n * n, n * n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& il : a.product(i, l)) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& e : a.product(il.index, j)) out.at(e.index * n + l, i * n + j) += il.value * e.value;
        }
      }
    }
  }
  return out;
}

bool is_epi_from_base(const Algebra& a) {
  const std::size_t n = a.dim();
  const AlgebraElement one = AlgebraElement::one(a);
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraElement e = AlgebraElement::basis(a, i);
    if (!(TensorElement::pure({e, one}) == TensorElement::pure({one, e}))) return false;
  }
  return true;
}

ClassificationReport classify(const Algebra& a, const SolveOptions& options) {
  ClassificationReport out;
  out.center_dim = center(a).size();
  out.f_map_bijective = is_bijective(f_map(a));
  out.epi = is_epi_from_base(a);
  out.commutative = a.is_commutative();
  const SolveResult solved = solve_rmatrix(a, options);
  out.rmatrix_exists = solved.feasible() && solved.certificate->valid();
  if (out.commutative) {
    const bool trivial = out.rmatrix_exists && solved.certificate->r == unit_tensor(a, 3);
    out.commutative_rule_holds = out.rmatrix_exists == out.epi && (!out.rmatrix_exists || trivial);
  }
  out.consistent = (out.rmatrix_exists == out.central_simple()) && out.commutative_rule_holds;
  return out;
}

}  // namespace canonr
