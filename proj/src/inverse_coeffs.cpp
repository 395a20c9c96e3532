#include "trimap/inverse_coeffs.hpp"

#include <stdexcept>
#include <utility>

namespace trimap {

PsiSeries psi_from_branch(const TriangleSignature& sig, Vertex v,
                          const BranchSeries& branch, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  const TriangleSignature cycled = cycle_signature(sig, v);
  if (branch.branch_order != cycled.m) {
    throw std::invalid_argument("branch series does not match the vertex");
  }
  if (branch.unit_part.order() < order - 1) {
    throw std::invalid_argument("branch series truncated below requested order");
  }

  // w = z^(1/m) u(z) means w^m = z u(z)^m; revert that series and read the
  // inverse's coefficients off the reversion.
  const RationalSeries um = series_pow(branch.unit_part, static_cast<unsigned>(branch.branch_order));
  std::vector<Rational> shifted(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) shifted[k] = um[k - 1];
  const RationalSeries inverse = series_revert(RationalSeries(std::move(shifted)));

  PsiSeries psi;
  psi.signature = sig;
  psi.cycled_signature = cycled;
  psi.vertex_label = v;
  psi.branch_order = branch.branch_order;
  psi.coefficients.reserve(order);
  for (int k = 1; k <= order; ++k) psi.coefficients.push_back(inverse[k]);
  return psi;
}

PsiSeries psi_series(const TriangleSignature& sig, Vertex v, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  const TriangleSignature cycled = cycle_signature(sig, v);
  return psi_from_branch(sig, v, phi_series(cycled, order - 1), order);
}

std::complex<double> psi_eval_numeric(const PsiSeries& psi,
                                      std::complex<double> w) {
  std::complex<double> u(1.0, 0.0);
  for (int i = 0; i < psi.branch_order; ++i) u *= w;
  std::complex<double> acc(0.0, 0.0);
  for (auto it = psi.coefficients.rbegin(); it != psi.coefficients.rend();
       ++it) {
    acc = acc * u + it->to_double();
  }
  return acc * u;
}

}  // namespace trimap
