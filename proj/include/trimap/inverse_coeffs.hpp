#pragma once

#include <complex>
#include <vector>

#include "trimap/rational.hpp"
#include "trimap/triangle_map.hpp"

namespace trimap {

// Taylor data of the inverse triangle map about a vertex.  In the
// recentred natural coordinate w the inverse is
//   psi(w) = sum_{k >= 1} coefficients[k-1] * w^(k * branch_order),
// an expansion in powers of w^branch_order with coefficients[0] = 1.
struct PsiSeries {
  TriangleSignature signature;
  TriangleSignature cycled_signature;
  Vertex vertex_label = Vertex::A;
  int branch_order = 1;
  std::vector<Rational> coefficients;  // c_1 .. c_order
};

// Exact coefficients c_1 .. c_order of the inverse about vertex v.
PsiSeries psi_series(const TriangleSignature& sig, Vertex v, int order);

// Inversion of an already-computed triangle-map series, which must be the
// one for the vertex's cycled signature truncated at order - 1 or deeper.
PsiSeries psi_from_branch(const TriangleSignature& sig, Vertex v,
                          const BranchSeries& branch, int order);

// Evaluates the truncated series at w (natural scale) by Horner's rule in
// u = w^branch_order.
std::complex<double> psi_eval_numeric(const PsiSeries& psi,
                                      std::complex<double> w);

}  // namespace trimap
