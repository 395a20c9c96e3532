#pragma once

#include <string>

#include "trimap/inverse_coeffs.hpp"
#include "trimap/triangle_map.hpp"

namespace trimap {

inline constexpr const char* kToolName = "trimap";
inline constexpr const char* kToolVersion = "0.1.0";

// Fixed-format float for reports: 17 significant digits, locale-free.
std::string format_double(double x);

// Parameter report: every value an exact "p/q" string, fixed key order.
std::string params_report_json(const TriangleSignature& sig);
std::string params_report_text(const TriangleSignature& sig);

// Coefficient report for one vertex: exact coefficient strings plus the
// frame data (floats) needed to transport them into disc coordinates.
std::string coeff_report_json(const PsiSeries& psi, const VertexFrame& frame);
std::string coeff_report_csv(const PsiSeries& psi);

}  // namespace trimap
