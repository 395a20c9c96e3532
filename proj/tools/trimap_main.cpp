#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trimap/inverse_coeffs.hpp"
#include "trimap/numeric_verify.hpp"
#include "trimap/report.hpp"
#include "trimap/svg.hpp"
#include "trimap/triangle_map.hpp"

namespace {

using trimap::TriangleSignature;
using trimap::Vertex;

bool parse_signature_text(const std::string& text, TriangleSignature* sig) {
  int vals[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string::npos) return false;
    const std::string token = text.substr(pos, end - pos);
    if (token.empty()) return false;
    try {
      std::size_t used = 0;
      vals[i] = std::stoi(token, &used);
      if (used != token.size()) return false;
    } catch (...) {
      return false;
    }
    pos = end + 1;
  }
  sig->m = vals[0];
  sig->n = vals[1];
  sig->p = vals[2];
  return true;
}

// Exit code 2 is reserved for usage errors; malformed -s values count.
TriangleSignature require_signature(const std::string& text) {
  TriangleSignature sig;
  if (!parse_signature_text(text, &sig)) {
    throw CLI::ValidationError(
        "signature", "expected three comma-separated integers, got '" + text +
                         "'");
  }
  return sig;
}

Vertex vertex_from(const std::string& name) {
  return name == "A" ? Vertex::A : (name == "B" ? Vertex::B : Vertex::C);
}

int run_params(const std::string& sig_text, const std::string& format) {
  const TriangleSignature sig = require_signature(sig_text);
  std::cout << (format == "json" ? trimap::params_report_json(sig)
                                 : trimap::params_report_text(sig));
  return 0;
}

int run_coeffs(const std::string& sig_text, const std::string& vertex,
               int order, const std::string& format) {
  const TriangleSignature sig = require_signature(sig_text);
  const Vertex v = vertex_from(vertex);
  const trimap::PsiSeries psi = trimap::psi_series(sig, v, order);
  if (format == "csv") {
    std::cout << trimap::coeff_report_csv(psi);
  } else {
    std::cout << trimap::coeff_report_json(psi, trimap::vertex_frame(sig, v));
  }
  return 0;
}

int run_nu(const std::string& sig_text) {
  const TriangleSignature sig = require_signature(sig_text);
  std::cout << trimap::format_double(trimap::nu_value(sig)) << "\n";
  return 0;
}

int run_verify(const std::string& sig_text, int order, double scale) {
  const TriangleSignature sig = require_signature(sig_text);
  trimap::validate_signature(sig);

  struct Row {
    std::string name;
    double error;
    double tolerance;
  };
  std::vector<Row> rows;

  rows.push_back({"roundtrip",
                  trimap::roundtrip_check(
                      sig, order, trimap::default_roundtrip_samples(sig)),
                  1e-9 * scale});
  for (const Vertex v : {Vertex::B, Vertex::C}) {
    rows.push_back({std::string("consistency-") + trimap::vertex_name(v),
                    trimap::vertex_consistency_check(
                        sig, v, order,
                        trimap::default_consistency_samples(sig, v)),
                    1e-6 * scale});
  }
  rows.push_back({"nu-crosscheck", trimap::nu_crosscheck(sig), 1e-9 * scale});

  double angle_dev = 0.0;
  const double expected[3] = {std::numbers::pi / sig.m,
                              std::numbers::pi / sig.n,
                              std::numbers::pi / sig.p};
  for (const trimap::TriangleTile& tile : trimap::tiling(sig, 2)) {
    const std::array<double, 3> angles = trimap::tile_angles(tile);
    for (int i = 0; i < 3; ++i) {
      angle_dev = std::max(angle_dev, std::fabs(angles[i] - expected[i]));
    }
  }
  rows.push_back({"tile-angles", angle_dev, 1e-6 * scale});

  std::printf("signature (%d, %d, %d), order %d\n", sig.m, sig.n, sig.p,
              order);
  std::printf("%-16s %14s %14s  %s\n", "check", "max_error", "tolerance",
              "result");
  bool all_pass = true;
  for (const Row& row : rows) {
    const bool pass = row.error <= row.tolerance;
    all_pass = all_pass && pass;
    std::printf("%-16s %14.6e %14.6e  %s\n", row.name.c_str(), row.error,
                row.tolerance, pass ? "PASS" : "FAIL");
  }
  return all_pass ? 0 : 1;
}

int run_tile(const std::string& sig_text, int depth, const std::string& path) {
  const TriangleSignature sig = require_signature(sig_text);
  const std::vector<trimap::TriangleTile> tiles = trimap::tiling(sig, depth);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  trimap::write_tiling_svg(out, tiles);
  if (!out.good()) throw std::runtime_error("failed writing: " + path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact inverse-series coefficients, normalization data, and disc "
      "tilings for hyperbolic triangle signatures"};
  app.require_subcommand(1);

  std::string params_sig, params_format = "text";
  CLI::App* params = app.add_subcommand(
      "params", "print the exact hypergeometric parameters of a signature");
  params->add_option("-s,--signature", params_sig, "signature M,N,P")
      ->required();
  params->add_option("--format", params_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string coeffs_sig, coeffs_vertex, coeffs_format = "json";
  int coeffs_order = 0;
  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "print exact inverse-series coefficients about a vertex");
  coeffs->add_option("-s,--signature", coeffs_sig, "signature M,N,P")
      ->required();
  coeffs->add_option("-v,--vertex", coeffs_vertex, "vertex A, B, or C")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C"}));
  coeffs->add_option("-n,--order", coeffs_order, "number of coefficients")
      ->required()
      ->check(CLI::Range(1, 2000));
  coeffs->add_option("--format", coeffs_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string nu_sig;
  CLI::App* nu = app.add_subcommand(
      "nu", "print the disc-normalization scale of a signature");
  nu->add_option("-s,--signature", nu_sig, "signature M,N,P")->required();

  std::string verify_sig;
  int verify_order = 60;
  double verify_scale = 1.0;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the numeric verification suite and print a table");
  verify->add_option("-s,--signature", verify_sig, "signature M,N,P")
      ->required();
  verify->add_option("--order", verify_order, "series truncation order")
      ->check(CLI::Range(1, 500));
  verify->add_option("--tolerance-scale", verify_scale,
                     "multiply all tolerances by this factor")
      ->check(CLI::PositiveNumber);

  std::string tile_sig, tile_out;
  int tile_depth = 0;
  CLI::App* tile = app.add_subcommand(
      "tile", "render the reflection tiling of the disc as SVG");
  tile->add_option("-s,--signature", tile_sig, "signature M,N,P")->required();
  tile->add_option("-d,--depth", tile_depth, "reflection depth (max 8)")
      ->required();
  tile->add_option("-o,--output", tile_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (params->parsed()) return run_params(params_sig, params_format);
    if (coeffs->parsed()) {
      return run_coeffs(coeffs_sig, coeffs_vertex, coeffs_order,
                        coeffs_format);
    }
    if (nu->parsed()) return run_nu(nu_sig);
    if (verify->parsed()) {
      return run_verify(verify_sig, verify_order, verify_scale);
    }
    if (tile->parsed()) return run_tile(tile_sig, tile_depth, tile_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "trimap: usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "trimap: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
