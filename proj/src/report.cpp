#include "trimap/report.hpp"

#include <cstdio>
#include <sstream>

namespace trimap {

namespace {

std::string signature_array(const TriangleSignature& sig) {
  std::ostringstream out;
  out << '[' << sig.m << ", " << sig.n << ", " << sig.p << ']';
  return out.str();
}

std::string complex_object(std::complex<double> z) {
  return "{\"re\": " + format_double(z.real()) +
         ", \"im\": " + format_double(z.imag()) + "}";
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";  // merge the signed zeros
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string params_report_json(const TriangleSignature& sig) {
  const AngleParams ap = derive_params(sig);
  std::ostringstream out;
  out << "{\n";
  out << "  \"tool\": \"" << kToolName << "\",\n";
  out << "  \"version\": \"" << kToolVersion << "\",\n";
  out << "  \"signature\": " << signature_array(sig) << ",\n";
  out << "  \"alpha\": \"" << ap.alpha.str() << "\",\n";
  out << "  \"beta\": \"" << ap.beta.str() << "\",\n";
  out << "  \"gamma\": \"" << ap.gamma.str() << "\",\n";
  out << "  \"denom_params\": {\"a\": \"" << ap.denom_params.a.str()
      << "\", \"b\": \"" << ap.denom_params.b.str() << "\", \"c\": \""
      << ap.denom_params.c.str() << "\"},\n";
  out << "  \"numer_params\": {\"a\": \"" << ap.numer_params.a.str()
      << "\", \"b\": \"" << ap.numer_params.b.str() << "\", \"c\": \""
      << ap.numer_params.c.str() << "\"}\n";
  out << "}\n";
  return out.str();
}

std::string params_report_text(const TriangleSignature& sig) {
  const AngleParams ap = derive_params(sig);
  std::ostringstream out;
  out << "signature: (" << sig.m << ", " << sig.n << ", " << sig.p << ")\n";
  out << "alpha = " << ap.alpha.str() << "\n";
  out << "beta  = " << ap.beta.str() << "\n";
  out << "gamma = " << ap.gamma.str() << "\n";
  out << "a  = " << ap.denom_params.a.str() << "\n";
  out << "b  = " << ap.denom_params.b.str() << "\n";
  out << "c  = " << ap.denom_params.c.str() << "\n";
  out << "a' = " << ap.numer_params.a.str() << "\n";
  out << "b' = " << ap.numer_params.b.str() << "\n";
  out << "c' = " << ap.numer_params.c.str() << "\n";
  return out.str();
}

std::string coeff_report_json(const PsiSeries& psi, const VertexFrame& frame) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"tool\": \"" << kToolName << "\",\n";
  out << "  \"version\": \"" << kToolVersion << "\",\n";
  out << "  \"signature\": " << signature_array(psi.signature) << ",\n";
  out << "  \"vertex\": \"" << vertex_name(psi.vertex_label) << "\",\n";
  out << "  \"cycled_signature\": " << signature_array(psi.cycled_signature)
      << ",\n";
  out << "  \"branch_order\": " << psi.branch_order << ",\n";
  out << "  \"order\": " << psi.coefficients.size() << ",\n";
  out << "  \"coefficients\": [";
  for (std::size_t i = 0; i < psi.coefficients.size(); ++i) {
    if (i) out << ", ";
    out << '"' << psi.coefficients[i].str() << '"';
  }
  out << "],\n";
  out << "  \"frame\": {\n";
  out << "    \"d\": " << complex_object(frame.d) << ",\n";
  out << "    \"d_tilde\": " << complex_object(frame.d_tilde) << ",\n";
  out << "    \"t\": " << format_double(frame.t) << ",\n";
  out << "    \"nu\": " << format_double(frame.nu) << ",\n";
  out << "    \"nu_cycled\": " << format_double(frame.nu_cycled) << "\n";
  out << "  }\n";
  out << "}\n";
  return out.str();
}

std::string coeff_report_csv(const PsiSeries& psi) {
  std::ostringstream out;
  out << "k,coefficient\n";
  for (std::size_t i = 0; i < psi.coefficients.size(); ++i) {
    out << (i + 1) << ',' << psi.coefficients[i].str() << '\n';
  }
  return out.str();
}

}  // namespace trimap
