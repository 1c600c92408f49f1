#include "cyclic/output.hpp"

#include <sstream>

namespace cyclic {

std::string format_value(const PrecReal& v, int digits) {
  if (mpfr_integer_p(v.raw()) &&
      mpfr_cmp_ui(v.raw(), 0) >= 0 &&
      mpfr_fits_ulong_p(v.raw(), MPFR_RNDN)) {
    unsigned long u = mpfr_get_ui(v.raw(), MPFR_RNDN);
    return std::to_string(u);
  }
  return v.to_decimal(digits);
}

std::string census_csv_header() { return "x,count,method,elapsed_ns"; }

std::string census_csv_row(const CensusRecord& rec, bool with_timing) {
  std::ostringstream out;
  out << rec.x << ',' << rec.count << ',' << census_method_name(rec.method) << ','
      << (with_timing ? rec.elapsed_ns : 0);
  return out.str();
}

std::string coeffs_csv_header() { return "k,C_k,c_k"; }

std::string coeffs_csv_row(const CoefficientTable& table, long k, int digits) {
  std::ostringstream out;
  out << k << ',' << table.C_at(k).to_decimal(digits) << ','
      << table.c_at(k).to_decimal(digits);
  return out.str();
}

std::string compare_csv_header() {
  return "L,N,series_value,integral_value,relative_gap";
}

std::string compare_csv_row(const MainTermReport& rep, int digits) {
  std::ostringstream out;
  out << rep.scale.L.to_decimal(digits) << ',' << rep.N << ','
      << rep.series_value.to_decimal(digits) << ','
      << rep.integral_value.to_decimal(digits) << ','
      << rep.relative_gap.to_decimal(digits);
  return out.str();
}

std::string diagnostic_csv_header() { return "kind,params,observed,reference,residual"; }

std::string join_params(const DiagnosticRow& row) {
  std::string out;
  for (const auto& [key, value] : row.params) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::string diagnostic_csv_row(const DiagnosticRow& row, int digits) {
  std::ostringstream out;
  out << diagnostic_kind_name(row.kind) << ',' << join_params(row) << ','
      << format_value(row.observed, digits) << ','
      << format_value(row.reference, digits) << ','
      << format_value(row.residual, digits);
  return out.str();
}

}  // namespace cyclic
