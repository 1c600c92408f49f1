#ifndef CYCLIC_OUTPUT_HPP
#define CYCLIC_OUTPUT_HPP

#include <string>

#include "cyclic/asymptotics.hpp"
#include "cyclic/census.hpp"
#include "cyclic/diagnostics.hpp"
#include "cyclic/prec_real.hpp"
#include "cyclic/series.hpp"

namespace cyclic {

// Decimal rendering for machine output. Values that are exact small integers
// print without an exponent so counts stay readable.
std::string format_value(const PrecReal& v, int digits);

std::string census_csv_header();
// elapsed_ns is reported as 0 unless with_timing is set, keeping output
// byte-stable across runs.
std::string census_csv_row(const CensusRecord& rec, bool with_timing);

std::string coeffs_csv_header();
std::string coeffs_csv_row(const CoefficientTable& table, long k, int digits);

std::string compare_csv_header();
std::string compare_csv_row(const MainTermReport& rep, int digits);

std::string diagnostic_csv_header();
std::string diagnostic_csv_row(const DiagnosticRow& row, int digits);

// params as "k1=v1;k2=v2".
std::string join_params(const DiagnosticRow& row);

}  // namespace cyclic

#endif
