#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclic/asymptotics.hpp"
#include "cyclic/census.hpp"
#include "cyclic/constants.hpp"
#include "cyclic/diagnostics.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/output.hpp"
#include "cyclic/scale.hpp"
#include "cyclic/series.hpp"

namespace {

using cyclic::PrecReal;
using json = nlohmann::json;

std::string strip_underscores(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != '_') out += c;
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::string s = strip_underscores(text);
  if (s.empty() || s[0] == '-')
    throw cyclic::usage_error(what + " must be a nonnegative integer");
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos, 10);
  } catch (const std::exception&) {
    throw cyclic::usage_error(what + " is not a valid integer: " + text);
  }
  if (pos != s.size())
    throw cyclic::usage_error(what + " is not a valid integer: " + text);
  return v;
}

long parse_long(const std::string& text, const std::string& what) {
  std::uint64_t v = parse_u64(text, what);
  if (v > 1'000'000) throw cyclic::usage_error(what + " is out of range");
  return static_cast<long>(v);
}

struct CommonOpts {
  std::string format = "csv";
  std::string output_path;
  std::string precision = "256";
  std::string digits;  // empty: derive from precision
  bool timing = false;

  long precision_bits() const { return parse_long(precision, "--precision"); }
  int out_digits() const {
    if (!digits.empty()) return static_cast<int>(parse_long(digits, "--digits"));
    return PrecReal::default_digits(precision_bits());
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", opts.output_path, "Write output to a file");
  cmd->add_option("--precision", opts.precision, "Working precision in bits");
  cmd->add_option("--digits", opts.digits, "Decimal digits in printed values");
  cmd->add_flag("--timing", opts.timing, "Report measured elapsed_ns");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.output_path, std::ios::binary);
  if (!f) throw cyclic::usage_error("cannot open output file: " + opts.output_path);
  f << text;
}

// Scale from either --x or --L (exactly one), shared by eval/compare.
cyclic::ScalePoint scale_from(const std::string& x_text, const std::string& L_text,
                              long precision_bits, bool* used_x) {
  if (x_text.empty() == L_text.empty())
    throw cyclic::usage_error("provide exactly one of --x and --L");
  if (!x_text.empty()) {
    *used_x = true;
    return cyclic::make_scale(parse_u64(x_text, "--x"), precision_bits);
  }
  *used_x = false;
  PrecReal L = PrecReal::from_string(strip_underscores(L_text), precision_bits);
  return cyclic::make_scale_synthetic(L, precision_bits);
}

void note_pre_asymptotic(const cyclic::ScalePoint& s) {
  if (s.mode == cyclic::ScaleMode::integer_x && mpfr_cmp_ui(s.y.raw(), 2) < 0)
    std::cerr << "note: pre-asymptotic regime (y < 2); values are densities, "
                 "not counts\n";
}

int run_count(const CommonOpts& opts, const std::string& x_text,
              const std::string& threads_text, const std::string& segment_text) {
  std::uint64_t x = parse_u64(x_text, "--x");
  unsigned threads =
      threads_text.empty()
          ? 0
          : static_cast<unsigned>(parse_long(threads_text, "--threads"));
  std::uint64_t seg = segment_text.empty() ? 0 : parse_u64(segment_text, "--segment-size");
  cyclic::CensusRecord rec = cyclic::count_cyclic(x, threads, seg);
  if (opts.format == "json") {
    json j{{"x", rec.x},
           {"count", rec.count},
           {"method", cyclic::census_method_name(rec.method)},
           {"elapsed_ns", opts.timing ? rec.elapsed_ns : 0}};
    emit(opts, j.dump(2) + "\n");
  } else {
    emit(opts, cyclic::census_csv_header() + "\n" +
                   cyclic::census_csv_row(rec, opts.timing) + "\n");
  }
  return 0;
}

int run_enumerate(const CommonOpts& opts, const std::string& lo_text,
                  const std::string& hi_text) {
  std::uint64_t lo = lo_text.empty() ? 1 : parse_u64(lo_text, "--lo");
  std::uint64_t hi = parse_u64(hi_text, "--hi");
  std::vector<std::uint64_t> values = cyclic::enumerate_cyclic(lo, hi);
  if (opts.format == "json") {
    json j = values;
    emit(opts, j.dump() + "\n");
  } else {
    std::string text = "n\n";
    for (std::uint64_t n : values) text += std::to_string(n) + "\n";
    emit(opts, text);
  }
  return 0;
}

int run_coeffs(const CommonOpts& opts, const std::string& n_text) {
  long N = parse_long(n_text, "--n");
  long P = opts.precision_bits();
  cyclic::CoefficientTable table = cyclic::cyclic_coeffs(N, P);
  int digits = opts.out_digits();
  if (opts.format == "json") {
    json rows = json::array();
    for (long k = 1; k <= N; ++k)
      rows.push_back(json{{"k", k},
                          {"C_k", table.C_at(k).to_decimal(digits)},
                          {"c_k", table.c_at(k).to_decimal(digits)}});
    emit(opts, rows.dump(2) + "\n");
  } else {
    std::string text = cyclic::coeffs_csv_header() + "\n";
    for (long k = 1; k <= N; ++k)
      text += cyclic::coeffs_csv_row(table, k, digits) + "\n";
    emit(opts, text);
  }
  return 0;
}

int run_eval(const CommonOpts& opts, const std::string& x_text,
             const std::string& L_text, const std::string& n_text) {
  long N = parse_long(n_text, "--n");
  long P = opts.precision_bits();
  bool used_x = false;
  cyclic::ScalePoint s = scale_from(x_text, L_text, P, &used_x);
  note_pre_asymptotic(s);
  cyclic::CoefficientTable table = cyclic::cyclic_coeffs(std::max<long>(N, 1), P);
  PrecReal value = cyclic::eval_expansion(s, table, N);
  int digits = opts.out_digits();
  if (opts.format == "json") {
    json j{{"L", s.L.to_decimal(digits)},
           {"N", N},
           {"series_value", value.to_decimal(digits)}};
    if (used_x) j["x"] = s.x;
    emit(opts, j.dump(2) + "\n");
  } else {
    emit(opts, "L,N,series_value\n" + s.L.to_decimal(digits) + "," +
                   std::to_string(N) + "," + value.to_decimal(digits) + "\n");
  }
  return 0;
}

int run_compare(const CommonOpts& opts, const std::string& x_text,
                const std::string& L_text, const std::string& n_text,
                const std::string& tol_bits_text) {
  long N = parse_long(n_text, "--n");
  long P = opts.precision_bits();
  long tol_bits = parse_long(tol_bits_text, "--quad-tol-bits");
  bool used_x = false;
  cyclic::ScalePoint s = scale_from(x_text, L_text, P, &used_x);
  note_pre_asymptotic(s);
  cyclic::CoefficientTable table = cyclic::cyclic_coeffs(std::max<long>(N, 1), P);
  cyclic::MainTermReport rep =
      cyclic::compare_main_terms(s, table, N, PrecReal::two_pow(-tol_bits, P));
  int digits = opts.out_digits();
  if (opts.format == "json") {
    json j{{"L", rep.scale.L.to_decimal(digits)},
           {"N", rep.N},
           {"series_value", rep.series_value.to_decimal(digits)},
           {"integral_value", rep.integral_value.to_decimal(digits)},
           {"relative_gap", rep.relative_gap.to_decimal(digits)}};
    if (used_x) j["x"] = rep.scale.x;
    emit(opts, j.dump(2) + "\n");
  } else {
    emit(opts, cyclic::compare_csv_header() + "\n" +
                   cyclic::compare_csv_row(rep, digits) + "\n");
  }
  return 0;
}

int run_diagnose(const CommonOpts& opts, const std::string& kind,
                 const std::string& X_text, const std::string& m_text,
                 const std::string& m_max_text, const std::string& x_text,
                 const std::string& kmax_text) {
  long P = opts.precision_bits();
  std::vector<cyclic::DiagnosticRow> rows;
  if (kind == "mertens") {
    rows.push_back(cyclic::mertens_residual(parse_u64(X_text, "--X"), P));
  } else if (kind == "lemma3") {
    std::uint64_t X = parse_u64(X_text, "--X");
    if (!m_max_text.empty()) {
      rows = cyclic::lemma3_residuals(parse_u64(m_max_text, "--m-max"), X, P);
    } else {
      rows.push_back(cyclic::lemma3_residual(parse_u64(m_text, "--m"), X, P));
    }
  } else if (kind == "sk") {
    std::uint64_t x = parse_u64(x_text, "--x");
    unsigned kmax =
        kmax_text.empty() ? 4 : static_cast<unsigned>(parse_long(kmax_text, "--kmax"));
    rows = cyclic::sk_census_rows(x, kmax, P);
  } else {
    throw cyclic::usage_error("--kind must be mertens, lemma3, or sk");
  }
  int digits = opts.out_digits();
  if (opts.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json params = json::object();
      for (const auto& [key, value] : row.params) params[key] = value;
      arr.push_back(json{{"kind", cyclic::diagnostic_kind_name(row.kind)},
                         {"params", params},
                         {"observed", cyclic::format_value(row.observed, digits)},
                         {"reference", cyclic::format_value(row.reference, digits)},
                         {"residual", cyclic::format_value(row.residual, digits)}});
    }
    emit(opts, arr.dump(2) + "\n");
  } else {
    std::string text = cyclic::diagnostic_csv_header() + "\n";
    for (const auto& row : rows)
      text += cyclic::diagnostic_csv_row(row, digits) + "\n";
    emit(opts, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic-number census, expansion coefficients, and diagnostics"};
  app.require_subcommand(1);

  CommonOpts count_opts, enum_opts, coeffs_opts, eval_opts, compare_opts, diag_opts;
  std::string count_x, count_threads, count_segment;
  std::string enum_lo, enum_hi;
  std::string coeffs_n;
  std::string eval_x, eval_L, eval_n;
  std::string cmp_x, cmp_L, cmp_n, cmp_tol_bits = "80";
  std::string diag_kind, diag_X, diag_m, diag_m_max, diag_x, diag_kmax;

  CLI::App* count = app.add_subcommand("count", "Count cyclic n <= x");
  count->add_option("--x", count_x, "Upper bound")->required();
  count->add_option("--threads", count_threads, "Worker count (0: auto)");
  count->add_option("--segment-size", count_segment, "Sieve segment length");
  add_common(count, count_opts);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List cyclic n in [lo, hi]");
  enumerate->add_option("--lo", enum_lo, "Lower bound (default 1)");
  enumerate->add_option("--hi", enum_hi, "Upper bound")->required();
  add_common(enumerate, enum_opts);

  CLI::App* coeffs = app.add_subcommand("coeffs", "Expansion coefficients c_1..c_N");
  coeffs->add_option("--n", coeffs_n, "Number of coefficients")->required();
  add_common(coeffs, coeffs_opts);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate the truncated expansion");
  eval->add_option("--x", eval_x, "Integer scale");
  eval->add_option("--L", eval_L, "Synthetic scale (log log log x)");
  eval->add_option("--n", eval_n, "Truncation order")->required();
  add_common(eval, eval_opts);

  CLI::App* compare = app.add_subcommand("compare", "Series vs integral main term");
  compare->add_option("--x", cmp_x, "Integer scale");
  compare->add_option("--L", cmp_L, "Synthetic scale (log log log x)");
  compare->add_option("--n", cmp_n, "Truncation order")->required();
  compare->add_option("--quad-tol-bits", cmp_tol_bits,
                      "Quadrature tolerance: 2^-bits");
  add_common(compare, compare_opts);

  CLI::App* diagnose = app.add_subcommand("diagnose", "Residual diagnostics");
  diagnose->add_option("--kind", diag_kind, "mertens, lemma3, or sk")->required();
  diagnose->add_option("--X", diag_X, "Prime summation bound");
  diagnose->add_option("--m", diag_m, "Progression modulus");
  diagnose->add_option("--m-max", diag_m_max, "Batch over m = 1..m_max");
  diagnose->add_option("--x", diag_x, "Classification bound");
  diagnose->add_option("--kmax", diag_kmax, "Largest class index (default 4)");
  add_common(diagnose, diag_opts);

  try {
    app.parse(argc, argv);
    if (count->parsed())
      return run_count(count_opts, count_x, count_threads, count_segment);
    if (enumerate->parsed()) return run_enumerate(enum_opts, enum_lo, enum_hi);
    if (coeffs->parsed()) return run_coeffs(coeffs_opts, coeffs_n);
    if (eval->parsed()) return run_eval(eval_opts, eval_x, eval_L, eval_n);
    if (compare->parsed())
      return run_compare(compare_opts, cmp_x, cmp_L, cmp_n, cmp_tol_bits);
    if (diagnose->parsed())
      return run_diagnose(diag_opts, diag_kind, diag_X, diag_m, diag_m_max, diag_x,
                          diag_kmax);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cyclic::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cyclic::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cyclic::invariant_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
