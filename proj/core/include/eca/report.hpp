#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "eca/analysis.hpp"

namespace eca {

/// Everything needed to reproduce and interpret one ECA run.
struct RunReport {
  bool nh_precursor = true;
  bool nh_trigger = true;
  double p_precursor = 1.0;
  double p_trigger = 1.0;
  double rate_precursor = 0.0;
  double rate_trigger = 0.0;

  SigMethod method = SigMethod::kPoisson;
  std::size_t reps = 1000;
  double alpha = 0.05;
  std::optional<std::uint64_t> seed;
  double delta_t = 0.0;
  double lag = 0.0;
  bool symmetric = false;
  SeriesFormat format = SeriesFormat::kEventTimeSeries;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t k_precursor = 0;
  std::size_t k_trigger = 0;
  double t_eff = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const EcaResult& result, const EcaParams& params, SeriesFormat format);

std::string to_string(SigMethod method);
std::string to_string(SeriesFormat format);
/// Throws ParameterError for unknown names.
SigMethod parse_sig_method(const std::string& name);
SeriesFormat parse_series_format(const std::string& name);

/// Six-line block: NH flags, p-values (8 significant digits), rates
/// (7 significant digits).
std::string format_text(const RunReport& report);

/// Single JSON object; doubles are written in shortest round-trip form.
std::string to_json(const RunReport& report);
/// Inverse of to_json(). Throws DataError on malformed documents.
RunReport report_from_json(const std::string& json);

}  // namespace eca
