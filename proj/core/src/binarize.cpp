#include "eca/binarize.hpp"

#include <algorithm>
#include <cmath>

namespace eca {
namespace {

bool is_missing(const Observation& v) { return !v.has_value() || std::isnan(*v); }

std::vector<double> present_values(std::span<const Observation> data) {
  std::vector<double> out;
  out.reserve(data.size());
  for (const auto& v : data) {
    if (!is_missing(v)) out.push_back(*v);
  }
  return out;
}

}  // namespace

double empirical_quantile(std::span<const Observation> data, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("percentile threshold must lie in [0, 1]");
  auto values = present_values(data);
  if (values.empty()) throw DataError("cannot compute a quantile: all values are missing");
  std::sort(values.begin(), values.end());

  const double h = static_cast<double>(values.size() - 1) * q;  // 0-based rank
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

double cut_value(std::span<const Observation> data, const ThresholdSpec& spec) {
  if (spec.method == ThresholdMethod::kPercentile) {
    return empirical_quantile(data, spec.threshold);
  }
  if (!std::isfinite(spec.threshold)) throw ParameterError("absolute threshold must be finite");
  return spec.threshold;
}

EventTimeSeries binarize(std::span<const Observation> data, const ThresholdSpec& spec) {
  if (data.empty()) throw DataError("cannot binarize an empty series");
  if (std::all_of(data.begin(), data.end(), is_missing)) {
    throw DataError("cannot binarize: all values are missing");
  }
  const double cut = cut_value(data, spec);

  std::vector<Step> steps;
  steps.reserve(data.size());
  for (const auto& v : data) {
    if (is_missing(v)) {
      steps.push_back(Step::kMissing);
      continue;
    }
    const bool event = spec.direction == EventDirection::kHigher ? *v > cut : *v < cut;
    steps.push_back(event ? Step::kEvent : Step::kNoEvent);
  }
  return EventTimeSeries(std::move(steps));
}

}  // namespace eca
