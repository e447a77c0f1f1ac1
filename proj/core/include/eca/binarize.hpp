#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eca/event_series.hpp"

namespace eca {

enum class ThresholdMethod { kPercentile, kAbsolute };
enum class EventDirection { kHigher, kLower };

struct ThresholdSpec {
  ThresholdMethod method = ThresholdMethod::kPercentile;
  /// Probability in [0,1] for kPercentile, a value on the data scale for kAbsolute.
  double threshold = 0.9;
  EventDirection direction = EventDirection::kHigher;
};

/// Raw numeric observation; std::nullopt (or NaN) marks a missing value.
using Observation = std::optional<double>;

/// Empirical quantile of the non-missing values, linearly interpolated between
/// order statistics at rank h = (n-1)q + 1.
double empirical_quantile(std::span<const Observation> data, double q);

/// Value that separates events from non-events for `spec` on `data`.
double cut_value(std::span<const Observation> data, const ThresholdSpec& spec);

/// Marks steps strictly above (kHigher) or strictly below (kLower) the cut
/// value as events. Missing inputs stay missing.
EventTimeSeries binarize(std::span<const Observation> data, const ThresholdSpec& spec);

}  // namespace eca
