#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "eca/errors.hpp"

namespace eca {

/// State of one time step in an event time series.
enum class Step : std::uint8_t { kNoEvent = 0, kEvent = 1, kMissing = 2 };

/// Binary event indicator sampled on equidistant discrete time steps
/// ("ts" format). Steps may be missing.
class EventTimeSeries {
 public:
  /// Throws DataError when `steps` is empty.
  explicit EventTimeSeries(std::vector<Step> steps);

  /// Builds a series from 0/1 indicators; any other value marks a missing step.
  static EventTimeSeries from_indicators(std::span<const int> indicators);
  static EventTimeSeries from_indicators(std::initializer_list<int> indicators);

  std::size_t size() const { return steps_.size(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  std::span<const Step> steps() const { return steps_; }

  std::size_t event_count() const;
  bool has_missing() const;

  /// Same series with the time axis reversed.
  EventTimeSeries reversed() const;

  friend bool operator==(const EventTimeSeries&, const EventTimeSeries&) = default;

 private:
  std::vector<Step> steps_;
};

/// Closed observation interval [start, end].
struct Span {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
  bool contains(double t) const { return start <= t && t <= end; }

  friend bool operator==(const Span&, const Span&) = default;
};

/// Strictly increasing real-valued event times inside an observation span
/// ("es" format). Continuous observation is assumed; gaps cannot be represented.
class EventSequence {
 public:
  /// Sorts `times` and removes duplicates (reporting each through `warn`).
  /// Throws ParameterError unless span.start < span.end, and DataError when a
  /// time is non-finite or outside the span.
  EventSequence(std::vector<double> times, Span span,
                const WarningHandler& warn = stderr_warnings());

  std::span<const double> times() const { return times_; }
  const Span& span() const { return span_; }
  std::size_t event_count() const { return times_.size(); }

  friend bool operator==(const EventSequence&, const EventSequence&) = default;

 private:
  std::vector<double> times_;
  Span span_;
};

/// Event times are the 1-based indices of event steps; the span is (1, T).
/// Throws DataError if the series has missing steps or fewer than two steps
/// (a one-step series has no non-degenerate span).
EventSequence ts_to_es(const EventTimeSeries& series);

/// Samples `seq` on a grid of width 10^-resolution_digits anchored at the
/// rounded span start. Events that round onto the same step are merged and
/// reported through `warn`.
EventTimeSeries es_to_ts(const EventSequence& seq, int resolution_digits,
                         const WarningHandler& warn = stderr_warnings());

}  // namespace eca
