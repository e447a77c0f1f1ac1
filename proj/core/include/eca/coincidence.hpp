#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eca/event_series.hpp"

namespace eca {

enum class SeriesFormat { kEventSequence, kEventTimeSeries };

/// Tolerance window and lag. For event time series both values count time
/// steps and must be integers.
struct EcaParams {
  double delta_t = 0.0;
  bool symmetric = false;
  double lag = 0.0;

  /// Throws ParameterError for negative or non-finite values and for a
  /// symmetric window combined with a nonzero lag (not defined).
  void validate() const;
  /// As validate(), plus integrality for kEventTimeSeries.
  void validate(SeriesFormat format) const;
};

/// Outcome of counting coincidences between series A and B.
struct CoincidenceCounts {
  std::size_t k_precursor = 0;  ///< A-events preceded by at least one B-event
  std::size_t k_trigger = 0;    ///< B-events followed by at least one A-event
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  double t_eff = 0.0;  ///< retained steps (ts) or observation span length (es)
  std::vector<bool> flags_a;
  std::vector<bool> flags_b;

  double precursor_rate() const;
  double trigger_rate() const;
};

// Sorted-time kernels. These do no validation and are what surrogate
// ensembles call in their inner loop.

/// A-event i matches iff a B-event lies in [a_i - lag - delta_t, a_i - lag]
/// (directional) or [a_i - delta_t, a_i + delta_t] (symmetric).
std::vector<bool> precursor_flags(std::span<const double> a, std::span<const double> b,
                                  const EcaParams& params);
/// B-event j matches iff an A-event lies in [b_j + lag, b_j + lag + delta_t]
/// (directional) or [b_j - delta_t, b_j + delta_t] (symmetric).
std::vector<bool> trigger_flags(std::span<const double> a, std::span<const double> b,
                                const EcaParams& params);
std::size_t count_precursor_matches(std::span<const double> a, std::span<const double> b,
                                    const EcaParams& params);
std::size_t count_trigger_matches(std::span<const double> a, std::span<const double> b,
                                  const EcaParams& params);

/// Both series placed on one time axis, ready for counting and testing.
///
/// For event time series, steps missing in either input are dropped pairwise
/// and the remaining steps renumbered 1..T_eff, so steps on either side of a
/// gap become adjacent. For event sequences, both series are cut to the
/// intersection of their spans.
struct AlignedEvents {
  SeriesFormat format = SeriesFormat::kEventSequence;
  std::vector<double> a;
  std::vector<double> b;
  Span span;
  /// T entering the significance tests: number of retained steps for ts,
  /// span length for es.
  double length = 0.0;
  /// ts only: original 0-based step index of each retained step.
  std::vector<std::size_t> kept_steps;
};

/// Throws DataError on a length mismatch.
AlignedEvents align(const EventTimeSeries& a, const EventTimeSeries& b);
/// Throws DataError when the spans do not overlap in an interval.
AlignedEvents align(const EventSequence& a, const EventSequence& b);

/// Counts both sides. Throws DataError if either aligned series has no events.
CoincidenceCounts count_coincidences(const AlignedEvents& events, const EcaParams& params);

/// Precursor side only (trigger fields left zero/empty).
CoincidenceCounts count_precursor(const EventSequence& a, const EventSequence& b,
                                  const EcaParams& params);
/// Trigger side only (precursor fields left zero/empty).
CoincidenceCounts count_trigger(const EventSequence& a, const EventSequence& b,
                                const EcaParams& params);

}  // namespace eca
