#pragma once

#include <cstdint>
#include <optional>

#include "eca/coincidence.hpp"
#include "eca/event_series.hpp"
#include "eca/significance.hpp"

namespace eca {

/// Coincidence rates with their significance. `nh_*` is true when the null
/// hypothesis of independent random event series is retained.
struct EcaResult {
  bool nh_precursor = true;
  bool nh_trigger = true;
  double p_precursor = 1.0;
  double p_trigger = 1.0;
  double rate_precursor = 0.0;
  double rate_trigger = 0.0;

  CoincidenceCounts counts;
  SigConfig sig;  ///< configuration used; `sig.seed` holds the resolved seed for surrogate tests
};

/// Counts coincidences on aligned events and runs the configured test.
EcaResult run_eca(const AlignedEvents& events, const EcaParams& params, const SigConfig& sig);

/// ECA on two event time series of equal length. Steps missing in either
/// series are dropped from both before counting.
EcaResult run_eca_ts(const EventTimeSeries& a, const EventTimeSeries& b, const EcaParams& params,
                     const SigConfig& sig = {});

/// ECA on two event sequences over the intersection of their spans.
EcaResult run_eca_es(const EventSequence& a, const EventSequence& b, const EcaParams& params,
                     const SigConfig& sig = {});

}  // namespace eca
