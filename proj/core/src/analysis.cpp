#include "eca/analysis.hpp"

namespace eca {

EcaResult run_eca(const AlignedEvents& events, const EcaParams& params, const SigConfig& sig) {
  sig.validate();
  EcaResult result;
  result.counts = count_coincidences(events, params);
  result.sig = sig;
  result.rate_precursor = result.counts.precursor_rate();
  result.rate_trigger = result.counts.trigger_rate();

  PValues p;
  switch (sig.method) {
    case SigMethod::kPoisson:
      result.sig.seed.reset();
      p = analytical_test(events, result.counts, params);
      break;
    case SigMethod::kShuffle:
      result.sig.seed = resolve_seed(sig);
      p = shuffle_test(events, params, result.sig);
      break;
    case SigMethod::kSurrogate:
      result.sig.seed = resolve_seed(sig);
      p = waiting_time_test(events, params, result.sig);
      break;
  }
  result.p_precursor = p.precursor;
  result.p_trigger = p.trigger;
  result.nh_precursor = decide(p.precursor, sig.alpha);
  result.nh_trigger = decide(p.trigger, sig.alpha);
  return result;
}

EcaResult run_eca_ts(const EventTimeSeries& a, const EventTimeSeries& b, const EcaParams& params,
                     const SigConfig& sig) {
  params.validate(SeriesFormat::kEventTimeSeries);
  return run_eca(align(a, b), params, sig);
}

EcaResult run_eca_es(const EventSequence& a, const EventSequence& b, const EcaParams& params,
                     const SigConfig& sig) {
  params.validate(SeriesFormat::kEventSequence);
  return run_eca(align(a, b), params, sig);
}

}  // namespace eca
