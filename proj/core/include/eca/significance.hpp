#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "eca/coincidence.hpp"

namespace eca {

enum class SigMethod {
  kPoisson,    ///< analytical binomial approximation
  kShuffle,    ///< surrogates with uniformly placed events
  kSurrogate,  ///< surrogates resampling the empirical waiting times
};

struct SigConfig {
  SigMethod method = SigMethod::kPoisson;
  std::size_t reps = 1000;
  double alpha = 0.05;
  /// Master seed for surrogate ensembles; drawn from std::random_device when unset.
  std::optional<std::uint64_t> seed;
  /// Worker threads for surrogate ensembles, 0 = hardware concurrency.
  /// Results do not depend on this value.
  unsigned threads = 0;

  void validate() const;
};

struct PValues {
  double precursor = 1.0;
  double trigger = 1.0;
};

/// Effective window length TOL of the analytical null model:
/// es directional delT, ts directional delT+1, es symmetric 2 delT,
/// ts symmetric 2 delT+1.
double effective_tol(double delta_t, bool symmetric, SeriesFormat format);

/// Probability that one reference event has at least one of `n_other`
/// independent uniformly placed events inside its window:
/// 1 - (1 - tol/(T - lag))^n_other.
double match_probability(std::size_t n_other, double length, double lag, double tol);

/// log P(X >= k) for X ~ Binomial(n, p). Accurate deep into the tail.
double log_binomial_upper_tail(std::size_t n, std::size_t k, double p);

/// P(X >= k) for X ~ Binomial(n, p); exactly 1 for k = 0.
double binomial_upper_tail(std::size_t n, std::size_t k, double p);

/// Probability of `k` or more coincidences among `n_ref` reference events
/// under independent Poisson processes. The precursor test passes
/// (N_A, N_B, K_p); the trigger test passes (N_B, N_A, K_t).
///
/// Throws ParameterError unless k <= n_ref, n_other >= 1, length > lag and
/// 0 <= tol <= length - lag.
double analytical_pvalue(std::size_t n_ref, std::size_t n_other, std::size_t k, double length,
                         double lag, double tol);

/// Both analytical p-values for already counted coincidences.
PValues analytical_test(const AlignedEvents& events, const CoincidenceCounts& counts,
                        const EcaParams& params);

/// Seed actually used by a surrogate test under `sig`.
std::uint64_t resolve_seed(const SigConfig& sig);

/// Shuffle surrogates: event counts are kept, positions drawn uniformly (ts:
/// without replacement over the retained steps; es: continuous over the span).
/// p = #{surrogates with K_surr >= K_obs} / reps.
PValues shuffle_test(const AlignedEvents& events, const EcaParams& params, const SigConfig& sig);
PValues shuffle_test(const EventTimeSeries& a, const EventTimeSeries& b, const EcaParams& params,
                     const SigConfig& sig);
PValues shuffle_test(const EventSequence& a, const EventSequence& b, const EcaParams& params,
                     const SigConfig& sig);

/// Waiting-time surrogates: each series is rebuilt from waiting times drawn
/// with replacement from its own inter-event intervals, starting one drawn
/// wait after span.start and truncated at span.end. Surrogate event counts
/// vary around the observed ones. Requires at least two events per series.
PValues waiting_time_test(const AlignedEvents& events, const EcaParams& params,
                          const SigConfig& sig);
PValues waiting_time_test(const EventTimeSeries& a, const EventTimeSeries& b,
                          const EcaParams& params, const SigConfig& sig);
PValues waiting_time_test(const EventSequence& a, const EventSequence& b,
                          const EcaParams& params, const SigConfig& sig);

/// True when the null hypothesis is retained, i.e. p >= alpha.
inline bool decide(double p, double alpha) { return p >= alpha; }

}  // namespace eca
