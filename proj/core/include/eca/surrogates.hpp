#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "eca/event_series.hpp"

namespace eca {

using SurrogateEngine = std::mt19937_64;

/// Engine for surrogate `index` of an ensemble seeded with `master`. Each
/// surrogate gets its own stream, so ensembles are independent of how the
/// work is split across threads.
SurrogateEngine surrogate_engine(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [0, bound). Portable across standard libraries.
std::uint64_t uniform_below(SurrogateEngine& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(SurrogateEngine& rng);

/// `count` distinct steps drawn uniformly from 1..steps, sorted.
std::vector<double> shuffled_steps(std::size_t count, std::size_t steps, SurrogateEngine& rng);

/// `count` times drawn uniformly from [span.start, span.end), sorted.
std::vector<double> shuffled_times(std::size_t count, const Span& span, SurrogateEngine& rng);

/// Differences between consecutive sorted event times.
std::vector<double> waiting_times(std::span<const double> sorted_times);

/// Starts at span.start, repeatedly adds a waiting time drawn uniformly from
/// `waits` and records an event, stopping before the first event that would
/// fall after span.end.
std::vector<double> waiting_time_surrogate(std::span<const double> waits, const Span& span,
                                           SurrogateEngine& rng);

}  // namespace eca
