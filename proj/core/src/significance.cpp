#include "eca/significance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "eca/surrogates.hpp"

namespace eca {
namespace {

// ---------------------------------------------------------------------------
// Binomial probabilities via Loader's saddle-point expansion, which keeps full
// relative precision where lgamma-based formulas lose digits to cancellation.

// log(n!) - log(sqrt(2 pi n) (n/e)^n) for integer n.
double stirling_error(double n) {
  constexpr double kS0 = 1.0 / 12.0;
  constexpr double kS1 = 1.0 / 360.0;
  constexpr double kS2 = 1.0 / 1260.0;
  constexpr double kS3 = 1.0 / 1680.0;
  constexpr double kS4 = 1.0 / 1188.0;
  if (n <= 15.0) {
    // Extended precision keeps the cancellation harmless for small n.
    const long double x = static_cast<long double>(n);
    return static_cast<double>(std::lgamma(x + 1.0L) - (x + 0.5L) * std::log(x) + x -
                               0.5L * std::log(2.0L * std::numbers::pi_v<long double>));
  }
  const double nn = n * n;
  if (n > 500.0) return (kS0 - kS1 / nn) / n;
  if (n > 80.0) return (kS0 - (kS1 - kS2 / nn) / nn) / n;
  if (n > 35.0) return (kS0 - (kS1 - (kS2 - kS3 / nn) / nn) / nn) / n;
  return (kS0 - (kS1 - (kS2 - (kS3 - kS4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x log(x/np) + np - x, evaluated without cancellation near x = np.
double deviance(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / static_cast<double>(2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
  }
  return x * std::log(x / np) + np - x;
}

double log_binomial_pmf(double k, double n, double p, double q) {
  if (k == 0.0) return n * (p < 0.5 ? std::log1p(-p) : std::log(q));
  if (k == n) return n * (q < 0.5 ? std::log1p(-q) : std::log(p));
  const double lc = stirling_error(n) - stirling_error(k) - stirling_error(n - k) -
                    deviance(k, n * p) - deviance(n - k, n * q);
  const double lf = std::log(2.0 * std::numbers::pi) + std::log(k) + std::log1p(-k / n);
  return lc - 0.5 * lf;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0, 1]");
}

// ---------------------------------------------------------------------------
// Surrogate ensembles.

struct Observed {
  std::size_t k_p, k_t;
};

template <typename GenA, typename GenB>
PValues run_ensemble(const Observed& obs, const EcaParams& params, const SigConfig& sig,
                     const GenA& make_a, const GenB& make_b) {
  const std::uint64_t seed = resolve_seed(sig);
  const std::size_t reps = sig.reps;
  unsigned workers = sig.threads != 0 ? sig.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, reps));

  std::vector<std::size_t> hits_p(workers, 0);
  std::vector<std::size_t> hits_t(workers, 0);
  auto work = [&](unsigned w) {
    const std::size_t begin = reps * w / workers;
    const std::size_t end = reps * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = surrogate_engine(seed, i);
      const auto a = make_a(rng);
      const auto b = make_b(rng);
      const auto kp = count_precursor_matches(a, b, params);
      const auto kt = count_trigger_matches(a, b, params);
      hits_p[w] += kp >= obs.k_p ? 1 : 0;
      hits_t[w] += kt >= obs.k_t ? 1 : 0;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::size_t total_p = 0;
  std::size_t total_t = 0;
  for (unsigned w = 0; w < workers; ++w) {
    total_p += hits_p[w];
    total_t += hits_t[w];
  }
  return {static_cast<double>(total_p) / static_cast<double>(reps),
          static_cast<double>(total_t) / static_cast<double>(reps)};
}

Observed observe(const AlignedEvents& events, const EcaParams& params) {
  params.validate(events.format);
  if (events.a.empty() || events.b.empty()) {
    throw DataError("surrogate tests need at least one event in each series");
  }
  return {count_precursor_matches(events.a, events.b, params),
          count_trigger_matches(events.a, events.b, params)};
}

}  // namespace

void SigConfig::validate() const {
  if (reps < 1) throw ParameterError("reps must satisfy reps >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must satisfy 0 < alpha < 1");
}

double effective_tol(double delta_t, bool symmetric, SeriesFormat format) {
  const double width = symmetric ? 2.0 * delta_t : delta_t;
  return format == SeriesFormat::kEventTimeSeries ? width + 1.0 : width;
}

double match_probability(std::size_t n_other, double length, double lag, double tol) {
  if (!(length > lag)) throw ParameterError("observation length T must exceed the lag tau");
  if (!(tol >= 0.0)) throw ParameterError("TOL must be non-negative");
  if (tol > length - lag) {
    std::ostringstream msg;
    msg << "TOL (" << tol << ") exceeds T - tau (" << length - lag
        << "); the match probability is undefined";
    throw ParameterError(msg.str());
  }
  const double miss = std::log1p(-tol / (length - lag));
  return -std::expm1(static_cast<double>(n_other) * miss);
}

double log_binomial_upper_tail(std::size_t n, std::size_t k, double p) {
  check_probability(p);
  if (k == 0) return 0.0;
  if (k > n || p == 0.0) return -std::numeric_limits<double>::infinity();
  if (p == 1.0) return 0.0;

  const double q = 1.0 - p;
  const auto nd = static_cast<double>(n);
  // Sum outward from the largest term so every ratio below stays <= 1.
  const auto mode = static_cast<std::size_t>(std::floor((nd + 1.0) * p));
  const std::size_t peak = std::clamp(mode, k, n);
  const double odds = p / q;

  double sum = 1.0;
  double term = 1.0;
  for (std::size_t j = peak; j < n; ++j) {
    term *= static_cast<double>(n - j) / static_cast<double>(j + 1) * odds;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  term = 1.0;
  for (std::size_t j = peak; j > k; --j) {
    term *= static_cast<double>(j) / static_cast<double>(n - j + 1) / odds;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return log_binomial_pmf(static_cast<double>(peak), nd, p, q) + std::log(sum);
}

double binomial_upper_tail(std::size_t n, std::size_t k, double p) {
  if (k == 0) {
    check_probability(p);
    return 1.0;
  }
  return std::min(1.0, std::exp(log_binomial_upper_tail(n, k, p)));
}

double analytical_pvalue(std::size_t n_ref, std::size_t n_other, std::size_t k, double length,
                         double lag, double tol) {
  if (k > n_ref) throw ParameterError("coincidence count K exceeds the number of events");
  if (n_other < 1) throw ParameterError("the compared series needs at least one event");
  return binomial_upper_tail(n_ref, k, match_probability(n_other, length, lag, tol));
}

PValues analytical_test(const AlignedEvents& events, const CoincidenceCounts& counts,
                        const EcaParams& params) {
  const double tol = effective_tol(params.delta_t, params.symmetric, events.format);
  return {analytical_pvalue(counts.n_a, counts.n_b, counts.k_precursor, events.length,
                            params.lag, tol),
          analytical_pvalue(counts.n_b, counts.n_a, counts.k_trigger, events.length, params.lag,
                            tol)};
}

std::uint64_t resolve_seed(const SigConfig& sig) {
  if (sig.seed) return *sig.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

PValues shuffle_test(const AlignedEvents& events, const EcaParams& params, const SigConfig& sig) {
  sig.validate();
  const auto obs = observe(events, params);
  if (events.format == SeriesFormat::kEventTimeSeries) {
    const auto steps = static_cast<std::size_t>(events.length);
    auto make = [steps](std::size_t n) {
      return [n, steps](SurrogateEngine& rng) { return shuffled_steps(n, steps, rng); };
    };
    return run_ensemble(obs, params, sig, make(events.a.size()), make(events.b.size()));
  }
  const Span span = events.span;
  auto make = [span](std::size_t n) {
    return [n, span](SurrogateEngine& rng) { return shuffled_times(n, span, rng); };
  };
  return run_ensemble(obs, params, sig, make(events.a.size()), make(events.b.size()));
}

PValues shuffle_test(const EventTimeSeries& a, const EventTimeSeries& b, const EcaParams& params,
                     const SigConfig& sig) {
  return shuffle_test(align(a, b), params, sig);
}

PValues shuffle_test(const EventSequence& a, const EventSequence& b, const EcaParams& params,
                     const SigConfig& sig) {
  return shuffle_test(align(a, b), params, sig);
}

PValues waiting_time_test(const AlignedEvents& events, const EcaParams& params,
                          const SigConfig& sig) {
  sig.validate();
  if (events.a.size() < 2 || events.b.size() < 2) {
    throw DataError("the waiting-time test needs at least two events in each series");
  }
  const auto obs = observe(events, params);
  const Span span = events.span;
  auto make = [span](std::vector<double> waits) {
    return [waits = std::move(waits), span](SurrogateEngine& rng) {
      return waiting_time_surrogate(waits, span, rng);
    };
  };
  return run_ensemble(obs, params, sig, make(waiting_times(events.a)),
                      make(waiting_times(events.b)));
}

PValues waiting_time_test(const EventTimeSeries& a, const EventTimeSeries& b,
                          const EcaParams& params, const SigConfig& sig) {
  return waiting_time_test(align(a, b), params, sig);
}

PValues waiting_time_test(const EventSequence& a, const EventSequence& b,
                          const EcaParams& params, const SigConfig& sig) {
  return waiting_time_test(align(a, b), params, sig);
}

}  // namespace eca
