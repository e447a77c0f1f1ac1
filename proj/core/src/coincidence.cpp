#include "eca/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eca {
namespace {

struct Window {
  double lo;
  double hi;
};

Window precursor_window(double t, const EcaParams& p) {
  if (p.symmetric) return {t - p.delta_t, t + p.delta_t};
  return {t - p.lag - p.delta_t, t - p.lag};
}

Window trigger_window(double t, const EcaParams& p) {
  if (p.symmetric) return {t - p.delta_t, t + p.delta_t};
  return {t + p.lag, t + p.lag + p.delta_t};
}

bool any_in(std::span<const double> sorted, Window w) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), w.lo);
  return it != sorted.end() && *it <= w.hi;
}

template <typename WindowFn>
std::vector<bool> flags_for(std::span<const double> ref, std::span<const double> other,
                            const EcaParams& p, WindowFn window) {
  std::vector<bool> flags(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) flags[i] = any_in(other, window(ref[i], p));
  return flags;
}

template <typename WindowFn>
std::size_t matches_for(std::span<const double> ref, std::span<const double> other,
                        const EcaParams& p, WindowFn window) {
  std::size_t k = 0;
  for (double t : ref) k += any_in(other, window(t, p)) ? 1 : 0;
  return k;
}

std::size_t count_true(const std::vector<bool>& flags) {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
}

void require_events(std::size_t n_a, std::size_t n_b) {
  if (n_a == 0 || n_b == 0) {
    std::ostringstream msg;
    msg << "coincidence rates are undefined without events (N_A=" << n_a << ", N_B=" << n_b
        << ")";
    throw DataError(msg.str());
  }
}

bool is_integral(double v) { return std::floor(v) == v; }

}  // namespace

void EcaParams::validate() const {
  if (!std::isfinite(delta_t) || delta_t < 0.0) {
    throw ParameterError("tolerance window delT must satisfy delT >= 0");
  }
  if (!std::isfinite(lag) || lag < 0.0) throw ParameterError("lag tau must satisfy tau >= 0");
  if (symmetric && lag > 0.0) {
    throw ParameterError("a symmetric tolerance window requires tau = 0");
  }
}

void EcaParams::validate(SeriesFormat format) const {
  validate();
  if (format == SeriesFormat::kEventTimeSeries) {
    if (!is_integral(delta_t)) {
      throw ParameterError("delT counts time steps for event time series and must be an integer");
    }
    if (!is_integral(lag)) {
      throw ParameterError("tau counts time steps for event time series and must be an integer");
    }
  }
}

double CoincidenceCounts::precursor_rate() const {
  return n_a == 0 ? 0.0 : static_cast<double>(k_precursor) / static_cast<double>(n_a);
}

double CoincidenceCounts::trigger_rate() const {
  return n_b == 0 ? 0.0 : static_cast<double>(k_trigger) / static_cast<double>(n_b);
}

std::vector<bool> precursor_flags(std::span<const double> a, std::span<const double> b,
                                  const EcaParams& params) {
  return flags_for(a, b, params, precursor_window);
}

std::vector<bool> trigger_flags(std::span<const double> a, std::span<const double> b,
                                const EcaParams& params) {
  return flags_for(b, a, params, trigger_window);
}

std::size_t count_precursor_matches(std::span<const double> a, std::span<const double> b,
                                    const EcaParams& params) {
  return matches_for(a, b, params, precursor_window);
}

std::size_t count_trigger_matches(std::span<const double> a, std::span<const double> b,
                                  const EcaParams& params) {
  return matches_for(b, a, params, trigger_window);
}

AlignedEvents align(const EventTimeSeries& a, const EventTimeSeries& b) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << "event time series differ in length (" << a.size() << " vs " << b.size() << ")";
    throw DataError(msg.str());
  }
  AlignedEvents out;
  out.format = SeriesFormat::kEventTimeSeries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Step::kMissing || b[i] == Step::kMissing) continue;
    out.kept_steps.push_back(i);
    const auto pos = static_cast<double>(out.kept_steps.size());
    if (a[i] == Step::kEvent) out.a.push_back(pos);
    if (b[i] == Step::kEvent) out.b.push_back(pos);
  }
  if (out.kept_steps.empty()) throw DataError("no time step is observed in both series");
  out.length = static_cast<double>(out.kept_steps.size());
  out.span = Span{1.0, out.length};
  return out;
}

AlignedEvents align(const EventSequence& a, const EventSequence& b) {
  const Span common{std::max(a.span().start, b.span().start),
                    std::min(a.span().end, b.span().end)};
  if (!(common.start < common.end)) throw DataError("event sequence spans do not overlap");
  AlignedEvents out;
  out.format = SeriesFormat::kEventSequence;
  out.span = common;
  out.length = common.length();
  auto clip = [&](std::span<const double> times, std::vector<double>& dst) {
    std::copy_if(times.begin(), times.end(), std::back_inserter(dst),
                 [&](double t) { return common.contains(t); });
  };
  clip(a.times(), out.a);
  clip(b.times(), out.b);
  return out;
}

CoincidenceCounts count_coincidences(const AlignedEvents& events, const EcaParams& params) {
  params.validate(events.format);
  require_events(events.a.size(), events.b.size());
  CoincidenceCounts c;
  c.n_a = events.a.size();
  c.n_b = events.b.size();
  c.t_eff = events.length;
  c.flags_a = precursor_flags(events.a, events.b, params);
  c.flags_b = trigger_flags(events.a, events.b, params);
  c.k_precursor = count_true(c.flags_a);
  c.k_trigger = count_true(c.flags_b);
  return c;
}

CoincidenceCounts count_precursor(const EventSequence& a, const EventSequence& b,
                                  const EcaParams& params) {
  params.validate();
  const auto events = align(a, b);
  require_events(events.a.size(), events.b.size());
  CoincidenceCounts c;
  c.n_a = events.a.size();
  c.n_b = events.b.size();
  c.t_eff = events.length;
  c.flags_a = precursor_flags(events.a, events.b, params);
  c.k_precursor = count_true(c.flags_a);
  return c;
}

CoincidenceCounts count_trigger(const EventSequence& a, const EventSequence& b,
                                const EcaParams& params) {
  params.validate();
  const auto events = align(a, b);
  require_events(events.a.size(), events.b.size());
  CoincidenceCounts c;
  c.n_a = events.a.size();
  c.n_b = events.b.size();
  c.t_eff = events.length;
  c.flags_b = trigger_flags(events.a, events.b, params);
  c.k_trigger = count_true(c.flags_b);
  return c;
}

}  // namespace eca
