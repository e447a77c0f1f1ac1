#include "eca/event_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace eca {

EventTimeSeries::EventTimeSeries(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw DataError("event time series must contain at least one step");
}

EventTimeSeries EventTimeSeries::from_indicators(std::span<const int> indicators) {
  std::vector<Step> steps;
  steps.reserve(indicators.size());
  for (int v : indicators) {
    steps.push_back(v == 0 ? Step::kNoEvent : v == 1 ? Step::kEvent : Step::kMissing);
  }
  return EventTimeSeries(std::move(steps));
}

EventTimeSeries EventTimeSeries::from_indicators(std::initializer_list<int> indicators) {
  return from_indicators(std::span<const int>(indicators.begin(), indicators.size()));
}

std::size_t EventTimeSeries::event_count() const {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::kEvent));
}

bool EventTimeSeries::has_missing() const {
  return std::find(steps_.begin(), steps_.end(), Step::kMissing) != steps_.end();
}

EventTimeSeries EventTimeSeries::reversed() const {
  return EventTimeSeries(std::vector<Step>(steps_.rbegin(), steps_.rend()));
}

EventSequence::EventSequence(std::vector<double> times, Span span, const WarningHandler& warn)
    : times_(std::move(times)), span_(span) {
  if (!std::isfinite(span_.start) || !std::isfinite(span_.end) || !(span_.start < span_.end)) {
    std::ostringstream msg;
    msg << "event sequence span must satisfy start < end, got (" << span_.start << ", "
        << span_.end << ")";
    throw ParameterError(msg.str());
  }
  for (double t : times_) {
    if (!std::isfinite(t)) throw DataError("event times must be finite");
    if (!span_.contains(t)) {
      std::ostringstream msg;
      msg << "event time " << t << " lies outside the span (" << span_.start << ", "
          << span_.end << ")";
      throw DataError(msg.str());
    }
  }
  std::sort(times_.begin(), times_.end());
  auto dup = std::unique(times_.begin(), times_.end());
  if (dup != times_.end()) {
    const auto removed = std::distance(dup, times_.end());
    times_.erase(dup, times_.end());
    warn("removed " + std::to_string(removed) + " duplicate event time(s)");
  }
}

EventSequence ts_to_es(const EventTimeSeries& series) {
  if (series.has_missing()) {
    throw DataError("event sequences cannot represent missing steps; remove them first");
  }
  if (series.size() < 2) throw DataError("a one-step series has no valid event-sequence span");
  std::vector<double> times;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i] == Step::kEvent) times.push_back(static_cast<double>(i + 1));
  }
  return EventSequence(std::move(times), Span{1.0, static_cast<double>(series.size())},
                       ignore_warnings());
}

EventTimeSeries es_to_ts(const EventSequence& seq, int resolution_digits,
                         const WarningHandler& warn) {
  if (resolution_digits < 0 || resolution_digits > 12) {
    throw ParameterError("resolution digits must lie in [0, 12]");
  }
  const double scale = std::pow(10.0, resolution_digits);
  const long long first = std::llround(seq.span().start * scale);
  const long long last = std::llround(seq.span().end * scale);
  const long long length = last - first + 1;
  constexpr long long kMaxSteps = 1LL << 31;
  if (length < 1 || length > kMaxSteps) {
    throw ParameterError("resolution yields an unsupported number of time steps");
  }

  std::vector<Step> steps(static_cast<std::size_t>(length), Step::kNoEvent);
  std::size_t merged = 0;
  for (double t : seq.times()) {
    const long long idx = std::clamp(std::llround(t * scale) - first, 0LL, length - 1);
    auto& step = steps[static_cast<std::size_t>(idx)];
    if (step == Step::kEvent) ++merged;
    step = Step::kEvent;
  }
  if (merged > 0) {
    warn(std::to_string(merged) + " event(s) merged after rounding to " +
         std::to_string(resolution_digits) + " digit(s)");
  }
  return EventTimeSeries(std::move(steps));
}

}  // namespace eca
