#include "eca/surrogates.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace eca {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SurrogateEngine surrogate_engine(std::uint64_t master, std::uint64_t index) {
  return SurrogateEngine(splitmix64(splitmix64(master) ^ splitmix64(~index)));
}

std::uint64_t uniform_below(SurrogateEngine& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  // Reject the low values that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % bound;
}

double uniform_unit(SurrogateEngine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> shuffled_steps(std::size_t count, std::size_t steps, SurrogateEngine& rng) {
  if (count > steps) throw std::invalid_argument("more events than time steps");
  std::vector<double> out;
  out.reserve(count);
  if (count * 4 >= steps) {
    // Dense: partial Fisher-Yates over all steps.
    std::vector<std::size_t> pool(steps);
    for (std::size_t i = 0; i < steps; ++i) pool[i] = i + 1;
    for (std::size_t i = 0; i < count; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(rng, steps - i));
      std::swap(pool[i], pool[j]);
      out.push_back(static_cast<double>(pool[i]));
    }
  } else {
    // Sparse: Floyd's algorithm.
    std::unordered_set<std::size_t> chosen;
    chosen.reserve(count * 2);
    for (std::size_t j = steps - count; j < steps; ++j) {
      const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
      const auto pick = chosen.insert(t + 1).second ? t + 1 : j + 1;
      if (pick == j + 1) chosen.insert(j + 1);
      out.push_back(static_cast<double>(pick));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> shuffled_times(std::size_t count, const Span& span, SurrogateEngine& rng) {
  std::vector<double> out(count);
  const double width = span.length();
  for (auto& t : out) t = span.start + uniform_unit(rng) * width;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> waiting_times(std::span<const double> sorted_times) {
  std::vector<double> out;
  if (sorted_times.size() < 2) return out;
  out.reserve(sorted_times.size() - 1);
  for (std::size_t i = 1; i < sorted_times.size(); ++i) {
    out.push_back(sorted_times[i] - sorted_times[i - 1]);
  }
  return out;
}

std::vector<double> waiting_time_surrogate(std::span<const double> waits, const Span& span,
                                           SurrogateEngine& rng) {
  if (waits.empty()) throw std::invalid_argument("no waiting times to resample");
  std::vector<double> out;
  double t = span.start;
  for (;;) {
    t += waits[static_cast<std::size_t>(uniform_below(rng, waits.size()))];
    if (t > span.end) break;
    out.push_back(t);
  }
  return out;
}

}  // namespace eca
