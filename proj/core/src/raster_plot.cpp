#include "eca/raster_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eca {
namespace {

enum class Shade { kNone, kCoincident, kIsolated, kReference };

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

// Per-step shading for one track, indexed by original step.
std::vector<Shade> shade_track(const EventTimeSeries& series, const AlignedEvents& events,
                               const std::vector<bool>& flags, bool reference) {
  std::vector<Shade> shades(series.size(), Shade::kNone);
  std::size_t event_idx = 0;
  for (std::size_t pos = 0; pos < events.kept_steps.size(); ++pos) {
    const auto step = events.kept_steps[pos];
    if (series[step] != Step::kEvent) continue;
    shades[step] = reference        ? Shade::kReference
                   : flags[event_idx] ? Shade::kCoincident
                                      : Shade::kIsolated;
    ++event_idx;
  }
  return shades;
}

const char* shade_class(Shade s) {
  switch (s) {
    case Shade::kCoincident: return "coincident";
    case Shade::kIsolated: return "isolated";
    case Shade::kReference: return "reference";
    case Shade::kNone: break;
  }
  return "";
}

}  // namespace

std::string render_svg(const PlotSpec& spec, const RasterStyle& style) {
  const auto& a = spec.series_a;
  const auto& b = spec.series_b;
  if (a.size() != b.size()) throw DataError("series A and B must have the same length to plot");
  if (spec.dates && spec.dates->size() != a.size()) {
    throw DataError("number of date labels must equal the series length");
  }
  spec.params.validate(SeriesFormat::kEventTimeSeries);

  const auto events = align(a, b);
  const auto flags_a = precursor_flags(events.a, events.b, spec.params);
  const auto flags_b = trigger_flags(events.a, events.b, spec.params);
  const auto shades_a =
      shade_track(a, events, flags_a, spec.reference == PlotReference::kSeriesA);
  const auto shades_b =
      shade_track(b, events, flags_b, spec.reference == PlotReference::kSeriesB);

  const std::size_t steps = a.size();
  const double step_w = style.step_width > 0.0
                            ? style.step_width
                            : std::clamp(960.0 / static_cast<double>(steps), 1.0, 12.0);
  const double left = 48.0;
  const double top = 16.0;
  const double gap = 10.0;
  const double track_h = style.track_height;
  const double axis_y = top + 2.0 * track_h + gap + 4.0;
  const double label_room = spec.dates ? 64.0 : 20.0;
  const double width = left + step_w * static_cast<double>(steps) + 16.0;
  const double height = axis_y + label_room + 8.0;
  const double track_y[2] = {top, top + track_h + gap};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
      << num(height) << "\">\n"
      << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" fill=\"#ffffff\"/>\n";

  for (std::size_t i = 0; i < steps; ++i) {
    if (a[i] != Step::kMissing && b[i] != Step::kMissing) continue;
    svg << "<rect class=\"missing\" x=\"" << num(left + step_w * static_cast<double>(i))
        << "\" y=\"" << num(top) << "\" width=\"" << num(step_w) << "\" height=\""
        << num(2.0 * track_h + gap) << "\" fill=\"" << style.missing << "\"/>\n";
  }

  struct Track {
    const std::vector<Shade>& shades;
    const char* name;
    const std::string& dark;
    const std::string& light;
    const std::string& plain;
    const std::string& label;
  };
  const Track tracks[2] = {
      {shades_a, "a", style.a_dark, style.a_light, style.a_plain, style.label_a},
      {shades_b, "b", style.b_dark, style.b_light, style.b_plain, style.label_b},
  };
  for (int t = 0; t < 2; ++t) {
    const auto& track = tracks[t];
    svg << "<g class=\"track " << track.name << "\">\n"
        << "<text x=\"" << num(left - 8.0) << "\" y=\"" << num(track_y[t] + track_h / 2.0 + 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
        << escape_xml(track.label) << "</text>\n";
    for (std::size_t i = 0; i < steps; ++i) {
      const Shade s = track.shades[i];
      if (s == Shade::kNone) continue;
      const std::string& fill = s == Shade::kCoincident ? track.dark
                                : s == Shade::kIsolated ? track.light
                                                        : track.plain;
      svg << "<rect class=\"event " << track.name << ' ' << shade_class(s) << "\" x=\""
          << num(left + step_w * static_cast<double>(i)) << "\" y=\"" << num(track_y[t])
          << "\" width=\"" << num(step_w) << "\" height=\"" << num(track_h) << "\" fill=\""
          << fill << "\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"" << num(axis_y) << "\" x2=\""
      << num(left + step_w * static_cast<double>(steps)) << "\" y2=\"" << num(axis_y)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  if (spec.dates) {
    for (std::size_t i = 0; i < steps; ++i) {
      if (shades_a[i] == Shade::kNone && shades_b[i] == Shade::kNone) continue;
      const double x = left + step_w * (static_cast<double>(i) + 0.5);
      const double y = axis_y + 10.0;
      svg << "<text class=\"date\" x=\"" << num(x) << "\" y=\"" << num(y)
          << "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"end\" "
          << "transform=\"rotate(-60 " << num(x) << ' ' << num(y) << ")\">"
          << escape_xml((*spec.dates)[i]) << "</text>\n";
    }
  } else {
    const std::size_t stride = std::max<std::size_t>(1, (steps + 9) / 10);
    for (std::size_t i = 0; i < steps; i += stride) {
      const double x = left + step_w * (static_cast<double>(i) + 0.5);
      svg << "<text class=\"tick\" x=\"" << num(x) << "\" y=\"" << num(axis_y + 14.0)
          << "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">" << i + 1
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void render(const PlotSpec& spec, const std::filesystem::path& output, const RasterStyle& style) {
  const auto doc = render_svg(spec, style);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw DataError("cannot open " + output.string() + " for writing");
  out << doc;
  if (!out) throw DataError("failed writing " + output.string());
}

}  // namespace eca
