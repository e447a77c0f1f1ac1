#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eca/coincidence.hpp"
#include "eca/event_series.hpp"

namespace eca {

/// Which track, if any, is drawn without the coincident/isolated distinction.
enum class PlotReference {
  kNone,     ///< both tracks shaded by their own coincidence flags
  kSeriesA,  ///< A is the reference; B shaded by trigger flags
  kSeriesB,  ///< B is the reference; A shaded by precursor flags
};

/// Fill colours. Dark shades mark coincidences, light shades events without
/// one, plain shades events on a reference track.
struct RasterStyle {
  std::string a_dark = "#b2182b";
  std::string a_light = "#f4a582";
  std::string a_plain = "#d6604d";
  std::string b_dark = "#2166ac";
  std::string b_light = "#92c5de";
  std::string b_plain = "#4393c3";
  std::string missing = "#e6e6e6";
  /// Width of one time step in px; <= 0 picks one from the series length.
  double step_width = 0.0;
  double track_height = 36.0;
  std::string label_a = "A";
  std::string label_b = "B";
};

struct PlotSpec {
  EventTimeSeries series_a;
  EventTimeSeries series_b;
  EcaParams params;
  /// One label per time step; event steps get labelled on the time axis.
  std::optional<std::vector<std::string>> dates;
  PlotReference reference = PlotReference::kNone;
};

/// Standalone SVG 1.1 document showing both series as bar tracks (A above B).
/// Throws DataError on a length mismatch between the series or the dates.
std::string render_svg(const PlotSpec& spec, const RasterStyle& style = {});

/// Writes render_svg() to `output`.
void render(const PlotSpec& spec, const std::filesystem::path& output,
            const RasterStyle& style = {});

}  // namespace eca
