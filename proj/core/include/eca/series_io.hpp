#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eca/binarize.hpp"
#include "eca/event_series.hpp"

namespace eca {

// Input files are comma-separated text. Lines starting with '#' are comments,
// except `# span: <start>,<end>` which sets the observation span of an event
// sequence. The first non-comment line is a header when any of its fields is
// neither numeric nor a missing marker. Missing values are `NA` or an empty
// field.

enum class InputFormat { kTimeSeries, kSequence, kRaw };

/// Column selector: a 0-based index or a header name.
using ColumnRef = std::variant<std::size_t, std::string>;

/// All-digit strings select by index, anything else by name.
ColumnRef parse_column_ref(const std::string& text);

using SeriesData = std::variant<EventTimeSeries, EventSequence, std::vector<Observation>>;

struct ReadOptions {
  ColumnRef column = std::size_t{0};
  /// Replaces (or supplies) the `# span:` metadata for event sequences.
  std::optional<Span> span;
};

/// Parses one column. Throws DataError for unreadable files, empty input,
/// non-binary entries in ts mode, missing values or a missing span in es mode.
SeriesData read_series(std::istream& in, InputFormat format, const ReadOptions& options = {},
                       const WarningHandler& warn = stderr_warnings());
SeriesData read_series(const std::filesystem::path& path, InputFormat format,
                       const ReadOptions& options = {},
                       const WarningHandler& warn = stderr_warnings());

/// String labels (e.g. dates) from one column. The first non-comment line is
/// always taken as a header.
std::vector<std::string> read_labels(std::istream& in, const ColumnRef& column);
std::vector<std::string> read_labels(const std::filesystem::path& path, const ColumnRef& column);

/// One 0/1/NA value per line under a header line.
void write_time_series(std::ostream& out, const EventTimeSeries& series,
                       const std::string& header = "event");

/// `# span:` line, a `time` header, then one shortest round-trip time per line.
void write_sequence(std::ostream& out, const EventSequence& seq);

}  // namespace eca
