#include "eca/series_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eca {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(b, e - b + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_missing_marker(const std::string& f) { return f.empty() || f == "NA" || f == "na"; }

std::optional<double> parse_number(const std::string& f) {
  double v = 0.0;
  const char* first = f.data();
  const char* last = f.data() + f.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // (line number, fields)
  std::optional<Span> span;
};

std::optional<Span> parse_span_comment(const std::string& line, std::size_t line_no) {
  auto body = trim(std::string_view(line).substr(1));
  auto colon = body.find(':');
  if (colon == std::string::npos || lower(trim(body.substr(0, colon))) != "span") {
    return std::nullopt;
  }
  auto fields = split_fields(body.substr(colon + 1));
  if (fields.size() != 2) {
    throw DataError("line " + std::to_string(line_no) + ": span needs two values <start>,<end>");
  }
  auto s = parse_number(fields[0]);
  auto e = parse_number(fields[1]);
  if (!s || !e) throw DataError("line " + std::to_string(line_no) + ": span values must be numeric");
  return Span{*s, *e};
}

Table parse_table(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      if (auto span = parse_span_comment(stripped, line_no)) table.span = span;
      continue;
    }
    auto fields = split_fields(line);
    if (first_data_line) {
      first_data_line = false;
      const bool is_header = std::any_of(fields.begin(), fields.end(), [](const std::string& f) {
        return !is_missing_marker(f) && !parse_number(f);
      });
      if (is_header) {
        table.header = std::move(fields);
        continue;
      }
    }
    table.rows.emplace_back(line_no, std::move(fields));
  }
  if (in.bad()) throw DataError("I/O error while reading input");
  if (table.rows.empty()) throw DataError("input contains no data rows");
  return table;
}

std::size_t resolve_column(const Table& table, const ColumnRef& ref) {
  if (const auto* idx = std::get_if<std::size_t>(&ref)) return *idx;
  const auto& name = std::get<std::string>(ref);
  auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) throw DataError("no column named '" + name + "' in header");
  return static_cast<std::size_t>(std::distance(table.header.begin(), it));
}

std::string cell(const std::pair<std::size_t, std::vector<std::string>>& row, std::size_t col) {
  if (col >= row.second.size()) {
    throw DataError("line " + std::to_string(row.first) + ": column " + std::to_string(col) +
                    " does not exist");
  }
  return row.second[col];
}

std::string location(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

ColumnRef parse_column_ref(const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    return static_cast<std::size_t>(std::stoull(text));
  }
  return text;
}

SeriesData read_series(std::istream& in, InputFormat format, const ReadOptions& options,
                       const WarningHandler& warn) {
  const auto table = parse_table(in);
  const auto col = resolve_column(table, options.column);

  switch (format) {
    case InputFormat::kRaw: {
      std::vector<Observation> values;
      values.reserve(table.rows.size());
      for (const auto& row : table.rows) {
        const auto f = cell(row, col);
        if (is_missing_marker(f)) {
          values.emplace_back(std::nullopt);
          continue;
        }
        auto v = parse_number(f);
        if (!v) throw DataError(location(row.first) + "'" + f + "' is not a number");
        values.emplace_back(std::isnan(*v) ? std::nullopt : Observation(*v));
      }
      return values;
    }
    case InputFormat::kTimeSeries: {
      std::vector<Step> steps;
      steps.reserve(table.rows.size());
      for (const auto& row : table.rows) {
        const auto f = cell(row, col);
        if (is_missing_marker(f)) {
          steps.push_back(Step::kMissing);
          continue;
        }
        auto v = parse_number(f);
        if (v && *v == 0.0) {
          steps.push_back(Step::kNoEvent);
        } else if (v && *v == 1.0) {
          steps.push_back(Step::kEvent);
        } else {
          throw DataError(location(row.first) + "'" + f + "' is not one of 0, 1, NA");
        }
      }
      return EventTimeSeries(std::move(steps));
    }
    case InputFormat::kSequence: {
      const auto span = options.span ? options.span : table.span;
      if (!span) {
        throw DataError("event sequence input needs a '# span: <start>,<end>' line or --span");
      }
      std::vector<double> times;
      for (const auto& row : table.rows) {
        if (col >= row.second.size() || row.second[col].empty()) continue;
        const auto& f = row.second[col];
        if (is_missing_marker(f)) {
          throw DataError(location(row.first) + "event sequences cannot contain missing values");
        }
        auto v = parse_number(f);
        if (!v) throw DataError(location(row.first) + "'" + f + "' is not a number");
        times.push_back(*v);
      }
      return EventSequence(std::move(times), *span, warn);
    }
  }
  throw DataError("unknown input format");
}

SeriesData read_series(const std::filesystem::path& path, InputFormat format,
                       const ReadOptions& options, const WarningHandler& warn) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return read_series(in, format, options, warn);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> read_labels(std::istream& in, const ColumnRef& column) {
  std::string line;
  std::vector<std::string> header;
  std::vector<std::string> labels;
  bool have_header = false;
  std::size_t col = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    auto fields = split_fields(line);
    if (!have_header) {
      have_header = true;
      Table t;
      t.header = fields;
      col = resolve_column(t, column);
      continue;
    }
    if (col >= fields.size()) {
      throw DataError(location(line_no) + "column " + std::to_string(col) + " does not exist");
    }
    labels.push_back(fields[col]);
  }
  if (labels.empty()) throw DataError("label input contains no data rows");
  return labels;
}

std::vector<std::string> read_labels(const std::filesystem::path& path, const ColumnRef& column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return read_labels(in, column);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_time_series(std::ostream& out, const EventTimeSeries& series,
                       const std::string& header) {
  out << header << '\n';
  for (Step s : series.steps()) {
    out << (s == Step::kEvent ? "1" : s == Step::kNoEvent ? "0" : "NA") << '\n';
  }
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void write_sequence(std::ostream& out, const EventSequence& seq) {
  out << "# span: " << shortest(seq.span().start) << ',' << shortest(seq.span().end) << '\n'
      << "time\n";
  for (double t : seq.times()) out << shortest(t) << '\n';
}

}  // namespace eca
