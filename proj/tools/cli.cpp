#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eca/eca.hpp"

namespace eca::cli {
namespace {

double parse_double_field(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument(text);
  return v;
}

Span parse_span(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return Span{parse_double_field(text.substr(0, comma)), parse_double_field(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParameterError("span must be given as <start>,<end> (got '" + text + "')");
  }
}

std::optional<std::uint64_t> seed_from_env() {
  const char* env = std::getenv("ECA_SEED");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParameterError(std::string("ECA_SEED must be a non-negative integer (got '") + env + "')");
  }
}

// Writes to --output when given, otherwise to `out`.
template <typename Fn>
void emit(const std::string& output, std::ostream& out, Fn write) {
  if (output.empty() || output == "-") {
    write(out);
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw DataError("cannot open " + output + " for writing");
  write(file);
  if (!file) throw DataError("failed writing " + output);
}

struct SeriesArgs {
  std::string path;
  std::string column = "0";
  std::string span;
};

ReadOptions read_options(const SeriesArgs& args) {
  ReadOptions opts;
  opts.column = parse_column_ref(args.column);
  if (!args.span.empty()) opts.span = parse_span(args.span);
  return opts;
}

EventTimeSeries load_ts(const SeriesArgs& args) {
  return std::get<EventTimeSeries>(read_series(args.path, InputFormat::kTimeSeries,
                                               read_options(args)));
}

EventSequence load_es(const SeriesArgs& args) {
  return std::get<EventSequence>(read_series(args.path, InputFormat::kSequence,
                                             read_options(args)));
}

struct WindowArgs {
  double delt = 0.0;
  double tau = 0.0;
  bool sym = false;

  EcaParams params() const { return EcaParams{delt, sym, tau}; }
};

void add_window_flags(CLI::App* cmd, WindowArgs& w) {
  cmd->add_option("--delt", w.delt, "tolerance window delT (default 0)");
  cmd->add_option("--tau", w.tau, "time lag tau (default 0)");
  cmd->add_flag("--sym", w.sym, "use a symmetric tolerance window");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Event coincidence analysis for event time series and event sequences", "eca"};
  app.require_subcommand(1);

  // binarize
  SeriesArgs bin_in;
  std::string bin_method = "percentile";
  std::string bin_event = "higher";
  double bin_thres = 0.0;
  std::string bin_output;
  std::string bin_header = "event";
  auto* binarize_cmd = app.add_subcommand("binarize", "turn a numeric column into an event time series");
  binarize_cmd->add_option("--input", bin_in.path, "CSV file")->required();
  binarize_cmd->add_option("--column", bin_in.column, "column name or 0-based index");
  binarize_cmd->add_option("--method", bin_method, "percentile | absolute")
      ->check(CLI::IsMember({"percentile", "absolute"}));
  binarize_cmd->add_option("--thres", bin_thres, "threshold (probability for percentile)")
      ->required();
  binarize_cmd->add_option("--event", bin_event, "higher | lower")
      ->check(CLI::IsMember({"higher", "lower"}));
  binarize_cmd->add_option("--output", bin_output, "output CSV (default stdout)");
  binarize_cmd->add_option("--header", bin_header, "name of the output column");

  // convert
  SeriesArgs conv_in;
  std::string conv_to;
  int conv_resolution = 0;
  std::string conv_output;
  auto* convert_cmd = app.add_subcommand("convert", "convert between ts and es formats");
  convert_cmd->add_option("--input", conv_in.path, "CSV file")->required();
  convert_cmd->add_option("--column", conv_in.column, "column name or 0-based index");
  convert_cmd->add_option("--to", conv_to, "target format: es | ts")
      ->required()
      ->check(CLI::IsMember({"es", "ts"}));
  convert_cmd->add_option("--resolution", conv_resolution,
                          "decimal digits kept when sampling an es input (default 0)");
  convert_cmd->add_option("--span", conv_in.span, "span override <start>,<end> for es input");
  convert_cmd->add_option("--output", conv_output, "output CSV (default stdout)");

  // eca
  SeriesArgs eca_a;
  SeriesArgs eca_b;
  std::string eca_format = "ts";
  WindowArgs eca_window;
  std::string eca_sigtest = "poisson";
  std::size_t eca_reps = 1000;
  double eca_alpha = 0.05;
  std::uint64_t eca_seed = 0;
  unsigned eca_threads = 0;
  bool eca_json = false;
  auto* eca_cmd = app.add_subcommand("eca", "coincidence rates and significance test");
  eca_cmd->add_option("--series-a", eca_a.path, "CSV file with series A")->required();
  eca_cmd->add_option("--series-b", eca_b.path, "CSV file with series B")->required();
  eca_cmd->add_option("--column-a", eca_a.column, "column of series A (default 0)");
  eca_cmd->add_option("--column-b", eca_b.column, "column of series B (default 0)");
  eca_cmd->add_option("--format", eca_format, "ts | es (default ts)")
      ->check(CLI::IsMember({"ts", "es"}));
  eca_cmd->add_option("--span-a", eca_a.span, "span override <start>,<end> for es series A");
  eca_cmd->add_option("--span-b", eca_b.span, "span override <start>,<end> for es series B");
  add_window_flags(eca_cmd, eca_window);
  eca_cmd->add_option("--sigtest", eca_sigtest, "poisson | shuffle | surrogate (default poisson)");
  eca_cmd->add_option("--reps", eca_reps, "surrogate ensemble size (default 1000)");
  eca_cmd->add_option("--alpha", eca_alpha, "significance level (default 0.05)");
  auto* seed_opt = eca_cmd->add_option("--seed", eca_seed, "surrogate seed (default $ECA_SEED)");
  eca_cmd->add_option("--threads", eca_threads, "worker threads, 0 = all cores");
  eca_cmd->add_flag("--json", eca_json, "print a JSON report");

  // plot
  SeriesArgs plot_a;
  SeriesArgs plot_b;
  WindowArgs plot_window;
  std::string plot_dates;
  std::string plot_dates_column = "0";
  std::string plot_reference = "none";
  std::string plot_output;
  double plot_step_width = 0.0;
  auto* plot_cmd = app.add_subcommand("plot", "render an SVG event raster of two ts series");
  plot_cmd->add_option("--series-a", plot_a.path, "CSV file with series A")->required();
  plot_cmd->add_option("--series-b", plot_b.path, "CSV file with series B")->required();
  plot_cmd->add_option("--column-a", plot_a.column, "column of series A (default 0)");
  plot_cmd->add_option("--column-b", plot_b.column, "column of series B (default 0)");
  add_window_flags(plot_cmd, plot_window);
  plot_cmd->add_option("--dates", plot_dates, "CSV file with one date label per time step");
  plot_cmd->add_option("--dates-column", plot_dates_column, "column of the date labels");
  plot_cmd->add_option("--reference", plot_reference, "track drawn undifferentiated: none | a | b")
      ->check(CLI::IsMember({"none", "a", "b"}));
  plot_cmd->add_option("--step-width", plot_step_width, "px per time step (default automatic)");
  plot_cmd->add_option("--output", plot_output, "SVG file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*binarize_cmd) {
      const auto raw = std::get<std::vector<Observation>>(
          read_series(bin_in.path, InputFormat::kRaw, read_options(bin_in)));
      ThresholdSpec spec;
      spec.method = bin_method == "absolute" ? ThresholdMethod::kAbsolute
                                             : ThresholdMethod::kPercentile;
      spec.threshold = bin_thres;
      spec.direction = bin_event == "lower" ? EventDirection::kLower : EventDirection::kHigher;
      if (spec.method == ThresholdMethod::kPercentile && !(bin_thres >= 0.0 && bin_thres <= 1.0)) {
        throw ParameterError("percentile threshold must satisfy 0 <= thres <= 1");
      }
      const auto series = binarize(raw, spec);
      emit(bin_output, out, [&](std::ostream& o) { write_time_series(o, series, bin_header); });
    } else if (*convert_cmd) {
      if (conv_to == "es") {
        const auto seq = ts_to_es(load_ts(conv_in));
        emit(conv_output, out, [&](std::ostream& o) { write_sequence(o, seq); });
      } else {
        const auto series = es_to_ts(load_es(conv_in), conv_resolution);
        emit(conv_output, out, [&](std::ostream& o) { write_time_series(o, series); });
      }
    } else if (*eca_cmd) {
      const auto params = eca_window.params();
      const auto format = parse_series_format(eca_format);
      params.validate(format);
      SigConfig sig;
      sig.method = parse_sig_method(eca_sigtest);
      sig.reps = eca_reps;
      sig.alpha = eca_alpha;
      sig.threads = eca_threads;
      sig.seed = seed_opt->count() > 0 ? std::optional<std::uint64_t>(eca_seed) : seed_from_env();
      sig.validate();

      const auto result = format == SeriesFormat::kEventTimeSeries
                              ? run_eca_ts(load_ts(eca_a), load_ts(eca_b), params, sig)
                              : run_eca_es(load_es(eca_a), load_es(eca_b), params, sig);
      const auto report = make_report(result, params, format);
      out << (eca_json ? to_json(report) : format_text(report));
    } else if (*plot_cmd) {
      const auto params = plot_window.params();
      params.validate(SeriesFormat::kEventTimeSeries);
      PlotSpec spec{load_ts(plot_a), load_ts(plot_b), params, std::nullopt, PlotReference::kNone};
      if (!plot_dates.empty()) {
        spec.dates = read_labels(plot_dates, parse_column_ref(plot_dates_column));
      }
      spec.reference = plot_reference == "a"   ? PlotReference::kSeriesA
                       : plot_reference == "b" ? PlotReference::kSeriesB
                                               : PlotReference::kNone;
      RasterStyle style;
      style.step_width = plot_step_width;
      render(spec, plot_output, style);
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace eca::cli
