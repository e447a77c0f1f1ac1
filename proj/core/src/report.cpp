#include "eca/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace eca {
namespace {

std::string sig_digits(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

const char* flag(bool b) { return b ? "TRUE" : "FALSE"; }

}  // namespace

RunReport make_report(const EcaResult& result, const EcaParams& params, SeriesFormat format) {
  RunReport r;
  r.nh_precursor = result.nh_precursor;
  r.nh_trigger = result.nh_trigger;
  r.p_precursor = result.p_precursor;
  r.p_trigger = result.p_trigger;
  r.rate_precursor = result.rate_precursor;
  r.rate_trigger = result.rate_trigger;
  r.method = result.sig.method;
  r.reps = result.sig.reps;
  r.alpha = result.sig.alpha;
  r.seed = result.sig.seed;
  r.delta_t = params.delta_t;
  r.lag = params.lag;
  r.symmetric = params.symmetric;
  r.format = format;
  r.n_a = result.counts.n_a;
  r.n_b = result.counts.n_b;
  r.k_precursor = result.counts.k_precursor;
  r.k_trigger = result.counts.k_trigger;
  r.t_eff = result.counts.t_eff;
  return r;
}

std::string to_string(SigMethod method) {
  switch (method) {
    case SigMethod::kPoisson: return "poisson";
    case SigMethod::kShuffle: return "shuffle";
    case SigMethod::kSurrogate: return "surrogate";
  }
  return "unknown";
}

std::string to_string(SeriesFormat format) {
  return format == SeriesFormat::kEventTimeSeries ? "ts" : "es";
}

SigMethod parse_sig_method(const std::string& name) {
  if (name == "poisson") return SigMethod::kPoisson;
  if (name == "shuffle") return SigMethod::kShuffle;
  if (name == "surrogate") return SigMethod::kSurrogate;
  throw ParameterError("sigtest must be one of poisson, shuffle, surrogate (got '" + name + "')");
}

SeriesFormat parse_series_format(const std::string& name) {
  if (name == "ts") return SeriesFormat::kEventTimeSeries;
  if (name == "es") return SeriesFormat::kEventSequence;
  throw ParameterError("format must be ts or es (got '" + name + "')");
}

std::string format_text(const RunReport& r) {
  std::string out;
  out += "NH precursor: " + std::string(flag(r.nh_precursor)) + "\n";
  out += "NH trigger: " + std::string(flag(r.nh_trigger)) + "\n";
  out += "p-value precursor: " + sig_digits(r.p_precursor, 7) + "\n";
  out += "p-value trigger: " + sig_digits(r.p_trigger, 7) + "\n";
  out += "precursor coincidence rate: " + sig_digits(r.rate_precursor, 7) + "\n";
  out += "trigger coincidence rate: " + sig_digits(r.rate_trigger, 7) + "\n";
  return out;
}

std::string to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["nh_precursor"] = r.nh_precursor;
  j["nh_trigger"] = r.nh_trigger;
  j["p_precursor"] = r.p_precursor;
  j["p_trigger"] = r.p_trigger;
  j["rate_precursor"] = r.rate_precursor;
  j["rate_trigger"] = r.rate_trigger;
  j["method"] = to_string(r.method);
  j["reps"] = r.reps;
  j["alpha"] = r.alpha;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["delT"] = r.delta_t;
  j["tau"] = r.lag;
  j["sym"] = r.symmetric;
  j["format"] = to_string(r.format);
  j["N_A"] = r.n_a;
  j["N_B"] = r.n_b;
  j["K_p"] = r.k_precursor;
  j["K_t"] = r.k_trigger;
  j["T_eff"] = r.t_eff;
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& json) {
  try {
    const auto j = nlohmann::json::parse(json);
    RunReport r;
    r.nh_precursor = j.at("nh_precursor").get<bool>();
    r.nh_trigger = j.at("nh_trigger").get<bool>();
    r.p_precursor = j.at("p_precursor").get<double>();
    r.p_trigger = j.at("p_trigger").get<double>();
    r.rate_precursor = j.at("rate_precursor").get<double>();
    r.rate_trigger = j.at("rate_trigger").get<double>();
    r.method = parse_sig_method(j.at("method").get<std::string>());
    r.reps = j.at("reps").get<std::size_t>();
    r.alpha = j.at("alpha").get<double>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.delta_t = j.at("delT").get<double>();
    r.lag = j.at("tau").get<double>();
    r.symmetric = j.at("sym").get<bool>();
    r.format = parse_series_format(j.at("format").get<std::string>());
    r.n_a = j.at("N_A").get<std::size_t>();
    r.n_b = j.at("N_B").get<std::size_t>();
    r.k_precursor = j.at("K_p").get<std::size_t>();
    r.k_trigger = j.at("K_t").get<std::size_t>();
    r.t_eff = j.at("T_eff").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  } catch (const ParameterError& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace eca
