// Copyright 2026 The neurocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "neurocap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "neurocap/error.hpp"

namespace neurocap {
namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ValidationError(std::string(what) + ": malformed JSON (" + e.what() + ")");
  }
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(what) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback, const char* what) {
  if (!j.contains(key)) return fallback;
  return field<T>(j, key, what);
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void dump(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad + Json(it.key()).dump() + ": ";
        dump(it.value(), out, indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& v : j) flat = flat && is_scalar(v);
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump(j[i], out, indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "\"" + format_number(v) + "\"";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string render(const Json& j) {
  std::string out;
  dump(j, out, 0);
  out += "\n";
  return out;
}

Json provenance_json(const Provenance& p) {
  Json j;
  j["tool"] = p.tool;
  j["version"] = p.version;
  j["command"] = p.command;
  j["config"] = parse(p.config_json, "provenance config");
  if (p.seed) {
    j["seed"] = *p.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

std::string provenance_csv(const Provenance& p) {
  std::string out;
  out += "# tool: " + p.tool + " " + p.version + "\n";
  out += "# command: " + p.command + "\n";
  out += "# config: " + parse(p.config_json, "provenance config").dump() + "\n";
  out += "# seed: " + (p.seed ? std::to_string(*p.seed) : std::string("none")) + "\n";
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty, non-comment lines split on commas.
std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      cells.push_back(trim(std::string_view(t).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

double to_double(const std::string& cell, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string(what) + ": '" + cell + "' is not a number");
  }
}

struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<double>> values;
};

LabeledMatrix matrix_csv(std::string_view text, const char* corner, const char* what) {
  const auto rows = csv_rows(text);
  if (rows.size() < 2) throw ValidationError(std::string(what) + ": need a header and data rows");
  if (rows[0].front() != corner) {
    throw ValidationError(std::string(what) + ": first header cell must be '" + corner + "'");
  }
  LabeledMatrix m;
  m.col_labels.assign(rows[0].begin() + 1, rows[0].end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw ValidationError(std::string(what) + ": row " + std::to_string(i) +
                            " has the wrong number of cells");
    }
    m.row_labels.push_back(rows[i].front());
    std::vector<double> v;
    for (std::size_t k = 1; k < rows[i].size(); ++k) v.push_back(to_double(rows[i][k], what));
    m.values.push_back(std::move(v));
  }
  return m;
}

bool has_extension(const std::filesystem::path& path, const char* ext) {
  return path.extension() == ext;
}

void require_extension(const std::filesystem::path& path) {
  if (!has_extension(path, ".json") && !has_extension(path, ".csv")) {
    throw ValidationError("input file " + path.string() + ": extension must be .json or .csv");
  }
}

Json certificate_json(const KKTReport& c, std::size_t probe_n) {
  Json j;
  j["max_violation"] = c.max_violation;
  j["at_support_gap"] = c.at_support_gap;
  j["passed"] = c.passed;
  j["slack_tol"] = c.slack_tol;
  j["capacity_ref"] = c.capacity_ref;
  j["probe_n"] = probe_n;
  return j;
}

Json model_json(const ChannelModel& model) {
  Json j;
  j["coding"] = to_string(model.coding());
  j["kappa"] = model.gamma().kappa();
  j["a0"] = model.gamma().a0();
  j["b0"] = model.gamma().b0();
  j["delta"] = model.delta();
  j["tail_tol"] = model.tail_tol();
  j["count_cap"] = model.count_cap();
  return j;
}

ChannelModel model_from(const Json& j, Coding coding) {
  const char* what = "channel config";
  if (!j.is_object()) throw ValidationError("channel config: expected a JSON object");
  if (j.contains("coding")) coding = parse_coding(field<std::string>(j, "coding", what));
  const GammaChannel gamma(field<double>(j, "kappa", what),
                           field_or<double>(j, "a0", kDefaultA0, what),
                           field_or<double>(j, "b0", kDefaultB0, what));
  if (coding == Coding::kTemporal) return ChannelModel::temporal(gamma);
  return ChannelModel::rate(
      CountChannelConfig(gamma, field_or<double>(j, "delta", kDefaultDelta, what),
                         field_or<double>(j, "tail_tol", kDefaultTailTol, what),
                         field_or<std::size_t>(j, "count_cap", kDefaultCountCap, what)));
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string canonical_json(std::string_view json_text) { return render(parse(json_text, "json")); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
  if (!out) throw ValidationError("write failed for " + path.string());
}

DiscretePMF pmf_from_json(std::string_view text, Normalization mode) {
  const Json j = parse(text, "pmf");
  auto probs = field<std::vector<double>>(j, "probs", "pmf");
  if (!j.contains("labels")) return DiscretePMF::from_probs(std::move(probs), mode);
  return DiscretePMF(field<std::vector<std::string>>(j, "labels", "pmf"), std::move(probs), mode);
}

DiscretePMF pmf_from_csv(std::string_view text, Normalization mode) {
  const auto rows = csv_rows(text);
  if (rows.size() != 2) throw ValidationError("pmf csv: expected a label row and a probability row");
  if (rows[0].size() != rows[1].size()) {
    throw ValidationError("pmf csv: label and probability rows differ in length");
  }
  std::vector<double> probs;
  for (const auto& cell : rows[1]) probs.push_back(to_double(cell, "pmf csv"));
  return DiscretePMF(rows[0], std::move(probs), mode);
}

DiscretePMF load_pmf(const std::filesystem::path& path, Normalization mode) {
  require_extension(path);
  const auto text = read_text_file(path);
  return has_extension(path, ".json") ? pmf_from_json(text, mode) : pmf_from_csv(text, mode);
}

ChannelMatrix channel_from_json(std::string_view text, Normalization mode) {
  const Json j = parse(text, "channel");
  auto rows = field<std::vector<std::vector<double>>>(j, "rows", "channel");
  if (!j.contains("input_labels") && !j.contains("output_labels")) {
    return ChannelMatrix::from_rows(std::move(rows), mode);
  }
  return ChannelMatrix(field<std::vector<std::string>>(j, "input_labels", "channel"),
                       field<std::vector<std::string>>(j, "output_labels", "channel"),
                       std::move(rows), mode);
}

ChannelMatrix channel_from_csv(std::string_view text, Normalization mode) {
  auto m = matrix_csv(text, "input", "channel csv");
  return ChannelMatrix(std::move(m.row_labels), std::move(m.col_labels), std::move(m.values),
                       mode);
}

ChannelMatrix load_channel(const std::filesystem::path& path, Normalization mode) {
  require_extension(path);
  const auto text = read_text_file(path);
  return has_extension(path, ".json") ? channel_from_json(text, mode)
                                      : channel_from_csv(text, mode);
}

JointPMF joint_from_json(std::string_view text, Normalization mode) {
  const Json j = parse(text, "joint");
  auto probs = field<std::vector<std::vector<double>>>(j, "probs", "joint");
  std::vector<std::string> rl =
      j.contains("row_labels") ? field<std::vector<std::string>>(j, "row_labels", "joint")
                               : default_labels(probs.size());
  std::vector<std::string> cl =
      j.contains("col_labels")
          ? field<std::vector<std::string>>(j, "col_labels", "joint")
          : default_labels(probs.empty() ? 0 : probs.front().size());
  return JointPMF(std::move(rl), std::move(cl), std::move(probs), mode);
}

JointPMF joint_from_csv(std::string_view text, Normalization mode) {
  auto m = matrix_csv(text, "x", "joint csv");
  return JointPMF(std::move(m.row_labels), std::move(m.col_labels), std::move(m.values), mode);
}

JointPMF load_joint(const std::filesystem::path& path, Normalization mode) {
  require_extension(path);
  const auto text = read_text_file(path);
  return has_extension(path, ".json") ? joint_from_json(text, mode) : joint_from_csv(text, mode);
}

ChannelModel model_from_json(std::string_view text, Coding coding) {
  return model_from(parse(text, "channel config"), coding);
}

std::string model_to_json(const ChannelModel& model) { return render(model_json(model)); }

std::string solution_to_json(const CapacitySolution& solution, const Provenance& provenance,
                             bool certified) {
  Json j;
  j["provenance"] = provenance_json(provenance);
  j["certified"] = certified && solution.certificate.passed;
  const Json model = model_json(solution.model);
  for (const auto& [k, v] : model.items()) j[k] = v;
  j["method"] = solution.method;
  j["points"] = solution.ensemble.points();
  j["weights"] = solution.ensemble.weights();
  j["capacity_per_use_bits"] = solution.capacity_per_use;
  j["capacity_bps"] = solution.capacity_bps;
  j["bracket_bits"] = {{"lower", solution.lower_bound}, {"upper", solution.upper_bound}};
  j["certificate"] = certificate_json(solution.certificate, solution.certificate.grid.size());
  return render(j);
}

CapacitySolution solution_from_json(std::string_view text) {
  const char* what = "solution";
  const Json j = parse(text, what);
  const ChannelModel model = model_from(j, Coding::kRate);
  InputEnsemble ensemble(field<std::vector<double>>(j, "points", what),
                         field<std::vector<double>>(j, "weights", what));
  ensemble.check_within(model.gamma());
  const Json cert = j.contains("certificate") ? j.at("certificate") : Json::object();
  CapacitySolution s{
      .ensemble = std::move(ensemble),
      .model = model,
      .capacity_per_use = field<double>(j, "capacity_per_use_bits", what),
      .capacity_bps = field<double>(j, "capacity_bps", what),
      .lower_bound = 0.0,
      .upper_bound = 0.0,
      .certificate = {},
      .method = field_or<std::string>(j, "method", "unknown", what),
  };
  if (j.contains("bracket_bits")) {
    s.lower_bound = field<double>(j.at("bracket_bits"), "lower", what);
    s.upper_bound = field<double>(j.at("bracket_bits"), "upper", what);
  }
  s.certificate.capacity_ref = field_or<double>(cert, "capacity_ref", s.capacity_per_use, what);
  s.certificate.max_violation = field_or<double>(cert, "max_violation", 0.0, what);
  s.certificate.at_support_gap = field_or<double>(cert, "at_support_gap", 0.0, what);
  s.certificate.slack_tol = field_or<double>(cert, "slack_tol", kDefaultSlackTol, what);
  s.certificate.passed =
      field_or<bool>(cert, "passed", false, what) && field_or<bool>(j, "certified", false, what);
  return s;
}

std::string kkt_to_csv(const KKTReport& report, const Provenance& provenance) {
  std::string out = provenance_csv(provenance);
  out += "theta,info_density_bits\n";
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    out += format_number(report.grid[i]) + "," + format_number(report.info_density[i]) + "\n";
  }
  return out;
}

std::string tuning_to_csv(const TuningCurve& curve, double kappa, double delta,
                          const Provenance& provenance) {
  std::string out = provenance_csv(provenance);
  out += "x_break,level_theta,mean_response\n";
  const std::size_t m = curve.levels.size();
  for (std::size_t i = 0; i <= m; ++i) {
    const std::size_t level = std::min(i, m - 1);
    const double theta = curve.levels[level];
    const double response =
        curve.coding == Coding::kTemporal ? kappa * theta : delta / (kappa * theta);
    out += format_number(curve.breakpoints[i]) + "," + format_number(theta) + "," +
           format_number(response) + "\n";
  }
  return out;
}

std::string staircase_to_csv(const std::vector<StaircaseSample>& samples,
                             const Provenance& provenance) {
  std::string out = provenance_csv(provenance);
  out += "x,level_theta,mean_response\n";
  for (const auto& s : samples) {
    out += format_number(s.x) + "," + format_number(s.level) + "," +
           format_number(s.mean_response) + "\n";
  }
  return out;
}

std::string tuning_to_json(const TuningCurve& curve, const StimulusDistribution& stimulus,
                           double kappa, double delta, const TuningCheck& check,
                           const Provenance& provenance) {
  Json j;
  j["provenance"] = provenance_json(provenance);
  j["coding"] = to_string(curve.coding);
  j["kappa"] = kappa;
  j["delta"] = delta;
  j["stimulus"] = stimulus.describe();
  j["breakpoints"] = curve.breakpoints;
  j["levels"] = curve.levels;
  j["weights"] = curve.weights;
  std::vector<double> response;
  for (double theta : curve.levels) {
    response.push_back(curve.coding == Coding::kTemporal ? kappa * theta : delta / (kappa * theta));
  }
  j["mean_response"] = response;
  j["mi_bits"] = check.mi;
  j["gap_to_capacity_bits"] = check.gap;
  return render(j);
}

std::string decoder_to_json(const DecoderPartition& partition, const CapacitySolution& solution,
                            const Provenance& provenance) {
  Json j;
  j["provenance"] = provenance_json(provenance);
  j["coding"] = to_string(partition.coding);
  j["points"] = solution.ensemble.points();
  j["weights"] = solution.ensemble.weights();
  j["boundaries"] = partition.boundaries;
  Json regions = Json::array();
  for (const auto& r : partition.regions) {
    Json reg;
    reg["owner"] = r.owner;
    reg["lo"] = r.lo;
    reg["hi"] = std::isfinite(r.hi) ? Json(r.hi) : Json("inf");
    regions.push_back(reg);
  }
  j["regions"] = regions;
  Json rows = Json::array();
  for (std::size_t k = 0; k < partition.induced_channel.inputs(); ++k) {
    const auto row = partition.induced_channel.row(k);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  j["induced_channel"] = rows;
  j["empty_owners"] = partition.empty_owners;
  j["hard_rate_bits"] = partition.hard_rate;
  j["hard_mi_at_ensemble_bits"] = partition.hard_mi_at_ensemble;
  j["soft_capacity_bits"] = solution.capacity_per_use;
  return render(j);
}

}  // namespace neurocap
