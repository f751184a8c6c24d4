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
#include "cli.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "neurocap/blahut_arimoto.hpp"
#include "neurocap/capacity.hpp"
#include "neurocap/decoder.hpp"
#include "neurocap/error.hpp"
#include "neurocap/info_density.hpp"
#include "neurocap/information.hpp"
#include "neurocap/io.hpp"
#include "neurocap/monte_carlo.hpp"
#include "neurocap/tuning.hpp"
#include "neurocap/version.hpp"

namespace neurocap::cli {
namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// --config handling: the JSON object is spliced into argv right after the
// leading subcommand tokens, so explicit flags (parsed later) win.

std::vector<std::string> config_tokens(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    throw ValidationError("config " + path + ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw ValidationError("config " + path + ": expected a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : j.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
    } else if (value.is_number_float()) {
      tokens.push_back(flag);
      tokens.push_back(format_number(value.get<double>()));
    } else if (value.is_number()) {
      tokens.push_back(flag);
      tokens.push_back(value.dump());
    } else if (value.is_string()) {
      tokens.push_back(flag);
      tokens.push_back(value.get<std::string>());
    } else if (!value.is_null()) {
      throw ValidationError("config " + path + ": field '" + key + "' must be a scalar");
    }
  }
  return tokens;
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ValidationError("--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;
  std::size_t lead = 0;
  while (lead < args.size() && !args[lead].empty() && args[lead][0] != '-') ++lead;
  auto tokens = config_tokens(*path);
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(lead), tokens.begin(), tokens.end());
  return args;
}

// ---------------------------------------------------------------------------

struct ChannelFlags {
  double kappa = 1.0;
  double a0 = kDefaultA0;
  double b0 = kDefaultB0;
  double delta = kDefaultDelta;
  double tail_tol = kDefaultTailTol;
  std::size_t count_cap = kDefaultCountCap;
};

void add_channel_flags(CLI::App* app, ChannelFlags& f, bool require_kappa) {
  auto* k = app->add_option("--kappa", f.kappa, "gamma shape");
  if (require_kappa) k->required();
  app->add_option("--a0", f.a0, "lower mean-ISI bound, seconds")->capture_default_str();
  app->add_option("--b0", f.b0, "upper mean-ISI bound, seconds")->capture_default_str();
  app->add_option("--delta", f.delta, "counting window, seconds (rate coding)")
      ->capture_default_str();
  app->add_option("--tail-tol", f.tail_tol, "count truncation tail mass")->capture_default_str();
  app->add_option("--count-cap", f.count_cap, "hard cap on the truncation index")
      ->capture_default_str();
}

ChannelModel make_model(Coding coding, const ChannelFlags& f) {
  if (!(f.kappa > 0.0) || !std::isfinite(f.kappa)) throw ValidationError("--kappa must be > 0");
  if (!(f.a0 > 0.0)) throw ValidationError("--a0 must be > 0");
  if (!(f.b0 > f.a0)) throw ValidationError("degenerate interval: need --a0 < --b0");
  const GammaChannel gamma(f.kappa, f.a0, f.b0);
  if (coding == Coding::kTemporal) return ChannelModel::temporal(gamma);
  if (!(f.delta > 0.0)) throw ValidationError("--delta must be > 0");
  return ChannelModel::rate(CountChannelConfig(gamma, f.delta, f.tail_tol, f.count_cap));
}

void channel_json(Json& j, const ChannelFlags& f) {
  j["kappa"] = f.kappa;
  j["a0"] = f.a0;
  j["b0"] = f.b0;
  j["delta"] = f.delta;
  j["tail_tol"] = f.tail_tol;
  j["count_cap"] = f.count_cap;
}

Provenance provenance(const std::string& command, const Json& config,
                      std::optional<std::uint64_t> seed = std::nullopt) {
  Provenance p;
  p.version = kVersion;
  p.command = command;
  p.config_json = config.dump();
  p.seed = seed;
  return p;
}

// Writes to path, or to out when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string document(const Provenance& p, Json body) {
  Json j;
  Json prov;
  prov["tool"] = p.tool;
  prov["version"] = p.version;
  prov["command"] = p.command;
  prov["config"] = Json::parse(p.config_json);
  prov["seed"] = p.seed ? Json(*p.seed) : Json(nullptr);
  j["provenance"] = prov;
  for (auto& [k, v] : body.items()) j[k] = v;
  return canonical_json(j.dump());
}

Json number_or_text(double v) { return std::isfinite(v) ? Json(v) : Json(format_number(v)); }

Normalization mode(bool renormalize) {
  return renormalize ? Normalization::kRenormalize : Normalization::kStrict;
}

StimulusDistribution parse_stimulus(const std::string& arg) {
  const auto colon = arg.find(':');
  const std::string kind = arg.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : arg.substr(colon + 1);
  auto numbers = [&](const std::string& text) {
    std::vector<double> v;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const std::string cell = text.substr(start, comma - start);
      try {
        std::size_t used = 0;
        v.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ValidationError("--stimulus: '" + cell + "' is not a number");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return v;
  };
  if (kind == "uniform") {
    const auto v = rest.empty() ? std::vector<double>{0.0, 1.0} : numbers(rest);
    if (v.size() != 2) throw ValidationError("--stimulus uniform:lo,hi");
    return StimulusDistribution::uniform(v[0], v[1]);
  }
  if (kind == "beta") {
    const auto v = numbers(rest);
    if (v.size() == 2) return StimulusDistribution::beta(v[0], v[1]);
    if (v.size() == 4) return StimulusDistribution::beta(v[0], v[1], v[2], v[3]);
    throw ValidationError("--stimulus beta:alpha,beta[,lo,hi]");
  }
  if (kind == "pwl") {
    std::vector<double> xs;
    std::vector<double> ds;
    std::size_t start = 0;
    while (start < rest.size()) {
      const auto semi = rest.find(';', start);
      const auto v = numbers(rest.substr(start, semi - start));
      if (v.size() != 2) throw ValidationError("--stimulus pwl:x0,d0;x1,d1;...");
      xs.push_back(v[0]);
      ds.push_back(v[1]);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    return StimulusDistribution::piecewise_linear(xs, ds, Normalization::kRenormalize);
  }
  throw ValidationError("--stimulus: unknown kind '" + kind + "' (uniform, beta, pwl)");
}

// ---------------------------------------------------------------------------

struct ItFlags {
  std::string pmf, joint, p_file, q_file, channel, out;
  bool renormalize = false;
  double bsc_p = 0.0;
  std::optional<double> bsc_q;
  double tol = 1e-9;
  std::size_t max_iter = 100000;
};

struct CapacityFlags {
  std::string coding;
  ChannelFlags channel;
  std::string method = "particle";
  double tol = 1e-4;
  double slack_tol = kDefaultSlackTol;
  std::size_t grid_n = 2001;
  std::size_t probe_n = kDefaultProbeCount;
  std::size_t max_iter = 200000;
  std::size_t max_rounds = 80;
  unsigned threads = 1;
  std::string out, kkt_csv;
};

struct TuningFlags {
  std::string solution, stimulus = "uniform:0,1", direction = "default";
  std::size_t samples = 201;
  std::string out, csv, staircase_csv;
};

struct DecodeFlags {
  std::string solution, out;
};

struct McFlags {
  std::string solution, coding = "rate", out;
  ChannelFlags channel;
  std::vector<double> points, weights;
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
};

int run_it(const std::string& which, const ItFlags& f, std::ostream& out) {
  Json cfg;
  Json body;
  if (which == "entropy") {
    cfg["pmf"] = f.pmf;
    cfg["renormalize"] = f.renormalize;
    const auto p = load_pmf(f.pmf, mode(f.renormalize));
    body["entropy_bits"] = entropy(p);
    body["alphabet_size"] = p.size();
  } else if (which == "mi") {
    cfg["joint"] = f.joint;
    cfg["renormalize"] = f.renormalize;
    const auto j = load_joint(f.joint, mode(f.renormalize));
    body["mutual_information_bits"] = mutual_information(j);
    body["entropy_x_bits"] = entropy(j.marginal_x());
    body["entropy_y_bits"] = entropy(j.marginal_y());
    body["entropy_x_given_y_bits"] = conditional_entropy(j.transposed());
    body["entropy_y_given_x_bits"] = conditional_entropy(j);
  } else if (which == "kl") {
    cfg["p"] = f.p_file;
    cfg["q"] = f.q_file;
    cfg["renormalize"] = f.renormalize;
    body["kl_bits"] = number_or_text(kl_divergence(load_pmf(f.p_file, mode(f.renormalize)),
                                                   load_pmf(f.q_file, mode(f.renormalize))));
  } else if (which == "bsc") {
    cfg["p"] = f.bsc_p;
    cfg["q"] = f.bsc_q ? Json(*f.bsc_q) : Json(nullptr);
    body["p"] = f.bsc_p;
    body["binary_entropy_bits"] = binary_entropy(f.bsc_p);
    body["capacity_bits"] = bsc_capacity(f.bsc_p);
    if (f.bsc_q) {
      body["q"] = *f.bsc_q;
      body["mutual_information_bits"] = bsc_mutual_information(*f.bsc_q, f.bsc_p);
    }
  } else {
    cfg["channel"] = f.channel;
    cfg["tol"] = f.tol;
    cfg["max_iter"] = f.max_iter;
    cfg["renormalize"] = f.renormalize;
    const auto ch = load_channel(f.channel, mode(f.renormalize));
    const auto r = blahut_arimoto(ch, f.tol, f.max_iter);
    body["capacity_bits"] = r.capacity;
    body["upper_bound_bits"] = r.upper_bound;
    body["iterations"] = r.iterations;
    body["optimal_input"] = {{"labels", r.optimal_input.labels()},
                             {"probs", std::vector<double>(r.optimal_input.probs().begin(),
                                                           r.optimal_input.probs().end())}};
  }
  emit(document(provenance("it " + which, cfg), body), f.out, out);
  return kExitOk;
}

int run_capacity(const CapacityFlags& f, std::ostream& out, std::ostream& err) {
  const Coding coding = parse_coding(f.coding);
  const ChannelModel model = make_model(coding, f.channel);
  if (f.method != "particle" && f.method != "grid") {
    throw ValidationError("--method must be particle or grid");
  }
  Json cfg;
  cfg["coding"] = f.coding;
  channel_json(cfg, f.channel);
  cfg["method"] = f.method;
  if (f.method == "grid") {
    cfg["tol"] = f.tol;
    cfg["grid_n"] = f.grid_n;
    cfg["max_iter"] = f.max_iter;
  } else {
    cfg["max_rounds"] = f.max_rounds;
  }
  cfg["slack_tol"] = f.slack_tol;
  cfg["probe_n"] = f.probe_n;
  cfg["threads"] = f.threads;
  const auto prov = provenance("capacity", cfg);

  auto write = [&](const CapacitySolution& s, bool certified) {
    emit(solution_to_json(s, prov, certified), f.out, out);
    if (!f.kkt_csv.empty()) write_text_file(f.kkt_csv, kkt_to_csv(s.certificate, prov));
    err << "neurocap: " << (certified && s.certificate.passed ? "" : "uncertified ")
        << "capacity " << format_number(s.capacity_per_use) << " bits per use, "
        << format_number(s.capacity_bps) << " bits/s, " << s.ensemble.size()
        << " mass points\n";
  };
  try {
    CapacitySolution s = [&] {
      if (f.method == "grid") {
        GridOptions o;
        o.grid_n = f.grid_n;
        o.tol = f.tol;
        o.max_iter = f.max_iter;
        o.probe_n = f.probe_n;
        o.slack_tol = f.slack_tol;
        o.threads = f.threads;
        return grid_capacity(model, o);
      }
      ParticleOptions o;
      o.tol = f.slack_tol;
      o.probe_n = f.probe_n;
      o.max_rounds = f.max_rounds;
      o.threads = f.threads;
      return particle_capacity(model, o);
    }();
    write(s, true);
  } catch (const SolverConvergenceError& e) {
    write(e.best(), false);
    throw;
  }
  return kExitOk;
}

int run_tuning(const TuningFlags& f, std::ostream& out, std::ostream& err) {
  const CapacitySolution s = solution_from_json(read_text_file(f.solution));
  if (!s.certificate.passed) {
    throw ValidationError("tuning: solution " + f.solution + " is not certified");
  }
  const auto stim = parse_stimulus(f.stimulus);
  const auto curve = build_tuning_curve(s, stim, parse_tuning_direction(f.direction));
  const auto check = verify_tuning_mi(curve, stim, s);
  Json cfg;
  cfg["solution"] = f.solution;
  cfg["stimulus"] = stim.describe();
  cfg["direction"] = f.direction;
  cfg["samples"] = f.samples;
  const auto prov = provenance("tuning", cfg);
  const double kappa = s.model.gamma().kappa();
  const double delta = s.model.delta();
  emit(tuning_to_json(curve, stim, kappa, delta, check, prov), f.out, out);
  if (!f.csv.empty()) write_text_file(f.csv, tuning_to_csv(curve, kappa, delta, prov));
  if (!f.staircase_csv.empty()) {
    write_text_file(f.staircase_csv,
                    staircase_to_csv(sample_staircase(curve, kappa, delta, f.samples), prov));
  }
  err << "neurocap: tuning curve with " << curve.levels.size() << " levels, MI gap to capacity "
      << format_number(check.gap) << " bits\n";
  return kExitOk;
}

int run_decode(const DecodeFlags& f, std::ostream& out, std::ostream& err) {
  const CapacitySolution s = solution_from_json(read_text_file(f.solution));
  const auto partition = hard_decoder(s);
  Json cfg;
  cfg["solution"] = f.solution;
  emit(decoder_to_json(partition, s, provenance("decode", cfg)), f.out, out);
  err << "neurocap: hard decoding " << format_number(partition.hard_rate) << " bits vs soft "
      << format_number(s.capacity_per_use) << " bits\n";
  return kExitOk;
}

int run_mc(const McFlags& f, std::ostream& out, std::ostream& err) {
  Json cfg;
  std::optional<InputEnsemble> ensemble;
  std::optional<ChannelModel> model;
  if (!f.solution.empty()) {
    const auto s = solution_from_json(read_text_file(f.solution));
    ensemble = s.ensemble;
    model = s.model;
    cfg["solution"] = f.solution;
  } else {
    if (f.points.empty()) throw ValidationError("mc-check: give --solution or --points/--weights");
    model = make_model(parse_coding(f.coding), f.channel);
    ensemble = InputEnsemble(f.points, f.weights);
    cfg["coding"] = f.coding;
    channel_json(cfg, f.channel);
    cfg["points"] = f.points;
    cfg["weights"] = f.weights;
  }
  cfg["samples"] = f.samples;
  const auto mc = monte_carlo_mi(*ensemble, *model, f.samples, f.seed);
  const double quad = ensemble_mi(*ensemble, *model);
  const double z = mc.std_error > 0.0 ? (mc.estimate - quad) / mc.std_error : 0.0;
  Json body;
  body["coding"] = to_string(model->coding());
  body["estimate_bits"] = mc.estimate;
  body["std_error_bits"] = mc.std_error;
  body["quadrature_bits"] = quad;
  body["z_score"] = z;
  body["within_3se"] = std::abs(mc.estimate - quad) <= 3.0 * mc.std_error;
  emit(document(provenance("mc-check", cfg, f.seed), body), f.out, out);
  err << "neurocap: Monte-Carlo " << format_number(mc.estimate) << " +- "
      << format_number(mc.std_error) << " bits, quadrature " << format_number(quad) << " bits\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Channel capacity of gamma ISI neuron models", "neurocap"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string config_unused;
  app.add_option("--config", config_unused, "JSON file supplying any flag; flags override it");

  ItFlags it_flags;
  auto* it = app.add_subcommand("it", "finite-alphabet information primitives");
  it->require_subcommand(1);
  auto* it_entropy = it->add_subcommand("entropy", "H(X) of a PMF");
  it_entropy->add_option("--pmf", it_flags.pmf, "PMF file (.json or .csv)")->required();
  auto* it_mi = it->add_subcommand("mi", "I(X;Y) of a joint PMF");
  it_mi->add_option("--joint", it_flags.joint, "joint PMF file")->required();
  auto* it_kl = it->add_subcommand("kl", "D(p||q)");
  it_kl->add_option("--p", it_flags.p_file, "PMF file")->required();
  it_kl->add_option("--q", it_flags.q_file, "PMF file")->required();
  auto* it_bsc = it->add_subcommand("bsc", "binary symmetric channel");
  it_bsc->add_option("--p", it_flags.bsc_p, "crossover probability")->required();
  it_bsc->add_option("--q", it_flags.bsc_q, "input one-probability for I(X;Y)");
  auto* it_ba = it->add_subcommand("ba", "Blahut-Arimoto capacity of a channel matrix");
  it_ba->add_option("--channel", it_flags.channel, "channel file")->required();
  it_ba->add_option("--tol", it_flags.tol, "bound gap, bits")->capture_default_str();
  it_ba->add_option("--max-iter", it_flags.max_iter)->capture_default_str();
  for (auto* sub : {it_entropy, it_mi, it_kl, it_ba}) {
    sub->add_flag("--renormalize", it_flags.renormalize, "rescale inputs to unit mass");
  }
  for (auto* sub : {it_entropy, it_mi, it_kl, it_bsc, it_ba}) {
    sub->add_option("--out", it_flags.out, "write JSON here instead of stdout");
  }

  CapacityFlags cap_flags;
  auto* cap = app.add_subcommand("capacity", "capacity-achieving input ensemble");
  cap->add_option("coding", cap_flags.coding, "temporal or rate")
      ->required()
      ->check(CLI::IsMember({"temporal", "rate"}));
  add_channel_flags(cap, cap_flags.channel, true);
  cap->add_option("--method", cap_flags.method, "particle or grid")->capture_default_str();
  cap->add_option("--tol", cap_flags.tol, "grid: Blahut-Arimoto bound gap, bits")
      ->capture_default_str();
  cap->add_option("--slack-tol", cap_flags.slack_tol, "KKT slack, bits")->capture_default_str();
  cap->add_option("--grid-n", cap_flags.grid_n)->capture_default_str();
  cap->add_option("--probe-n", cap_flags.probe_n)->capture_default_str();
  cap->add_option("--max-iter", cap_flags.max_iter, "grid iterations")->capture_default_str();
  cap->add_option("--max-rounds", cap_flags.max_rounds, "particle rounds")->capture_default_str();
  cap->add_option("--threads", cap_flags.threads)->capture_default_str();
  cap->add_option("--out", cap_flags.out, "solution JSON (default stdout)");
  cap->add_option("--kkt-csv", cap_flags.kkt_csv, "probe curve CSV");

  TuningFlags tun_flags;
  auto* tun = app.add_subcommand("tuning", "optimal tuning curve from a certified solution");
  tun->add_option("--solution", tun_flags.solution)->required();
  tun->add_option("--stimulus", tun_flags.stimulus, "uniform:lo,hi | beta:a,b[,lo,hi] | pwl:x,d;...")
      ->capture_default_str();
  tun->add_option("--direction", tun_flags.direction, "default, increasing or decreasing")
      ->capture_default_str();
  tun->add_option("--samples", tun_flags.samples, "staircase samples")->capture_default_str();
  tun->add_option("--out", tun_flags.out, "curve JSON (default stdout)");
  tun->add_option("--csv", tun_flags.csv, "x_break,level_theta,mean_response CSV");
  tun->add_option("--staircase-csv", tun_flags.staircase_csv, "evenly sampled staircase CSV");

  DecodeFlags dec_flags;
  auto* dec = app.add_subcommand("decode", "MAP hard-decision regions");
  dec->add_option("--solution", dec_flags.solution)->required();
  dec->add_option("--out", dec_flags.out, "JSON (default stdout)");

  McFlags mc_flags;
  auto* mc = app.add_subcommand("mc-check", "Monte-Carlo check of the ensemble MI");
  mc->add_option("--solution", mc_flags.solution, "solution JSON supplying ensemble and channel");
  mc->add_option("--coding", mc_flags.coding)->check(CLI::IsMember({"temporal", "rate"}));
  add_channel_flags(mc, mc_flags.channel, false);
  mc->add_option("--points", mc_flags.points, "mass points, seconds")->delimiter(',');
  mc->add_option("--weights", mc_flags.weights)->delimiter(',');
  mc->add_option("--samples", mc_flags.samples)->capture_default_str();
  mc->add_option("--seed", mc_flags.seed)->capture_default_str();
  mc->add_option("--out", mc_flags.out, "JSON (default stdout)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::vector<const char*> cargs{argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitValidation;
    }

    if (it->parsed()) {
      for (auto* sub : it->get_subcommands()) return run_it(sub->get_name(), it_flags, out);
    }
    if (cap->parsed()) return run_capacity(cap_flags, out, err);
    if (tun->parsed()) return run_tuning(tun_flags, out, err);
    if (dec->parsed()) return run_decode(dec_flags, out, err);
    if (mc->parsed()) return run_mc(mc_flags, out, err);
    return kExitValidation;
  } catch (const ConvergenceError& e) {
    err << "neurocap: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const ValidationError& e) {
    err << "neurocap: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "neurocap: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace neurocap::cli
