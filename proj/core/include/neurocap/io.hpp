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
#pragma once

// Text formats for the library's value types. JSON output uses a fixed key
// order, two-space indentation and 17 significant digits for every float, so
// equal inputs give byte-identical files. Layouts are listed in docs/formats.md.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neurocap/capacity.hpp"
#include "neurocap/decoder.hpp"
#include "neurocap/pmf.hpp"
#include "neurocap/tuning.hpp"

namespace neurocap {

// Stamped on every artifact. config_json must hold a JSON object.
struct Provenance {
  std::string tool = "neurocap";
  std::string version;
  std::string command;
  std::string config_json = "{}";
  std::optional<std::uint64_t> seed;
};

// "%.17g"; non-finite values become "inf", "-inf" or "nan".
std::string format_number(double value);

// Re-emits any JSON document in the canonical layout described above.
std::string canonical_json(std::string_view json_text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// PMF JSON: {"labels": [...], "probs": [...]}; labels may be omitted.
// PMF CSV: a header row of labels and one row of probabilities.
DiscretePMF pmf_from_json(std::string_view text, Normalization mode = Normalization::kStrict);
DiscretePMF pmf_from_csv(std::string_view text, Normalization mode = Normalization::kStrict);
// Chooses the parser from the extension (.json or .csv).
DiscretePMF load_pmf(const std::filesystem::path& path,
                     Normalization mode = Normalization::kStrict);

// Channel JSON: {"input_labels": [...], "output_labels": [...], "rows": [[...], ...]}.
// Channel CSV: header "input,<output labels...>", then "<input label>,<probs...>" per row.
ChannelMatrix channel_from_json(std::string_view text,
                                Normalization mode = Normalization::kStrict);
ChannelMatrix channel_from_csv(std::string_view text,
                               Normalization mode = Normalization::kStrict);
ChannelMatrix load_channel(const std::filesystem::path& path,
                           Normalization mode = Normalization::kStrict);

// Joint JSON: {"row_labels": [...], "col_labels": [...], "probs": [[...], ...]}.
// Joint CSV: same layout as the channel CSV with first header cell "x".
JointPMF joint_from_json(std::string_view text, Normalization mode = Normalization::kStrict);
JointPMF joint_from_csv(std::string_view text, Normalization mode = Normalization::kStrict);
JointPMF load_joint(const std::filesystem::path& path,
                    Normalization mode = Normalization::kStrict);

// Channel block {"coding", "kappa", "a0", "b0", "delta", "tail_tol"}; missing
// keys take the library defaults, "coding" defaults to the argument.
ChannelModel model_from_json(std::string_view text, Coding coding = Coding::kRate);
std::string model_to_json(const ChannelModel& model);

std::string solution_to_json(const CapacitySolution& solution, const Provenance& provenance,
                             bool certified = true);
// Restores ensemble, model, values and certificate summary (the probe curve
// itself is not stored).
CapacitySolution solution_from_json(std::string_view text);

// "theta,info_density_bits" rows after '#' provenance lines.
std::string kkt_to_csv(const KKTReport& report, const Provenance& provenance);

// "x_break,level_theta,mean_response": one row per interval at its left
// breakpoint, then a closing row at x_hi repeating the last level.
std::string tuning_to_csv(const TuningCurve& curve, double kappa, double delta,
                          const Provenance& provenance);
std::string staircase_to_csv(const std::vector<StaircaseSample>& samples,
                             const Provenance& provenance);
std::string tuning_to_json(const TuningCurve& curve, const StimulusDistribution& stimulus,
                           double kappa, double delta, const TuningCheck& check,
                           const Provenance& provenance);

std::string decoder_to_json(const DecoderPartition& partition, const CapacitySolution& solution,
                            const Provenance& provenance);

}  // namespace neurocap
