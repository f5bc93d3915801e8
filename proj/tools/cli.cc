// Copyright 2026 The dysaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dysaug/audio_io.h"
#include "dysaug/augment_pipeline.h"
#include "dysaug/confusion.h"
#include "dysaug/error.h"
#include "dysaug/manifest.h"
#include "dysaug/resample.h"
#include "dysaug/severity.h"
#include "dysaug/text_correct.h"

namespace dysaug::cli {
namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<TextPair> read_pairs(const std::string& refs_path, const std::string& hyps_path) {
  auto refs = read_lines(refs_path);
  auto hyps = read_lines(hyps_path);
  if (refs.size() != hyps.size())
    throw Error(refs_path + " has " + std::to_string(refs.size()) + " lines but " + hyps_path +
                " has " + std::to_string(hyps.size()));
  std::vector<TextPair> pairs;
  pairs.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) pairs.emplace_back(std::move(refs[i]), std::move(hyps[i]));
  return pairs;
}

void open_output(std::ofstream& out, const std::string& path) {
  out.open(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(path + ": cannot open for writing");
}

const std::string kSeverityHelp = "one of S1, S2, S3, S4";

std::string check_severity(const std::string& label) {
  try {
    parse_severity(label);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return {};
}

std::string check_severity_list(const std::string& list) {
  if (list.empty()) return "severity list is empty; valid severities are S1, S2, S3, S4";
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (auto msg = check_severity(item); !msg.empty()) return msg;
  }
  return {};
}

std::vector<SeverityLevel> parse_severity_list(const std::string& list) {
  std::vector<SeverityLevel> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_severity(item));
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic dysarthric speech augmentation and ASR scoring", "dysaug"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--seed", seed, "Seed for severity assignment")->capture_default_str();
  app.add_flag("--quiet", quiet, "Suppress progress messages");

  // perturb
  auto* perturb = app.add_subcommand("perturb", "Perturb one WAV file");
  std::string perturb_in, perturb_out, severity_label;
  double r1 = 1.0, r2 = 1.0;
  bool reciprocal = false;
  perturb->add_option("--in", perturb_in, "Input WAV")->required();
  perturb->add_option("--out", perturb_out, "Output WAV")->required();
  auto* sev_opt = perturb->add_option("--severity", severity_label, "Severity preset, " + kSeverityHelp)
                      ->check(CLI::Validator(check_severity, "S1|S2|S3|S4"));
  auto* r1_opt = perturb->add_option("--r1", r1, "Speed factor R1")->check(CLI::Range(0.25, 4.0));
  auto* r2_opt = perturb->add_option("--r2", r2, "Tempo factor R2")->check(CLI::Range(0.25, 4.0));
  sev_opt->excludes(r1_opt)->excludes(r2_opt);
  perturb->add_flag("--reciprocal", reciprocal,
                    "Apply 1/R1 and 1/R2 instead (slower, lower-pitched speech)");

  // batch
  auto* batch = app.add_subcommand("batch", "Augment every entry of a JSONL manifest");
  std::string manifest_path, out_dir, severities = "S1,S2,S3,S4", out_manifest;
  int replication = 2;
  unsigned jobs = 0;
  batch->add_option("--manifest", manifest_path, "Input manifest (JSON Lines)")->required();
  batch->add_option("--out-dir", out_dir, "Directory for generated WAVs")->required();
  batch->add_option("--severities", severities, "Comma-separated severity pool")
      ->capture_default_str()
      ->check(CLI::Validator(check_severity_list, "LIST"));
  batch->add_option("--replication", replication, "Severities drawn per utterance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
  batch->add_option("--out-manifest", out_manifest,
                    "Output manifest path (default <out-dir>/augmented.jsonl)");

  // confusion
  auto* confusion = app.add_subcommand("confusion", "Estimate a character confusion matrix");
  std::string conf_refs, conf_hyps, conf_out;
  bool strip_marks = false;
  confusion->add_option("--refs", conf_refs, "Reference transcripts, one per line")->required();
  confusion->add_option("--hyps", conf_hyps, "Hypotheses, line-aligned with --refs")->required();
  confusion->add_option("--out", conf_out, "Output JSON")->required();
  confusion->add_flag("--strip-arabic-marks", strip_marks, "Drop tatweel and diacritics first");

  // correct
  auto* correct = app.add_subcommand("correct", "Dictionary-based correction of hypotheses");
  std::string dict_path, confusion_path, correct_in, correct_out;
  correct->add_option("--dict", dict_path, "Word list, optional tab-separated counts")->required();
  correct->add_option("--confusion", confusion_path, "Confusion matrix JSON");
  correct->add_option("--in", correct_in, "Hypotheses, one utterance per line")->required();
  correct->add_option("--out", correct_out, "Corrected output")->required();

  // score
  auto* score_cmd = app.add_subcommand("score", "WER/CER with error breakdown");
  std::string score_refs, score_hyps, unit = "word";
  score_cmd->add_option("--refs", score_refs, "Reference transcripts")->required();
  score_cmd->add_option("--hyps", score_hyps, "Hypotheses, line-aligned with --refs")->required();
  score_cmd->add_option("--unit", unit, "word or char")
      ->capture_default_str()
      ->check(CLI::IsMember({"word", "char"}));
  score_cmd->add_flag("--strip-arabic-marks", strip_marks, "Drop tatweel and diacritics first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dysaug: " << e.what() << '\n';
    return kExitUsage;
  }

  auto info = [&](const std::string& msg) {
    if (!quiet) err << msg << '\n';
  };

  try {
    if (perturb->parsed()) {
      PerturbationParams params;
      if (!sev_opt->empty()) {
        params = params_for(parse_severity(severity_label));
      } else if (!r1_opt->empty() || !r2_opt->empty()) {
        params = {SpeedFactor(r1), TempoFactor(r2), std::nullopt};
      } else {
        err << "dysaug: perturb needs --severity (" << kSeverityHelp << ") or --r1/--r2\n";
        return kExitUsage;
      }
      if (reciprocal)
        params = {SpeedFactor(1.0 / params.r1.value()), TempoFactor(1.0 / params.r2.value()),
                  std::nullopt};
      const Waveform input = resample(read_wav(perturb_in), kTargetSampleRate);
      write_wav(pertubate_signal(input, params), perturb_out);
      info("wrote " + perturb_out);
      return kExitOk;
    }

    if (batch->parsed()) {
      BatchOptions options;
      options.severities = parse_severity_list(severities);
      options.replication = replication;
      options.seed = seed;
      options.out_dir = out_dir;
      options.jobs = jobs;
      std::vector<SeverityLevel> pool = options.severities;
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      if (static_cast<std::size_t>(replication) > pool.size()) {
        err << "dysaug: --replication " << replication << " exceeds the " << pool.size()
            << " severities given\n";
        return kExitUsage;
      }

      const auto manifest = read_manifest(std::filesystem::path(manifest_path));
      options.audio_root = std::filesystem::path(manifest_path).parent_path();
      const BatchResult result = run_batch(manifest, options);

      const std::filesystem::path records_path =
          out_manifest.empty() ? std::filesystem::path(out_dir) / "augmented.jsonl"
                               : std::filesystem::path(out_manifest);
      std::ofstream records_out;
      open_output(records_out, records_path.string());
      write_records(records_out, result.records);
      info("generated " + std::to_string(result.records.size()) + " utterances from " +
           std::to_string(manifest.size()) + "; manifest " + records_path.string());
      for (const auto& f : result.failures) err << "failed: " << f.id << ": " << f.message << '\n';
      return result.failures.empty() ? kExitOk : kExitFailure;
    }

    const TextNormalization norm{strip_marks};

    if (confusion->parsed()) {
      const auto pairs = read_pairs(conf_refs, conf_hyps);
      const ConfusionMatrix matrix = build_confusion(pairs, norm);
      std::ofstream file;
      open_output(file, conf_out);
      file << matrix.to_json() << '\n';
      info("confusion matrix over " + std::to_string(matrix.alphabet().size()) +
           " characters written to " + conf_out);
      return kExitOk;
    }

    if (correct->parsed()) {
      const Dictionary dictionary = Dictionary::load(std::filesystem::path(dict_path));
      std::optional<ConfusionMatrix> matrix;
      if (!confusion_path.empty()) {
        std::ifstream in(confusion_path);
        if (!in) throw Error(confusion_path + ": cannot open");
        std::stringstream buf;
        buf << in.rdbuf();
        matrix = ConfusionMatrix::from_json(buf.str());
      }
      const Corrector corrector(dictionary, matrix ? &*matrix : nullptr);
      const auto lines = read_lines(correct_in);
      std::ofstream file;
      open_output(file, correct_out);
      for (const auto& line : lines) file << corrector.correct_sentence(line) << '\n';
      info("corrected " + std::to_string(lines.size()) + " lines");
      return kExitOk;
    }

    if (score_cmd->parsed()) {
      const auto pairs = read_pairs(score_refs, score_hyps);
      const ScoreUnit score_unit = unit == "char" ? ScoreUnit::kCharacter : ScoreUnit::kWord;
      const ScoreReport r = score(pairs, score_unit, norm);
      out << std::left << std::setw(6) << "Unit" << std::setw(10) << "Ref." << std::setw(8)
          << "Sub." << std::setw(8) << "Ins." << std::setw(8) << "Del." << "rate\n";
      out << std::setw(6) << unit << std::setw(10) << r.ref_length << std::setw(8)
          << r.substitutions << std::setw(8) << r.insertions << std::setw(8) << r.deletions
          << std::fixed << std::setprecision(3) << r.error_rate() << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "dysaug: error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dysaug::cli
