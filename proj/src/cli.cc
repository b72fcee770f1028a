// Copyright 2026 The pairrank Authors.
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

#include "pairrank/cli.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "pairrank/dataset_io.h"
#include "pairrank/errors.h"
#include "pairrank/experiments.h"
#include "pairrank/report.h"
#include "pairrank/simulator.h"

namespace pairrank {
namespace {

using nlohmann::json;

// Flag values shared by the verbs. Each module config field has one flag.
struct Options {
  std::string input;
  std::string format = "csv";
  std::vector<std::string> algorithms;
  std::uint64_t seed = 0;
  std::string out;
  double train_fraction = kDefaultTrainFraction;

  AlgorithmSettings settings;
  double initial_rating = 0.0;
  CLI::Option* initial_rating_flag = nullptr;
  std::string dump_matrix;

  // sweep
  std::string parameter;
  std::vector<double> values;
  double grid_min = 0.0;
  double grid_max = 0.0;
  int grid_count = 100;
  CLI::Option* grid_min_flag = nullptr;
  CLI::Option* grid_max_flag = nullptr;
  int repeats = 1;

  // permute
  std::vector<double> k_values = {3.0, 5.0};
  std::vector<int> permutation_counts = {1, 10, 100, 1000};

  // simulate
  std::string style = "controlled";
  int n_competitors = 10;
  std::int64_t n_matches = 1000;
  double skew_alpha = 1.2;
  double tie_rate = 0.0;
  std::vector<double> true_logits;
  std::string truth;
};

void AddInputFlags(CLI::App* verb, Options& o) {
  verb->add_option("--input", o.input, "Match file to read");
  verb->add_option("--format", o.format, "Input/output dataset format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  verb->add_option("--seed", o.seed, "Seed for splits and shuffles")
      ->capture_default_str();
  verb->add_option("--out", o.out, "Write the result here instead of stdout");
}

void AddInitialRatingFlag(CLI::App* verb, Options& o) {
  o.initial_rating_flag = verb->add_option(
      "--initial-rating", o.initial_rating,
      "Starting rating for Elo (default 1000) and Glicko (default 1500)");
}

void AddEloFlags(CLI::App* verb, Options& o) {
  verb->add_option("--k", o.settings.elo.k, "Elo k-factor")->capture_default_str();
  verb->add_option("--permutations", o.settings.elo.permutations,
                   "Elo passes over shuffled match orders (0 = file order)")
      ->capture_default_str();
}

void AddBtFlags(CLI::App* verb, Options& o) {
  verb->add_option("--max-iters", o.settings.bt.max_iters,
                   "Bradley-Terry iteration budget")
      ->capture_default_str();
  verb->add_option("--tolerance", o.settings.bt.tolerance,
                   "Bradley-Terry max logit change at convergence")
      ->capture_default_str();
  verb->add_flag("--weighted", o.settings.bt.weighted,
                 "Weight pairs by inverse match count");
  verb->add_option("--regularization", o.settings.bt.regularization,
                   "Bradley-Terry pseudo-count per ordered pair")
      ->capture_default_str();
}

void AddGlickoFlags(CLI::App* verb, Options& o) {
  verb->add_option("--initial-rd", o.settings.glicko.initial_rd,
                   "Glicko starting rating deviation")
      ->capture_default_str();
  verb->add_option("--min-rd", o.settings.glicko.min_rd,
                   "Glicko rating deviation floor")
      ->capture_default_str();
}

void AddMarkovFlags(CLI::App* verb, Options& o) {
  verb->add_option("--p", o.settings.markov.p,
                   "Markov walker bias toward the winner, in (0.5, 1)")
      ->capture_default_str();
  verb->add_option("--power-tol", o.settings.markov.power_tol,
                   "Markov power-iteration L1 tolerance")
      ->capture_default_str();
  verb->add_option("--max-power-iters", o.settings.markov.max_power_iters,
                   "Markov power-iteration budget")
      ->capture_default_str();
  verb->add_option("--smoothing", o.settings.markov.smoothing,
                   "Uniform teleport weight for disconnected graphs")
      ->capture_default_str();
}

void AddAllAlgorithmFlags(CLI::App* verb, Options& o) {
  AddInitialRatingFlag(verb, o);
  AddEloFlags(verb, o);
  AddBtFlags(verb, o);
  AddGlickoFlags(verb, o);
  AddMarkovFlags(verb, o);
}

Algorithm RequireAlgorithm(const std::string& name) {
  if (auto algorithm = ParseAlgorithm(name)) return *algorithm;
  throw ValidationError("unknown algorithm '" + name +
                        "' (expected elo, bradley-terry, glicko, markov or "
                        "winrate)");
}

std::vector<Algorithm> SelectedAlgorithms(const Options& o) {
  std::vector<Algorithm> result;
  for (const std::string& name : o.algorithms) {
    result.push_back(RequireAlgorithm(name));
  }
  return result;
}

// Applies --initial-rating and validates every config, so bad hyperparameters
// are reported before any file is touched.
void FinalizeSettings(Options& o) {
  if (o.initial_rating_flag && o.initial_rating_flag->count() > 0) {
    o.settings.elo.initial_rating = o.initial_rating;
    o.settings.glicko.initial_rating = o.initial_rating;
  }
  o.settings.elo.seed = o.seed;
  Validate(o.settings.elo);
  Validate(o.settings.bt);
  Validate(o.settings.glicko);
  Validate(o.settings.markov);
}

Dataset LoadInput(const Options& o) {
  if (o.input.empty()) throw ValidationError("--input is required");
  return LoadDataset(o.input, *ParseDatasetFormat(o.format));
}

json SettingsJson(const AlgorithmSettings& s) {
  return {{"elo",
           {{"k", s.elo.k},
            {"initial_rating", s.elo.initial_rating},
            {"permutations", s.elo.permutations},
            {"seed", s.elo.seed}}},
          {"bradley-terry",
           {{"max_iters", s.bt.max_iters},
            {"tolerance", s.bt.tolerance},
            {"weighted", s.bt.weighted},
            {"regularization", s.bt.regularization}}},
          {"glicko",
           {{"initial_rating", s.glicko.initial_rating},
            {"initial_rd", s.glicko.initial_rd},
            {"min_rd", s.glicko.min_rd}}},
          {"markov",
           {{"p", s.markov.p},
            {"power_tol", s.markov.power_tol},
            {"max_power_iters", s.markov.max_power_iters},
            {"smoothing", s.markov.smoothing}}}};
}

json Meta(const std::string& command, const Options& o, const Dataset& d) {
  return {{"tool", "pairrank"},
          {"command", command},
          {"input", o.input},
          {"format", o.format},
          {"seed", o.seed},
          {"competitors", d.num_competitors()},
          {"matches", d.num_matches()},
          {"settings", SettingsJson(o.settings)}};
}

void Emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + o.out + "'");
  file << text;
}

void EmitReport(const Options& o, std::ostream& out, const Report& report) {
  if (o.out.empty()) {
    out << FormatJson(report.ToJson());
  } else {
    SaveReport(o.out, report);
  }
}

void RunRank(Options& o, std::ostream& out) {
  if (o.algorithms.size() != 1) {
    throw ValidationError("rank needs exactly one --algorithm");
  }
  const Algorithm algorithm = RequireAlgorithm(o.algorithms.front());
  FinalizeSettings(o);
  const Dataset dataset = LoadInput(o);
  if (!o.dump_matrix.empty()) {
    if (algorithm != Algorithm::kMarkov) {
      throw ValidationError("--dump-matrix only applies to --algorithm markov");
    }
    std::ofstream file(o.dump_matrix, std::ios::binary);
    if (!file) throw ValidationError("cannot write '" + o.dump_matrix + "'");
    WriteMatrix(file, BuildTransition(dataset, o.settings.markov));
  }
  Emit(o, out, FormatJson(RankingToJson(Fit(algorithm, dataset, o.settings))));
}

void RunEvaluate(Options& o, std::ostream& out) {
  if (o.algorithms.size() != 1) {
    throw ValidationError("evaluate needs exactly one --algorithm");
  }
  const Algorithm algorithm = RequireAlgorithm(o.algorithms.front());
  FinalizeSettings(o);
  const Dataset dataset = LoadInput(o);
  const auto [train, test] = SplitDataset(dataset, o.train_fraction, o.seed);
  AlgorithmEvaluation row =
      EvaluateAlgorithm(dataset, train, test, algorithm, o.settings);
  if (!row.ok()) throw ComputationError(row.error);
  json meta = Meta("evaluate", o, dataset);
  meta["train_fraction"] = o.train_fraction;
  EmitReport(o, out,
             BuildEvaluationReport(row, EnumerateTriples(dataset).size(),
                                   train.num_matches(), test.num_matches(),
                                   std::move(meta)));
}

void RunSweepVerb(Options& o, std::ostream& out) {
  std::optional<SweepParameter> parameter;
  if (!o.parameter.empty()) {
    parameter = ParseSweepParameter(o.parameter);
    if (!parameter) {
      throw ValidationError("unknown sweep parameter '" + o.parameter +
                            "' (expected k, p or initial-rd)");
    }
  }
  if (o.algorithms.size() > 1) {
    throw ValidationError("sweep takes at most one --algorithm");
  }
  if (!o.algorithms.empty()) {
    const Algorithm algorithm = RequireAlgorithm(o.algorithms.front());
    std::optional<SweepParameter> implied;
    if (algorithm == Algorithm::kElo) implied = SweepParameter::kEloK;
    if (algorithm == Algorithm::kMarkov) implied = SweepParameter::kMarkovP;
    if (algorithm == Algorithm::kGlicko) implied = SweepParameter::kGlickoInitialRd;
    if (!implied) {
      throw ValidationError("algorithm '" + o.algorithms.front() +
                            "' has no sweepable hyperparameter");
    }
    if (parameter && *parameter != *implied) {
      throw ValidationError("--parameter does not belong to --algorithm");
    }
    parameter = implied;
  }
  if (!parameter) throw ValidationError("sweep needs --parameter or --algorithm");
  FinalizeSettings(o);

  SweepSpec spec;
  spec.parameter = *parameter;
  spec.repeats = o.repeats;
  spec.split_seed = o.seed;
  spec.train_fraction = o.train_fraction;
  spec.base = o.settings;
  if (!o.values.empty()) {
    spec.values = o.values;
  } else if (o.grid_min_flag->count() > 0 || o.grid_max_flag->count() > 0) {
    const std::vector<double> defaults = DefaultSweepGrid(*parameter);
    const double lo = o.grid_min_flag->count() > 0 ? o.grid_min : defaults.front();
    const double hi = o.grid_max_flag->count() > 0 ? o.grid_max : defaults.back();
    spec.values = LinearGrid(lo, hi, o.grid_count);
  } else {
    const std::vector<double> defaults = DefaultSweepGrid(*parameter);
    spec.values = LinearGrid(defaults.front(), defaults.back(), o.grid_count);
  }
  Validate(spec);

  const Dataset dataset = LoadInput(o);
  json meta = Meta("sweep", o, dataset);
  meta["train_fraction"] = o.train_fraction;
  meta["repeats"] = o.repeats;
  EmitReport(o, out, BuildSweepReport(RunSweep(dataset, spec), std::move(meta)));
}

void RunPermute(Options& o, std::ostream& out) {
  for (double k : o.k_values) {
    if (!(k > 0.0)) throw ValidationError("--k values must be > 0");
  }
  for (int count : o.permutation_counts) {
    if (count < 0) throw ValidationError("--permutations values must be >= 0");
  }
  const double initial_rating =
      o.initial_rating_flag->count() > 0 ? o.initial_rating : 1000.0;
  const Dataset dataset = LoadInput(o);
  json meta = {{"tool", "pairrank"},
               {"command", "permute"},
               {"input", o.input},
               {"format", o.format},
               {"seed", o.seed},
               {"competitors", dataset.num_competitors()},
               {"matches", dataset.num_matches()},
               {"initial_rating", initial_rating}};
  EmitReport(o, out,
             BuildPermutationReport(
                 RunPermutationStudy(dataset, o.k_values, o.permutation_counts,
                                     o.seed, initial_rating),
                 std::move(meta)));
}

void RunSimulate(Options& o, std::ostream& out) {
  SimConfig config;
  auto style = ParseMatchupStyle(o.style);
  if (!style) {
    throw ValidationError("unknown style '" + o.style +
                          "' (expected arena or controlled)");
  }
  config.style = *style;
  config.n_competitors = o.n_competitors;
  config.n_matches = o.n_matches;
  config.skew_alpha = o.skew_alpha;
  config.tie_rate = o.tie_rate;
  config.seed = o.seed;
  if (!o.true_logits.empty()) config.true_logits = o.true_logits;
  const SimulatedDataset simulated = Generate(config);
  const DatasetFormat format = *ParseDatasetFormat(o.format);

  std::string truth_path = o.truth;
  if (truth_path.empty() && !o.out.empty()) truth_path = CompanionPath(o.out, "truth");
  if (o.out.empty()) {
    WriteDataset(out, simulated.dataset, format);
  } else {
    SaveDataset(o.out, simulated.dataset, format);
  }
  if (!truth_path.empty()) {
    std::ofstream file(truth_path, std::ios::binary);
    if (!file) throw ValidationError("cannot write '" + truth_path + "'");
    WriteGroundTruth(file, simulated.ground_truth);
  }
}

void RunCompare(Options& o, std::ostream& out) {
  if (o.algorithms.empty()) {
    o.algorithms = {"elo", "bradley-terry", "glicko", "markov"};
  }
  const std::vector<Algorithm> algorithms = SelectedAlgorithms(o);
  FinalizeSettings(o);
  const Dataset dataset = LoadInput(o);
  const ComparisonReport comparison = CompareAlgorithms(
      dataset, algorithms, o.seed, o.settings, o.train_fraction);
  json meta = Meta("compare", o, dataset);
  meta["train_fraction"] = o.train_fraction;
  EmitReport(o, out, BuildComparisonReport(comparison, std::move(meta)));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Pairwise-comparison ranking toolkit", "pairrank"};
  app.require_subcommand(1);
  Options o;

  CLI::App* rank = app.add_subcommand("rank", "Fit one rating system and print its ranking");
  AddInputFlags(rank, o);
  rank->add_option("--algorithm", o.algorithms,
                   "elo, bradley-terry, glicko, markov or winrate");
  AddAllAlgorithmFlags(rank, o);
  rank->add_option("--dump-matrix", o.dump_matrix,
                   "Write the Markov transition matrix to this file");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Transitivity and held-out F1 for one rating system");
  AddInputFlags(evaluate, o);
  evaluate->add_option("--algorithm", o.algorithms, "Rating system to evaluate");
  evaluate->add_option("--train-fraction", o.train_fraction,
                       "Share of matches used for fitting")
      ->capture_default_str();
  AddAllAlgorithmFlags(evaluate, o);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Held-out F1 across a hyperparameter grid");
  AddInputFlags(sweep, o);
  sweep->add_option("--algorithm", o.algorithms, "elo, markov or glicko");
  sweep->add_option("--parameter", o.parameter, "k, p or initial-rd");
  sweep->add_option("--values", o.values, "Explicit grid values")->delimiter(',');
  o.grid_min_flag = sweep->add_option("--min", o.grid_min, "Grid lower bound");
  o.grid_max_flag = sweep->add_option("--max", o.grid_max, "Grid upper bound");
  sweep->add_option("--count", o.grid_count, "Number of grid points")
      ->capture_default_str();
  sweep->add_option("--repeats", o.repeats, "Fits per grid point")
      ->capture_default_str();
  sweep->add_option("--train-fraction", o.train_fraction,
                    "Share of matches used for fitting")
      ->capture_default_str();
  AddAllAlgorithmFlags(sweep, o);

  CLI::App* permute = app.add_subcommand(
      "permute", "Elo stability across k values and permutation counts");
  AddInputFlags(permute, o);
  permute->add_option("--k", o.k_values, "Elo k-factors")
      ->delimiter(',')
      ->capture_default_str();
  permute->add_option("--permutations", o.permutation_counts,
                      "Permutation counts per k")
      ->delimiter(',')
      ->capture_default_str();
  AddInitialRatingFlag(permute, o);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Generate a synthetic tournament and its true strengths");
  simulate->add_option("--style", o.style, "arena or controlled")
      ->capture_default_str();
  simulate->add_option("--n-competitors", o.n_competitors, "Number of competitors")
      ->capture_default_str();
  simulate->add_option("--n-matches", o.n_matches, "Number of matches")
      ->capture_default_str();
  simulate->add_option("--skew-alpha", o.skew_alpha, "Arena Zipf exponent")
      ->capture_default_str();
  simulate->add_option("--tie-rate", o.tie_rate, "Probability a match is a tie")
      ->capture_default_str();
  simulate->add_option("--true-logits", o.true_logits,
                       "Generating logits, one per competitor")
      ->delimiter(',');
  simulate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  simulate->add_option("--format", o.format, "Dataset format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  simulate->add_option("--out", o.out, "Dataset path (stdout when omitted)");
  simulate->add_option("--truth", o.truth,
                       "Ground-truth CSV path (default: <out>.truth.csv)");

  CLI::App* compare = app.add_subcommand(
      "compare", "All rating systems plus the win-rate baseline on one split");
  AddInputFlags(compare, o);
  compare->add_option("--algorithm", o.algorithms,
                      "Systems to compare (default: all four)")
      ->delimiter(',');
  compare->add_option("--train-fraction", o.train_fraction,
                      "Share of matches used for fitting")
      ->capture_default_str();
  AddAllAlgorithmFlags(compare, o);

  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (rank->parsed()) RunRank(o, out);
    if (evaluate->parsed()) RunEvaluate(o, out);
    if (sweep->parsed()) RunSweepVerb(o, out);
    if (permute->parsed()) RunPermute(o, out);
    if (simulate->parsed()) RunSimulate(o, out);
    if (compare->parsed()) RunCompare(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace pairrank
