#include "wsel/criteria.hpp"
#include "wsel/csv.hpp"
#include "wsel/dataset.hpp"
#include "wsel/evaluate.hpp"
#include "wsel/report.hpp"
#include "wsel/selection.hpp"
#include "wsel/synthetic.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

wsel::EstimatorKind parse_estimator(const std::string& name) {
  if (name == "exact1d") return wsel::EstimatorKind::exact1d_w1;
  if (name == "sinkhorn") return wsel::EstimatorKind::sinkhorn_w1;
  if (name == "mmd") return wsel::EstimatorKind::mmd_gaussian;
  throw CLI::ValidationError("--estimator", "unknown estimator '" + name + "'");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << text;
}

struct SelectArgs {
  std::string input = "-";
  std::string label_col = "label";
  bool header = true;
  std::string method;
  int m = 0;
  std::string estimator = "auto";
  double epsilon = 0.05;
  double sinkhorn_tol = 1e-6;
  int sinkhorn_max_iters = 10000;
  double mmd_bandwidth = 0.0;
  int group_size = 1;
  bool standardize = true;
  double test_frac = 0.0;
  std::uint64_t split_seed = 0;
  bool split_seed_given = false;
  std::string out;
};

int run_select(const SelectArgs& args) {
  wsel::CsvOptions csv_opts;
  csv_opts.label_column = args.label_col;
  csv_opts.has_header = args.header;

  wsel::LabeledDataset full = (args.input.empty() || args.input == "-")
                                  ? wsel::load_csv(std::cin, csv_opts)
                                  : wsel::load_csv_file(args.input, csv_opts);

  wsel::SelectionConfig config;
  config.m = args.m;
  config.group_size = args.group_size;
  config.estimator.kind =
      args.estimator == "auto"
          ? (args.method == "twd" ? wsel::EstimatorKind::exact1d_w1
                                  : wsel::EstimatorKind::sinkhorn_w1)
          : parse_estimator(args.estimator);
  config.estimator.sinkhorn.epsilon = args.epsilon;
  config.estimator.sinkhorn.tol = args.sinkhorn_tol;
  config.estimator.sinkhorn.max_iters = args.sinkhorn_max_iters;
  config.estimator.mmd_bandwidth = args.mmd_bandwidth;

  std::optional<wsel::LabeledDataset> train;
  std::optional<wsel::LabeledDataset> test;
  if (args.test_frac > 0.0) {
    auto [tr, te] = wsel::train_test_split(full, args.test_frac, args.split_seed);
    train = std::move(tr);
    test = std::move(te);
  } else {
    train = full;
  }
  if (args.standardize) {
    // Test rows are scaled by the training statistics, as they would be in
    // deployment.
    const wsel::FeatureStats stats = wsel::compute_feature_stats(*train);
    train = wsel::apply_standardization(*train, stats);
    if (test) test = wsel::apply_standardization(*test, stats);
  }

  const auto t0 = std::chrono::steady_clock::now();
  wsel::SelectionResult result;
  if (args.method == "twd") {
    result = wsel::twd(*train, config);
  } else if (args.method == "fawd") {
    result = wsel::fawd(*train, config);
  } else if (args.method == "bewd") {
    result = wsel::bewd(*train, config);
  } else {
    throw std::runtime_error("unknown method '" + args.method + "'");
  }
  const auto t1 = std::chrono::steady_clock::now();

  wsel::RunReport report;
  report.method = result.method;
  report.config = result.config;
  report.standardized = args.standardize;
  report.input = (args.input.empty() || args.input == "-") ? "stdin" : args.input;
  report.test_frac = args.test_frac;
  if (args.test_frac > 0.0) report.split_seed = args.split_seed;
  report.selected = result.selected;
  for (int f : result.selected) {
    report.selected_names.push_back(
        train->feature_names().empty()
            ? "f" + std::to_string(f)
            : train->feature_names()[static_cast<std::size_t>(f)]);
  }
  report.scores = result.scores;
  if (test) {
    report.accuracy =
        wsel::evaluate_subset(*train, *test, wsel::FeatureSubset{result.selected});
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.dataset = wsel::fingerprint(full);

  write_output(wsel::report_to_json(report), args.out);

  std::ostringstream summary;
  summary << result.method << " selected";
  for (int f : result.selected) summary << ' ' << f;
  if (report.accuracy) summary << " | holdout accuracy " << *report.accuracy;
  std::cerr << summary.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wasserstein feature selection"};
  app.require_subcommand(1);

  SelectArgs sel;
  CLI::App* select = app.add_subcommand(
      "select", "Rank or select features on a labeled CSV dataset");
  select->add_option("--input", sel.input,
                     "Input CSV path ('-' or omitted reads stdin)");
  select->add_option("--label-col", sel.label_col,
                     "Label column name or zero-based index")
      ->capture_default_str();
  select->add_flag("--header,!--no-header", sel.header,
                   "Whether the first row is a header (default: header)");
  select->add_option("--method", sel.method, "Selection strategy")
      ->required()
      ->check(CLI::IsMember({"twd", "fawd", "bewd"}));
  select->add_option("-m,--num-features", sel.m, "Number of features to keep")
      ->required()
      ->check(CLI::PositiveNumber);
  select->add_option("--estimator", sel.estimator,
                     "Distance estimator (default: exact1d for twd, sinkhorn "
                     "for fawd/bewd)")
      ->check(CLI::IsMember({"exact1d", "sinkhorn", "mmd"}));
  select->add_option("--epsilon", sel.epsilon,
                     "Sinkhorn regularization as a fraction of the mean cost")
      ->capture_default_str();
  select->add_option("--sinkhorn-tol", sel.sinkhorn_tol,
                     "Sinkhorn marginal tolerance")
      ->capture_default_str();
  select->add_option("--sinkhorn-max-iters", sel.sinkhorn_max_iters,
                     "Sinkhorn iteration cap")
      ->capture_default_str();
  select->add_option("--mmd-bandwidth", sel.mmd_bandwidth,
                     "Gaussian MMD bandwidth (<= 0: median heuristic)")
      ->capture_default_str();
  select->add_option("--group-size", sel.group_size,
                     "Features added/eliminated per greedy step")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  select->add_flag("--standardize,!--no-standardize", sel.standardize,
                   "Z-score features before selection (default: on)");
  auto* frac_opt =
      select->add_option("--test-frac", sel.test_frac,
                         "Held-out fraction for 1-NN evaluation (0 disables)")
          ->check(CLI::Range(0.0, 1.0));
  auto* seed_opt = select->add_option("--split-seed", sel.split_seed,
                                      "Seed for the train/test split");
  frac_opt->needs(seed_opt);
  seed_opt->needs(frac_opt);
  select->add_option("--out", sel.out,
                     "Report destination (default: stdout)");

  std::string spec_path;
  std::string synth_out;
  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a Gaussian class-shift benchmark CSV");
  synth->add_option("--spec", spec_path, "JSON spec file")->required();
  synth->add_option("--out", synth_out, "CSV destination (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (select->parsed()) {
      sel.split_seed_given = seed_opt->count() > 0;
      return run_select(sel);
    }
    std::ifstream spec_in(spec_path, std::ios::binary);
    if (!spec_in) {
      throw std::runtime_error("cannot open spec file: " + spec_path);
    }
    std::ostringstream buf;
    buf << spec_in.rdbuf();
    const wsel::SyntheticSpec spec = wsel::parse_synthetic_spec(buf.str());
    const wsel::LabeledDataset ds = wsel::gen_synthetic(spec);
    std::ostringstream csv;
    wsel::write_csv(ds, csv);
    write_output(csv.str(), synth_out);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
