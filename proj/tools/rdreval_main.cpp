// rdreval: build paired/merged/binarized corpora and score predictions with
// Macro-F1 plus the relation-direction metrics PD, PIR, and PPR.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation/IO, 3 prediction
// coverage mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rdr/baselines.hpp"
#include "rdr/corpus.hpp"
#include "rdr/metrics.hpp"
#include "rdr/transform.hpp"

namespace {

rdr::LabelInventory load_inventory(const std::string& spec) {
  if (spec == "semeval") return rdr::LabelInventory::semeval();
  std::ifstream in(spec);
  if (!in) throw rdr::Error("cannot open inventory file: " + spec);
  return rdr::LabelInventory::from_stream(in);
}

rdr::Corpus load_corpus(const std::string& path, const rdr::LabelInventory& inventory) {
  std::ifstream in(path);
  if (!in) throw rdr::Error("cannot open corpus file: " + path);
  return rdr::parse_corpus(in, inventory, path);
}

rdr::PredictionSet load_predictions(const std::string& path,
                                    const rdr::LabelInventory& inventory) {
  std::ifstream in(path);
  if (!in) throw rdr::Error("cannot open prediction file: " + path);
  return rdr::parse_predictions(in, inventory, path);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rdr::Error("cannot open output file: " + path);
  out << content;
  if (!out) throw rdr::Error("failed writing output file: " + path);
}

struct Options {
  std::string input;
  std::string output;
  std::string inventory = "semeval";
  std::string gold_a;
  std::string gold_b;
  std::string pred_a;
  std::string pred_b;
  std::string format = "table";
  std::string macro_mode = "official";
  std::string row_label = "model";
  std::string model;
  std::string train;
  std::string test;
  std::string save_model;
  std::string load_model;
  std::string blind_representative = "e1e2";
  std::uint32_t seed = 0;
  int epochs = 10;
  bool exclude_other_negatives = false;
  bool no_unigrams = false;
  bool no_position_buckets = false;
  bool no_marker_order = false;
};

int cmd_pair(const Options& opt) {
  rdr::LabelInventory inventory = load_inventory(opt.inventory);
  rdr::Corpus corpus = load_corpus(opt.input, inventory);
  rdr::PairedCorpus paired = rdr::pair_corpus(corpus);
  write_file(opt.output, rdr::serialize_corpus(paired.paired()));
  std::cout << "paired " << paired.size() << " samples\n";
  return 0;
}

int cmd_merge(const Options& opt) {
  rdr::LabelInventory inventory = load_inventory(opt.inventory);
  rdr::Corpus corpus = load_corpus(opt.input, inventory);
  rdr::Corpus merged = rdr::merge_paired(rdr::pair_corpus(corpus));
  write_file(opt.output, rdr::serialize_corpus(merged));
  std::cout << "merged " << merged.size() << " samples\n";
  return 0;
}

int cmd_binarize(const Options& opt) {
  rdr::LabelInventory inventory = load_inventory(opt.inventory);
  rdr::Corpus corpus = load_corpus(opt.input, inventory);
  std::vector<rdr::BinarySample> binary =
      rdr::binarize(corpus, opt.seed, !opt.exclude_other_negatives);
  write_file(opt.output, rdr::serialize_binary(binary));
  std::cout << "wrote " << binary.size() << " binary samples\n";
  return 0;
}

int cmd_rdr(const Options& opt) {
  rdr::LabelInventory inventory = load_inventory(opt.inventory);
  rdr::Corpus gold_a = load_corpus(opt.gold_a, inventory);
  rdr::PairedCorpus paired = opt.gold_b.empty()
                                 ? rdr::pair_corpus(gold_a)
                                 : rdr::PairedCorpus::validated(std::move(gold_a),
                                                                load_corpus(opt.gold_b, inventory));
  rdr::PredictionSet preds_a = load_predictions(opt.pred_a, inventory);
  rdr::PredictionSet preds_b = load_predictions(opt.pred_b, inventory);
  const rdr::MacroMode mode =
      opt.macro_mode == "directed" ? rdr::MacroMode::Directed : rdr::MacroMode::Official;

  rdr::RdrReport report = rdr::evaluate_rdr(paired, preds_a, preds_b, mode);
  const std::string rendered = opt.format == "structured" ? rdr::report_to_json(report)
                                                          : rdr::report_to_table(report, opt.row_label);
  if (opt.output.empty())
    std::cout << rendered;
  else
    write_file(opt.output, rendered);
  return 0;
}

int cmd_baseline(const Options& opt) {
  rdr::LabelInventory inventory = load_inventory(opt.inventory);
  rdr::Corpus test = load_corpus(opt.test, inventory);

  rdr::PredictionSet preds = [&] {
    if (opt.model == "oracle-aware" || opt.model == "oracle-blind") {
      if (opt.gold_a.empty()) throw rdr::Error("oracle baselines need --gold-a");
      rdr::Corpus gold_a = load_corpus(opt.gold_a, inventory);
      rdr::OracleConfig config;
      config.mode = opt.model == "oracle-aware" ? rdr::OracleMode::DirectionAware
                                                : rdr::OracleMode::DirectionBlind;
      config.blind_representative = opt.blind_representative == "e2e1"
                                        ? rdr::Direction::E2ToE1
                                        : rdr::Direction::E1ToE2;
      return rdr::oracle_predict(test, gold_a, config);
    }
    if (opt.model == "majority") {
      if (opt.train.empty()) throw rdr::Error("the majority baseline needs --train");
      return rdr::majority_predict(load_corpus(opt.train, inventory), test);
    }
    if (opt.model == "perceptron") {
      rdr::FeatureSpec spec;
      spec.unigrams = !opt.no_unigrams;
      spec.position_buckets = !opt.no_position_buckets;
      spec.marker_order = !opt.no_marker_order;
      std::optional<rdr::PerceptronModel> model;
      if (!opt.load_model.empty()) {
        std::ifstream in(opt.load_model);
        if (!in) throw rdr::Error("cannot open model file: " + opt.load_model);
        model = rdr::PerceptronModel::load(in, inventory);
      } else {
        if (opt.train.empty()) throw rdr::Error("the perceptron baseline needs --train");
        model = rdr::perceptron_train(load_corpus(opt.train, inventory), spec, opt.epochs,
                                      opt.seed);
      }
      if (!opt.save_model.empty()) {
        std::ostringstream out;
        model->save(out);
        write_file(opt.save_model, out.str());
      }
      return rdr::perceptron_predict(*model, test);
    }
    throw rdr::Error("unknown baseline model: " + opt.model);
  }();

  write_file(opt.output, rdr::serialize_predictions(preds, test));
  std::cout << "wrote " << preds.size() << " predictions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relation-direction evaluation toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_inventory = [&](CLI::App* cmd) {
    cmd->add_option("--inventory", opt.inventory,
                    "Label inventory: \"semeval\" or a config file path");
  };

  CLI::App* pair = app.add_subcommand("pair", "Write the paired corpus (markers swapped, labels inverted)");
  pair->add_option("--input", opt.input, "Source corpus file")->required();
  pair->add_option("--output", opt.output, "Paired corpus file to write")->required();
  add_inventory(pair);

  CLI::App* merge = app.add_subcommand("merge", "Write the source corpus merged with its paired corpus");
  merge->add_option("--input", opt.input, "Source corpus file")->required();
  merge->add_option("--output", opt.output, "Merged corpus file to write")->required();
  add_inventory(merge);

  CLI::App* binarize = app.add_subcommand("binarize", "Recast a corpus as binary (candidate, holds) samples");
  binarize->add_option("--input", opt.input, "Source corpus file")->required();
  binarize->add_option("--output", opt.output, "Binary corpus file to write")->required();
  binarize->add_option("--seed", opt.seed, "Seed for negative sampling")->required();
  binarize->add_flag("--exclude-other-negatives", opt.exclude_other_negatives,
                     "Never draw the undirected label as a negative candidate");
  add_inventory(binarize);

  CLI::App* rdr_cmd = app.add_subcommand("rdr", "Score paired predictions: Macro-F1, PD, PIR, PPR");
  rdr_cmd->add_option("--gold-a", opt.gold_a, "Gold corpus for set A")->required();
  rdr_cmd->add_option("--gold-b", opt.gold_b,
                      "Gold corpus for set B (derived from A when omitted)");
  rdr_cmd->add_option("--pred-a", opt.pred_a, "Predictions on set A")->required();
  rdr_cmd->add_option("--pred-b", opt.pred_b, "Predictions on set B")->required();
  rdr_cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"table", "structured"}));
  rdr_cmd->add_option("--macro-mode", opt.macro_mode, "Macro-F1 averaging mode")
      ->check(CLI::IsMember({"official", "directed"}));
  rdr_cmd->add_option("--label", opt.row_label, "Row label for the table format");
  rdr_cmd->add_option("--output", opt.output, "Write the report here instead of stdout");
  add_inventory(rdr_cmd);

  CLI::App* baseline = app.add_subcommand("baseline", "Run a bundled predictor and write a prediction file");
  baseline->add_option("--model", opt.model, "oracle-aware, oracle-blind, majority, or perceptron")
      ->required()
      ->check(CLI::IsMember({"oracle-aware", "oracle-blind", "majority", "perceptron"}));
  baseline->add_option("--test", opt.test, "Corpus to predict on")->required();
  baseline->add_option("--output", opt.output, "Prediction file to write")->required();
  baseline->add_option("--gold-a", opt.gold_a, "A-side gold corpus (oracles)");
  baseline->add_option("--train", opt.train, "Training corpus (majority, perceptron)");
  baseline->add_option("--seed", opt.seed, "Training shuffle seed (perceptron)");
  baseline->add_option("--epochs", opt.epochs, "Training epochs (perceptron)")
      ->check(CLI::PositiveNumber);
  baseline->add_option("--blind-representative", opt.blind_representative,
                       "Fixed direction for oracle-blind")
      ->check(CLI::IsMember({"e1e2", "e2e1"}));
  baseline->add_flag("--no-unigrams", opt.no_unigrams, "Drop unigram features");
  baseline->add_flag("--no-position-buckets", opt.no_position_buckets,
                     "Drop marker-relative position features");
  baseline->add_flag("--no-marker-order", opt.no_marker_order, "Drop the marker-order indicator");
  baseline->add_option("--save-model", opt.save_model, "Write the trained model here");
  baseline->add_option("--load-model", opt.load_model, "Reuse a saved model instead of training");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (pair->parsed()) return cmd_pair(opt);
    if (merge->parsed()) return cmd_merge(opt);
    if (binarize->parsed()) return cmd_binarize(opt);
    if (rdr_cmd->parsed()) return cmd_rdr(opt);
    if (baseline->parsed()) return cmd_baseline(opt);
  } catch (const rdr::CoverageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
