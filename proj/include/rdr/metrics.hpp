#ifndef RDR_METRICS_HPP
#define RDR_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/transform.hpp"

namespace rdr {

// Counts of (gold, predicted) label pairs over one inventory.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(LabelInventory inventory);

  void add(const DirectedLabel& gold, const DirectedLabel& predicted);

  std::int64_t cell(const DirectedLabel& gold, const DirectedLabel& predicted) const;
  std::int64_t total() const { return total_; }
  const LabelInventory& inventory() const { return inventory_; }

  // Per-relation-type tallies with both directions of the type pooled, as
  // the official SemEval scorer does in its direction-aware mode:
  //   correct   - gold and prediction agree on type AND direction
  //   predicted - predictions of either direction of the type
  //   actual    - golds of either direction of the type
  struct TypeTally {
    std::int64_t correct = 0;
    std::int64_t predicted = 0;
    std::int64_t actual = 0;
  };
  TypeTally type_tally(const std::string& relation_type) const;

  // Same tally for one directed label (18-class view).
  TypeTally label_tally(const DirectedLabel& label) const;

 private:
  LabelInventory inventory_;
  std::vector<std::int64_t> counts_;  // row-major, gold x predicted
  std::int64_t total_ = 0;
};

// Tallies gold vs predicted labels; predictions must cover the corpus IDs
// exactly (CoverageError otherwise).
ConfusionMatrix confusion(const Corpus& corpus, const PredictionSet& preds);

enum class MacroMode {
  // Official SemEval semantics: per relation type, pool the two directions
  // (a prediction is correct only when type and direction both match),
  // average F1 over the types observed in gold or predictions, excluding
  // the undirected label.
  Official,
  // Alternative view: every directed label is its own class; average over
  // observed directed labels, still excluding the undirected one.
  Directed,
};

// F1 per class is 2PR/(P+R), 0 when P+R = 0. Types absent from both gold
// and predictions do not enter the average; a matrix with no observed
// types scores 0.
double macro_f1(const ConfusionMatrix& matrix, MacroMode mode = MacroMode::Official);

struct PerRelationScore {
  std::string relation;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Pooled per-type precision/recall/F1 for every non-undirected type, in
// inventory order.
std::vector<PerRelationScore> per_relation_scores(const ConfusionMatrix& matrix);

// Performance Difference: |perf_a - perf_b|. Inputs are fractions in [0,1].
double pd(double perf_a, double perf_b);

enum class TestSet { A, B };

// Predictive Immobility Rate over samples whose gold is not the undirected
// label: of the samples predicted correctly on X, the fraction whose A and
// B predictions are identical. nullopt when nothing is correct on X.
std::optional<double> pir(const PairedCorpus& paired, const PredictionSet& preds_a,
                          const PredictionSet& preds_b, TestSet x_choice);

// Paired Predictive Rate over samples whose gold is not the undirected
// label: the fraction predicted correctly on A and B simultaneously.
// nullopt when no such samples exist.
std::optional<double> ppr(const PairedCorpus& paired, const PredictionSet& preds_a,
                          const PredictionSet& preds_b);

struct RdrReport {
  double macro_f1_a = 0.0;
  double macro_f1_b = 0.0;
  double pd = 0.0;
  std::optional<double> pir;
  std::optional<double> ppr;
  TestSet x_set = TestSet::A;
  std::int64_t n_non_other = 0;
  std::vector<PerRelationScore> per_relation;  // on set A
  bool warning_no_directed = false;            // no non-undirected samples
};

// Full RDR evaluation: Macro-F1 on both sets, X = the set with the higher
// Macro-F1 (tie -> A), then PD, PIR, PPR and the per-relation breakdown
// on A.
RdrReport evaluate_rdr(const PairedCorpus& paired, const PredictionSet& preds_a,
                       const PredictionSet& preds_b, MacroMode mode = MacroMode::Official);

// Structured rendering: a JSON object with keys macro_f1_a, macro_f1_b,
// pd, pir, ppr, x_set, n_non_other, per_relation[], warnings[]. Metrics
// are fractions; pir/ppr are null when undefined.
std::string report_to_json(const RdrReport& report);

// One table row of percentages (two decimals, half-up), columns
// A B PD PIR PPR; undefined metrics render as "-".
std::string report_to_table(const RdrReport& report, const std::string& row_label = "model");

// Percentage rendering used by the table writer: half-up to two decimals.
std::string format_percent(double fraction);

}  // namespace rdr

#endif  // RDR_METRICS_HPP
