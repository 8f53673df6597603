#ifndef RDR_BASELINES_HPP
#define RDR_BASELINES_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdr/corpus.hpp"

namespace rdr {

enum class OracleMode { DirectionAware, DirectionBlind };

struct OracleConfig {
  OracleMode mode = OracleMode::DirectionAware;
  // DirectionBlind maps both directions of a type to this representative.
  Direction blind_representative = Direction::E1ToE2;
};

// Reference predictors anchoring the metric extremes. DirectionAware
// returns each sample's own gold label (perfect predictions on A and B).
// DirectionBlind ignores the entity order entirely: for both sets it
// returns the A-side gold mapped to a fixed representative direction, so
// paired samples always get identical predictions. `gold_source` is the
// A set; `corpus` may be A or B.
PredictionSet oracle_predict(const Corpus& corpus, const Corpus& gold_source,
                             const OracleConfig& config);

// Most frequent training gold for every test sample; ties break toward the
// earlier inventory label.
PredictionSet majority_predict(const Corpus& train, const Corpus& test);

// Feature functions for the bundled perceptron. The marker-order indicator
// is the minimal feature that distinguishes a sample from its pair; with it
// and position buckets off, features are invariant under marker swap.
struct FeatureSpec {
  bool unigrams = true;
  bool position_buckets = true;
  bool marker_order = true;
};

// Sorted feature -> count map; deterministic for a given (sample, spec).
std::map<std::string, double> extract_features(const Sample& sample, const FeatureSpec& spec);

// Multiclass averaged perceptron over extract_features.
class PerceptronModel {
 public:
  PerceptronModel(LabelInventory inventory, FeatureSpec spec);

  const LabelInventory& inventory() const { return inventory_; }
  const FeatureSpec& spec() const { return spec_; }

  // Scores per inventory label, in inventory order.
  std::vector<double> scores(const Sample& sample) const;
  // Argmax over scores; ties break toward the earlier inventory label.
  DirectedLabel predict_label(const Sample& sample) const;

  // Flat text format: a version line, a feature-spec line, then one
  // "feature<TAB>label<TAB>weight" triple per line, sorted.
  void save(std::ostream& out) const;
  static PerceptronModel load(std::istream& in, const LabelInventory& inventory);

  friend PerceptronModel perceptron_train(const Corpus& train, const FeatureSpec& spec, int epochs,
                                          std::uint32_t seed);

 private:
  LabelInventory inventory_;
  FeatureSpec spec_;
  std::unordered_map<std::string, std::vector<double>> weights_;  // feature -> per-label
};

// Averaged-perceptron training with seeded per-epoch shuffles (see
// SeededRng); deterministic for fixed (train, spec, epochs, seed).
PerceptronModel perceptron_train(const Corpus& train, const FeatureSpec& spec, int epochs,
                                 std::uint32_t seed);

PredictionSet perceptron_predict(const PerceptronModel& model, const Corpus& corpus);

// Picks the highest-scoring label; ties break toward the earlier inventory
// label. Scores must be non-empty, drawn from the inventory, with values
// in [0,1].
DirectedLabel argmax_select(const std::vector<std::pair<DirectedLabel, double>>& scores,
                            const LabelInventory& inventory);

}  // namespace rdr

#endif  // RDR_BASELINES_HPP
