#ifndef RDR_CORPUS_HPP
#define RDR_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdr/label.hpp"
#include "rdr/sample.hpp"

namespace rdr {

// An ordered, ID-unique collection of samples over one label inventory.
// Immutable after construction. `origin` is an in-memory provenance tag;
// it is not part of the file format and is excluded from equality.
class Corpus {
 public:
  Corpus(std::vector<Sample> samples, LabelInventory inventory, std::string origin = "");

  const std::vector<Sample>& samples() const { return samples_; }
  const LabelInventory& inventory() const { return inventory_; }
  const std::string& origin() const { return origin_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  const Sample* find(std::int64_t id) const;
  std::vector<std::int64_t> ids() const;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.samples_ == b.samples_ && a.inventory_ == b.inventory_;
  }
  friend bool operator!=(const Corpus& a, const Corpus& b) { return !(a == b); }

 private:
  std::vector<Sample> samples_;
  LabelInventory inventory_;
  std::string origin_;
  std::unordered_map<std::int64_t, std::size_t> by_id_;
};

// Sample ID -> predicted label for one test set. Labels are validated
// against an inventory at parse/build time; coverage against a concrete
// corpus is checked at scoring time.
class PredictionSet {
 public:
  explicit PredictionSet(std::map<std::int64_t, DirectedLabel> entries,
                         std::string target_origin = "");

  const std::map<std::int64_t, DirectedLabel>& entries() const { return entries_; }
  const std::string& target_origin() const { return target_origin_; }
  std::size_t size() const { return entries_.size(); }

  const DirectedLabel& at(std::int64_t id) const;

  // Throws CoverageError unless the entry key set equals the corpus ID set.
  void check_coverage(const Corpus& corpus) const;

 private:
  std::map<std::int64_t, DirectedLabel> entries_;
  std::string target_origin_;
};

// SemEval block format:
//   <ID><TAB>"sentence with inline <e1>/<e2> markers"
//   <canonical label>
//   Comment:<optional text, preserved verbatim>     (line optional)
// Blocks are separated by one blank line. Parsing tolerates extra blank
// lines; serialization emits the canonical single-blank-line form with a
// trailing newline, which round-trips byte-identically.
Corpus parse_corpus(std::istream& in, const LabelInventory& inventory, std::string origin = "");
Corpus parse_corpus_text(const std::string& text, const LabelInventory& inventory,
                         std::string origin = "");
std::string serialize_corpus(const Corpus& corpus);

// Prediction file: one "<ID><TAB><label>" per non-empty line.
PredictionSet parse_predictions(std::istream& in, const LabelInventory& inventory,
                                std::string target_origin = "");
PredictionSet parse_predictions_text(const std::string& text, const LabelInventory& inventory,
                                     std::string target_origin = "");
// Emits entries in the order of `order`'s samples; requires exact coverage.
std::string serialize_predictions(const PredictionSet& preds, const Corpus& order);

}  // namespace rdr

#endif  // RDR_CORPUS_HPP
