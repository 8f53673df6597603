#ifndef RDR_TRANSFORM_HPP
#define RDR_TRANSFORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rdr/corpus.hpp"

namespace rdr {

// Two corpora aligned by ID: for every sample of A, B holds the same
// sentence with the e1/e2 tags exchanged and the gold label inverted, at
// the same position.
class PairedCorpus {
 public:
  // Validates the full correspondence between two independently loaded
  // corpora (ID sets and order, swapped sentences, inverse golds).
  static PairedCorpus validated(Corpus original, Corpus paired);

  const Corpus& original() const { return original_; }
  const Corpus& paired() const { return paired_; }
  std::size_t size() const { return original_.size(); }

 private:
  PairedCorpus(Corpus original, Corpus paired)
      : original_(std::move(original)), paired_(std::move(paired)) {}
  friend PairedCorpus pair_corpus(const Corpus& corpus);

  Corpus original_;
  Corpus paired_;
};

// Exchanges the e1 and e2 tag names in place (entity texts and positions
// untouched) and inverts the gold label. Same ID; an involution.
Sample pair_sample(const Sample& sample);

// Applies pair_sample to every sample, preserving order and IDs. Fails
// fast with ConfigError if the inventory is not closed under inversion.
PairedCorpus pair_corpus(const Corpus& corpus);

// A samples followed by B samples; B IDs are offset by the maximum A ID.
Corpus merge_paired(const PairedCorpus& paired);

// One (sentence, candidate relation) -> holds/does-not-hold instance.
struct BinarySample {
  std::int64_t id = 0;  // positive sample of source s: 2*s.id-1; negative: 2*s.id
  std::string marked_text;
  DirectedLabel candidate;
  bool truth = false;

  friend bool operator==(const BinarySample& a, const BinarySample& b) {
    return a.id == b.id && a.marked_text == b.marked_text && a.candidate == b.candidate &&
           a.truth == b.truth;
  }
};

// For every source sample, emits one positive (candidate = gold) and one
// negative whose candidate is drawn uniformly from the inventory minus the
// gold (minus the undirected label too when include_other_negatives is
// false). Output is a deterministic function of (corpus, seed); see
// SeededRng for the generator contract.
std::vector<BinarySample> binarize(const Corpus& corpus, std::uint32_t seed,
                                   bool include_other_negatives = true);

// Extended block format: line 2 is "<candidate label><TAB><0|1>".
std::string serialize_binary(const std::vector<BinarySample>& samples);

}  // namespace rdr

#endif  // RDR_TRANSFORM_HPP
