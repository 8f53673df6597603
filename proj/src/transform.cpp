#include "rdr/transform.hpp"

#include <algorithm>

#include "rdr/rng.hpp"

namespace rdr {

Sample pair_sample(const Sample& sample) {
  std::string swapped = render_marked(sample.unmarked_text(), sample.e2_span(), sample.e1_span());
  return Sample::from_marked(sample.id(), std::move(swapped), invert_label(sample.gold()),
                             sample.comment());
}

PairedCorpus pair_corpus(const Corpus& corpus) {
  std::vector<std::string> open = corpus.inventory().missing_inverses();
  if (!open.empty()) {
    std::string msg = "inventory is not closed under inversion; missing inverses of:";
    for (const std::string& s : open) msg += " " + s;
    throw ConfigError(msg);
  }
  std::vector<Sample> paired;
  paired.reserve(corpus.size());
  for (const Sample& s : corpus.samples()) paired.push_back(pair_sample(s));
  Corpus b(std::move(paired), corpus.inventory(), "paired-of:" + corpus.origin());
  return PairedCorpus(corpus, std::move(b));
}

PairedCorpus PairedCorpus::validated(Corpus original, Corpus paired) {
  if (original.inventory() != paired.inventory())
    throw ValidationError("paired corpora use different label inventories");
  if (original.size() != paired.size())
    throw ValidationError("paired corpora differ in size: " + std::to_string(original.size()) +
                          " vs " + std::to_string(paired.size()));
  for (std::size_t i = 0; i < original.size(); ++i) {
    const Sample& a = original.samples()[i];
    const Sample& b = paired.samples()[i];
    if (a.id() != b.id())
      throw ValidationError("paired corpora disagree on sample order at position " +
                            std::to_string(i) + ": IDs " + std::to_string(a.id()) + " vs " +
                            std::to_string(b.id()));
    if (pair_sample(a) != b)
      throw ValidationError("sample " + std::to_string(a.id()) +
                            ": B side is not the marker-swapped, label-inverted image of A");
  }
  return PairedCorpus(std::move(original), std::move(paired));
}

Corpus merge_paired(const PairedCorpus& paired) {
  std::int64_t offset = 0;
  for (const Sample& s : paired.original().samples()) offset = std::max(offset, s.id());

  std::vector<Sample> merged;
  merged.reserve(2 * paired.size());
  for (const Sample& s : paired.original().samples()) merged.push_back(s);
  for (const Sample& s : paired.paired().samples())
    merged.push_back(Sample::from_marked(offset + s.id(), s.marked_text(), s.gold(), s.comment()));
  return Corpus(std::move(merged), paired.original().inventory(),
                "merged:" + paired.original().origin());
}

std::vector<BinarySample> binarize(const Corpus& corpus, std::uint32_t seed,
                                   bool include_other_negatives) {
  const LabelInventory& inventory = corpus.inventory();
  if (inventory.size() < 2)
    throw ConfigError("cannot sample a wrong relation from an inventory of size " +
                      std::to_string(inventory.size()));

  SeededRng rng(seed);
  std::vector<BinarySample> out;
  out.reserve(2 * corpus.size());
  for (const Sample& s : corpus.samples()) {
    out.push_back(BinarySample{2 * s.id() - 1, s.marked_text(), s.gold(), true});

    std::vector<DirectedLabel> candidates;
    candidates.reserve(inventory.size() - 1);
    for (const DirectedLabel& label : inventory.labels()) {
      if (label == s.gold()) continue;
      if (!include_other_negatives && label.is_undirected()) continue;
      candidates.push_back(label);
    }
    if (candidates.empty())
      throw ConfigError("sample " + std::to_string(s.id()) +
                        ": no wrong relation available to draw a negative from");
    DirectedLabel wrong = candidates[rng.bounded(candidates.size())];
    out.push_back(BinarySample{2 * s.id(), s.marked_text(), std::move(wrong), false});
  }
  return out;
}

std::string serialize_binary(const std::vector<BinarySample>& samples) {
  std::string out;
  bool first = true;
  for (const BinarySample& b : samples) {
    if (!first) out += "\n";
    first = false;
    out += std::to_string(b.id);
    out += '\t';
    out += '"';
    out += b.marked_text;
    out += "\"\n";
    out += b.candidate.canonical();
    out += '\t';
    out += b.truth ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace rdr
