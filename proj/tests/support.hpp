#ifndef RDR_TESTS_SUPPORT_HPP
#define RDR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/transform.hpp"

namespace rdrtest {

// Synthetic-data generator for property tests. Only within-build
// repeatability matters here, so plain mt19937 + modulo is fine.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  rdr::DirectedLabel pick_label(const rdr::LabelInventory& inv, bool allow_undirected) {
    for (;;) {
      const rdr::DirectedLabel& l = inv.labels()[below(inv.size())];
      if (allow_undirected || !l.is_undirected()) return l;
    }
  }

  // A short sentence with one <e1> and one <e2> entity in random order.
  std::string sentence_with_markers() {
    static const char* kVocab[] = {"the",  "a",      "report", "engine", "driver",
                                   "moved", "into",   "box",    "river",  "signal",
                                   "old",   "carried", "from",   "under",  "system",
                                   "wheel", "note",   "sent",   "team",   "light"};
    const std::size_t n = 4 + below(7);
    std::vector<std::string> toks(n);
    for (std::string& t : toks) t = kVocab[below(std::size(kVocab))];
    std::size_t i = below(n);
    std::size_t j = below(n - 1);
    if (j >= i) ++j;
    toks[i] = "<e1>" + toks[i] + "</e1>";
    toks[j] = "<e2>" + toks[j] + "</e2>";
    std::string out;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) out += ' ';
      out += toks[k];
    }
    return out;
  }

  rdr::Corpus corpus(std::size_t n, const rdr::LabelInventory& inv, bool allow_undirected,
                     std::string origin = "synthetic") {
    std::vector<rdr::Sample> samples;
    samples.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
      samples.push_back(rdr::Sample::from_marked(static_cast<std::int64_t>(k + 1),
                                                 sentence_with_markers(),
                                                 pick_label(inv, allow_undirected)));
    return rdr::Corpus(std::move(samples), inv, std::move(origin));
  }

  rdr::PredictionSet predictions(const rdr::Corpus& c, bool allow_undirected = true) {
    std::map<std::int64_t, rdr::DirectedLabel> entries;
    for (const rdr::Sample& s : c.samples())
      entries.emplace(s.id(), pick_label(c.inventory(), allow_undirected));
    return rdr::PredictionSet(std::move(entries), c.origin());
  }

 private:
  std::mt19937 rng_;
};

// Independent Macro-F1 recomputation working purely on canonical label
// strings; shares no code with the library's confusion-matrix path.
// pool_directions=true is the official pooled-per-type average,
// false treats every directed label as its own class.
inline double brute_force_macro_f1(
    const std::vector<std::pair<std::string, std::string>>& gold_pred,
    bool pool_directions = true, const std::string& undirected = "Other") {
  auto class_of = [&](const std::string& s) -> std::string {
    if (!pool_directions) return s;
    if (s.size() > 7) {
      const std::string tail = s.substr(s.size() - 7);
      if (tail == "(e1,e2)" || tail == "(e2,e1)") return s.substr(0, s.size() - 7);
    }
    return s;
  };
  std::vector<std::string> classes;
  auto note = [&](const std::string& s) {
    if (s == undirected) return;
    const std::string c = class_of(s);
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  };
  for (const auto& [g, p] : gold_pred) {
    note(g);
    note(p);
  }
  if (classes.empty()) return 0.0;
  double sum = 0.0;
  for (const std::string& c : classes) {
    long correct = 0, claimed = 0, actual = 0;
    for (const auto& [g, p] : gold_pred) {
      const bool g_in = g != undirected && class_of(g) == c;
      const bool p_in = p != undirected && class_of(p) == c;
      if (g_in) ++actual;
      if (p_in) ++claimed;
      if (g_in && p_in && g == p) ++correct;
    }
    const double prec = claimed ? static_cast<double>(correct) / claimed : 0.0;
    const double rec = actual ? static_cast<double>(correct) / actual : 0.0;
    if (prec + rec > 0) sum += 2 * prec * rec / (prec + rec);
  }
  return sum / static_cast<double>(classes.size());
}

inline std::vector<std::pair<std::string, std::string>> gold_pred_pairs(
    const rdr::Corpus& c, const rdr::PredictionSet& p) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(c.size());
  for (const rdr::Sample& s : c.samples())
    out.emplace_back(s.gold().canonical(), p.at(s.id()).canonical());
  return out;
}

// A 20-sample fixture with scripted predictions for both sides of the
// pair: 16 directed samples over four relation types plus four Other.
// The expected numbers below were recomputed independently by hand:
//   macro A = 491/910, macro B = 4213/7280, |diff| = 57/1456, X = B,
//   PIR = 2/9, PPR = 3/8, 16 non-Other samples.
struct GoldenFixture {
  rdr::Corpus a;
  rdr::PredictionSet preds_a;
  rdr::PredictionSet preds_b;
};

inline constexpr double kGoldenMacroA = 491.0 / 910.0;
inline constexpr double kGoldenMacroB = 4213.0 / 7280.0;
inline constexpr double kGoldenPd = 57.0 / 1456.0;
inline constexpr double kGoldenPir = 2.0 / 9.0;
inline constexpr double kGoldenPpr = 3.0 / 8.0;

inline GoldenFixture golden_fixture() {
  const rdr::LabelInventory inv = rdr::LabelInventory::semeval();
  constexpr const char* kCE12 = "Cause-Effect(e1,e2)";
  constexpr const char* kCE21 = "Cause-Effect(e2,e1)";
  constexpr const char* kCW12 = "Component-Whole(e1,e2)";
  constexpr const char* kCW21 = "Component-Whole(e2,e1)";
  constexpr const char* kEO12 = "Entity-Origin(e1,e2)";
  constexpr const char* kEO21 = "Entity-Origin(e2,e1)";
  constexpr const char* kMT12 = "Message-Topic(e1,e2)";
  constexpr const char* kMT21 = "Message-Topic(e2,e1)";
  constexpr const char* kOth = "Other";
  struct Row {
    const char* gold;
    const char* pred_a;
    const char* pred_b;
  };
  const Row rows[20] = {
      {kCE12, kCE12, kCE21}, {kCE12, kCE12, kCE12}, {kCE12, kCE21, kCE12},
      {kCE21, kCE21, kCE12}, {kCE21, kCE21, kCE21}, {kCE21, kOth, kOth},
      {kCW12, kCW12, kCW21}, {kCW12, kCW21, kCW21}, {kCW21, kCW21, kCW12},
      {kCW21, kCE12, kCE12}, {kEO12, kEO12, kEO21}, {kEO12, kEO12, kEO12},
      {kEO12, kEO21, kEO21}, {kEO12, kOth, kEO21},  {kMT21, kMT21, kMT12},
      {kMT21, kMT12, kMT21}, {kOth, kOth, kOth},    {kOth, kOth, kCE12},
      {kOth, kCE12, kOth},   {kOth, kMT12, kMT12},
  };
  std::vector<rdr::Sample> samples;
  std::map<std::int64_t, rdr::DirectedLabel> pa, pb;
  for (int i = 0; i < 20; ++i) {
    const std::int64_t id = i + 1;
    const std::string tag = std::to_string(id);
    samples.push_back(rdr::Sample::from_marked(
        id, "<e1>item" + tag + "</e1> touches <e2>thing" + tag + "</e2> here",
        inv.canonicalize(rows[i].gold)));
    pa.emplace(id, inv.canonicalize(rows[i].pred_a));
    pb.emplace(id, inv.canonicalize(rows[i].pred_b));
  }
  return GoldenFixture{rdr::Corpus(std::move(samples), inv, "golden-a"),
                       rdr::PredictionSet(std::move(pa), "golden-a"),
                       rdr::PredictionSet(std::move(pb), "paired-of:golden-a")};
}

// Order-separable toy: the relation type is cued by a keyword and the
// direction is carried purely by which marker comes first, so the pair of
// a sample shares all its unigrams. n_base must be even.
inline rdr::Corpus toy_order_corpus(std::size_t n_base) {
  const rdr::LabelInventory inv = rdr::LabelInventory::semeval();
  static const std::pair<const char*, const char*> kTypes[] = {
      {"Cause-Effect", "because"},
      {"Component-Whole", "inside"},
      {"Entity-Origin", "from"},
      {"Message-Topic", "about"},
  };
  std::vector<rdr::Sample> samples;
  for (std::size_t i = 0; i < n_base; ++i) {
    const auto& [type, keyword] = kTypes[i % std::size(kTypes)];
    const std::string tag = std::to_string(i + 1);
    std::string marked = "<e1>left" + tag + "</e1> " + keyword + " <e2>right" + tag + "</e2>";
    rdr::Sample s = rdr::Sample::from_marked(
        static_cast<std::int64_t>(i + 1), std::move(marked),
        inv.canonicalize(std::string(type) + "(e1,e2)"));
    // Half the base samples carry the opposite marker order.
    samples.push_back(i % 2 == 0 ? s : rdr::pair_sample(s));
  }
  return rdr::Corpus(std::move(samples), inv, "toy-order");
}

}  // namespace rdrtest

#endif  // RDR_TESTS_SUPPORT_HPP
