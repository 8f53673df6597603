#include "rdr/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "rdr/rng.hpp"

namespace rdr {

namespace {

DirectedLabel blind_canonicalize(const DirectedLabel& label, Direction representative) {
  if (label.is_undirected()) return label;
  return DirectedLabel(label.relation_type(), representative);
}

struct Token {
  std::string lower;
  std::size_t begin = 0;  // char offset in unmarked text
  std::size_t end = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t begin = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    Token t;
    t.begin = begin;
    t.end = i;
    t.lower.reserve(i - begin);
    for (std::size_t k = begin; k < i; ++k)
      t.lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[k]))));
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::size_t token_index_at(const std::vector<Token>& tokens, std::size_t char_pos) {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (char_pos < tokens[i].end) return i;
  return tokens.empty() ? 0 : tokens.size() - 1;
}

std::string offset_bucket(std::ptrdiff_t d) {
  if (d < -3) return "<-3";
  if (d > 3) return ">+3";
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%+td", d);
  return buf;
}

}  // namespace

PredictionSet oracle_predict(const Corpus& corpus, const Corpus& gold_source,
                             const OracleConfig& config) {
  std::map<std::int64_t, DirectedLabel> entries;
  for (const Sample& s : corpus.samples()) {
    const Sample* source = gold_source.find(s.id());
    if (source == nullptr)
      throw ValidationError("sample ID " + std::to_string(s.id()) +
                            " is not present in the gold source corpus");
    if (config.mode == OracleMode::DirectionAware)
      entries.emplace(s.id(), s.gold());
    else
      entries.emplace(s.id(), blind_canonicalize(source->gold(), config.blind_representative));
  }
  return PredictionSet(std::move(entries), corpus.origin());
}

PredictionSet majority_predict(const Corpus& train, const Corpus& test) {
  if (train.empty()) throw ValidationError("majority baseline needs a non-empty training corpus");
  const LabelInventory& inventory = train.inventory();
  std::vector<std::int64_t> counts(inventory.size(), 0);
  for (const Sample& s : train.samples()) ++counts[*inventory.index_of(s.gold())];
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[best]) best = i;  // ties keep the earlier label

  std::map<std::int64_t, DirectedLabel> entries;
  for (const Sample& s : test.samples()) entries.emplace(s.id(), inventory.labels()[best]);
  return PredictionSet(std::move(entries), test.origin());
}

std::map<std::string, double> extract_features(const Sample& sample, const FeatureSpec& spec) {
  std::map<std::string, double> features;
  const std::vector<Token> tokens = tokenize(sample.unmarked_text());

  if (spec.marker_order)
    features[sample.e1_span().begin < sample.e2_span().begin ? "order=e1<e2" : "order=e2<e1"] += 1.0;

  if (spec.unigrams)
    for (const Token& t : tokens) features["u=" + t.lower] += 1.0;

  if (spec.position_buckets && !tokens.empty()) {
    const std::ptrdiff_t e1_tok =
        static_cast<std::ptrdiff_t>(token_index_at(tokens, sample.e1_span().begin));
    const std::ptrdiff_t e2_tok =
        static_cast<std::ptrdiff_t>(token_index_at(tokens, sample.e2_span().begin));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(i);
      features["p1[" + offset_bucket(pos - e1_tok) + "]=" + tokens[i].lower] += 1.0;
      features["p2[" + offset_bucket(pos - e2_tok) + "]=" + tokens[i].lower] += 1.0;
    }
  }
  return features;
}

PerceptronModel::PerceptronModel(LabelInventory inventory, FeatureSpec spec)
    : inventory_(std::move(inventory)), spec_(spec) {}

std::vector<double> PerceptronModel::scores(const Sample& sample) const {
  std::vector<double> scores(inventory_.size(), 0.0);
  for (const auto& [feature, value] : extract_features(sample, spec_)) {
    auto it = weights_.find(feature);
    if (it == weights_.end()) continue;
    for (std::size_t l = 0; l < scores.size(); ++l) scores[l] += it->second[l] * value;
  }
  return scores;
}

DirectedLabel PerceptronModel::predict_label(const Sample& sample) const {
  const std::vector<double> s = scores(sample);
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[best]) best = i;
  return inventory_.labels()[best];
}

PerceptronModel perceptron_train(const Corpus& train, const FeatureSpec& spec, int epochs,
                                 std::uint32_t seed) {
  if (train.empty()) throw ValidationError("perceptron training needs a non-empty corpus");
  if (epochs < 1) throw ValidationError("epochs must be >= 1");

  const LabelInventory& inventory = train.inventory();
  const std::size_t n_labels = inventory.size();

  // Features are extracted once; training touches them per epoch.
  std::vector<std::map<std::string, double>> features;
  std::vector<std::size_t> gold_index;
  features.reserve(train.size());
  for (const Sample& s : train.samples()) {
    features.push_back(extract_features(s, spec));
    gold_index.push_back(*inventory.index_of(s.gold()));
  }

  PerceptronModel model(inventory, spec);
  auto& weights = model.weights_;
  std::unordered_map<std::string, std::vector<double>> accum;  // timestamp-weighted updates

  SeededRng rng(seed);
  std::vector<std::size_t> order(train.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  double t = 1.0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t idx : order) {
      const auto& f = features[idx];
      // Inline argmax under the current weights.
      std::vector<double> scores(n_labels, 0.0);
      for (const auto& [feature, value] : f) {
        auto it = weights.find(feature);
        if (it == weights.end()) continue;
        for (std::size_t l = 0; l < n_labels; ++l) scores[l] += it->second[l] * value;
      }
      std::size_t guess = 0;
      for (std::size_t l = 1; l < n_labels; ++l)
        if (scores[l] > scores[guess]) guess = l;

      const std::size_t gold = gold_index[idx];
      if (guess != gold) {
        for (const auto& [feature, value] : f) {
          auto& w = weights.try_emplace(feature, std::vector<double>(n_labels, 0.0)).first->second;
          auto& u = accum.try_emplace(feature, std::vector<double>(n_labels, 0.0)).first->second;
          w[gold] += value;
          w[guess] -= value;
          u[gold] += t * value;
          u[guess] -= t * value;
        }
      }
      t += 1.0;
    }
  }

  // Averaged weights: w_avg = w - u/t.
  for (auto& [feature, w] : weights) {
    const std::vector<double>& u = accum[feature];
    for (std::size_t l = 0; l < n_labels; ++l) w[l] -= u[l] / t;
  }
  return model;
}

PredictionSet perceptron_predict(const PerceptronModel& model, const Corpus& corpus) {
  std::map<std::int64_t, DirectedLabel> entries;
  for (const Sample& s : corpus.samples()) entries.emplace(s.id(), model.predict_label(s));
  return PredictionSet(std::move(entries), corpus.origin());
}

void PerceptronModel::save(std::ostream& out) const {
  out << "rdreval-perceptron v1\n";
  out << "spec\tunigrams=" << (spec_.unigrams ? 1 : 0)
      << "\tposition_buckets=" << (spec_.position_buckets ? 1 : 0)
      << "\tmarker_order=" << (spec_.marker_order ? 1 : 0) << "\n";
  std::vector<std::string> keys;
  keys.reserve(weights_.size());
  for (const auto& [feature, w] : weights_) keys.push_back(feature);
  std::sort(keys.begin(), keys.end());
  char buf[64];
  for (const std::string& feature : keys) {
    const std::vector<double>& w = weights_.at(feature);
    for (std::size_t l = 0; l < w.size(); ++l) {
      if (w[l] == 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%.17g", w[l]);
      out << feature << '\t' << inventory_.labels()[l].canonical() << '\t' << buf << '\n';
    }
  }
}

PerceptronModel PerceptronModel::load(std::istream& in, const LabelInventory& inventory) {
  std::string line;
  if (!std::getline(in, line) || line != "rdreval-perceptron v1")
    throw ParseError(1, "not a rdreval-perceptron v1 model file");
  if (!std::getline(in, line))
    throw ParseError(2, "missing feature-spec line");

  FeatureSpec spec;
  {
    std::istringstream fields(line);
    std::string field;
    if (!std::getline(fields, field, '\t') || field != "spec")
      throw ParseError(2, "malformed feature-spec line");
    while (std::getline(fields, field, '\t')) {
      auto eq = field.find('=');
      if (eq == std::string::npos) throw ParseError(2, "malformed feature-spec entry: " + field);
      const std::string key = field.substr(0, eq);
      const bool value = field.substr(eq + 1) == "1";
      if (key == "unigrams")
        spec.unigrams = value;
      else if (key == "position_buckets")
        spec.position_buckets = value;
      else if (key == "marker_order")
        spec.marker_order = value;
      else
        throw ParseError(2, "unknown feature-spec entry: " + key);
    }
  }

  PerceptronModel model(inventory, spec);
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string feature, label_text, weight_text;
    if (!std::getline(fields, feature, '\t') || !std::getline(fields, label_text, '\t') ||
        !std::getline(fields, weight_text))
      throw ParseError(line_no, "expected feature<TAB>label<TAB>weight");
    DirectedLabel label = inventory.canonicalize(label_text);
    double weight = 0.0;
    try {
      weight = std::stod(weight_text);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad weight: " + weight_text);
    }
    auto& w = model.weights_.try_emplace(feature, std::vector<double>(inventory.size(), 0.0))
                  .first->second;
    w[*inventory.index_of(label)] = weight;
  }
  return model;
}

DirectedLabel argmax_select(const std::vector<std::pair<DirectedLabel, double>>& scores,
                            const LabelInventory& inventory) {
  if (scores.empty()) throw ValidationError("argmax over an empty score map");
  bool have_best = false;
  double best_score = 0.0;
  std::size_t best_index = 0;
  for (const auto& [label, score] : scores) {
    auto idx = inventory.index_of(label);
    if (!idx) throw UnknownLabelError("scored label not in inventory: " + label.canonical());
    if (score < 0.0 || score > 1.0)
      throw ValidationError("probability out of [0,1] for " + label.canonical());
    if (!have_best || score > best_score || (score == best_score && *idx < best_index)) {
      have_best = true;
      best_score = score;
      best_index = *idx;
    }
  }
  return inventory.labels()[best_index];
}

}  // namespace rdr
