#include "rdr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace rdr {

namespace {

double f1_of(std::int64_t correct, std::int64_t predicted, std::int64_t actual) {
  const double p = predicted > 0 ? static_cast<double>(correct) / predicted : 0.0;
  const double r = actual > 0 ? static_cast<double>(correct) / actual : 0.0;
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

}  // namespace

ConfusionMatrix::ConfusionMatrix(LabelInventory inventory)
    : inventory_(std::move(inventory)), counts_(inventory_.size() * inventory_.size(), 0) {}

void ConfusionMatrix::add(const DirectedLabel& gold, const DirectedLabel& predicted) {
  auto g = inventory_.index_of(gold);
  auto p = inventory_.index_of(predicted);
  if (!g) throw UnknownLabelError("gold label not in inventory: " + gold.canonical());
  if (!p) throw UnknownLabelError("predicted label not in inventory: " + predicted.canonical());
  ++counts_[*g * inventory_.size() + *p];
  ++total_;
}

std::int64_t ConfusionMatrix::cell(const DirectedLabel& gold, const DirectedLabel& predicted) const {
  auto g = inventory_.index_of(gold);
  auto p = inventory_.index_of(predicted);
  if (!g || !p) throw UnknownLabelError("label not in inventory");
  return counts_[*g * inventory_.size() + *p];
}

ConfusionMatrix::TypeTally ConfusionMatrix::type_tally(const std::string& relation_type) const {
  TypeTally tally;
  const std::size_t n = inventory_.size();
  for (std::size_t g = 0; g < n; ++g) {
    const DirectedLabel& gold = inventory_.labels()[g];
    const bool gold_in_type = !gold.is_undirected() && gold.relation_type() == relation_type;
    for (std::size_t p = 0; p < n; ++p) {
      const DirectedLabel& pred = inventory_.labels()[p];
      const bool pred_in_type = !pred.is_undirected() && pred.relation_type() == relation_type;
      const std::int64_t c = counts_[g * n + p];
      if (gold_in_type) tally.actual += c;
      if (pred_in_type) tally.predicted += c;
      if (gold_in_type && g == p) tally.correct += c;
    }
  }
  return tally;
}

ConfusionMatrix::TypeTally ConfusionMatrix::label_tally(const DirectedLabel& label) const {
  auto idx = inventory_.index_of(label);
  if (!idx) throw UnknownLabelError("label not in inventory: " + label.canonical());
  TypeTally tally;
  const std::size_t n = inventory_.size();
  for (std::size_t i = 0; i < n; ++i) {
    tally.actual += counts_[*idx * n + i];
    tally.predicted += counts_[i * n + *idx];
  }
  tally.correct = counts_[*idx * n + *idx];
  return tally;
}

ConfusionMatrix confusion(const Corpus& corpus, const PredictionSet& preds) {
  preds.check_coverage(corpus);
  ConfusionMatrix matrix(corpus.inventory());
  for (const Sample& s : corpus.samples()) matrix.add(s.gold(), preds.at(s.id()));
  return matrix;
}

double macro_f1(const ConfusionMatrix& matrix, MacroMode mode) {
  double sum = 0.0;
  std::size_t observed = 0;
  if (mode == MacroMode::Official) {
    for (const std::string& type : matrix.inventory().relation_types()) {
      ConfusionMatrix::TypeTally t = matrix.type_tally(type);
      if (t.actual == 0 && t.predicted == 0) continue;
      sum += f1_of(t.correct, t.predicted, t.actual);
      ++observed;
    }
  } else {
    for (const DirectedLabel& label : matrix.inventory().labels()) {
      if (label.is_undirected()) continue;
      ConfusionMatrix::TypeTally t = matrix.label_tally(label);
      if (t.actual == 0 && t.predicted == 0) continue;
      sum += f1_of(t.correct, t.predicted, t.actual);
      ++observed;
    }
  }
  return observed > 0 ? sum / static_cast<double>(observed) : 0.0;
}

std::vector<PerRelationScore> per_relation_scores(const ConfusionMatrix& matrix) {
  std::vector<PerRelationScore> scores;
  for (const std::string& type : matrix.inventory().relation_types()) {
    ConfusionMatrix::TypeTally t = matrix.type_tally(type);
    PerRelationScore s;
    s.relation = type;
    s.precision = t.predicted > 0 ? static_cast<double>(t.correct) / t.predicted : 0.0;
    s.recall = t.actual > 0 ? static_cast<double>(t.correct) / t.actual : 0.0;
    s.f1 = f1_of(t.correct, t.predicted, t.actual);
    scores.push_back(std::move(s));
  }
  return scores;
}

double pd(double perf_a, double perf_b) { return std::fabs(perf_a - perf_b); }

namespace {

// Shared walk for PIR/PPR: visits every sample whose gold is not the
// undirected label, with both predictions resolved by ID.
template <typename Visit>
void for_each_directed(const PairedCorpus& paired, const PredictionSet& preds_a,
                       const PredictionSet& preds_b, Visit&& visit) {
  preds_a.check_coverage(paired.original());
  preds_b.check_coverage(paired.paired());
  for (std::size_t i = 0; i < paired.size(); ++i) {
    const Sample& a = paired.original().samples()[i];
    const Sample& b = paired.paired().samples()[i];
    if (a.gold().is_undirected()) continue;
    visit(a.gold(), b.gold(), preds_a.at(a.id()), preds_b.at(b.id()));
  }
}

}  // namespace

std::optional<double> pir(const PairedCorpus& paired, const PredictionSet& preds_a,
                          const PredictionSet& preds_b, TestSet x_choice) {
  std::int64_t immobile_and_correct = 0;
  std::int64_t correct_on_x = 0;
  for_each_directed(paired, preds_a, preds_b,
                    [&](const DirectedLabel& gold_a, const DirectedLabel& gold_b,
                        const DirectedLabel& y_a, const DirectedLabel& y_b) {
                      const bool correct_x =
                          x_choice == TestSet::A ? y_a == gold_a : y_b == gold_b;
                      if (!correct_x) return;
                      ++correct_on_x;
                      if (y_a == y_b) ++immobile_and_correct;
                    });
  if (correct_on_x == 0) return std::nullopt;
  return static_cast<double>(immobile_and_correct) / static_cast<double>(correct_on_x);
}

std::optional<double> ppr(const PairedCorpus& paired, const PredictionSet& preds_a,
                          const PredictionSet& preds_b) {
  std::int64_t both_correct = 0;
  std::int64_t n = 0;
  for_each_directed(paired, preds_a, preds_b,
                    [&](const DirectedLabel& gold_a, const DirectedLabel& gold_b,
                        const DirectedLabel& y_a, const DirectedLabel& y_b) {
                      ++n;
                      if (y_a == gold_a && y_b == gold_b) ++both_correct;
                    });
  if (n == 0) return std::nullopt;
  return static_cast<double>(both_correct) / static_cast<double>(n);
}

RdrReport evaluate_rdr(const PairedCorpus& paired, const PredictionSet& preds_a,
                       const PredictionSet& preds_b, MacroMode mode) {
  ConfusionMatrix matrix_a = confusion(paired.original(), preds_a);
  ConfusionMatrix matrix_b = confusion(paired.paired(), preds_b);

  RdrReport report;
  report.macro_f1_a = macro_f1(matrix_a, mode);
  report.macro_f1_b = macro_f1(matrix_b, mode);
  report.x_set = report.macro_f1_a >= report.macro_f1_b ? TestSet::A : TestSet::B;
  report.pd = pd(report.macro_f1_a, report.macro_f1_b);
  report.pir = pir(paired, preds_a, preds_b, report.x_set);
  report.ppr = ppr(paired, preds_a, preds_b);
  report.per_relation = per_relation_scores(matrix_a);

  for (const Sample& s : paired.original().samples())
    if (!s.gold().is_undirected()) ++report.n_non_other;
  report.warning_no_directed = report.n_non_other == 0;
  return report;
}

std::string format_percent(double fraction) {
  // Half-up at the second decimal of the percentage.
  const double pct = std::floor(fraction * 10000.0 + 0.5) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", pct);
  return buf;
}

std::string report_to_json(const RdrReport& report) {
  nlohmann::ordered_json j;
  j["macro_f1_a"] = report.macro_f1_a;
  j["macro_f1_b"] = report.macro_f1_b;
  j["pd"] = report.pd;
  j["pir"] = report.pir ? nlohmann::ordered_json(*report.pir) : nlohmann::ordered_json(nullptr);
  j["ppr"] = report.ppr ? nlohmann::ordered_json(*report.ppr) : nlohmann::ordered_json(nullptr);
  j["x_set"] = report.x_set == TestSet::A ? "A" : "B";
  j["n_non_other"] = report.n_non_other;
  j["per_relation"] = nlohmann::ordered_json::array();
  for (const PerRelationScore& s : report.per_relation) {
    j["per_relation"].push_back({{"relation", s.relation},
                                 {"precision", s.precision},
                                 {"recall", s.recall},
                                 {"f1", s.f1}});
  }
  j["warnings"] = nlohmann::ordered_json::array();
  if (report.warning_no_directed)
    j["warnings"].push_back("no samples with a directed gold label: PIR and PPR are undefined");
  return j.dump(2) + "\n";
}

std::string report_to_table(const RdrReport& report, const std::string& row_label) {
  auto cell = [](const std::optional<double>& v) { return v ? format_percent(*v) : std::string("-"); };
  const std::size_t label_width = std::max<std::size_t>(row_label.size(), 6);

  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-*s  %7s  %7s  %7s  %7s  %7s\n",
                static_cast<int>(label_width), "Method", "A", "B", "PD", "PIR", "PPR");
  out += line;
  std::snprintf(line, sizeof(line), "%-*s  %7s  %7s  %7s  %7s  %7s\n",
                static_cast<int>(label_width), row_label.c_str(),
                format_percent(report.macro_f1_a).c_str(), format_percent(report.macro_f1_b).c_str(),
                format_percent(report.pd).c_str(), cell(report.pir).c_str(),
                cell(report.ppr).c_str());
  out += line;
  if (report.warning_no_directed)
    out += "note: no samples with a directed gold label; PIR and PPR are undefined\n";
  return out;
}

}  // namespace rdr
