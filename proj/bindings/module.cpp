#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <rdr/corpus.hpp>
#include <rdr/label.hpp>
#include <rdr/metrics.hpp>
#include <rdr/transform.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace py = pybind11;

namespace {

rdr::LabelInventory make_inventory(const std::optional<std::string>& spec) {
  if (!spec) return rdr::LabelInventory::semeval();
  std::istringstream in(*spec);
  return rdr::LabelInventory::from_stream(in);
}

rdr::MacroMode make_mode(const std::string& mode) {
  if (mode == "official") return rdr::MacroMode::Official;
  if (mode == "directed") return rdr::MacroMode::Directed;
  throw py::value_error("macro_mode must be \"official\" or \"directed\"");
}

py::dict report_to_dict(const rdr::RdrReport& report) {
  py::dict d;
  d["macro_f1_a"] = report.macro_f1_a;
  d["macro_f1_b"] = report.macro_f1_b;
  d["pd"] = report.pd;
  d["pir"] = py::cast(report.pir);
  d["ppr"] = py::cast(report.ppr);
  d["x_set"] = report.x_set == rdr::TestSet::A ? "A" : "B";
  d["n_non_other"] = report.n_non_other;
  py::list per_relation;
  for (const rdr::PerRelationScore& score : report.per_relation) {
    py::dict row;
    row["relation"] = score.relation;
    row["precision"] = score.precision;
    row["recall"] = score.recall;
    row["f1"] = score.f1;
    per_relation.append(row);
  }
  d["per_relation"] = per_relation;
  py::list warnings;
  if (report.warning_no_directed)
    warnings.append("no samples with a directed gold label: PIR and PPR are undefined");
  d["warnings"] = warnings;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Paired-corpus transforms and direction-aware relation scoring";

  m.def(
      "pair",
      [](const std::string& corpus, const std::optional<std::string>& inventory) {
        const rdr::LabelInventory inv = make_inventory(inventory);
        const rdr::PairedCorpus pc = rdr::pair_corpus(rdr::parse_corpus_text(corpus, inv, "a"));
        return rdr::serialize_corpus(pc.paired());
      },
      py::arg("corpus"), py::arg("inventory") = std::nullopt,
      "Swap the e1/e2 markers of every sample and invert its label.");

  m.def(
      "merge",
      [](const std::string& corpus, const std::optional<std::string>& inventory) {
        const rdr::LabelInventory inv = make_inventory(inventory);
        return rdr::serialize_corpus(
            rdr::merge_paired(rdr::pair_corpus(rdr::parse_corpus_text(corpus, inv, "a"))));
      },
      py::arg("corpus"), py::arg("inventory") = std::nullopt,
      "Append the paired image of every sample, offsetting the new IDs.");

  m.def(
      "binarize",
      [](const std::string& corpus, std::uint32_t seed, bool include_other_negatives,
         const std::optional<std::string>& inventory) {
        const rdr::LabelInventory inv = make_inventory(inventory);
        return rdr::serialize_binary(
            rdr::binarize(rdr::parse_corpus_text(corpus, inv, "a"), seed,
                          include_other_negatives));
      },
      py::arg("corpus"), py::arg("seed"), py::arg("include_other_negatives") = true,
      py::arg("inventory") = std::nullopt,
      "Recast each sample as one positive and one seeded negative candidate.");

  m.def(
      "macro_f1",
      [](const std::string& corpus, const std::string& predictions, const std::string& macro_mode,
         const std::optional<std::string>& inventory) {
        const rdr::LabelInventory inv = make_inventory(inventory);
        const rdr::Corpus gold = rdr::parse_corpus_text(corpus, inv, "gold");
        return rdr::macro_f1(rdr::confusion(gold, rdr::parse_predictions_text(predictions, inv)),
                             make_mode(macro_mode));
      },
      py::arg("corpus"), py::arg("predictions"), py::arg("macro_mode") = "official",
      py::arg("inventory") = std::nullopt,
      "Macro-averaged F1 of a prediction file against its gold corpus.");

  m.def(
      "evaluate",
      [](const std::string& gold_a, const std::string& pred_a, const std::string& pred_b,
         const std::optional<std::string>& gold_b, const std::string& macro_mode,
         const std::optional<std::string>& inventory) {
        const rdr::LabelInventory inv = make_inventory(inventory);
        rdr::Corpus a = rdr::parse_corpus_text(gold_a, inv, "a");
        const rdr::PairedCorpus pc =
            gold_b ? rdr::PairedCorpus::validated(std::move(a),
                                                  rdr::parse_corpus_text(*gold_b, inv, "b"))
                   : rdr::pair_corpus(a);
        const rdr::RdrReport report =
            rdr::evaluate_rdr(pc, rdr::parse_predictions_text(pred_a, inv),
                              rdr::parse_predictions_text(pred_b, inv), make_mode(macro_mode));
        return report_to_dict(report);
      },
      py::arg("gold_a"), py::arg("pred_a"), py::arg("pred_b"),
      py::arg("gold_b") = std::nullopt, py::arg("macro_mode") = "official",
      py::arg("inventory") = std::nullopt,
      "Score paired predictions: Macro-F1 on both sides, PD, PIR, and PPR.");
}
