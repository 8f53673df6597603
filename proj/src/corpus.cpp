#include "rdr/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace rdr {

namespace {

constexpr std::string_view kCommentKey = "Comment:";

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Strips one trailing '\r' so CRLF input parses; canonical output is LF.
std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::int64_t parse_id(std::string_view text, std::size_t line_no) {
  std::int64_t id = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, id);
  if (ec != std::errc() || ptr != last || id <= 0)
    throw ParseError(line_no, "expected a positive integer ID, got \"" + std::string(text) + "\"");
  return id;
}

}  // namespace

Corpus::Corpus(std::vector<Sample> samples, LabelInventory inventory, std::string origin)
    : samples_(std::move(samples)), inventory_(std::move(inventory)), origin_(std::move(origin)) {
  by_id_.reserve(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const Sample& s = samples_[i];
    if (!by_id_.emplace(s.id(), i).second)
      throw DuplicateIdError("duplicate sample ID " + std::to_string(s.id()));
    if (!inventory_.contains(s.gold()))
      throw UnknownLabelError("sample " + std::to_string(s.id()) +
                              ": gold label not in inventory: " + s.gold().canonical());
  }
}

const Sample* Corpus::find(std::int64_t id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &samples_[it->second];
}

std::vector<std::int64_t> Corpus::ids() const {
  std::vector<std::int64_t> out;
  out.reserve(samples_.size());
  for (const Sample& s : samples_) out.push_back(s.id());
  return out;
}

PredictionSet::PredictionSet(std::map<std::int64_t, DirectedLabel> entries,
                             std::string target_origin)
    : entries_(std::move(entries)), target_origin_(std::move(target_origin)) {}

const DirectedLabel& PredictionSet::at(std::int64_t id) const {
  auto it = entries_.find(id);
  if (it == entries_.end())
    throw CoverageError({id}, {});
  return it->second;
}

void PredictionSet::check_coverage(const Corpus& corpus) const {
  std::vector<std::int64_t> missing;
  for (const Sample& s : corpus.samples())
    if (entries_.find(s.id()) == entries_.end()) missing.push_back(s.id());
  std::vector<std::int64_t> extra;
  for (const auto& [id, label] : entries_)
    if (corpus.find(id) == nullptr) extra.push_back(id);
  if (!missing.empty() || !extra.empty())
    throw CoverageError(std::move(missing), std::move(extra));
}

Corpus parse_corpus(std::istream& in, const LabelInventory& inventory, std::string origin) {
  std::vector<Sample> samples;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = chomp(raw);
    if (is_blank(line)) continue;

    // Block line 1: ID<TAB>"sentence"
    const std::size_t sentence_line = line_no;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError(line_no, "expected ID<TAB>\"sentence\"");
    std::int64_t id = parse_id(line.substr(0, tab), line_no);
    std::string_view quoted = line.substr(tab + 1);
    if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"')
      throw ParseError(sentence_line, "sentence is not enclosed in double quotes");
    std::string marked(quoted.substr(1, quoted.size() - 2));

    // Block line 2: the label.
    if (!std::getline(in, raw))
      throw ParseError(line_no, "unexpected end of input: missing label line for sample " +
                                    std::to_string(id));
    ++line_no;
    std::string_view label_line = chomp(raw);
    if (is_blank(label_line))
      throw ParseError(line_no, "missing label line for sample " + std::to_string(id));
    DirectedLabel gold = [&] {
      try {
        return inventory.canonicalize(label_line);
      } catch (const UnknownLabelError& e) {
        throw UnknownLabelError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();

    // Optional block line 3: Comment:<text>
    std::optional<std::string> comment;
    std::streampos before_comment = in.tellg();
    if (std::getline(in, raw)) {
      std::string_view maybe = chomp(raw);
      if (maybe.substr(0, kCommentKey.size()) == kCommentKey) {
        ++line_no;
        comment = std::string(maybe.substr(kCommentKey.size()));
      } else if (is_blank(maybe)) {
        ++line_no;
      } else {
        // Start of the next block; rewind.
        in.seekg(before_comment);
      }
    }

    try {
      samples.push_back(Sample::from_marked(id, std::move(marked), std::move(gold),
                                            std::move(comment)));
    } catch (const AnnotationError& e) {
      throw AnnotationError("line " + std::to_string(sentence_line) + ": " + e.what());
    }
  }

  return Corpus(std::move(samples), inventory, std::move(origin));
}

Corpus parse_corpus_text(const std::string& text, const LabelInventory& inventory,
                         std::string origin) {
  std::istringstream in(text);
  return parse_corpus(in, inventory, std::move(origin));
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  bool first = true;
  for (const Sample& s : corpus.samples()) {
    if (!first) out += "\n";
    first = false;
    out += std::to_string(s.id());
    out += '\t';
    out += '"';
    out += s.marked_text();
    out += "\"\n";
    out += s.gold().canonical();
    out += '\n';
    if (s.comment()) {
      out += kCommentKey;
      out += *s.comment();
      out += '\n';
    }
  }
  return out;
}

PredictionSet parse_predictions(std::istream& in, const LabelInventory& inventory,
                                std::string target_origin) {
  std::map<std::int64_t, DirectedLabel> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = chomp(raw);
    if (is_blank(line)) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError(line_no, "expected ID<TAB>label");
    std::int64_t id = parse_id(line.substr(0, tab), line_no);
    DirectedLabel label = [&] {
      try {
        return inventory.canonicalize(line.substr(tab + 1));
      } catch (const UnknownLabelError& e) {
        throw UnknownLabelError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    if (!entries.emplace(id, std::move(label)).second)
      throw DuplicateIdError("line " + std::to_string(line_no) + ": duplicate prediction for ID " +
                             std::to_string(id));
  }
  return PredictionSet(std::move(entries), std::move(target_origin));
}

PredictionSet parse_predictions_text(const std::string& text, const LabelInventory& inventory,
                                     std::string target_origin) {
  std::istringstream in(text);
  return parse_predictions(in, inventory, std::move(target_origin));
}

std::string serialize_predictions(const PredictionSet& preds, const Corpus& order) {
  preds.check_coverage(order);
  std::string out;
  for (const Sample& s : order.samples()) {
    out += std::to_string(s.id());
    out += '\t';
    out += preds.at(s.id()).canonical();
    out += '\n';
  }
  return out;
}

}  // namespace rdr
