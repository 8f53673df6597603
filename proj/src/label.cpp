#include "rdr/label.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace rdr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

constexpr std::string_view kSuffixE1E2 = "(e1,e2)";
constexpr std::string_view kSuffixE2E1 = "(e2,e1)";

}  // namespace

DirectedLabel::DirectedLabel(std::string relation_type, Direction direction)
    : type_(std::move(relation_type)), direction_(direction) {
  if (type_.empty()) throw ValidationError("relation type must be non-empty");
}

DirectedLabel DirectedLabel::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() > kSuffixE1E2.size()) {
    std::string_view tail = t.substr(t.size() - kSuffixE1E2.size());
    std::string_view head = t.substr(0, t.size() - kSuffixE1E2.size());
    if (tail == kSuffixE1E2) return DirectedLabel(std::string(head), Direction::E1ToE2);
    if (tail == kSuffixE2E1) return DirectedLabel(std::string(head), Direction::E2ToE1);
  }
  if (t.empty()) throw ValidationError("empty label string");
  return DirectedLabel(std::string(t), Direction::None);
}

DirectedLabel DirectedLabel::undirected(std::string name) {
  return DirectedLabel(std::move(name), Direction::None);
}

std::string DirectedLabel::canonical() const {
  switch (direction_) {
    case Direction::E1ToE2: return type_ + std::string(kSuffixE1E2);
    case Direction::E2ToE1: return type_ + std::string(kSuffixE2E1);
    case Direction::None: return type_;
  }
  return type_;
}

DirectedLabel invert_label(const DirectedLabel& label) {
  switch (label.direction()) {
    case Direction::E1ToE2: return DirectedLabel(label.relation_type(), Direction::E2ToE1);
    case Direction::E2ToE1: return DirectedLabel(label.relation_type(), Direction::E1ToE2);
    case Direction::None: return label;
  }
  return label;
}

LabelInventory::LabelInventory(std::vector<DirectedLabel> labels, std::string undirected_name)
    : labels_(std::move(labels)) {
  bool undirected_found = false;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const DirectedLabel& label = labels_[i];
    auto [it, inserted] = index_.emplace(label.canonical(), i);
    if (!inserted) throw ConfigError("duplicate label in inventory: " + label.canonical());
    if (label.is_undirected()) {
      if (label.relation_type() != undirected_name)
        throw ConfigError("undirected spelling of a label other than the designated one: " +
                          label.canonical());
      undirected_index_ = i;
      undirected_found = true;
    } else if (label.relation_type() == undirected_name) {
      throw ConfigError("directed spelling of the undirected label: " + label.canonical());
    }
  }
  if (!undirected_found)
    throw ConfigError("inventory does not contain the undirected label \"" + undirected_name + "\"");
}

LabelInventory LabelInventory::semeval() {
  static const char* kTypes[] = {
      "Cause-Effect",   "Component-Whole",  "Content-Container",
      "Entity-Destination", "Entity-Origin", "Instrument-Agency",
      "Member-Collection", "Message-Topic",  "Product-Producer",
  };
  std::vector<DirectedLabel> labels;
  labels.reserve(19);
  for (const char* type : kTypes) {
    labels.emplace_back(type, Direction::E1ToE2);
    labels.emplace_back(type, Direction::E2ToE1);
  }
  labels.push_back(DirectedLabel::undirected("Other"));
  return LabelInventory(std::move(labels), "Other");
}

LabelInventory LabelInventory::from_stream(std::istream& in) {
  constexpr std::string_view kUndirectedKey = "undirected:";
  std::vector<DirectedLabel> labels;
  std::optional<std::string> undirected_name;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.substr(0, kUndirectedKey.size()) == kUndirectedKey) {
      if (undirected_name)
        throw ParseError(line_no, "second \"undirected:\" line in inventory file");
      std::string_view name = trim(t.substr(kUndirectedKey.size()));
      if (name.empty()) throw ParseError(line_no, "missing name after \"undirected:\"");
      DirectedLabel label = DirectedLabel::parse(name);
      if (!label.is_undirected())
        throw ParseError(line_no, "undirected label must be a bare name: " + std::string(name));
      undirected_name = label.relation_type();
      labels.push_back(label);
      continue;
    }
    DirectedLabel label = DirectedLabel::parse(t);
    if (label.is_undirected())
      throw ParseError(line_no, "label without a direction outside an \"undirected:\" line: " +
                                    label.canonical());
    labels.push_back(label);
  }
  if (!undirected_name) throw ParseError(line_no, "inventory file has no \"undirected:\" line");
  try {
    return LabelInventory(std::move(labels), *undirected_name);
  } catch (const ConfigError& e) {
    throw ParseError(line_no, e.what());
  }
}

bool LabelInventory::contains(const DirectedLabel& label) const {
  return index_.find(label.canonical()) != index_.end();
}

std::optional<std::size_t> LabelInventory::index_of(const DirectedLabel& label) const {
  auto it = index_.find(label.canonical());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DirectedLabel LabelInventory::canonicalize(std::string_view text) const {
  DirectedLabel label = DirectedLabel::parse(text);
  if (!contains(label)) throw UnknownLabelError("unknown label: " + label.canonical());
  return label;
}

std::vector<std::string> LabelInventory::relation_types() const {
  std::vector<std::string> types;
  for (const DirectedLabel& label : labels_) {
    if (label.is_undirected()) continue;
    if (std::find(types.begin(), types.end(), label.relation_type()) == types.end())
      types.push_back(label.relation_type());
  }
  return types;
}

std::vector<std::string> LabelInventory::missing_inverses() const {
  std::vector<std::string> missing;
  for (const DirectedLabel& label : labels_) {
    if (label.is_undirected()) continue;
    if (!contains(invert_label(label))) missing.push_back(label.canonical());
  }
  return missing;
}

}  // namespace rdr
