#ifndef RDR_LABEL_HPP
#define RDR_LABEL_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rdr/errors.hpp"

namespace rdr {

enum class Direction { E1ToE2, E2ToE1, None };

// A relation type plus an argument direction. The undirected catch-all
// label ("Other" in SemEval) is the only label with Direction::None and
// its canonical string is the bare type name.
class DirectedLabel {
 public:
  DirectedLabel(std::string relation_type, Direction direction);

  // Syntax-only parse of a canonical string: "Type(e1,e2)", "Type(e2,e1)",
  // or a bare name (direction None). Trims surrounding whitespace;
  // comparisons stay case-sensitive. Membership checks live in
  // LabelInventory.
  static DirectedLabel parse(std::string_view text);
  static DirectedLabel undirected(std::string name);

  const std::string& relation_type() const { return type_; }
  Direction direction() const { return direction_; }
  bool is_undirected() const { return direction_ == Direction::None; }

  std::string canonical() const;

  friend bool operator==(const DirectedLabel& a, const DirectedLabel& b) {
    return a.direction_ == b.direction_ && a.type_ == b.type_;
  }
  friend bool operator!=(const DirectedLabel& a, const DirectedLabel& b) { return !(a == b); }
  friend bool operator<(const DirectedLabel& a, const DirectedLabel& b) {
    if (a.type_ != b.type_) return a.type_ < b.type_;
    return static_cast<int>(a.direction_) < static_cast<int>(b.direction_);
  }

 private:
  std::string type_;
  Direction direction_;
};

// Flips the direction of a label; the undirected label is a fixed point.
DirectedLabel invert_label(const DirectedLabel& label);

// The ordered set of labels legal in a corpus. The order is significant:
// it is the tie-break order for argmax-style selections.
class LabelInventory {
 public:
  // Validates: no duplicate canonical strings, the undirected label is
  // present, and no directed label reuses the undirected name.
  LabelInventory(std::vector<DirectedLabel> labels, std::string undirected_name);

  // The built-in SemEval-2010 Task 8 inventory: 9 relation types in two
  // directions each, alphabetical by type, followed by Other.
  static LabelInventory semeval();

  // Config file format: one canonical directed label per line, plus exactly
  // one line "undirected: <name>" declaring the no-direction label. Blank
  // lines and lines starting with '#' are skipped.
  static LabelInventory from_stream(std::istream& in);

  const std::vector<DirectedLabel>& labels() const { return labels_; }
  const DirectedLabel& undirected() const { return labels_[undirected_index_]; }
  std::size_t size() const { return labels_.size(); }

  bool contains(const DirectedLabel& label) const;
  std::optional<std::size_t> index_of(const DirectedLabel& label) const;

  // Parses and checks membership; throws UnknownLabelError otherwise.
  DirectedLabel canonicalize(std::string_view text) const;

  // Relation types other than the undirected one, in first-appearance order.
  std::vector<std::string> relation_types() const;

  // Canonical strings of directed labels whose inverse is absent. Empty for
  // any inventory usable with pairing.
  std::vector<std::string> missing_inverses() const;

  friend bool operator==(const LabelInventory& a, const LabelInventory& b) {
    return a.labels_ == b.labels_ && a.undirected_index_ == b.undirected_index_;
  }
  friend bool operator!=(const LabelInventory& a, const LabelInventory& b) { return !(a == b); }

 private:
  std::vector<DirectedLabel> labels_;
  std::size_t undirected_index_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace rdr

#endif  // RDR_LABEL_HPP
