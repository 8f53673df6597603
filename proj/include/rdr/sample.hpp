#ifndef RDR_SAMPLE_HPP
#define RDR_SAMPLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rdr/label.hpp"

namespace rdr {

// Character range [begin, end) in the unmarked sentence.
struct EntitySpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// One annotated sentence: exactly one <e1>..</e1> span and one <e2>..</e2>
// span, non-empty and non-overlapping. The marked text is kept verbatim;
// the unmarked text and spans are derived at construction and validated to
// reproduce the marked text when the tags are re-inserted.
class Sample {
 public:
  static Sample from_marked(std::int64_t id, std::string marked_text, DirectedLabel gold,
                            std::optional<std::string> comment = std::nullopt);

  std::int64_t id() const { return id_; }
  const std::string& marked_text() const { return marked_text_; }
  const std::string& unmarked_text() const { return unmarked_text_; }
  EntitySpan e1_span() const { return e1_; }
  EntitySpan e2_span() const { return e2_; }
  const DirectedLabel& gold() const { return gold_; }
  const std::optional<std::string>& comment() const { return comment_; }

  std::string e1_text() const { return unmarked_text_.substr(e1_.begin, e1_.end - e1_.begin); }
  std::string e2_text() const { return unmarked_text_.substr(e2_.begin, e2_.end - e2_.begin); }

  // Structural identity; derived fields follow from marked_text.
  friend bool operator==(const Sample& a, const Sample& b) {
    return a.id_ == b.id_ && a.marked_text_ == b.marked_text_ && a.gold_ == b.gold_ &&
           a.comment_ == b.comment_;
  }
  friend bool operator!=(const Sample& a, const Sample& b) { return !(a == b); }

 private:
  Sample(std::int64_t id, std::string marked_text, std::string unmarked_text, EntitySpan e1,
         EntitySpan e2, DirectedLabel gold, std::optional<std::string> comment);

  std::int64_t id_;
  std::string marked_text_;
  std::string unmarked_text_;
  EntitySpan e1_;
  EntitySpan e2_;
  DirectedLabel gold_;
  std::optional<std::string> comment_;
};

// Re-inserts entity tags into unmarked text. Where a span ends exactly where
// the other begins, the closing tag is emitted before the opening tag.
std::string render_marked(std::string_view unmarked, EntitySpan e1, EntitySpan e2);

}  // namespace rdr

#endif  // RDR_SAMPLE_HPP
