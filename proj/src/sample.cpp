#include "rdr/sample.hpp"

#include <algorithm>
#include <array>

namespace rdr {

namespace {

constexpr std::string_view kE1Open = "<e1>";
constexpr std::string_view kE1Close = "</e1>";
constexpr std::string_view kE2Open = "<e2>";
constexpr std::string_view kE2Close = "</e2>";

std::size_t count_occurrences(std::string_view text, std::string_view needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + 1))
    ++count;
  return count;
}

void require_single(std::string_view text, std::string_view tag, std::int64_t id) {
  std::size_t n = count_occurrences(text, tag);
  if (n != 1)
    throw AnnotationError("sample " + std::to_string(id) + ": expected exactly one \"" +
                          std::string(tag) + "\" tag, found " + std::to_string(n));
}

}  // namespace

Sample::Sample(std::int64_t id, std::string marked_text, std::string unmarked_text, EntitySpan e1,
               EntitySpan e2, DirectedLabel gold, std::optional<std::string> comment)
    : id_(id),
      marked_text_(std::move(marked_text)),
      unmarked_text_(std::move(unmarked_text)),
      e1_(e1),
      e2_(e2),
      gold_(std::move(gold)),
      comment_(std::move(comment)) {}

Sample Sample::from_marked(std::int64_t id, std::string marked_text, DirectedLabel gold,
                           std::optional<std::string> comment) {
  if (id <= 0)
    throw ValidationError("sample ID must be a positive integer, got " + std::to_string(id));
  for (std::string_view tag : {kE1Open, kE1Close, kE2Open, kE2Close})
    require_single(marked_text, tag, id);

  // Strip the four tags in text order, recording span boundaries in
  // unmarked coordinates.
  struct Tag {
    std::size_t pos;
    std::string_view text;
    int which;  // 0 = e1, 1 = e2
    bool open;
  };
  std::array<Tag, 4> tags = {{
      {marked_text.find(kE1Open), kE1Open, 0, true},
      {marked_text.find(kE1Close), kE1Close, 0, false},
      {marked_text.find(kE2Open), kE2Open, 1, true},
      {marked_text.find(kE2Close), kE2Close, 1, false},
  }};
  std::sort(tags.begin(), tags.end(), [](const Tag& a, const Tag& b) { return a.pos < b.pos; });

  std::string unmarked;
  unmarked.reserve(marked_text.size());
  EntitySpan spans[2];
  std::size_t cursor = 0;
  for (const Tag& tag : tags) {
    unmarked.append(marked_text, cursor, tag.pos - cursor);
    if (tag.open)
      spans[tag.which].begin = unmarked.size();
    else
      spans[tag.which].end = unmarked.size();
    cursor = tag.pos + tag.text.size();
  }
  unmarked.append(marked_text, cursor, std::string::npos);

  for (int which : {0, 1}) {
    const EntitySpan& s = spans[which];
    const char* name = which == 0 ? "e1" : "e2";
    if (s.begin >= s.end)
      throw AnnotationError("sample " + std::to_string(id) + ": " + name +
                            " span is empty or its close tag precedes its open tag");
  }
  const EntitySpan& first = spans[0].begin <= spans[1].begin ? spans[0] : spans[1];
  const EntitySpan& second = spans[0].begin <= spans[1].begin ? spans[1] : spans[0];
  if (first.end > second.begin)
    throw AnnotationError("sample " + std::to_string(id) + ": e1 and e2 spans overlap");

  if (render_marked(unmarked, spans[0], spans[1]) != marked_text)
    throw AnnotationError("sample " + std::to_string(id) +
                          ": marker re-insertion does not reproduce the sentence");

  return Sample(id, std::move(marked_text), std::move(unmarked), spans[0], spans[1],
                std::move(gold), std::move(comment));
}

std::string render_marked(std::string_view unmarked, EntitySpan e1, EntitySpan e2) {
  struct Insertion {
    std::size_t pos;
    int rank;  // closing tags sort before opening tags at the same position
    std::string_view text;
  };
  std::array<Insertion, 4> inserts = {{
      {e1.begin, 1, kE1Open},
      {e1.end, 0, kE1Close},
      {e2.begin, 1, kE2Open},
      {e2.end, 0, kE2Close},
  }};
  std::sort(inserts.begin(), inserts.end(), [](const Insertion& a, const Insertion& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.rank < b.rank;
  });

  std::string out;
  out.reserve(unmarked.size() + 18);
  std::size_t cursor = 0;
  for (const Insertion& ins : inserts) {
    out.append(unmarked.substr(cursor, ins.pos - cursor));
    out.append(ins.text);
    cursor = ins.pos;
  }
  out.append(unmarked.substr(cursor));
  return out;
}

}  // namespace rdr
