#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "rdr/corpus.hpp"
#include "support.hpp"

using namespace rdr;

namespace {

LabelInventory family_inventory() {
  return LabelInventory({DirectedLabel::parse("Father-Child(e1,e2)"),
                         DirectedLabel::parse("Father-Child(e2,e1)"),
                         DirectedLabel::undirected("Other")},
                        "Other");
}

const std::string kFatherBlock =
    "1\t\"<e1>Jack</e1> is the father of <e2>Jackson</e2>\"\n"
    "Father-Child(e1,e2)\n";

}  // namespace

TEST_CASE("directed label parsing and canonical form") {
  DirectedLabel l = DirectedLabel::parse("Cause-Effect(e1,e2)");
  CHECK(l.relation_type() == "Cause-Effect");
  CHECK(l.direction() == Direction::E1ToE2);
  CHECK_FALSE(l.is_undirected());
  CHECK(l.canonical() == "Cause-Effect(e1,e2)");

  DirectedLabel r = DirectedLabel::parse("Message-Topic(e2,e1)");
  CHECK(r.direction() == Direction::E2ToE1);
  CHECK(r.canonical() == "Message-Topic(e2,e1)");

  DirectedLabel o = DirectedLabel::parse("Other");
  CHECK(o.is_undirected());
  CHECK(o.direction() == Direction::None);
  CHECK(o.canonical() == "Other");

  CHECK(DirectedLabel::parse("  Other \t") == o);
  CHECK(DirectedLabel::parse(" Cause-Effect(e1,e2) ") == l);
  CHECK_THROWS_AS(DirectedLabel::parse("   "), ValidationError);
}

TEST_CASE("label canonicalization is idempotent") {
  const LabelInventory inv = LabelInventory::semeval();
  for (const DirectedLabel& l : inv.labels()) {
    const std::string once = DirectedLabel::parse(l.canonical()).canonical();
    CHECK(once == l.canonical());
    CHECK(DirectedLabel::parse(once).canonical() == once);
  }
}

TEST_CASE("invert_label flips direction and fixes the undirected label") {
  CHECK(invert_label(DirectedLabel::parse("Father-Child(e1,e2)")).canonical() ==
        "Father-Child(e2,e1)");
  CHECK(invert_label(DirectedLabel::parse("Other")).canonical() == "Other");
  const LabelInventory inv = LabelInventory::semeval();
  for (const DirectedLabel& l : inv.labels()) {
    CHECK(invert_label(invert_label(l)) == l);
    if (l.is_undirected())
      CHECK(invert_label(l) == l);
    else
      CHECK(invert_label(l) != l);
  }
}

TEST_CASE("built-in semeval inventory shape") {
  const LabelInventory inv = LabelInventory::semeval();
  CHECK(inv.size() == 19);
  CHECK(inv.undirected().canonical() == "Other");
  CHECK(inv.missing_inverses().empty());
  const std::vector<std::string> types = inv.relation_types();
  const std::vector<std::string> expected = {
      "Cause-Effect",  "Component-Whole",   "Content-Container",
      "Entity-Destination", "Entity-Origin", "Instrument-Agency",
      "Member-Collection",  "Message-Topic", "Product-Producer"};
  CHECK(types == expected);
  CHECK(inv.index_of(DirectedLabel::parse("Cause-Effect(e1,e2)")) == 0u);
  CHECK(inv.index_of(DirectedLabel::parse("Other")) == 18u);
  CHECK_FALSE(inv.contains(DirectedLabel::parse("Father-Child(e1,e2)")));
}

TEST_CASE("inventory construction rejects bad shapes") {
  const DirectedLabel fc12 = DirectedLabel::parse("Father-Child(e1,e2)");
  const DirectedLabel oth = DirectedLabel::undirected("Other");
  CHECK_THROWS_AS(LabelInventory({fc12, fc12, oth}, "Other"), ConfigError);
  CHECK_THROWS_AS(LabelInventory({fc12}, "Other"), ConfigError);
  CHECK_THROWS_AS(LabelInventory({fc12, DirectedLabel::parse("Other(e1,e2)"), oth}, "Other"),
                  ConfigError);
  CHECK_THROWS_AS(LabelInventory({fc12, DirectedLabel::undirected("Misc"), oth}, "Other"),
                  ConfigError);
}

TEST_CASE("inventory config file round-trip and errors") {
  const std::string config =
      "# family relations\n"
      "Father-Child(e1,e2)\n"
      "Father-Child(e2,e1)\n"
      "\n"
      "undirected: Other\n";
  std::istringstream in(config);
  const LabelInventory inv = LabelInventory::from_stream(in);
  CHECK(inv == family_inventory());

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return LabelInventory::from_stream(s);
  };
  CHECK_THROWS_AS(parse("Father-Child(e1,e2)\n"), ParseError);  // no undirected line
  CHECK_THROWS_AS(parse("undirected: Other\nundirected: Misc\n"), ParseError);
  CHECK_THROWS_AS(parse("Father-Child(e1,e2)\nFather-Child(e1,e2)\nundirected: Other\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("Stray\nundirected: Other\n"), ParseError);
  CHECK_THROWS_AS(parse("undirected: Other(e1,e2)\n"), ParseError);
}

TEST_CASE("parse_corpus reads the block format") {
  const LabelInventory inv = family_inventory();
  const Corpus c = parse_corpus_text(kFatherBlock, inv, "unit");
  REQUIRE(c.size() == 1);
  const Sample& s = c.samples()[0];
  CHECK(s.id() == 1);
  CHECK(s.gold().canonical() == "Father-Child(e1,e2)");
  CHECK(s.marked_text() == "<e1>Jack</e1> is the father of <e2>Jackson</e2>");
  CHECK(s.unmarked_text() == "Jack is the father of Jackson");
  CHECK(s.e1_text() == "Jack");
  CHECK(s.e2_text() == "Jackson");
  CHECK(s.e1_span() == EntitySpan{0, 4});
  CHECK(s.e2_span() == EntitySpan{22, 29});
  CHECK_FALSE(s.comment().has_value());
  CHECK(c.origin() == "unit");
  CHECK(c.find(1) == &s);
  CHECK(c.find(2) == nullptr);
}

TEST_CASE("parse_corpus on empty input") {
  const Corpus c = parse_corpus_text("", LabelInventory::semeval());
  CHECK(c.empty());
  CHECK(serialize_corpus(c).empty());
}

TEST_CASE("corpus file round-trips byte-identically") {
  const std::string text =
      "1\t\"<e1>Jack</e1> is the father of <e2>Jackson</e2>\"\n"
      "Father-Child(e1,e2)\n"
      "Comment: copied by hand\n"
      "\n"
      "2\t\"the <e2>boy</e2> waved at <e1>Jack</e1>\"\n"
      "Father-Child(e2,e1)\n"
      "\n"
      "7\t\"<e1>Jack</e1> walked past the <e2>mill</e2>\"\n"
      "Other\n";
  const Corpus c = parse_corpus_text(text, family_inventory());
  REQUIRE(c.size() == 3);
  CHECK(c.samples()[0].comment() == std::string(" copied by hand"));
  CHECK(c.samples()[2].gold().is_undirected());
  CHECK(serialize_corpus(c) == text);
}

TEST_CASE("parse_corpus tolerates extra blank lines and CRLF") {
  const LabelInventory inv = family_inventory();
  const Corpus plain = parse_corpus_text(kFatherBlock, inv);
  const Corpus padded = parse_corpus_text("\n\n" + kFatherBlock + "\n\n\n", inv);
  CHECK(padded == plain);

  std::string crlf;
  for (char ch : kFatherBlock) {
    if (ch == '\n') crlf += '\r';
    crlf += ch;
  }
  CHECK(parse_corpus_text(crlf, inv) == plain);
}

TEST_CASE("parse_corpus errors carry line numbers and kinds") {
  const LabelInventory inv = family_inventory();
  auto parse = [&](const std::string& text) { return parse_corpus_text(text, inv); };

  try {
    parse("1\t<e1>Jack</e1> greeted <e2>Jackson</e2>\nOther\n");
    FAIL("missing quotes accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse(kFatherBlock + "\nnot-an-id\t\"<e1>a</e1> x <e2>b</e2>\"\nOther\n");
    FAIL("bad ID accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse("1\t\"<e1>Jack</e1> met <e2>Jackson</e2>\"\n"), ParseError);
  CHECK_THROWS_AS(parse("0\t\"<e1>a</e1> x <e2>b</e2>\"\nOther\n"), ParseError);
  CHECK_THROWS_AS(parse(kFatherBlock + "\n" + kFatherBlock), DuplicateIdError);
  CHECK_THROWS_AS(parse("1\t\"<e1>Jack</e1> met <e2>Jackson</e2>\"\nSibling(e1,e2)\n"),
                  UnknownLabelError);
  CHECK_THROWS_AS(parse("1\t\"Jack met <e2>Jackson</e2>\"\nOther\n"), AnnotationError);
  CHECK_THROWS_AS(parse("1\t\"<e1>Jack</e1> met <e1>Jim</e1> and <e2>Jackson</e2>\"\nOther\n"),
                  AnnotationError);
  CHECK_THROWS_AS(parse("1\t\"<e1>Jack <e2>Jackson</e2> smiled</e1>\"\nOther\n"),
                  AnnotationError);
}

TEST_CASE("sample construction validates marker structure") {
  const DirectedLabel oth = DirectedLabel::undirected("Other");
  auto make = [&](const std::string& marked) { return Sample::from_marked(3, marked, oth); };

  CHECK_THROWS_AS(make("no markers at all"), AnnotationError);
  CHECK_THROWS_AS(make("<e1>a</e1> only one entity"), AnnotationError);
  CHECK_THROWS_AS(make("<e1></e1> empty <e2>b</e2>"), AnnotationError);
  CHECK_THROWS_AS(make("</e1>a<e1> reversed <e2>b</e2>"), AnnotationError);
  CHECK_THROWS_AS(make("<e1>a<e2>b</e2>c</e1>"), AnnotationError);
  CHECK_THROWS_AS(Sample::from_marked(0, "<e1>a</e1> x <e2>b</e2>", oth), ValidationError);
  CHECK_THROWS_AS(Sample::from_marked(-4, "<e1>a</e1> x <e2>b</e2>", oth), ValidationError);

  const Sample ok = make("<e2>b</e2> before <e1>a</e1>");
  CHECK(ok.e1_text() == "a");
  CHECK(ok.e2_text() == "b");
  CHECK(ok.e2_span().begin < ok.e1_span().begin);
}

TEST_CASE("render_marked reproduces marked text, closing tags first at a shared edge") {
  CHECK(render_marked("Jack is the father of Jackson", {0, 4}, {22, 29}) ==
        "<e1>Jack</e1> is the father of <e2>Jackson</e2>");
  CHECK(render_marked("ab", {0, 1}, {1, 2}) == "<e1>a</e1><e2>b</e2>");
  CHECK(render_marked("ab", {1, 2}, {0, 1}) == "<e2>a</e2><e1>b</e1>");
  const Sample adj = Sample::from_marked(1, "<e1>a</e1><e2>b</e2>",
                                         DirectedLabel::undirected("Other"));
  CHECK(adj.unmarked_text() == "ab");
}

TEST_CASE("corpus construction rejects duplicate ids and foreign labels") {
  const LabelInventory inv = family_inventory();
  const Sample a = Sample::from_marked(1, "<e1>a</e1> x <e2>b</e2>", inv.undirected());
  CHECK_THROWS_AS(Corpus({a, a}, inv), DuplicateIdError);
  const Sample foreign =
      Sample::from_marked(2, "<e1>a</e1> x <e2>b</e2>", DirectedLabel::parse("Sibling(e1,e2)"));
  CHECK_THROWS_AS(Corpus({a, foreign}, inv), UnknownLabelError);
}

TEST_CASE("prediction files parse, validate, and serialize") {
  const LabelInventory inv = family_inventory();
  const PredictionSet one = parse_predictions_text("8001\tFather-Child(e2,e1)\n", inv);
  REQUIRE(one.size() == 1);
  CHECK(one.at(8001).canonical() == "Father-Child(e2,e1)");

  CHECK(parse_predictions_text("", inv).entries().empty());

  const std::string four =
      "1\tFather-Child(e1,e2)\n"
      "2\tOther\n"
      "3\tFather-Child(e2,e1)\n"
      "9\tFather-Child(e1,e2)\n";
  const PredictionSet p = parse_predictions_text(four, inv);
  REQUIRE(p.size() == 4);
  CHECK(p.at(2).direction() == Direction::None);
  CHECK(p.at(9).direction() == Direction::E1ToE2);

  CHECK_THROWS_AS(parse_predictions_text("1 Other\n", inv), ParseError);
  CHECK_THROWS_AS(parse_predictions_text("1\tOther\n1\tOther\n", inv), DuplicateIdError);
  CHECK_THROWS_AS(parse_predictions_text("1\tSibling(e1,e2)\n", inv), UnknownLabelError);

  // Serialization follows corpus order, not numeric order.
  const std::string corpus_text =
      "3\t\"<e1>a</e1> x <e2>b</e2>\"\nOther\n\n"
      "1\t\"<e1>c</e1> y <e2>d</e2>\"\nOther\n";
  const Corpus order = parse_corpus_text(corpus_text, inv);
  const PredictionSet two =
      parse_predictions_text("1\tOther\n3\tFather-Child(e1,e2)\n", inv);
  CHECK(serialize_predictions(two, order) == "3\tFather-Child(e1,e2)\n1\tOther\n");
  CHECK_THROWS_AS(serialize_predictions(one, order), CoverageError);
}

TEST_CASE("prediction coverage checking lists offending ids") {
  rdrtest::Gen gen(11);
  const Corpus c = gen.corpus(6, LabelInventory::semeval(), true);
  PredictionSet full = gen.predictions(c);
  CHECK_NOTHROW(full.check_coverage(c));

  std::map<std::int64_t, DirectedLabel> holes(full.entries());
  holes.erase(2);
  holes.erase(5);
  holes.emplace(99, c.inventory().undirected());
  try {
    PredictionSet(holes).check_coverage(c);
    FAIL("coverage hole accepted");
  } catch (const CoverageError& e) {
    CHECK(e.missing() == std::vector<std::int64_t>{2, 5});
    CHECK(e.extra() == std::vector<std::int64_t>{99});
    CHECK(std::string(e.what()).find("99") != std::string::npos);
  }
}

TEST_CASE("random corpora round-trip through the block format") {
  rdrtest::Gen gen(202);
  const LabelInventory inv = LabelInventory::semeval();
  for (int trial = 0; trial < 50; ++trial) {
    const Corpus c = gen.corpus(1 + gen.below(30), inv, true);
    const std::string text = serialize_corpus(c);
    const Corpus back = parse_corpus_text(text, inv);
    CHECK(back == c);
    CHECK(serialize_corpus(back) == text);
  }
}

TEST_CASE("comments survive round-trips and absence stays absent") {
  const LabelInventory inv = family_inventory();
  const std::string with =
      "4\t\"<e1>Jack</e1> hugged <e2>Jackson</e2>\"\n"
      "Father-Child(e1,e2)\n"
      "Comment:\ttab kept verbatim \n";
  const Corpus c = parse_corpus_text(with, inv);
  CHECK(c.samples()[0].comment() == std::string("\ttab kept verbatim "));
  CHECK(serialize_corpus(c) == with);

  const Corpus bare = parse_corpus_text(kFatherBlock, inv);
  CHECK(serialize_corpus(bare) == kFatherBlock);
}
