#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arborium/arbor.hpp"
#include "arborium/corpus.hpp"
#include "arborium/error.hpp"

using namespace arborium;

namespace {

const char* const kEightLabels = "{1,2}({3}({6,7},{8}),{4,5})";

std::vector<Label> range(int lo, int hi) {
  std::vector<Label> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("parse single vertex") {
  const Arbor t = parse_arbor("{1}");
  CHECK(t.size() == 1);
  CHECK(t.vertex_count() == 1);
  CHECK(t.children(t.root()).empty());
}

TEST_CASE("parse ignores whitespace and sorts labels") {
  const Arbor t = parse_arbor("  { 2 , 1 } ( {3} )\n");
  CHECK(serialize_arbor(t) == "{1,2}({3})");
}

TEST_CASE("eight-label arbor") {
  const Arbor t = parse_arbor(kEightLabels);
  CHECK(t.size() == 8);
  CHECK(t.vertex_count() == 5);
  CHECK(serialize_arbor(t) == kEightLabels);

  const std::vector<Constraint> cs = constraints(t);
  REQUIRE(cs.size() == 5);
  CHECK(cs.back() == Constraint{range(1, 8), 8});
  CHECK(std::find(cs.begin(), cs.end(), Constraint{{3, 6, 7, 8}, 4}) != cs.end());
  CHECK(std::find(cs.begin(), cs.end(), Constraint{{6, 7}, 2}) != cs.end());

  std::vector<std::string> shown;
  for (const auto& c : cs) shown.push_back(format_inequality(c));
  const std::vector<std::string> expected = {"x_6+x_7\\leq 2", "x_8\\leq 1", "x_3+x_6+x_7+x_8\\leq 4",
                                             "x_4+x_5\\leq 2", "x_1+x_2+\\cdots +x_8\\leq 8"};
  CHECK(shown == expected);
}

TEST_CASE("format_inequality") {
  CHECK(format_inequality({{1}, 1}) == "x_1\\leq 1");
  CHECK(format_inequality({{1, 2, 3}, 3}) == "x_1+x_2+x_3\\leq 3");
  CHECK(format_inequality({{2, 3, 4, 5}, 4}) == "x_2+x_3+\\cdots +x_5\\leq 4");
  CHECK(format_inequality({{9, 10, 12}, 3}) == "x_9+x_{10}+x_{12}\\leq 3");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_arbor("{1}({2},{2})"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_arbor("{1}({2},{2})"), doctest::Contains("duplicate label 2"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_arbor("{1}({3})"), doctest::Contains("missing label 2"), ValidationError);
  CHECK_THROWS_AS(parse_arbor("{}"), ParseError);
  CHECK_THROWS_AS(parse_arbor(""), ParseError);
  CHECK_THROWS_AS(parse_arbor("{1"), ParseError);
  CHECK_THROWS_AS(parse_arbor("{1}()"), ParseError);
  CHECK_THROWS_AS(parse_arbor("{1}({2}"), ParseError);
  CHECK_THROWS_AS(parse_arbor("{1} {2}"), ParseError);
  CHECK_THROWS_AS(parse_arbor("{0}"), ValidationError);
  CHECK_THROWS_AS(parse_arbor("{1,x}"), ParseError);
  CHECK_THROWS_AS(parse_arbor("{99999999999999999999}"), ParseError);

  try {
    parse_arbor("{1}({2},)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("arbor constructor validation") {
  using V = Arbor::Vertex;
  CHECK_NOTHROW(Arbor({V{{1}, {1}}, V{{2}, {}}}, 0));
  CHECK_THROWS_AS(Arbor({V{{1}, {1}}, V{{2}, {0}}}, 0), ValidationError);  // cycle
  CHECK_THROWS_AS(Arbor({V{{1}, {}}, V{{2}, {}}}, 0), ValidationError);    // unreachable vertex
  CHECK_THROWS_AS(Arbor({V{{1}, {1, 1}}, V{{2}, {}}}, 0), ValidationError);
  CHECK_THROWS_AS(Arbor({V{{1}, {}}}, 3), ValidationError);
  CHECK_THROWS_AS(Arbor({V{{}, {}}}, 0), ValidationError);
  CHECK_THROWS_AS(Arbor({}, 0), ValidationError);
}

TEST_CASE("make_tn") {
  CHECK(serialize_arbor(make_tn(1)) == "{1}");
  CHECK(serialize_arbor(make_tn(2)) == "{1}({2})");
  CHECK(serialize_arbor(make_tn(3)) == "{1}({2},{3})");
  CHECK(serialize_arbor(make_tn(5)) == "{1}({2},{3},{4},{5})");
  CHECK_THROWS_AS(make_tn(0), ValidationError);
}

TEST_CASE("constraints of small arbors") {
  CHECK(constraints(make_tn(1)) == std::vector<Constraint>{{{1}, 1}});
  CHECK(constraints(make_tn(2)) == std::vector<Constraint>{{{2}, 1}, {{1, 2}, 2}});
}

TEST_CASE("serialization orders children by smallest label") {
  const Arbor t = parse_arbor("{3}({5},{1,4}({2}))");
  CHECK(serialize_arbor(t) == "{3}({1,4}({2}),{5})");
  CHECK(t == parse_arbor("{3}({1,4}({2}),{5})"));
  CHECK(serialize_arbor(with_reversed_children(t)) == serialize_arbor(t));
}

TEST_CASE("tree accessors") {
  const Arbor t = parse_arbor(kEightLabels);
  const VertexId three = t.vertex_of(3);
  CHECK(t.subtree_size(three) == 4);
  CHECK(t.subtree_labels(three) == std::vector<Label>{3, 6, 7, 8});
  CHECK(t.parent(t.vertex_of(6)) == three);
  CHECK(t.parent(t.root()) == t.root());
  const auto order = t.post_order();
  CHECK(order.size() == t.vertex_count());
  CHECK(order.back() == t.root());
}

TEST_CASE("random arbors: round trip, laminarity, partition") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(draw_below(rng, 10));
    const Arbor t = random_arbor(rng, n);
    CAPTURE(serialize_arbor(t));
    CHECK(t.size() == n);
    CHECK(parse_arbor(serialize_arbor(t)) == t);
    CHECK(serialize_arbor(parse_arbor(serialize_arbor(t))) == serialize_arbor(t));

    std::size_t total = 0;
    for (VertexId v = 0; v < t.vertex_count(); ++v) total += t.labels(v).size();
    CHECK(total == static_cast<std::size_t>(n));

    const auto cs = constraints(t);
    CHECK(std::count_if(cs.begin(), cs.end(), [&](const Constraint& c) { return c.bound == n; }) == 1);
    for (const auto& a : cs) {
      CHECK(a.bound == static_cast<int>(a.support.size()));
      for (const auto& b : cs) {
        const std::set<Label> sa(a.support.begin(), a.support.end());
        const std::set<Label> sb(b.support.begin(), b.support.end());
        const bool a_in_b = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
        const bool b_in_a = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
        std::vector<Label> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
        CHECK((a_in_b || b_in_a || common.empty()));
      }
    }
  }
}

TEST_CASE("corpus is deterministic") {
  const auto a = random_corpus(20240611, 24, 6);
  const auto b = random_corpus(20240611, 24, 6);
  REQUIRE(a.size() == 24);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i].size() == static_cast<int>(i % 6) + 1);
  }
  CHECK_THROWS_AS(random_corpus(1, 3, 0), ValidationError);
}
