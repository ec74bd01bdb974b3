#include <gtest/gtest.h>

#include "support.hpp"

using namespace wittlab;
using wittlab::test::from_source;

TEST(Parser, PresentationWithEquations) {
  auto src = parse_group_file("group \"D8\" presentation { gens a b; rel a^4; rel b^2; rel b^-1 a b = a^-1; }");
  const auto& p = std::get<Presentation>(src);
  EXPECT_EQ(p.name, "D8");
  EXPECT_EQ(p.generators, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(p.relators.size(), 3u);
}

TEST(Parser, BareItemsAndComments) {
  auto g = from_source("# cyclic\ngens x;\nrel x^5;\n");
  EXPECT_EQ(g.order(), 5u);
}

TEST(Parser, CommutatorBrackets) {
  auto g = from_source("group \"Z2xZ2\" presentation { gens a b; rel a^2; rel b^2; rel [a,b]; }");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Parser, Permutations) {
  auto g = from_source("group \"S3\" permutations degree 3 { gen (1 2 3); gen (1 2); }");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_group_file("group \"x\" presentation {\n  gens a;\n  rel b^2;\n}", "bad.grp");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.file(), "bad.grp");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
    EXPECT_NE(std::string(e.what()).find("bad.grp:3:"), std::string::npos);
  }
}

TEST(Parser, RejectsMalformedInput) {
  EXPECT_THROW(parse_group_file("group \"x\" presentation { gens a; rel a^; }"), ParseError);
  EXPECT_THROW(parse_group_file("group \"x\" presentation { gens a a; }"), ParseError);
  EXPECT_THROW(parse_group_file("group \"x\" permutations degree 3 { gen (1 4); }"), ParseError);
  EXPECT_THROW(parse_group_file("group \"x\" presentation { gens a; rel a^2; "), ParseError);
  EXPECT_THROW(parse_group_file("group \"x\" permutations degree 3 { gen (1 2 1); }"), ParseError);
}

TEST(Parser, RoundTrip) {
  for (const auto& path : wittlab::test::corpus_files()) {
    if (path.extension() != ".grp") continue;
    auto src = parse_group_file(read_text_file(path), path.string());
    auto again = parse_group_file(format_group_source(src));
    EXPECT_EQ(src, again) << path;
  }
}

TEST(CosetEnumeration, OrdersOfSmallGroups) {
  EXPECT_EQ(from_source("gens a b; rel a^3; rel b^2; rel (a b)^2;").order(), 6u);
  EXPECT_EQ(from_source("gens a b; rel a^4; rel b^2; rel b^-1 a b = a^-1;").order(), 8u);
  EXPECT_EQ(from_source("gens a b; rel a^4; rel b^2 = a^2; rel b^-1 a b = a^-1;").order(), 8u);
  EXPECT_EQ(from_source("gens a b; rel a^2; rel b^3; rel (a b)^5;").order(), 60u);
  EXPECT_EQ(from_source("gens a; rel a;").order(), 1u);
}

TEST(CosetEnumeration, MatchesPermutationClosure) {
  // S3 on three points and the same group from a presentation
  std::vector<std::vector<unsigned>> gens{{1, 2, 0}, {1, 0, 2}};
  EXPECT_EQ(wittlab::test::closure_size(gens), 6u);
  auto g = from_source("gens a b; rel a^3; rel b^2; rel b^-1 a b = a^-1;");
  auto h = from_source("group \"S3\" permutations degree 3 { gen (1 2 3); gen (1 2); }");
  EXPECT_EQ(g.order(), wittlab::test::closure_size(gens));
  EXPECT_TRUE(are_isomorphic(g, h));
}

TEST(CosetEnumeration, ElementOrderCounts) {
  auto d8 = wittlab::test::corpus_group("d8.grp");
  auto q8 = wittlab::test::corpus_group("q8.grp");
  EXPECT_EQ(order_profile(d8), (OrderProfile{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_EQ(order_profile(q8), (OrderProfile{{1, 1}, {2, 1}, {4, 6}}));
}

TEST(CosetEnumeration, RespectsLimit) {
  auto src = parse_group_file("gens a b; rel a^2; rel b^3; rel (a b)^5;");
  EXPECT_THROW(group_from_source(src, 20), EnumerationLimit);
}

TEST(CosetEnumeration, InfiniteGroupHitsLimit) {
  auto src = parse_group_file("gens a b; rel [a,b];");
  EXPECT_THROW(group_from_source(src, 1000), EnumerationLimit);
}

TEST(Dump, RoundTrip) {
  auto g = wittlab::test::corpus_group("sg32_7.grp");
  auto text = dump_group(g);
  ASSERT_TRUE(looks_like_dump(text));
  auto h = read_group_dump(text);
  EXPECT_EQ(g, h);
  EXPECT_EQ(dump_group(h), text);
}

TEST(Dump, RejectsBadTables) {
  EXPECT_THROW(read_group_dump("wittlab-group 1\norder 2\ngenerators 1\nrow 0 1\nend\n"), ParseError);
  EXPECT_THROW(read_group_dump("wittlab-group 1\norder 2\ngenerators 1\nrow 0 1\nrow 1 1\nend\n"), Error);
  EXPECT_THROW(read_group_dump("wittlab-group 2\n"), ParseError);
}

TEST(Dump, MissingFileIsIoError) { EXPECT_THROW(load_group("/nonexistent/x.grp"), IoError); }
