#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/serialize.hpp"

using namespace weylchar;
using fixtures::mp;

TEST(Json, MultiPartitionRoundTrip) {
  auto la = parse_multipartition("[[3,2],[3,1],[1,1]]");
  EXPECT_EQ(la, mp({{3, 2}, {3, 1}, {1, 1}}));
  EXPECT_EQ(dump(to_json(la)), "[[3,2],[3,1],[1,1]]");
  EXPECT_EQ(dump(to_json(mp({{}, {2}}))), "[[],[2]]");
  EXPECT_EQ(dump(to_json(MultiComposition::from_partition(mp({{2}, {}}), ShapeBound({2, 1})))), "[[2,0],[0]]");
}

TEST(Json, MalformedInputIsInputError) {
  for (const char* bad : {"", "[[1],[", "[[1.5]]", "[[1],[2,3]]", "[[-1]]", "[1,2]", "{}", "[]", "[[\"a\"]]",
                          "[[1e3]]", "[[99999999999999999999999]]"})
    EXPECT_THROW(parse_multipartition(bad), InputError) << bad;
}

TEST(Json, BigIntegersSurvive) {
  auto j = parse_json("[123456789012345678901234567890,-98765432109876543210987,5]");
  EXPECT_EQ(bigint_from_json(j[0]), BigInt("123456789012345678901234567890"));
  EXPECT_EQ(bigint_from_json(j[1]), BigInt("-98765432109876543210987"));
  EXPECT_EQ(bigint_from_json(j[2]), 5);
  EXPECT_THROW(parse_json("[1.0]"), InputError);
  EXPECT_THROW(bigint_from_json(Json("12")), InputError);
}

TEST(Json, BoundAndGrouping) {
  EXPECT_EQ(parse_bound("2,3").values(), (std::vector<int>{2, 3}));
  for (const char* bad : {"", "2,", ",2", "a", "2,,3", "0", "-1"}) EXPECT_THROW(parse_bound(bad), InputError) << bad;
  EXPECT_EQ(parse_grouping("1,2").sizes(), (std::vector<int>{1, 2}));
}

TEST(Json, TableauIsOneBased) {
  auto t = fixtures::reading_example();
  auto j = to_json(t);
  EXPECT_EQ(dump(j["shape"]), "[[3,2],[3,1],[1,1]]");
  EXPECT_EQ(dump(j["entries"][0]), "[1,1,3,1,3]");  // largest cell first: (1,1,3) holds (1,3)
  EXPECT_EQ(tableau_from_json(j), t);
  EXPECT_EQ(dump(j).rfind("{\"shape\":", 0), 0u);
  auto missing = j;
  missing["entries"].erase(0);
  EXPECT_THROW(tableau_from_json(missing), InputError);
}

TEST(Json, WordIsOneBased) {
  CrystalWord w{{{0, 0, 1}, {}}};
  EXPECT_EQ(dump(to_json(w)), "[[1,1,2],[]]");
  EXPECT_EQ(word_from_json(to_json(w)), w);
}

TEST(Matrix, JsonRoundTripAndTsv) {
  auto b = build_beta_matrix(2, ShapeBound({2, 2}));
  auto text = write_matrix_json(b);
  EXPECT_EQ(text,
            "{\"n\":2,\"r\":2,\"m\":[2,2],\"order\":[[[2],[]],[[1,1],[]],[[1],[1]],[[],[2]],[[],[1,1]]],"
            "\"rows\":[[1,0,1,1,0],[0,1,1,0,1],[0,0,1,1,1],[0,0,0,1,0],[0,0,0,0,1]]}");
  auto back = parse_matrix(text);
  EXPECT_EQ(write_matrix_json(back), text);
  auto tsv = write_matrix_tsv(back);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "index\t[[2],[]]\t[[1,1],[]]\t[[1],[1]]\t[[],[2]]\t[[],[1,1]]");
}

TEST(Matrix, BigEntriesAndValidation) {
  const std::string big = "{\"n\":1,\"r\":1,\"m\":[1],\"order\":[[[1]]],\"rows\":[[340282366920938463463374607431768211456]]}";
  auto m = parse_matrix(big);
  EXPECT_EQ(m.values(0, 0), BigInt(1) << 128);
  EXPECT_EQ(write_matrix_json(m), big);
  EXPECT_THROW(parse_matrix("{\"n\":1,\"r\":1,\"m\":[1],\"order\":[[[1]]],\"rows\":[[1,2]]}"), InputError);
  EXPECT_THROW(parse_matrix("{\"n\":1,\"r\":2,\"m\":[1],\"order\":[[[1]]],\"rows\":[[1]]}"), InputError);
  EXPECT_THROW(parse_matrix("{\"n\":2,\"r\":1,\"m\":[2],\"order\":[[[1,1]],[[2]]],\"rows\":[[1,0],[0,1]]}"), InputError);
  EXPECT_THROW(parse_matrix("[1]"), InputError);
}

TEST(Expansion, Format) {
  SchurExpansion e(2, 2, Basis::tilde);
  e.add(mp({{}, {2}}), BigInt(1) << 80);
  e.add(mp({{2}, {}}), -3);
  EXPECT_EQ(write_expansion(e),
            "{\"basis\":\"tilde\",\"degree\":2,\"terms\":[{\"index\":[[2],[]],\"coeff\":-3},"
            "{\"index\":[[],[2]],\"coeff\":1208925819614629174706176}]}");
  MonomialPoly p(1, ShapeBound({2}));
  p.add(MultiComposition({{0, 1}}), 2);
  p.add(MultiComposition({{1, 0}}), 1);
  EXPECT_EQ(write_expansion(p),
            "{\"basis\":\"monomial\",\"degree\":1,\"m\":[2],\"terms\":[{\"index\":[[1,0]],\"coeff\":1},"
            "{\"index\":[[0,1]],\"coeff\":2}]}");
}

TEST(Expansion, ConjectureReportFormat) {
  ConjectureReport r;
  r.n_max = 2;
  r.r = 2;
  r.scanned = 3;
  r.c1_violations.push_back(ConjectureHit{mp({{1}, {}}), mp({{}, {1}}), mp({{1}, {1}}), -1});
  EXPECT_EQ(write_conjecture_report(r),
            "{\"n_max\":2,\"r\":2,\"scanned\":3,\"c1_violations\":[{\"lambda\":[[1],[]],\"mu\":[[],[1]],"
            "\"nu\":[[1],[1]],\"coeff\":-1}],\"c2_violations\":[]}");
}

TEST(Crystal, DotLabels) {
  auto g = crystal_graph(SkewShape(mp({{1}, {1}})), ShapeBound({2, 2}));
  auto dot = write_crystal_dot(g);
  EXPECT_EQ(dot.rfind("digraph crystal {", 0), 0u);
  EXPECT_NE(dot.find("label=\"((1),(1))\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"((),(2))\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"((),(1,1))\""), std::string::npos);
  EXPECT_NE(dot.find("[label=\"f(1,1)\"]"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"f(1,2)\"]"), std::string::npos);
  EXPECT_EQ(write_crystal_summary(g),
            "[{\"highest_weight\":[[1],[1]],\"size\":4},{\"highest_weight\":[[],[2]],\"size\":3},"
            "{\"highest_weight\":[[],[1,1]],\"size\":1}]");
}
