#include <gtest/gtest.h>

#include "hh1/error.hpp"
#include "hh1/input.hpp"

using namespace hh1;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    build_group(parse_group_spec(text));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::Precondition;
}

}  // namespace

TEST(Input, CatalogEntries) {
  const GroupSpec s = parse_group_spec(R"({"type":"catalog","name":"heisenberg","params":{"p":3}})");
  EXPECT_EQ(s.kind, GroupSpec::Kind::Catalog);
  EXPECT_EQ(s.describe(), "heisenberg(p=3)");
  EXPECT_EQ(build_group(s).order(), 27u);

  const Group m = build_group(parse_group_spec(R"({"type":"catalog","name":"modular","params":{"p":3}})"));
  EXPECT_EQ(m.order(), 27u);
  EXPECT_EQ(m.exponent(), 9u);
  EXPECT_FALSE(m.is_abelian());

  for (const char* text :
       {R"({"type":"catalog","name":"c9_rtimes_c9"})", R"({"type":"catalog","name":"sl23"})",
        R"({"type":"catalog","name":"quaternion8","params":{}})",
        R"({"type":"catalog","name":"dihedral","params":{"order":16}})",
        R"({"type":"catalog","name":"elem_ab","params":{"p":2,"n":3}})",
        R"({"type":"catalog","name":"wreath_cp_cp","params":{"p":2}})"})
    EXPECT_NO_THROW(build_group(parse_group_spec(text))) << text;
}

TEST(Input, ProductOfTwoCyclics) {
  const GroupSpec s = parse_group_spec(R"({"type":"product","factors":[
      {"type":"catalog","name":"cyclic","params":{"n":2}},
      {"type":"catalog","name":"cyclic","params":{"n":2}}]})");
  const Group g = build_group(s);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.exponent(), 2u);
  EXPECT_EQ(s.describe(), "cyclic(n=2) x cyclic(n=2)");
}

TEST(Input, PermutationsAndTables) {
  const Group s3 = build_group(parse_group_spec(
      R"({"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]})"));
  EXPECT_EQ(s3.order(), 6u);
  const Group c3 = build_group(parse_group_spec(
      R"({"type":"cayley","table":[[0,1,2],[1,2,0],[2,0,1]]})"));
  EXPECT_EQ(c3.order(), 3u);
}

TEST(Input, Errors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of("[]"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"name":"sl23"})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"catalog","name":"monster"})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"catalog","name":"heisenberg"})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"catalog","name":"heisenberg","params":{"p":3,"q":1}})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"catalog","name":"heisenberg","params":{"p":"3"}})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"catalog","name":"heisenberg","params":{"p":4}})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"permutation","degree":3,"generators":[[0,0,1]]})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"permutation","degree":3,"generators":[[0,1,-1]]})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"cayley","table":[[0,1],[1,1]]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"product","factors":[]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"ring"})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"type":"catalog","name":"cyclic","params":{"n":20000}})"),
            ErrorKind::CapExceeded);
}

TEST(Input, NestingDepthLimit) {
  const std::string leaf = R"({"type":"catalog","name":"cyclic","params":{"n":2}})";
  auto wrap = [](const std::string& inner) {
    return R"({"type":"product","factors":[)" + inner + "]}";
  };
  std::string ok = wrap(wrap(wrap(leaf)));          // depth 4
  std::string too_deep = wrap(wrap(wrap(wrap(leaf))));  // depth 5
  EXPECT_EQ(build_group(parse_group_spec(ok)).order(), 2u);
  EXPECT_EQ(kind_of(too_deep), ErrorKind::InvalidInput);
}
