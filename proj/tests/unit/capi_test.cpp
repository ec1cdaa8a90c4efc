#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "hh1/hh1.h"

namespace {

struct Handles {
  hh1_group* g = nullptr;
  hh1_report* r = nullptr;
  ~Handles() {
    hh1_report_free(r);
    hh1_group_free(g);
  }
};

}  // namespace

TEST(CApi, AnalyzeAndSerialize) {
  Handles h;
  ASSERT_EQ(hh1_group_from_json(R"({"type":"catalog","name":"heisenberg","params":{"p":3}})", &h.g),
            HH1_OK);
  size_t order = 0;
  ASSERT_EQ(hh1_group_order(h.g, &order), HH1_OK);
  EXPECT_EQ(order, 27u);
  ASSERT_EQ(hh1_analyze(h.g, 3, 1, &h.r), HH1_OK);
  hh1_verdict v;
  ASSERT_EQ(hh1_report_verdict(h.r, &v), HH1_OK);
  EXPECT_EQ(v, HH1_SOLVABLE);
  size_t edges = 0;
  ASSERT_EQ(hh1_report_gamma_edges(h.r, &edges), HH1_OK);
  EXPECT_EQ(edges, 8u);

  char* json = nullptr;
  ASSERT_EQ(hh1_report_serialize(h.r, HH1_FORMAT_JSON, &json), HH1_OK);
  EXPECT_NE(std::string(json).find("\"verdict\": \"SOLVABLE\""), std::string::npos);
  hh1_string_free(json);

  char* text = nullptr;
  ASSERT_EQ(hh1_report_serialize(h.r, HH1_FORMAT_TEXT, &text), HH1_OK);
  EXPECT_NE(std::string(text).find("verdict: SOLVABLE"), std::string::npos);
  hh1_string_free(text);

  char* dot = nullptr;
  ASSERT_EQ(hh1_report_dot(h.r, "gamma", &dot), HH1_OK);
  EXPECT_EQ(std::string(dot).rfind("digraph gamma {", 0), 0u);
  hh1_string_free(dot);
  EXPECT_EQ(hh1_report_dot(h.r, "gamma2", &dot), HH1_ERR_INPUT);
  EXPECT_EQ(dot, nullptr);
}

TEST(CApi, ErrorCodes) {
  hh1_group* g = nullptr;
  EXPECT_EQ(hh1_group_from_json("{", &g), HH1_ERR_INPUT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(hh1_last_error()), "");
  EXPECT_EQ(hh1_group_from_json(R"({"type":"catalog","name":"cyclic","params":{"n":50000}})", &g),
            HH1_ERR_CAP);
  EXPECT_EQ(hh1_group_from_json(nullptr, &g), HH1_ERR_ARGUMENT);
  EXPECT_EQ(hh1_analyze(nullptr, 3, 0, nullptr), HH1_ERR_ARGUMENT);

  Handles h;
  ASSERT_EQ(hh1_group_from_json(R"({"type":"catalog","name":"cyclic","params":{"n":4100}})", &h.g),
            HH1_OK);
  EXPECT_STREQ(hh1_last_error(), "");
  EXPECT_EQ(hh1_analyze(h.g, 2, 0, &h.r), HH1_ERR_CAP);
  EXPECT_EQ(hh1_analyze(h.g, 6, 0, &h.r), HH1_ERR_INPUT);
  EXPECT_EQ(h.r, nullptr);
}

TEST(CApi, WriteDotFiles) {
  Handles h;
  ASSERT_EQ(hh1_group_from_json(
                R"({"type":"product","factors":[{"type":"catalog","name":"cyclic","params":{"n":2}},{"type":"catalog","name":"cyclic","params":{"n":2}}]})",
                &h.g),
            HH1_OK);
  ASSERT_EQ(hh1_analyze(h.g, 2, 0, &h.r), HH1_OK);
  const auto dir = std::filesystem::temp_directory_path() / "hh1_capi_dot";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(hh1_report_write_dot(h.r, dir.string().c_str()), HH1_OK);
  for (const char* f : {"gamma.dot", "gamma_reduced.dot", "gamma2.dot"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::filesystem::remove_all(dir);
}

TEST(CApi, Version) { EXPECT_STREQ(hh1_version(), "0.1.0"); }
