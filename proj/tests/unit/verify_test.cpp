#include <gtest/gtest.h>

#include "jacobi/error.hpp"
#include "jacobi/verify.hpp"

using namespace jacobi;

class Suites : public ::testing::TestWithParam<std::string> {};

TEST_P(Suites, Pass) {
  SuiteResult r = run_suite(GetParam(), {});
  EXPECT_FALSE(r.checks.empty());
  EXPECT_TRUE(r.pass()) << format_text(r);
}

INSTANTIATE_TEST_SUITE_P(All, Suites, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Verify, Deterministic) {
  VerifyConfig cfg;
  cfg.seed = 7;
  EXPECT_EQ(format_structured(run_suite("slide", cfg)), format_structured(run_suite("slide", cfg)));
  EXPECT_THROW(run_suite("nope", cfg), Error);
}

TEST(Verify, Formats) {
  SuiteResult r{"x", {{"a", true, {{"k", "two words"}}}, {"b", false, {}}}};
  EXPECT_EQ(format_text(r), "[pass] x/a: k=\"two words\"\n[FAIL] x/b\nresult x: fail\n");
  EXPECT_EQ(format_structured(r), "suite=x check=a status=pass k=\"two words\"\nsuite=x check=b status=fail\nsuite=x result=fail\n");
}
