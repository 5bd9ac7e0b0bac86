#include <gtest/gtest.h>

#include <string>

#include "jacobi/jacobi.h"

namespace {

struct Session {
  jd_session* s = nullptr;
  Session() { EXPECT_EQ(jd_session_new(&s), JD_OK); }
  ~Session() { jd_session_free(s); }
};

std::string take(char* p) {
  std::string out = p ? p : "";
  jd_string_free(p);
  return out;
}

}  // namespace

TEST(CApi, Dim) {
  Session x;
  int d = -1;
  ASSERT_EQ(jd_dim(x.s, "S1", 4, "full", &d), JD_OK);
  EXPECT_EQ(d, 6);
  ASSERT_EQ(jd_dim(x.s, "S1", 4, "chord", &d), JD_OK);
  EXPECT_EQ(d, 6);
  EXPECT_EQ(jd_dim(x.s, "S1", 2, "bogus", &d), JD_DOMAIN);
  EXPECT_NE(std::string(jd_last_error(x.s)), "");
  EXPECT_EQ(jd_dim(x.s, "Q", 2, nullptr, &d), JD_PARSE);
  EXPECT_EQ(jd_dim(x.s, "S1", 2, nullptr, nullptr), JD_INVALID_ARGUMENT);
  ASSERT_EQ(jd_set_degree(x.s, 2), JD_OK);
  EXPECT_EQ(jd_dim(x.s, "S1", 3, nullptr, &d), JD_CAP);
  EXPECT_EQ(jd_set_degree(x.s, 40), JD_CAP);
}

TEST(CApi, ReduceAndErrors) {
  Session x;
  char* out = nullptr;
  const char* chord = "support: I\ncolors: []\nv0: U M 0 0\nv1: U M 0 1\ne: (v0.0, v1.0)\n";
  ASSERT_EQ(jd_reduce(x.s, chord, &out), JD_OK);
  EXPECT_NE(take(out).find("degree 1: dim 1, coordinates 1"), std::string::npos);
  out = nullptr;
  EXPECT_EQ(jd_reduce(x.s, "support: I\ncolors: []\nv0: Q\n", &out), JD_PARSE);
  EXPECT_EQ(out, nullptr);
  EXPECT_NE(std::string(jd_last_error(x.s)).find("line 3"), std::string::npos);
}

TEST(CApi, VerifyAndCertificates) {
  Session x;
  ASSERT_EQ(jd_set_format(x.s, JD_FORMAT_STRUCTURED), JD_OK);
  char* out = nullptr;
  ASSERT_EQ(jd_verify(x.s, "vogel", 0, &out), JD_OK);
  EXPECT_NE(take(out).find("suite=vogel result=pass"), std::string::npos);
  EXPECT_EQ(jd_verify(x.s, "nope", 0, &out), JD_DOMAIN);
  ASSERT_EQ(jd_denom_check(x.s, "D-odd", 1, &out), JD_VERIFY_FAILED);
  EXPECT_NE(take(out).find("witness=\"k=4 prime 3 exponent 14 > 12\""), std::string::npos);
  ASSERT_EQ(jd_denom_bound(x.s, "d", 3, &out), JD_OK);
  EXPECT_NE(take(out).find("value=3840"), std::string::npos);
  EXPECT_EQ(jd_denom_bound(x.s, "d", 2, &out), JD_DOMAIN);
  EXPECT_GT(jd_suite_count(), 10);
  EXPECT_EQ(jd_suite_name(jd_suite_count()), nullptr);
}

TEST(CApi, AnomalyInversion) {
  Session x;
  char* out = nullptr;
  ASSERT_EQ(jd_anomaly_invert_symbolic(x.s, 6, 1u << 1, &out), JD_OK);
  std::string text = take(out);
  EXPECT_NE(text.find("B_2 = 0\nB_4 = -A_4\nB_6 = -A_6\n"), std::string::npos);
  EXPECT_NE(text.find("forward identity: exact"), std::string::npos);
}

TEST(CApi, Cache) {
  Session x;
  char* out = nullptr;
  EXPECT_EQ(jd_cache_stats(x.s, &out), JD_INVALID_ARGUMENT);
  std::string dir = ::testing::TempDir() + "jd_capi_cache";
  ASSERT_EQ(jd_set_cache_dir(x.s, dir.c_str()), JD_OK);
  int removed = -1;
  ASSERT_EQ(jd_cache_purge(x.s, &removed), JD_OK);
  int d = 0;
  ASSERT_EQ(jd_dim(x.s, "I", 3, "full", &d), JD_OK);
  ASSERT_EQ(jd_cache_stats(x.s, &out), JD_OK);
  EXPECT_EQ(take(out).find(" 0 files"), std::string::npos);
  ASSERT_EQ(jd_cache_purge(x.s, &removed), JD_OK);
  EXPECT_GT(removed, 0);
  EXPECT_STREQ(jd_version(), JD_VERSION);
}
