#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mfpoly/verify.hpp"

namespace mfpoly {
namespace {

TEST(CrossCheck, SmallRangeAllGreen) {
  const VerificationReport report = cross_check(0, 5);
  EXPECT_TRUE(report.overall);
  ASSERT_EQ(report.checks.size(), 6u);
  for (const EllCheck& check : report.checks) {
    EXPECT_TRUE(check.ok()) << "ell=" << check.ell << " " << check.diff;
    EXPECT_TRUE(check.diff.empty());
  }
}

TEST(CrossCheck, DegenerateRange) {
  const VerificationReport report = cross_check(0, 0);
  EXPECT_TRUE(report.overall);
  EXPECT_EQ(report.checks.size(), 1u);
}

TEST(CrossCheck, ReportsAreIdempotent) {
  const VerificationReport first = cross_check(0, 4);
  const VerificationReport second = cross_check(0, 4);
  ASSERT_EQ(first.checks.size(), second.checks.size());
  EXPECT_EQ(first.overall, second.overall);
  for (std::size_t i = 0; i < first.checks.size(); ++i) {
    EXPECT_EQ(first.checks[i].routes_agree, second.checks[i].routes_agree);
    EXPECT_EQ(first.checks[i].imag_residual_zero, second.checks[i].imag_residual_zero);
    EXPECT_EQ(first.checks[i].imag_identity_zero, second.checks[i].imag_identity_zero);
    EXPECT_EQ(first.checks[i].zero_at_zero_coupling, second.checks[i].zero_at_zero_coupling);
    EXPECT_EQ(first.checks[i].degree_parity_ok, second.checks[i].degree_parity_ok);
    EXPECT_EQ(first.checks[i].diff, second.checks[i].diff);
  }
}

TEST(CrossCheck, RenderedReports) {
  const VerificationReport report = cross_check(1, 2);
  const std::string text = render_text(report);
  EXPECT_NE(text.find("overall: PASS"), std::string::npos);
  const std::string json = render_json(report);
  EXPECT_NE(json.find("\"overall\":true"), std::string::npos);
  EXPECT_NE(json.find("\"ell\":2"), std::string::npos);
}

TEST(GoldenCheck, PassesAgainstShippedFiles) {
  std::string details;
  EXPECT_TRUE(golden_check(MFPOLY_GOLDEN_DIR, &details)) << details;
  EXPECT_TRUE(details.empty());
}

TEST(GoldenCheck, NamesTheMismatchedFile) {
  const auto dir = std::filesystem::temp_directory_path() / "mfpoly_bad_golden";
  std::filesystem::create_directories(dir);
  for (int ell = 1; ell <= 4; ++ell) {
    std::filesystem::copy_file(std::filesystem::path(MFPOLY_GOLDEN_DIR) / ("r" + std::to_string(ell) + ".json"),
                               dir / ("r" + std::to_string(ell) + ".json"),
                               std::filesystem::copy_options::overwrite_existing);
    std::filesystem::copy_file(std::filesystem::path(MFPOLY_GOLDEN_DIR) / ("p" + std::to_string(ell) + ".json"),
                               dir / ("p" + std::to_string(ell) + ".json"),
                               std::filesystem::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "r2.json") << "{\"vars\":[\"a\",\"lambda\"],\"terms\":[]}\n";
  std::string details;
  EXPECT_FALSE(golden_check(dir, &details));
  EXPECT_NE(details.find("r2.json"), std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mfpoly
