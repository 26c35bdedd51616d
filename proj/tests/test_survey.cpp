#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles/oracles.hpp"

using namespace spinkin;

namespace {

SurveyConfig small_config() {
  SurveyConfig c;
  c.sample_count = 60;
  c.pure_count = 20;
  c.master_seed = 11;
  c.threads = 2;
  return c;
}

}  // namespace

TEST(Survey, DeterministicAcrossThreadCounts) {
  SurveyConfig a = small_config(), b = small_config();
  b.threads = 1;
  const auto ra = run_survey(a), rb = run_survey(b);
  ASSERT_EQ(ra.size(), 80u);
  std::ostringstream oa, ob;
  write_survey_csv(oa, ra, a);
  write_survey_csv(ob, rb, a);
  EXPECT_EQ(oa.str(), ob.str());
}

TEST(Survey, RecordInvariants) {
  const auto recs = run_survey(small_config());
  for (const auto& r : recs) {
    if (r.flag == "degenerate") continue;
    EXPECT_NEAR(r.v2_red, (1 - r.measures.s_lin_reduced) / 6.0, 1e-9);
    EXPECT_NEAR(r.v2_total, r.totvar / 3.0, 1e-15);
    if (r.flag == "pure") {
      EXPECT_GE(r.excess_F, -1e-9);
      EXPECT_NEAR(r.excess_F, 2.0 / 3.0 * (r.totvar - 1), 1e-9);
    }
  }
  const auto s = summarize(recs);
  EXPECT_EQ(s.pure, 20);
  EXPECT_EQ(s.mixed + s.degenerate, 60);
}

TEST(Survey, PureRecordMatchesDirectComputation) {
  const PureState psi = random_pure(Spin(2), 4);
  const SurveyRecord r = evaluate_record(psi.density());
  EXPECT_EQ(r.flag, "pure");
  EXPECT_NEAR(r.totvar, total_variance_pure(psi), 1e-12);
  EXPECT_NEAR(r.a2_total, total_acceleration_exact(psi), 1e-10);
  EXPECT_NEAR(r.measures.concurrence, concurrence_pure(symmetric_embed(psi.density())), 1e-7);
}

TEST(Survey, Correlations) {
  EXPECT_NEAR(pearson({1, 2, 3}, {2, 4, 6}), 1.0, 1e-15);
  EXPECT_NEAR(pearson({1, 2, 3}, {3, 2, 1}), -1.0, 1e-15);
  EXPECT_NEAR(pearson({1, 2, std::nan(""), 4}, {1, 2, 100, 4}), 1.0, 1e-15);
  const RealMatrix m = correlation_matrix(run_survey(small_config()));
  const auto n = static_cast<Eigen::Index>(survey_numeric_columns().size());
  ASSERT_EQ(m.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) EXPECT_NEAR(m(i, i), 1.0, 1e-12);
  EXPECT_LT((m - m.transpose()).norm(), 1e-15);
}

TEST(Survey, FigureSpecs) {
  EXPECT_NO_THROW(figure_spec("fig4a"));
  EXPECT_NO_THROW(figure_spec("fig9e"));
  EXPECT_THROW(figure_spec("fig99"), InvalidInput);
  for (const auto& f : figure_specs()) {
    EXPECT_NO_THROW(column_value(SurveyRecord{}, f.x)) << f.id;
    EXPECT_NO_THROW(column_value(SurveyRecord{}, f.y)) << f.id;
  }
}

TEST(Survey, WritesOutputs) {
  const auto dir = std::filesystem::temp_directory_path() / "spinkin_survey_test";
  std::filesystem::remove_all(dir);
  const SurveyConfig c = small_config();
  write_survey_outputs(dir, run_survey(c), c);
  for (const char* f : {"survey.csv", "correlations.csv", "summary.txt", "fig4a.csv", "fig9e.csv"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::ifstream in(dir / "survey.csv");
  std::string line;
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') ++rows;
  EXPECT_EQ(rows, 81);  // header + records
}

TEST(Survey, BadConfig) {
  SurveyConfig c = small_config();
  c.sample_count = 0;
  EXPECT_THROW(run_survey(c), InvalidInput);
  c = small_config();
  c.full_metric = StateMetric::fubini_study;
  EXPECT_THROW(run_survey(c), InvalidInput);
}

TEST(Contour, GridValues) {
  const auto pts = contour_grid(5, 1);
  ASSERT_EQ(pts.size(), 125u);
  // (0,0,0): coherent spin-3/2 value s(4s-1)/15
  EXPECT_TRUE(pts[0].realizable);
  EXPECT_NEAR(pts[0].value, 0.5, 1e-12);
  int unrealizable = 0;
  for (const auto& p : pts) unrealizable += !p.realizable;
  EXPECT_GT(unrealizable, 0);
  EXPECT_THROW(contour_grid(1), InvalidInput);
  std::ostringstream os;
  write_contour(os, pts);
  EXPECT_EQ(os.str().substr(0, 33), "alpha,beta,gamma,realizable,value");
}
