#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "antipodal/errors.hpp"
#include "antipodal/harness.hpp"

using namespace antipodal;

namespace {

std::vector<SweepRecord> synthetic(std::span<const double> eps, double scale, double power) {
  std::vector<SweepRecord> rows;
  for (const double e : eps) {
    SweepRecord r;
    r.kind = "synthetic";
    r.epsilon = e;
    r.size = 100;
    r.ratio = scale * std::pow(e, power);
    r.antipodes = 1;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST(Grids, StandardAndGeometric) {
  EXPECT_EQ(standard_ratio_grid(), (std::vector<double>{0.08, 0.04, 0.02, 0.01, 0.005}));
  const auto spectral = standard_spectral_grid();
  ASSERT_EQ(spectral.size(), 5u);
  EXPECT_EQ(spectral.front(), 1.0 / 64);
  EXPECT_EQ(spectral.back(), 1.0 / 1024);
  EXPECT_EQ(geometric_grid(0.08, 2.0, 5), standard_ratio_grid());
  EXPECT_THROW(geometric_grid(0.08, 1.0, 3), InvalidArgument);
  EXPECT_THROW(validate_grid(std::vector<double>{0.01, 0.02}), InvalidArgument);
  EXPECT_THROW(validate_grid(std::vector<double>{0.2, 0.1}), InvalidArgument);
  EXPECT_NO_THROW(validate_grid(std::vector<double>{0.1, 0.05}));
}

TEST(Fit, ExactPowerLaws) {
  const auto eps = standard_ratio_grid();
  const auto linear = fit_exponent(synthetic(eps, 1.0, 1.0), SweepField::ratio);
  EXPECT_NEAR(linear.alpha, 1.0, 1e-12);
  EXPECT_LE(linear.residual, 1e-12);
  const auto root = fit_exponent(synthetic(eps, 7.0, 0.5), SweepField::ratio);
  EXPECT_NEAR(root.alpha, 0.5, 1e-12);
  EXPECT_NEAR(root.intercept, std::log(7.0), 1e-12);
  EXPECT_LE(root.residual, 1e-12);
  EXPECT_EQ(root.points_used, 5u);
  for (const double p : {-0.75, -0.5, 0.25, 2.0}) {
    EXPECT_NEAR(fit_exponent(synthetic(geometric_grid(0.1, 1.7, 8), 0.3, p), SweepField::ratio).alpha, p,
                1e-12);
  }
}

TEST(Fit, RefusesVacuousAndShortSweeps) {
  auto rows = synthetic(standard_ratio_grid(), 1.0, 0.5);
  for (auto& r : rows) {
    r.vacuous = true;
    r.antipodes = 0;
    r.ratio.reset();
  }
  try {
    fit_exponent(rows, SweepField::ratio);
    FAIL();
  } catch (const FitError& e) {
    EXPECT_NE(std::string(e.what()).find("non-vacuous"), std::string::npos);
  }
  const std::vector<double> two{0.1, 0.05};
  EXPECT_THROW(fit_power_law(two, two), FitError);
  const std::vector<double> eps{0.1, 0.05, 0.025};
  const std::vector<double> bad{1.0, 0.0, 2.0};
  EXPECT_THROW(fit_power_law(eps, bad), FitError);
}

TEST(SweepRatio, CircleRowsAndExponent) {
  const auto rows = sweep_ratio({.kind = GeneratorKind::circle, .n = 2000}, standard_ratio_grid());
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.vacuous);
    EXPECT_FALSE(r.undersampled);
    EXPECT_EQ(r.kind, "circle");
  }
  EXPECT_EQ(*rows[3].neighbors, 12000u);
  EXPECT_EQ(*rows[3].antipodes, 181000u);
  const auto fit = fit_exponent(rows, SweepField::ratio);
  EXPECT_GE(fit.alpha, 0.4);
  EXPECT_LE(fit.alpha, 0.6);
  EXPECT_TRUE(check_ratio_sweep(rows, GeneratorKind::circle).empty());
}

TEST(SweepRatio, FlagsUndersampledAndVacuousRows) {
  const auto rows = sweep_ratio({.kind = GeneratorKind::random_disk, .n = 200, .seed = 2},
                                std::vector<double>{0.1, 0.01});
  EXPECT_FALSE(rows[0].undersampled);
  EXPECT_TRUE(rows[1].undersampled);
  for (const auto& r : rows) {
    EXPECT_EQ(r.kind, "random-disk@2");
    EXPECT_EQ(r.vacuous, *r.antipodes == 0);
    EXPECT_EQ(r.margin.has_value(), !r.vacuous);
  }
}

TEST(SweepSpectral, SmallGridChainOrdered) {
  const auto rows = sweep_spectral(std::vector<double>{1.0 / 16, 1.0 / 32, 1.0 / 64});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(check_spectral_sweep(rows).empty());
  for (const auto& r : rows) {
    EXPECT_LE(*r.lambda1, *r.cw * (1 + kChainSlack));
    EXPECT_LE(*r.cw, *r.sqrtdeg * (1 + kChainSlack));
    EXPECT_LE(*r.sqrtdeg, *r.trace * (1 + kChainSlack));
  }
}

TEST(MarginReport, SupersetNeverRaisesMinimum) {
  const auto grid = standard_ratio_grid();
  const std::vector<GeneratorSpec> base{{.kind = GeneratorKind::circle, .n = 2000},
                                        {.kind = GeneratorKind::arc_center, .n = 2000}};
  const auto report = theorem_margin_report(base, grid);
  EXPECT_GE(report.minimum, kMarginFloor);
  EXPECT_NEAR(report.minimum, 1.0953, 1e-4);
  auto more = base;
  more.push_back({.kind = GeneratorKind::random_disk, .n = 2000, .seed = 1});
  EXPECT_LE(theorem_margin_report(more, grid).minimum, report.minimum);
}

TEST(MarginReport, AllVacuousRefused) {
  // Three random points in the disk have no pair at distance >= 0.99.
  const std::vector<GeneratorSpec> specs{{.kind = GeneratorKind::random_disk, .n = 3, .seed = 1}};
  EXPECT_THROW(theorem_margin_report(specs, std::vector<double>{0.01, 0.005}), VacuousRatio);
}

TEST(Csv, HeaderFlagsAndDeterminism) {
  const auto rows = sweep_ratio({.kind = GeneratorKind::reuleaux_boundary, .n = 300, .seed = 4},
                                std::vector<double>{0.08, 0.02, 0.01});
  const auto a = to_csv(rows);
  const auto b = to_csv(sweep_ratio({.kind = GeneratorKind::reuleaux_boundary, .n = 300, .seed = 4},
                                    std::vector<double>{0.08, 0.02, 0.01}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')),
            "kind,epsilon,n,neighbors,antipodes,ratio,lambda1,cw,sqrtdeg,trace,margin,flags");
  EXPECT_NE(a.find("reuleaux@4,0.08,300,"), std::string::npos);
  EXPECT_NE(a.find("undersampled"), std::string::npos);

  SweepRecord r;
  r.kind = "x";
  r.epsilon = 0.1;
  r.size = 2;
  r.antipodes = 0;
  r.neighbors = 0;
  r.vacuous = true;
  r.undersampled = true;
  std::ostringstream out;
  write_csv(out, std::span<const SweepRecord>(&r, 1));
  EXPECT_NE(out.str().find("x,0.1,2,0,0,,,,,,,vacuous;undersampled\n"), std::string::npos);
}

TEST(SweepField, NamesRoundTrip) {
  for (const auto f : {SweepField::neighbors, SweepField::antipodes, SweepField::ratio,
                       SweepField::lambda1, SweepField::cw, SweepField::sqrtdeg, SweepField::trace,
                       SweepField::margin}) {
    EXPECT_EQ(parse_sweep_field(to_string(f)), f);
  }
  EXPECT_FALSE(parse_sweep_field("bogus").has_value());
}
