#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antipodal/generators.hpp"
#include "antipodal/spectral.hpp"

namespace antipodal {

/// Smallest ratio margin observed over the standard configurations at
/// n = 2000 on the standard grid, rounded down. Frozen from the run recorded
/// in data/theorem_margin_n2000.csv.
inline constexpr double kMarginFloor = 0.05;

/// Rows with n * eps below this are flagged as undersampled.
inline constexpr double kMinPointsPerEpsilon = 10.0;

/// One (configuration, epsilon) row. Ratio sweeps fill the count columns,
/// spectral sweeps the bound columns; `size` is n or k respectively.
struct SweepRecord {
  std::string kind;
  double epsilon{0.0};
  std::size_t size{0};
  std::optional<std::uint64_t> neighbors;
  std::optional<std::uint64_t> antipodes;
  std::optional<double> ratio;
  std::optional<double> lambda1;
  std::optional<double> cw;
  std::optional<double> sqrtdeg;
  std::optional<double> trace;
  std::optional<double> margin;
  bool vacuous{false};       // no antipodal pairs; excluded from fits
  bool undersampled{false};  // n * eps < kMinPointsPerEpsilon
};

enum class SweepField { neighbors, antipodes, ratio, lambda1, cw, sqrtdeg, trace, margin };

std::string_view to_string(SweepField field);
std::optional<SweepField> parse_sweep_field(std::string_view name);

/// Value of `field` in `record`, if present.
std::optional<double> field_value(const SweepRecord& record, SweepField field);

struct ExponentFit {
  double alpha{0.0};      // slope of log(field) against log(eps)
  double intercept{0.0};
  double residual{0.0};   // max |log residual|
  std::size_t points_used{0};
};

/// Raised when a row fails; `partial` holds the rows completed before it.
class SweepError : public std::runtime_error {
 public:
  SweepError(const std::string& what, std::vector<SweepRecord> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::vector<SweepRecord>& partial() const noexcept { return partial_; }

 private:
  std::vector<SweepRecord> partial_;
};

/// start, start/factor, start/factor^2, ... (count values, factor > 1).
std::vector<double> geometric_grid(double start, double factor, std::size_t count);

/// {0.08, 0.04, 0.02, 0.01, 0.005}.
std::vector<double> standard_ratio_grid();

/// {1/64, 1/128, 1/256, 1/512, 1/1024}.
std::vector<double> standard_spectral_grid();

/// Throws InvalidArgument unless the grid is strictly decreasing within (0, 0.1].
void validate_grid(std::span<const double> epsilons);

/// Pair counts per epsilon. The point set is generated once, except for
/// arc_center which is rebuilt at every epsilon.
std::vector<SweepRecord> sweep_ratio(const GeneratorSpec& spec, std::span<const double> epsilons);

/// Least squares of log(field) on log(eps) over non-vacuous rows. Throws
/// FitError for fewer than 3 usable rows or a nonpositive value.
ExponentFit fit_exponent(std::span<const SweepRecord> records, SweepField field);

/// Same fit on raw (eps, value) pairs.
ExponentFit fit_power_law(std::span<const double> epsilons, std::span<const double> values);

/// Bound chain on the boundary graph of the diameter-1 circle, discretized
/// through the hull of circle_config(circle_points).
std::vector<SweepRecord> sweep_spectral(std::span<const double> epsilons,
                                        std::size_t circle_points = 10000,
                                        const PowerIterationOptions& opts = {});

struct SpecMargin {
  std::string label;
  std::optional<double> minimum;  // empty when every row was vacuous
};

struct MarginReport {
  double minimum{0.0};
  std::vector<SpecMargin> per_spec;
  std::vector<SweepRecord> records;
};

/// circle, arc-center, random-disk (seeds 1..3), reuleaux (seeds 1..3) at n.
std::vector<GeneratorSpec> standard_margin_specs(std::size_t n);

/// Runs every spec over the grid and returns the minimum ratio margin over
/// non-vacuous rows. Per-spec minima are written to `log` when given.
/// Throws VacuousRatio when no row has an antipodal pair.
MarginReport theorem_margin_report(std::span<const GeneratorSpec> specs,
                                   std::span<const double> epsilons, std::ostream* log = nullptr);

/// Header plus one row per record:
/// kind,epsilon,n,neighbors,antipodes,ratio,lambda1,cw,sqrtdeg,trace,margin,flags
void write_csv(std::ostream& out, std::span<const SweepRecord> records);
std::string to_csv(std::span<const SweepRecord> records);

/// Invariant violations of a ratio sweep, one message each; empty when clean.
std::vector<std::string> check_ratio_sweep(std::span<const SweepRecord> records,
                                           GeneratorKind kind);

/// Invariant violations of a spectral sweep.
std::vector<std::string> check_spectral_sweep(std::span<const SweepRecord> records);

}  // namespace antipodal
