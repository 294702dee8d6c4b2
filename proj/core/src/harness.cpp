#include "antipodal/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "antipodal/boundary_graph.hpp"
#include "antipodal/csv.hpp"
#include "antipodal/errors.hpp"

namespace antipodal {

namespace {

std::string spec_label(const GeneratorSpec& spec) {
  std::string label(to_string(spec.kind));
  if (spec.kind == GeneratorKind::random_disk || spec.kind == GeneratorKind::reuleaux_boundary) {
    label += "@" + std::to_string(spec.seed);
  }
  return label;
}

SweepRecord ratio_row(const std::string& label, const PointSet& ps, double eps) {
  const PairCounts counts = pair_counts(ps, eps);
  SweepRecord row;
  row.kind = label;
  row.epsilon = eps;
  row.size = ps.size();
  row.neighbors = counts.neighbors;
  row.antipodes = counts.antipodes;
  row.undersampled = static_cast<double>(ps.size()) * eps < kMinPointsPerEpsilon;
  if (counts.antipodes == 0) {
    row.vacuous = true;
  } else {
    row.ratio = static_cast<double>(counts.neighbors) / static_cast<double>(counts.antipodes);
    row.margin = ratio_margin(counts);
  }
  return row;
}

std::string optional_count(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

std::string_view to_string(SweepField field) {
  switch (field) {
    case SweepField::neighbors:
      return "neighbors";
    case SweepField::antipodes:
      return "antipodes";
    case SweepField::ratio:
      return "ratio";
    case SweepField::lambda1:
      return "lambda1";
    case SweepField::cw:
      return "cw";
    case SweepField::sqrtdeg:
      return "sqrtdeg";
    case SweepField::trace:
      return "trace";
    case SweepField::margin:
      return "margin";
  }
  return "unknown";
}

std::optional<SweepField> parse_sweep_field(std::string_view name) {
  for (auto f : {SweepField::neighbors, SweepField::antipodes, SweepField::ratio,
                 SweepField::lambda1, SweepField::cw, SweepField::sqrtdeg, SweepField::trace,
                 SweepField::margin}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<double> field_value(const SweepRecord& r, SweepField field) {
  auto as_real = [](const std::optional<std::uint64_t>& v) -> std::optional<double> {
    if (!v) return std::nullopt;
    return static_cast<double>(*v);
  };
  switch (field) {
    case SweepField::neighbors:
      return as_real(r.neighbors);
    case SweepField::antipodes:
      return as_real(r.antipodes);
    case SweepField::ratio:
      return r.ratio;
    case SweepField::lambda1:
      return r.lambda1;
    case SweepField::cw:
      return r.cw;
    case SweepField::sqrtdeg:
      return r.sqrtdeg;
    case SweepField::trace:
      return r.trace;
    case SweepField::margin:
      return r.margin;
  }
  return std::nullopt;
}

std::vector<double> geometric_grid(double start, double factor, std::size_t count) {
  if (!(factor > 1.0)) throw InvalidArgument("epsilon grid factor must exceed 1");
  if (!(start > 0.0)) throw InvalidArgument("epsilon grid start must be positive");
  std::vector<double> grid;
  grid.reserve(count);
  double eps = start;
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(eps);
    eps /= factor;
  }
  return grid;
}

std::vector<double> standard_ratio_grid() { return geometric_grid(0.08, 2.0, 5); }

std::vector<double> standard_spectral_grid() { return geometric_grid(1.0 / 64.0, 2.0, 5); }

void validate_grid(std::span<const double> epsilons) {
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0 && epsilons[i] <= 0.1)) {
      throw InvalidArgument("sweep epsilon " + format_real(epsilons[i]) + " outside (0, 0.1]");
    }
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw InvalidArgument("sweep epsilons must be strictly decreasing");
    }
  }
}

std::vector<SweepRecord> sweep_ratio(const GeneratorSpec& spec, std::span<const double> epsilons) {
  validate_grid(epsilons);
  const std::string label = spec_label(spec);

  std::optional<PointSet> fixed;
  if (!spec.depends_on_epsilon()) fixed = generate(spec);

  std::vector<SweepRecord> rows;
  for (const double eps : epsilons) {
    try {
      if (fixed) {
        rows.push_back(ratio_row(label, *fixed, eps));
      } else {
        GeneratorSpec at_eps = spec;
        at_eps.epsilon = eps;
        rows.push_back(ratio_row(label, generate(at_eps), eps));
      }
    } catch (const std::exception& e) {
      throw SweepError(label + " at eps = " + format_real(eps) + ": " + e.what(), std::move(rows));
    }
  }
  return rows;
}

ExponentFit fit_power_law(std::span<const double> epsilons, std::span<const double> values) {
  if (epsilons.size() != values.size()) throw FitError("mismatched fit inputs");
  if (values.size() < 3) {
    throw FitError("a fit needs at least 3 usable points, got " + std::to_string(values.size()));
  }
  const auto n = static_cast<double>(values.size());
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !(epsilons[i] > 0.0)) {
      throw FitError("log-log fit needs positive values, got " + format_real(values[i]));
    }
    xs.push_back(std::log(epsilons[i]));
    ys.push_back(std::log(values[i]));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw FitError("fit needs at least two distinct epsilons");

  ExponentFit fit;
  fit.alpha = sxy / sxx;
  fit.intercept = mean_y - fit.alpha * mean_x;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.residual = std::max(fit.residual, std::abs(ys[i] - (fit.intercept + fit.alpha * xs[i])));
  }
  fit.points_used = xs.size();
  return fit;
}

ExponentFit fit_exponent(std::span<const SweepRecord> records, SweepField field) {
  std::vector<double> eps;
  std::vector<double> values;
  for (const auto& r : records) {
    if (r.vacuous) continue;
    const auto v = field_value(r, field);
    if (!v) continue;
    eps.push_back(r.epsilon);
    values.push_back(*v);
  }
  if (values.size() < 3) {
    throw FitError("fit of " + std::string(to_string(field)) + " has " +
                   std::to_string(values.size()) + " non-vacuous rows; at least 3 required");
  }
  return fit_power_law(eps, values);
}

std::vector<SweepRecord> sweep_spectral(std::span<const double> epsilons,
                                        std::size_t circle_points,
                                        const PowerIterationOptions& opts) {
  validate_grid(epsilons);
  const ConvexPolygon hull = convex_hull(circle_config(circle_points));

  std::vector<SweepRecord> rows;
  for (const double eps : epsilons) {
    try {
      const auto boxing = discretize_boundary(hull, eps);
      const auto graph = build_graph(boxing);
      const auto chain = bound_chain(graph, opts);
      SweepRecord row;
      row.kind = "spectral";
      row.epsilon = eps;
      row.size = boxing.k();
      row.lambda1 = chain.lambda1;
      row.cw = chain.cw_bound;
      row.sqrtdeg = chain.sqrt_degree_bound;
      row.trace = chain.trace_bound;
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      throw SweepError("spectral at eps = " + format_real(eps) + ": " + e.what(), std::move(rows));
    }
  }
  return rows;
}

std::vector<GeneratorSpec> standard_margin_specs(std::size_t n) {
  std::vector<GeneratorSpec> specs{{GeneratorKind::circle, n, 0.0, 0},
                                   {GeneratorKind::arc_center, n, 0.0, 0}};
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    specs.push_back({GeneratorKind::random_disk, n, 0.0, seed});
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    specs.push_back({GeneratorKind::reuleaux_boundary, n, 0.0, seed});
  }
  return specs;
}

MarginReport theorem_margin_report(std::span<const GeneratorSpec> specs,
                                   std::span<const double> epsilons, std::ostream* log) {
  if (specs.empty()) throw InvalidArgument("margin report needs at least one spec");
  MarginReport report;
  report.minimum = std::numeric_limits<double>::infinity();
  for (const auto& spec : specs) {
    auto rows = sweep_ratio(spec, epsilons);
    SpecMargin entry{spec_label(spec), std::nullopt};
    for (const auto& r : rows) {
      if (!r.margin) continue;
      entry.minimum = entry.minimum ? std::min(*entry.minimum, *r.margin) : *r.margin;
    }
    if (entry.minimum) report.minimum = std::min(report.minimum, *entry.minimum);
    if (log) {
      *log << entry.label << ": min margin "
           << (entry.minimum ? format_real(*entry.minimum) : std::string("vacuous")) << '\n';
    }
    report.per_spec.push_back(std::move(entry));
    report.records.insert(report.records.end(), std::make_move_iterator(rows.begin()),
                          std::make_move_iterator(rows.end()));
  }
  if (std::isinf(report.minimum)) {
    throw VacuousRatio("every row is vacuous; no margin to report");
  }
  return report;
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << "kind,epsilon,n,neighbors,antipodes,ratio,lambda1,cw,sqrtdeg,trace,margin,flags\n";
  for (const auto& r : records) {
    std::string flags;
    if (r.vacuous) flags = "vacuous";
    if (r.undersampled) flags += flags.empty() ? "undersampled" : ";undersampled";
    out << r.kind << ',' << format_real(r.epsilon) << ',' << r.size << ','
        << optional_count(r.neighbors) << ',' << optional_count(r.antipodes) << ','
        << format_optional(r.ratio) << ',' << format_optional(r.lambda1) << ','
        << format_optional(r.cw) << ',' << format_optional(r.sqrtdeg) << ','
        << format_optional(r.trace) << ',' << format_optional(r.margin) << ',' << flags << '\n';
  }
}

std::string to_csv(std::span<const SweepRecord> records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

std::vector<std::string> check_ratio_sweep(std::span<const SweepRecord> records,
                                           GeneratorKind kind) {
  std::vector<std::string> problems;
  for (const auto& r : records) {
    const auto pairs = static_cast<std::uint64_t>(r.size) * (r.size - 1) / 2;
    if (r.neighbors.value_or(0) + r.antipodes.value_or(0) > pairs) {
      problems.push_back("eps " + format_real(r.epsilon) + ": neighbors + antipodes exceed n(n-1)/2");
    }
    if (r.margin && !(*r.margin > 0.0)) {
      problems.push_back("eps " + format_real(r.epsilon) + ": non-vacuous row has margin 0");
    }
  }
  if (kind == GeneratorKind::circle) {
    // Rows run in decreasing eps; the ratio should not grow, up to 10%.
    for (std::size_t i = 1; i < records.size(); ++i) {
      const auto& prev = records[i - 1];
      const auto& cur = records[i];
      if (prev.ratio && cur.ratio && *cur.ratio > 1.1 * *prev.ratio) {
        problems.push_back("circle ratio increased from eps " + format_real(prev.epsilon) +
                           " to eps " + format_real(cur.epsilon));
      }
    }
  }
  return problems;
}

std::vector<std::string> check_spectral_sweep(std::span<const SweepRecord> records) {
  std::vector<std::string> problems;
  for (const auto& r : records) {
    const BoundChainReport chain{r.lambda1.value_or(0.0), r.cw.value_or(0.0),
                                 r.sqrtdeg.value_or(0.0), r.trace.value_or(0.0), r.size};
    if (!chain.ordered()) {
      problems.push_back("eps " + format_real(r.epsilon) + ": bound chain out of order");
    }
  }
  return problems;
}

}  // namespace antipodal
