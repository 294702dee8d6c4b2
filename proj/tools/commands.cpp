#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <vector>

#include "antipodal/annuli.hpp"
#include "antipodal/boundary_graph.hpp"
#include "antipodal/csv.hpp"
#include "antipodal/errors.hpp"
#include "antipodal/generators.hpp"
#include "antipodal/harness.hpp"
#include "antipodal/point_io.hpp"
#include "antipodal/spectral.hpp"

namespace antipodal::cli {

namespace {

struct GenOptions {
  std::string kind;
  std::size_t n{0};
  double epsilon{0.0};
  std::uint64_t seed{0};
  std::string out;
};

struct AnnuliOptions {
  double d{0.0};
  double epsilon{0.0};
  bool thickened{false};
};

struct GraphOptions {
  std::string points;
  double epsilon{0.0};
  double w_factor{100.0};
};

struct SweepOptions {
  std::string kind;
  std::string generator{"circle"};
  std::size_t n{0};
  double eps_start{0.0};
  double eps_factor{2.0};
  std::size_t eps_count{0};
  std::uint64_t seed{0};
  std::string out;
};

int gen(const GenOptions& o, std::ostream& out) {
  const auto kind = parse_generator_kind(o.kind);
  if (!kind) throw InvalidArgument("unknown generator kind '" + o.kind + "'");
  const PointSet ps = generate({*kind, o.n, o.epsilon, o.seed});
  write_points(o.out, ps);
  out << "wrote " << ps.size() << " points to " << o.out << '\n';
  return 0;
}

int annuli(const AnnuliOptions& o, std::ostream& out) {
  const AnnulusPairConfig cfg{o.d, o.epsilon};
  const auto s = spans(cfg);
  const std::size_t cover = cover_count(cfg);
  std::string thick;
  if (o.thickened) thick = std::to_string(thickened_cover_count(o.d, o.epsilon));

  out << "d,epsilon,width,height,cover,thickened_cover\n";
  out << format_real(o.d) << ',' << format_real(o.epsilon) << ',' << format_real(s.width) << ','
      << format_real(s.height) << ',' << cover << ',' << thick << '\n';
  return 0;
}

int graph_stats_cmd(const GraphOptions& o, std::ostream& out) {
  const PointSet ps = read_points(o.points);
  const auto boxing = discretize_boundary(convex_hull(ps), o.epsilon);
  const auto graph = build_graph(boxing);
  const auto stats = graph_stats(boxing, graph, o.w_factor);
  out << "k,edges,max_degree,max_nbr_deg_sum,max_s_Ts_over_k\n";
  out << stats.k << ',' << stats.edges << ',' << stats.max_degree << ',' << stats.max_nbr_deg_sum
      << ',' << format_real(stats.max_s_Ts_over_k) << '\n';
  return 0;
}

int spectral_cmd(const GraphOptions& o, std::ostream& out) {
  const PointSet ps = read_points(o.points);
  const auto boxing = discretize_boundary(convex_hull(ps), o.epsilon);
  const auto chain = bound_chain(build_graph(boxing));
  out << "epsilon,k,lambda1,cw,sqrtdeg,trace\n";
  out << format_real(o.epsilon) << ',' << boxing.k() << ',' << format_real(chain.lambda1) << ','
      << format_real(chain.cw_bound) << ',' << format_real(chain.sqrt_degree_bound) << ','
      << format_real(chain.trace_bound) << '\n';
  return 0;
}

void report_fit(std::span<const SweepRecord> rows, SweepField field, std::ostream& out) {
  try {
    const auto fit = fit_exponent(rows, field);
    out << "fit " << to_string(field) << ": alpha=" << format_real(fit.alpha)
        << " intercept=" << format_real(fit.intercept) << " residual=" << format_real(fit.residual)
        << " points=" << fit.points_used << '\n';
  } catch (const FitError& e) {
    out << "fit " << to_string(field) << ": refused (" << e.what() << ")\n";
  }
}

void write_rows(const std::string& path, std::span<const SweepRecord> rows) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(file, rows);
}

int sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const auto grid = geometric_grid(o.eps_start, o.eps_factor, o.eps_count);
  std::vector<std::string> problems;
  std::vector<SweepRecord> rows;

  try {
    if (o.kind == "spectral") {
      rows = sweep_spectral(grid, o.n == 0 ? 10000 : o.n);
      problems = check_spectral_sweep(rows);
      for (auto f : {SweepField::lambda1, SweepField::cw, SweepField::sqrtdeg, SweepField::trace}) {
        report_fit(rows, f, out);
      }
    } else if (o.generator == "all") {
      const auto specs = standard_margin_specs(o.n);
      auto report = theorem_margin_report(specs, grid, &out);
      rows = std::move(report.records);
      out << "min margin " << format_real(report.minimum) << '\n';
      if (!(report.minimum > 0.0)) problems.emplace_back("minimum margin is not positive");
      // Rows arrive grouped by configuration; check each group on its own.
      for (std::size_t begin = 0; begin < rows.size();) {
        std::size_t end = begin;
        while (end < rows.size() && rows[end].kind == rows[begin].kind) ++end;
        const auto name = rows[begin].kind.substr(0, rows[begin].kind.find('@'));
        const std::span<const SweepRecord> group(rows.data() + begin, end - begin);
        for (auto& p : check_ratio_sweep(group, *parse_generator_kind(name))) {
          problems.push_back(rows[begin].kind + ": " + p);
        }
        begin = end;
      }
    } else {
      const auto kind = parse_generator_kind(o.generator);
      if (!kind) throw InvalidArgument("unknown generator '" + o.generator + "'");
      rows = sweep_ratio({*kind, o.n, 0.0, o.seed}, grid);
      problems = check_ratio_sweep(rows, *kind);
      report_fit(rows, SweepField::ratio, out);
    }
  } catch (const SweepError& e) {
    write_rows(o.out, e.partial());
    err << "error: " << e.what() << '\n';
    return 1;
  }

  write_rows(o.out, rows);
  for (const auto& p : problems) err << "invariant violated: " << p << '\n';
  return problems.empty() ? 0 : 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antipodal graph spectral bounds: generators, geometry and sweeps"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated point set");
  gen_cmd->add_option("--kind", gen_opts.kind, "circle|arc-center|random-disk|reuleaux")->required();
  gen_cmd->add_option("--n", gen_opts.n, "Number of points")->required();
  gen_cmd->add_option("--epsilon", gen_opts.epsilon, "Epsilon (arc-center only)");
  gen_cmd->add_option("--seed", gen_opts.seed, "Seed (random-disk, reuleaux)");
  gen_cmd->add_option("--out", gen_opts.out, "Output point file")->required();

  AnnuliOptions annuli_opts;
  auto* annuli_cmd = app.add_subcommand("annuli", "Intersection geometry of two thin annuli");
  annuli_cmd->add_option("--d", annuli_opts.d, "Center distance")->required();
  annuli_cmd->add_option("--epsilon", annuli_opts.epsilon, "Annulus thickness")->required();
  annuli_cmd->add_flag("--thickened", annuli_opts.thickened, "Also rasterize the thickened pair");

  GraphOptions graph_opts;
  auto* stats_cmd = app.add_subcommand("graph-stats", "Antipodal boundary graph statistics");
  stats_cmd->add_option("--points", graph_opts.points, "Point file")->required();
  stats_cmd->add_option("--epsilon", graph_opts.epsilon, "Epsilon")->required();
  stats_cmd->add_option("--w-factor", graph_opts.w_factor, "Near-set radius in units of epsilon");

  GraphOptions spectral_opts;
  auto* spectral_sub = app.add_subcommand("spectral", "Spectral bound chain of the boundary graph");
  spectral_sub->add_option("--points", spectral_opts.points, "Point file")->required();
  spectral_sub->add_option("--epsilon", spectral_opts.epsilon, "Epsilon")->required();

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Epsilon sweep with exponent fits");
  sweep_cmd->add_option("--kind", sweep_opts.kind, "ratio|spectral")
      ->required()
      ->check(CLI::IsMember({"ratio", "spectral"}));
  sweep_cmd->add_option("--generator", sweep_opts.generator,
                        "Ratio sweeps: circle|arc-center|random-disk|reuleaux|all");
  sweep_cmd->add_option("--n", sweep_opts.n, "Points (ratio) or circle points (spectral)")
      ->required();
  sweep_cmd->add_option("--eps-start", sweep_opts.eps_start, "Largest epsilon")->required();
  sweep_cmd->add_option("--eps-factor", sweep_opts.eps_factor, "Ratio between successive epsilons")
      ->required();
  sweep_cmd->add_option("--eps-count", sweep_opts.eps_count, "Number of epsilons")->required();
  sweep_cmd->add_option("--seed", sweep_opts.seed, "Seed for randomized generators");
  sweep_cmd->add_option("--out", sweep_opts.out, "Output CSV")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen_cmd) return gen(gen_opts, out);
    if (*annuli_cmd) return annuli(annuli_opts, out);
    if (*stats_cmd) return graph_stats_cmd(graph_opts, out);
    if (*spectral_sub) return spectral_cmd(spectral_opts, out);
    if (*sweep_cmd) return sweep(sweep_opts, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace antipodal::cli
