#include "antipodal/point_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "antipodal/csv.hpp"
#include "antipodal/errors.hpp"

namespace antipodal {

namespace {

double parse_real(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty() ||
      !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a real number");
  }
  return value;
}

}  // namespace

PointSet read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty() || view.front() == '#') continue;

    const auto space = view.find(' ');
    if (space == std::string_view::npos || view.find(' ', space + 1) != std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two reals separated by a single space");
    }
    const double x = parse_real(view.substr(0, space), line_no);
    const double y = parse_real(view.substr(space + 1), line_no);
    points.push_back({x, y});
  }
  try {
    return PointSet(std::move(points));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

PointSet read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
  for (const Point p : ps) {
    out << format_fixed(p.x) << ' ' << format_fixed(p.y) << '\n';
  }
}

void write_points(const std::filesystem::path& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_points(out, ps);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

}  // namespace antipodal
