#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antipodal {

/// Argument outside an operation's documented domain (epsilon range, counts, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All input points lie on a single line; no 2D hull exists.
class DegenerateHull : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed-form square root received a negative radicand.
class NegativeRadicand : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ratio requested with zero antipodal pairs; the inequality holds trivially.
class VacuousRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IsolatedVertex : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power iteration hit its iteration cap. Carries the last estimate.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double last_estimate, std::size_t iterations)
      : std::runtime_error(what), last_estimate_(last_estimate), iterations_(iterations) {}

  double last_estimate() const noexcept { return last_estimate_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double last_estimate_;
  std::size_t iterations_;
};

class FitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antipodal
