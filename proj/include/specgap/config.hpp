#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgap/eigensolver.hpp"
#include "specgap/potential.hpp"

namespace specgap {

// Effective run configuration. Every field has a flat key path
// ("potential.family", "sweep.l_min", ...) used both by the configuration
// file and by command-line overrides.
struct RunConfig {
  std::string family = "zero";
  double v0 = 1.0;
  double b = 1.0;
  double C = 1.0;
  double alpha = 3.0;
  double s = 1.0;
  std::string segments;  // "x_left:x_right:value;..."

  Frame frame = Frame::Physical;
  double L = 10.0;
  double t = 1.0;

  double l_min = 12.5;
  double l_max = 3200.0;
  double l_ratio = 2.0;

  double resolution = 40.0;
  int k = 2;
  unsigned workers = 0;

  std::vector<double> t_grid{0.0, 0.5, 1.0, 2.0, 4.0};

  std::optional<double> fit_l_min;
  std::optional<double> fit_l_max;
  double max_ratio = 0.5;

  std::string out;
  std::string in;

  // Sets one field from its key path; std::invalid_argument on an unknown
  // key or a malformed value.
  void set(const std::string& key, const std::string& value);
  // (key, value) pairs in a fixed order, formatted as they would be read back.
  std::vector<std::pair<std::string, std::string>> entries() const;
  void validate() const;

  Potential potential() const;
  ProblemSpec problem() const;
  std::vector<double> l_grid() const;
};

// Lines of "key = value"; '#' starts a comment, blank lines are ignored.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

std::string format_double(double v);
double parse_double(const std::string& text);

}  // namespace specgap
