#include "specgap/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "specgap/asymptotics.hpp"

namespace specgap {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<family::Segment> parse_segments(const std::string& text) {
  std::vector<family::Segment> out;
  for (const auto& seg : split(text, ';')) {
    const auto parts = split(seg, ':');
    if (parts.size() != 3) throw std::invalid_argument("segment '" + seg + "' is not x_left:x_right:value");
    out.push_back({parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])});
  }
  return out;
}

unsigned parse_unsigned(const std::string& text) {
  unsigned v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw std::invalid_argument("not a count: '" + text + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* begin = t.data();
  if (!t.empty() && t[0] == '+') ++begin;
  const auto* end = t.data() + t.size();
  const auto res = std::from_chars(begin, end, v);
  if (t.empty() || res.ec != std::errc() || res.ptr != end)
    throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "potential.family") {
    family = value;
  } else if (key == "potential.v0") {
    v0 = parse_double(value);
  } else if (key == "potential.b") {
    b = parse_double(value);
  } else if (key == "potential.C") {
    C = parse_double(value);
  } else if (key == "potential.alpha") {
    alpha = parse_double(value);
  } else if (key == "potential.s") {
    s = parse_double(value);
  } else if (key == "potential.segments") {
    segments = value;
  } else if (key == "problem.frame") {
    if (value == "physical")
      frame = Frame::Physical;
    else if (value == "scaled")
      frame = Frame::Scaled;
    else
      throw std::invalid_argument("frame must be physical or scaled");
  } else if (key == "problem.L") {
    L = parse_double(value);
  } else if (key == "problem.t") {
    t = parse_double(value);
  } else if (key == "sweep.l_min") {
    l_min = parse_double(value);
  } else if (key == "sweep.l_max") {
    l_max = parse_double(value);
  } else if (key == "sweep.l_ratio") {
    l_ratio = parse_double(value);
  } else if (key == "solver.resolution") {
    resolution = parse_double(value);
  } else if (key == "solver.k") {
    k = static_cast<int>(parse_unsigned(value));
  } else if (key == "solver.workers") {
    workers = parse_unsigned(value);
  } else if (key == "hf.t_grid") {
    t_grid.clear();
    for (const auto& item : split(value, ',')) t_grid.push_back(parse_double(item));
  } else if (key == "fit.l_min") {
    fit_l_min = parse_double(value);
  } else if (key == "fit.l_max") {
    fit_l_max = parse_double(value);
  } else if (key == "check.max_ratio") {
    max_ratio = parse_double(value);
  } else if (key == "output.path") {
    out = value;
  } else if (key == "input.path") {
    in = value;
  } else {
    throw std::invalid_argument("unknown configuration key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  std::string tg;
  for (std::size_t i = 0; i < t_grid.size(); ++i) tg += (i ? "," : "") + format_double(t_grid[i]);
  std::vector<std::pair<std::string, std::string>> e{
      {"potential.family", family},
      {"potential.v0", format_double(v0)},
      {"potential.b", format_double(b)},
      {"potential.C", format_double(C)},
      {"potential.alpha", format_double(alpha)},
      {"potential.s", format_double(s)},
      {"potential.segments", segments},
      {"problem.frame", frame == Frame::Physical ? "physical" : "scaled"},
      {"problem.L", format_double(L)},
      {"problem.t", format_double(t)},
      {"sweep.l_min", format_double(l_min)},
      {"sweep.l_max", format_double(l_max)},
      {"sweep.l_ratio", format_double(l_ratio)},
      {"solver.resolution", format_double(resolution)},
      {"solver.k", std::to_string(k)},
      {"solver.workers", std::to_string(workers)},
      {"hf.t_grid", tg},
      {"check.max_ratio", format_double(max_ratio)},
  };
  if (fit_l_min) e.emplace_back("fit.l_min", format_double(*fit_l_min));
  if (fit_l_max) e.emplace_back("fit.l_max", format_double(*fit_l_max));
  if (!out.empty()) e.emplace_back("output.path", out);
  if (!in.empty()) e.emplace_back("input.path", in);
  return e;
}

void RunConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be positive");
  };
  if (!(L >= 0.0) || !std::isfinite(L)) throw std::invalid_argument("problem.L must be non-negative");
  positive(resolution, "solver.resolution");
  positive(l_min, "sweep.l_min");
  positive(l_max, "sweep.l_max");
  positive(l_ratio, "sweep.l_ratio");
  positive(max_ratio, "check.max_ratio");
  if (!(t >= 0.0)) throw std::invalid_argument("problem.t must be non-negative");
  if (k < 1 || k > kMaxEigenvalues) throw std::invalid_argument("solver.k must lie in 1..8");
  (void)potential();
}

Potential RunConfig::potential() const {
  if (family == "zero") return Potential::zero();
  if (family == "step") return Potential::step(v0, b);
  if (family == "tail") return Potential::inverse_square_tail();
  if (family == "powerlaw") return Potential::power_law(C, alpha);
  if (family == "bump") return Potential::bump(v0, s);
  if (family == "piecewise") return Potential::piecewise(parse_segments(segments));
  throw std::invalid_argument("unknown potential family '" + family +
                              "' (zero, step, tail, powerlaw, bump, piecewise)");
}

ProblemSpec RunConfig::problem() const { return {potential(), L, frame, t}; }

std::vector<double> RunConfig::l_grid() const { return geometric_grid(l_min, l_max, l_ratio); }

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

}  // namespace specgap
