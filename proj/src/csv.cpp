#include "specgap/csv.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "specgap/config.hpp"

namespace specgap {

namespace {

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_double(v);
    first = false;
  }
  out << '\n';
}

std::vector<double> parse_row(const std::string& line, std::size_t columns, int lineno) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(parse_double(line.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != columns)
    throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": expected " +
                                std::to_string(columns) + " columns");
  return out;
}

template <class Fn>
void read_table(std::istream& in, const char* header, std::size_t columns, Fn&& on_row) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw std::invalid_argument("unexpected CSV header '" + line + "'");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    on_row(parse_row(line, columns, lineno));
  }
}

}  // namespace

void write_gap_curve(std::ostream& out, const GapCurve& curve) {
  out << kGapCurveHeader << '\n';
  for (const auto& r : curve.rows) write_row(out, {r.L, r.eps0, r.eps1, r.gap, r.gap_err, r.L2gap, r.L3gap});
}

GapCurve read_gap_curve(std::istream& in) {
  GapCurve curve;
  read_table(in, kGapCurveHeader, 7, [&](const std::vector<double>& v) {
    if (!curve.rows.empty() && !(v[0] > curve.rows.back().L))
      throw std::invalid_argument("CSV rows must have strictly increasing L");
    curve.rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
  });
  return curve;
}

void write_t_sweep(std::ostream& out, const std::vector<TSweepRow>& rows) {
  out << kTSweepHeader << '\n';
  for (const auto& r : rows) write_row(out, {r.t, r.gap, r.hf_deriv, r.fd_deriv});
}

std::vector<TSweepRow> read_t_sweep(std::istream& in) {
  std::vector<TSweepRow> rows;
  read_table(in, kTSweepHeader, 4,
             [&](const std::vector<double>& v) { rows.push_back({v[0], v[1], v[2], v[3]}); });
  return rows;
}

}  // namespace specgap
