#pragma once

#include <iosfwd>
#include <vector>

#include "specgap/asymptotics.hpp"
#include "specgap/hellmann_feynman.hpp"

namespace specgap {

inline constexpr const char* kGapCurveHeader = "L,eps0,eps1,gap,gap_err,L2gap,L3gap";
inline constexpr const char* kTSweepHeader = "t,gap,hf_deriv,fd_deriv";

// Shortest round-trip decimal representation, '.' radix, independent of the
// global locale.
void write_gap_curve(std::ostream& out, const GapCurve& curve);
// Rows only; std::invalid_argument on a malformed header or row.
GapCurve read_gap_curve(std::istream& in);

void write_t_sweep(std::ostream& out, const std::vector<TSweepRow>& rows);
std::vector<TSweepRow> read_t_sweep(std::istream& in);

}  // namespace specgap
