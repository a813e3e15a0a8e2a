#include "specgap/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specgap {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Value of the segment covering (x - 0, x) and (x, x + 0) respectively.
double left_limit(const family::PiecewiseConstant& pc, double x) {
  for (const auto& s : pc.segments)
    if (s.x_left < x && x <= s.x_right) return s.value;
  return 0.0;
}

double right_limit(const family::PiecewiseConstant& pc, double x) {
  for (const auto& s : pc.segments)
    if (s.x_left <= x && x < s.x_right) return s.value;
  return 0.0;
}

void validate(const family::PiecewiseConstant& pc) {
  for (std::size_t i = 0; i < pc.segments.size(); ++i) {
    const auto& s = pc.segments[i];
    if (!std::isfinite(s.x_left) || !std::isfinite(s.x_right) || !(s.x_left < s.x_right))
      throw std::invalid_argument("piecewise segment needs finite x_left < x_right");
    if (!finite_nonneg(s.value))
      throw std::invalid_argument("piecewise segment value must be finite and non-negative");
    if (i > 0 && pc.segments[i - 1].x_right > s.x_left)
      throw std::invalid_argument("piecewise segments must be sorted and non-overlapping");
  }
}

bool mirror_symmetric(const family::PiecewiseConstant& pc) {
  const auto& seg = pc.segments;
  const std::size_t n = seg.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = seg[i];
    const auto& b = seg[n - 1 - i];
    if (a.x_left != -b.x_right || a.x_right != -b.x_left || a.value != b.value) return false;
  }
  return true;
}

// Non-increasing profile on (0, inf), assuming mirror symmetry.
bool outward_non_increasing(const family::PiecewiseConstant& pc) {
  std::vector<double> knots{0.0};
  for (const auto& s : pc.segments) {
    if (s.x_left > 0.0) knots.push_back(s.x_left);
    if (s.x_right > 0.0) knots.push_back(s.x_right);
  }
  std::sort(knots.begin(), knots.end());
  double prev = kInf;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double v = right_limit(pc, 0.5 * (knots[i] + knots[i + 1]));
    if (v > prev) return false;
    prev = v;
  }
  return true;
}

}  // namespace

Potential::Potential(Family f) : family_(std::move(f)) {
  std::visit(overloaded{
                 [](const family::Zero&) {},
                 [](const family::InverseSquareTail&) {},
                 [](const family::Step& s) {
                   if (!finite_nonneg(s.v0) || !(s.b > 0.0) || !std::isfinite(s.b))
                     throw std::invalid_argument("step needs v0 >= 0 and b > 0");
                 },
                 [](const family::PowerLawDecay& p) {
                   if (!finite_nonneg(p.C) || !(p.alpha > 0.0) || !std::isfinite(p.alpha))
                     throw std::invalid_argument("power law needs C >= 0 and alpha > 0");
                 },
                 [](const family::SymmetricBump& g) {
                   if (!finite_nonneg(g.v0) || !(g.s > 0.0) || !std::isfinite(g.s))
                     throw std::invalid_argument("bump needs v0 >= 0 and s > 0");
                 },
                 [](const family::PiecewiseConstant& pc) { validate(pc); },
             },
             family_);
}

double Potential::eval(double x) const {
  return std::visit(overloaded{
                        [](const family::Zero&) { return 0.0; },
                        [x](const family::Step& s) { return std::abs(x) <= s.b ? s.v0 : 0.0; },
                        [x](const family::InverseSquareTail&) { return x >= 1.0 ? 1.0 / (x * x) : 0.0; },
                        [x](const family::PowerLawDecay& p) {
                          return p.C / std::pow(1.0 + std::abs(x), p.alpha);
                        },
                        [x](const family::SymmetricBump& g) {
                          return g.v0 * std::exp(-(x * x) / (g.s * g.s));
                        },
                        [x](const family::PiecewiseConstant& pc) { return right_limit(pc, x); },
                    },
                    family_);
}

std::vector<double> Potential::jumps() const {
  return std::visit(overloaded{
                        [](const family::Step& s) {
                          return s.v0 > 0.0 ? std::vector<double>{-s.b, s.b} : std::vector<double>{};
                        },
                        [](const family::InverseSquareTail&) { return std::vector<double>{1.0}; },
                        [](const family::PiecewiseConstant& pc) {
                          std::vector<double> out;
                          for (const auto& s : pc.segments) {
                            for (double x : {s.x_left, s.x_right}) {
                              if (left_limit(pc, x) != right_limit(pc, x) &&
                                  (out.empty() || out.back() != x))
                                out.push_back(x);
                            }
                          }
                          return out;
                        },
                        [](const auto&) { return std::vector<double>{}; },
                    },
                    family_);
}

std::vector<double> Potential::kinks() const {
  if (const auto* pl = std::get_if<family::PowerLawDecay>(&family_); pl && pl->C > 0.0) return {0.0};
  return {};
}

std::vector<double> Potential::breakpoints() const {
  auto out = jumps();
  for (double k : kinks())
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> Potential::feature_width() const {
  return std::visit(overloaded{
                        [](const family::Zero&) -> std::optional<double> { return std::nullopt; },
                        [](const family::Step& s) -> std::optional<double> { return 2.0 * s.b; },
                        [](const family::InverseSquareTail&) -> std::optional<double> { return 1.0; },
                        [](const family::PowerLawDecay&) -> std::optional<double> { return 1.0; },
                        [](const family::SymmetricBump& g) -> std::optional<double> { return 2.0 * g.s; },
                        [this](const family::PiecewiseConstant&) -> std::optional<double> {
                          const auto j = jumps();
                          if (j.size() < 2) return std::nullopt;
                          double w = kInf;
                          for (std::size_t i = 1; i < j.size(); ++i) w = std::min(w, j[i] - j[i - 1]);
                          return w;
                        },
                    },
                    family_);
}

double Potential::sup() const {
  return std::visit(overloaded{
                        [](const family::Zero&) { return 0.0; },
                        [](const family::Step& s) { return s.v0; },
                        [](const family::InverseSquareTail&) { return 1.0; },
                        [](const family::PowerLawDecay& p) { return p.C; },
                        [](const family::SymmetricBump& g) { return g.v0; },
                        [](const family::PiecewiseConstant& pc) {
                          double m = 0.0;
                          for (const auto& s : pc.segments) m = std::max(m, s.value);
                          return m;
                        },
                    },
                    family_);
}

double Potential::inf() const { return 0.0; }

std::string Potential::tag() const {
  return std::visit(overloaded{
                        [](const family::Zero&) { return std::string("zero"); },
                        [](const family::Step&) { return std::string("step"); },
                        [](const family::InverseSquareTail&) { return std::string("tail"); },
                        [](const family::PowerLawDecay&) { return std::string("powerlaw"); },
                        [](const family::SymmetricBump&) { return std::string("bump"); },
                        [](const family::PiecewiseConstant&) { return std::string("piecewise"); },
                    },
                    family_);
}

std::string Potential::describe() const {
  return std::visit(
      overloaded{
          [](const family::Zero&) { return std::string("zero"); },
          [](const family::Step& s) { return "step(v0=" + fmt(s.v0) + ",b=" + fmt(s.b) + ")"; },
          [](const family::InverseSquareTail&) { return std::string("tail(1{x>=1}/x^2)"); },
          [](const family::PowerLawDecay& p) {
            return "powerlaw(C=" + fmt(p.C) + ",alpha=" + fmt(p.alpha) + ")";
          },
          [](const family::SymmetricBump& g) { return "bump(v0=" + fmt(g.v0) + ",s=" + fmt(g.s) + ")"; },
          [](const family::PiecewiseConstant& pc) {
            std::string out = "piecewise(";
            for (std::size_t i = 0; i < pc.segments.size(); ++i) {
              const auto& s = pc.segments[i];
              if (i) out += ";";
              out += fmt(s.x_left) + ":" + fmt(s.x_right) + ":" + fmt(s.value);
            }
            return out + ")";
          },
      },
      family_);
}

double eval(const Potential& p, double x) { return p.eval(x); }

double scaled_eval(const Potential& p, double L, double x) { return p.scaled_eval(L, x); }

PotentialClass classify(const Potential& p) {
  PotentialClass c;
  std::visit(overloaded{
                 [&](const family::Zero&) {
                   c.identically_zero = true;
                   c.compact_support = true;
                   c.short_range_C = 0.0;
                   c.decay_alpha = kInf;
                   c.symmetric = true;
                   c.symmetric_single_well = true;
                 },
                 [&](const family::Step& s) {
                   c.identically_zero = s.v0 == 0.0;
                   c.compact_support = true;
                   c.short_range_C = s.v0 * s.b * s.b;
                   c.decay_alpha = kInf;
                   c.symmetric = true;
                   c.symmetric_single_well = true;
                 },
                 [&](const family::InverseSquareTail&) {
                   c.short_range_C = 1.0;
                   c.decay_alpha = 2.0;
                 },
                 [&](const family::PowerLawDecay& pl) {
                   c.identically_zero = pl.C == 0.0;
                   c.decay_alpha = pl.alpha;
                   if (pl.alpha == 2.0) {
                     c.short_range_C = pl.C;  // sup x^2/(1+x)^2 is approached as x -> inf
                   } else if (pl.alpha > 2.0) {
                     const double xs = 2.0 / (pl.alpha - 2.0);
                     c.short_range_C = pl.C * xs * xs / std::pow(1.0 + xs, pl.alpha);
                   }
                   c.symmetric = true;
                   c.symmetric_single_well = true;
                 },
                 [&](const family::SymmetricBump& g) {
                   c.identically_zero = g.v0 == 0.0;
                   c.short_range_C = g.v0 * g.s * g.s / std::exp(1.0);
                   c.decay_alpha = kInf;
                   c.symmetric = true;
                   c.symmetric_single_well = true;
                 },
                 [&](const family::PiecewiseConstant& pc) {
                   double C = 0.0;
                   bool any = false;
                   for (const auto& s : pc.segments) {
                     if (s.value == 0.0) continue;
                     any = true;
                     const double r = std::max(std::abs(s.x_left), std::abs(s.x_right));
                     C = std::max(C, s.value * r * r);
                   }
                   c.identically_zero = !any;
                   c.compact_support = true;
                   c.short_range_C = C;
                   c.decay_alpha = kInf;
                   c.symmetric = mirror_symmetric(pc);
                   c.symmetric_single_well = c.symmetric && outward_non_increasing(pc);
                 },
             },
             p.family());
  return c;
}

}  // namespace specgap
