#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace specgap {

namespace family {

struct Zero {};

// v(x) = v0 on [-b, b], zero elsewhere.
struct Step {
  double v0 = 1.0;
  double b = 1.0;
};

// v(x) = 1/x^2 for x >= 1, zero elsewhere.
struct InverseSquareTail {};

// v(x) = C / (1 + |x|)^alpha, the smooth representative of the envelope
// |v(x)| <= C/|x|^alpha.
struct PowerLawDecay {
  double C = 1.0;
  double alpha = 3.0;
};

// v(x) = v0 * exp(-x^2 / s^2).
struct SymmetricBump {
  double v0 = 1.0;
  double s = 1.0;
};

struct Segment {
  double x_left = 0.0;
  double x_right = 0.0;
  double value = 0.0;
};

// Finitely many sorted, non-overlapping segments [x_left, x_right) carrying
// constant values; zero outside.
struct PiecewiseConstant {
  std::vector<Segment> segments;
};

}  // namespace family

// Hypothesis classes of the gap bounds.
struct PotentialClass {
  bool identically_zero = false;
  bool compact_support = false;
  // Smallest closed-form C with v(x) <= C/x^2 on the whole line.
  std::optional<double> short_range_C;
  // Decay exponent alpha with v(x) <= C'/|x|^alpha; +inf when v decays
  // faster than every power (compact support, Gaussian).
  std::optional<double> decay_alpha;
  bool symmetric = false;
  // Even, non-decreasing on (-inf, 0) and non-increasing on (0, inf).
  bool symmetric_single_well = false;

  // Non-zero and decaying faster than |x|^-2: the vanishing-rescaled-gap class.
  bool fast_decay() const {
    return !identically_zero && (compact_support || (decay_alpha && *decay_alpha > 2.0));
  }
};

class Potential {
 public:
  using Family = std::variant<family::Zero, family::Step, family::InverseSquareTail,
                              family::PowerLawDecay, family::SymmetricBump,
                              family::PiecewiseConstant>;

  Potential() = default;
  // Throws std::invalid_argument on invalid parameters.
  explicit Potential(Family f);

  static Potential zero() { return Potential(family::Zero{}); }
  static Potential step(double v0, double b) { return Potential(family::Step{v0, b}); }
  static Potential inverse_square_tail() { return Potential(family::InverseSquareTail{}); }
  static Potential power_law(double C, double alpha) {
    return Potential(family::PowerLawDecay{C, alpha});
  }
  static Potential bump(double v0, double s) { return Potential(family::SymmetricBump{v0, s}); }
  static Potential piecewise(std::vector<family::Segment> segments) {
    return Potential(family::PiecewiseConstant{std::move(segments)});
  }

  const Family& family() const { return family_; }

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  // w_L(x) = L^2 v(L x).
  double scaled_eval(double L, double x) const { return L * L * eval(L * x); }

  // Locations of jump discontinuities, ascending.
  std::vector<double> jumps() const;
  // Points where v is continuous but its derivative jumps, ascending.
  std::vector<double> kinks() const;
  // jumps() and kinks() merged.
  std::vector<double> breakpoints() const;
  // Width of the narrowest structure the grid has to resolve; nullopt for Zero.
  std::optional<double> feature_width() const;
  double sup() const;
  double inf() const;

  // Short family tag as used in run configurations ("step", "tail", ...).
  std::string tag() const;
  // Tag plus parameters, e.g. "step(v0=1,b=1)".
  std::string describe() const;

 private:
  Family family_ = family::Zero{};
};

double eval(const Potential& p, double x);
double scaled_eval(const Potential& p, double L, double x);
PotentialClass classify(const Potential& p);

}  // namespace specgap
