#pragma once

#include <vector>

#include "wavectl/model.hpp"
#include "wavectl/types.hpp"

namespace wavectl {

/// Piecewise-constant profile on [a, b]: m pieces separated by m-1 strictly
/// increasing interior breakpoints.
struct Profile {
  double a = 0.0;
  double b = 1.0;
  std::vector<double> breaks;  // interior breakpoints, strictly increasing
  std::vector<State> states;   // breaks.size() + 1 pieces

  int pieces() const { return static_cast<int>(states.size()); }
  const State& at(double x) const;
  double piece_lo(int i) const { return i == 0 ? a : breaks[i - 1]; }
  double piece_hi(int i) const {
    return i == pieces() - 1 ? b : breaks[i];
  }

  /// Throws if breakpoints are not strictly increasing inside ]a,b[ or a
  /// state leaves Gamma.
  void validate(const Model& m) const;
};

Profile constant_profile(double a, double b, const State& s);

/// Sum over jumps of |delta w|_1 (in_riemann) or |delta u|_1.
double total_variation(const Profile& p, bool in_riemann = true);

/// Exact integral of |p1 - p2|_1 over [a, b] via merged breakpoints.
double l1_distance(const Profile& p1, const Profile& p2,
                   bool in_riemann = false);

/// Integral of the state over [a, b], component-wise.
Vec integral_u(const Profile& p);
Vec integral_w(const Profile& p);

}  // namespace wavectl
