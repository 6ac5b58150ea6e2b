#pragma once

#include <vector>

#include "wavectl/model.hpp"
#include "wavectl/types.hpp"

namespace wavectl {

enum class WaveKind : uint8_t { Shock, Rarefaction };

inline const char* wave_kind_name(WaveKind k) {
  return k == WaveKind::Shock ? "shock" : "rarefaction";
}

/// One elementary discontinuity of a wave fan. Strength is the jump of the
/// family's Riemann coordinate, |w_i(right) - w_i(left)|.
struct Wave {
  int family = 0;  // 0-based
  WaveKind kind = WaveKind::Shock;
  State left;
  State right;
  double speed = 0.0;
  double strength = 0.0;
};

/// Waves of the fan connecting L to R, ordered by nondecreasing speed and
/// family; consecutive states chain exactly. Rarefactions arrive split into
/// fronts of strength <= nu.
std::vector<Wave> solve_riemann(const Model& m, const State& L, const State& R,
                                double nu);

/// Boundary Riemann problem at x=a: the waves of the fan (control, trace)
/// with strictly positive speed, i.e. the waves entering the domain. The
/// discarded families realize the weak form of the Dirichlet condition.
std::vector<Wave> solve_boundary_riemann_left(const Model& m,
                                              const State& control,
                                              const State& trace, double nu);

/// Mirror image at x=b: keeps the strictly negative speeds.
std::vector<Wave> solve_boundary_riemann_right(const Model& m,
                                               const State& control,
                                               const State& trace, double nu);

/// || f(uR) - f(uL) - sigma (uR - uL) ||_2. Requires a conservative model.
double rh_residual(const Model& m, const State& L, const State& R,
                   double sigma);

/// Validates fan invariants (chaining, speed order, Lax margins, rarefaction
/// strength cap). Throws NumericalAbort on violation; used by tests and by
/// the engine in debug runs.
void check_fan(const Model& m, const std::vector<Wave>& fan, const State& L,
               const State& R, double nu, double lax_tol = 1e-9);

namespace detail {

/// Splits the Riemann-coordinate interval [w_from, w_to] of one genuinely
/// nonlinear family into ceil(|jump|/nu) fronts of equal strength. The
/// callback maps a coordinate value to the corresponding State on the wave
/// curve; endpoints reuse the given states exactly so fans chain bitwise.
template <typename StateAt, typename SpeedAt>
void split_rarefaction(int family, const State& from, const State& to,
                       double w_from, double w_to, double nu,
                       const StateAt& state_at, const SpeedAt& speed_at,
                       std::vector<Wave>& out) {
  const double jump = w_to - w_from;
  const double mag = std::abs(jump);
  if (mag == 0.0) return;
  int k = std::max(1, static_cast<int>(std::ceil(mag / nu - 1e-12)));
  State lo = from;
  double w_lo = w_from;
  for (int j = 1; j <= k; ++j) {
    const double w_hi = (j == k) ? w_to : w_from + jump * (static_cast<double>(j) / k);
    State hi = (j == k) ? to : state_at(w_hi);
    Wave wv;
    wv.family = family;
    wv.kind = WaveKind::Rarefaction;
    wv.left = lo;
    wv.right = hi;
    wv.speed = speed_at(0.5 * (w_lo + w_hi));
    wv.strength = std::abs(w_hi - w_lo);
    out.push_back(wv);
    lo = hi;
    w_lo = w_hi;
  }
}

}  // namespace detail

}  // namespace wavectl
