#pragma once

#include <vector>

#include "wavectl/engine.hpp"
#include "wavectl/profile.hpp"

namespace wavectl {

/// Per-family sup of the weighted one-sided difference quotients
///   (w_i(psi(y)) - w_i(psi(x))) / (y - x) * (x - a)   for i > p,
///   (w_i(psi(y)) - w_i(psi(x))) / (y - x) * (b - y)   for i <= p,
/// over a finite pair set (piece midpoints plus an h-grid), together with
/// the witnessing pair.
struct OleinikReport {
  double h = 0.0;
  std::vector<double> ratio;      // per family
  std::vector<double> witness_x;  // per family
  std::vector<double> witness_y;
  std::vector<bool> pass;         // filled by check_membership
  bool upward_jump_ok = true;
  int jump_witness_piece = -1;
  double worst_jump = 0.0;
  bool passed = false;
};

OleinikReport oleinik_ratios(const Model& m, const Profile& psi, double h);

/// Membership test for the attainable-class bound: every family ratio at
/// resolution h stays below rho AND no single upward jump of a constrained
/// component exceeds eps_jump (an upward jump makes the quotient blow up
/// below the resolution scale).
OleinikReport check_membership(const Model& m, const Profile& psi, double rho,
                               double h, double eps_jump);

/// Decay estimate for 2x2 systems: at each sample time t the per-family sup
/// of (w_i(t,y) - w_i(t,x)) * t / (y - x), which the estimate bounds by a
/// t-independent constant k while the total variation stays below delta.
struct Lemma1Report {
  std::vector<double> times;
  std::vector<double> measured_k;  // max over both families, per time
  std::vector<double> tv;
  std::vector<bool> within_scope;  // TV < delta at that time
  std::vector<bool> pass;          // measured_k <= k_bound
  double k_bound = 0.0;
  double delta = 0.0;
  bool all_pass = true;
};

Lemma1Report lemma1_check(const Trajectory& traj,
                          const std::vector<double>& times, double k_bound,
                          double h, double delta);

}  // namespace wavectl
