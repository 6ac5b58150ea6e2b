#pragma once

#include <memory>

#include "wavectl/engine.hpp"
#include "wavectl/oleinik.hpp"

namespace wavectl {

/// T = 4 (b-a) / lambda_min with lambda_min measured over Gamma.
double horizon(const Model& m, double a, double b);

/// nu-scale realization of a target profile: piece values snapped to the
/// nu-lattice anchored at the first piece, and upward jumps wider than nu
/// spread into single-nu steps with spacing compatible with the
/// admissible-class quotient bound. The result is what the backward
/// construction can reach exactly; it converges to psi in L1 as nu -> 0.
/// Supports targets whose multi-nu upward jumps move one component at a
/// time (wider simultaneous jumps throw HypothesisError).
Profile quantize_target(const Model& m, const Profile& psi, double nu,
                        double rho_prime);

struct WashoutBlock {
  Trajectory traj;  // clock [0, T/4]
  State omega_prime;
  ControlSchedule alpha;  // the recorded traces, as explicit controls
  ControlSchedule beta;
};

/// Cauchy evolution of phi (no boundary reflection) on [0, T/4]; every
/// front must exit by T/4, leaving the constant omega_prime.
WashoutBlock forward_washout(std::shared_ptr<const Model> m,
                             const Profile& phi, double T, double nu);

struct BackwardBlock {
  Trajectory traj;  // backward clock s in [0, tau - 3T/4]
  State omega;
  double tau_prime;       // forward time after which the data has fully entered
  ControlSchedule alpha;  // forward clock, defined from 3T/4 on
  ControlSchedule beta;
};

/// Traces the target backward from t = tau: shocks extend as lines,
/// rarefaction fronts as lines, transversal meets are re-solved in reversed
/// orientation. Every front must exit strictly before reaching 3T/4; the
/// boundary traces read off the controls that re-create the block forward.
BackwardBlock backward_block(std::shared_ptr<const Model> m,
                             const Profile& psi_nu, double tau, double T,
                             double nu);

struct Connection {
  State mid;  // state after the 2-family sweep
  double t_inject_a;
  double t_inject_b;
};

/// Steers the constant omega_prime to the constant omega inside
/// [t_lo, t_hi]: a 2-family wave from x=a at t_lo, then a 1-family wave
/// from x=b at (t_lo+t_hi)/2; each sweep fits in a quarter horizon.
Connection connect_states(const Model& m, const State& omega_prime,
                          const State& omega, double t_lo, double t_hi);

struct SteerOptions {
  double rho_prime = -1.0;     // default c0 / 4
  double membership_h = -1.0;  // default (b-a)/1000
};

struct SteerPlan {
  double T = 0.0;
  double tau = 0.0;
  double tau_prime = 0.0;
  State omega_prime;
  State omega;
  ControlPair controls;
  Profile target;
  Profile target_nu;
  Profile achieved;
  double l1_error = 0.0;
  double quantization_error = 0.0;
  uint64_t events = 0;
};

/// Exact-controllability synthesizer for the Temple model: washout on
/// [0, T/4], connection on [T/4, 3T/4], backward-constructed block on
/// [3T/4, tau]; the assembled boundary traces are re-simulated from phi and
/// the achieved L1 error reported.
SteerPlan steer_to_target(std::shared_ptr<const Model> m, const Profile& phi,
                          const Profile& psi, double tau, double nu,
                          SteerOptions opts = {});

}  // namespace wavectl
