#include "wavectl/steer.hpp"

#include <algorithm>
#include <cmath>

#include "wavectl/models.hpp"

namespace wavectl {

double horizon(const Model& m, double a, double b) {
  if (!(m.speeds().lambda_min > 0.0))
    throw HypothesisError("horizon needs lambda_min > 0 on Gamma");
  return 4.0 * (b - a) / m.speeds().lambda_min;
}

namespace {

void require_temple(const Model& m) {
  if (!m.temple_class() || m.dim() != 2)
    throw HypothesisError(
        "the steering construction is implemented for the 2x2 Temple model");
}

/// Collapses trace steps recorded at identical times to the final value.
std::vector<TraceStep> dedup_steps(const std::vector<TraceStep>& in) {
  std::vector<TraceStep> out;
  for (const TraceStep& s : in) {
    if (!out.empty() && out.back().t == s.t)
      out.back().s = s.s;
    else
      out.push_back(s);
  }
  return out;
}

/// Washout traces as an explicit control schedule starting at t_offset.
ControlSchedule schedule_from_steps(const std::vector<TraceStep>& steps,
                                    double t_offset) {
  ControlSchedule cs;
  for (const TraceStep& s : dedup_steps(steps)) cs.append(t_offset + s.t, s.s);
  return cs;
}

/// Forward controls for the backward block: the backward trace at backward
/// time s becomes the control value approached at forward time tau - s.
ControlSchedule reverse_schedule(const std::vector<TraceStep>& steps,
                                 double t_start, double tau) {
  const auto ded = dedup_steps(steps);
  ControlSchedule cs;
  cs.append(t_start, ded.back().s);  // the constant omega reached at the seam
  for (size_t k = ded.size(); k-- > 1;) cs.append(tau - ded[k].t, ded[k - 1].s);
  return cs;
}

}  // namespace

Profile quantize_target(const Model& m, const Profile& psi, double nu,
                        double rho_prime) {
  require_temple(m);
  const int n = m.dim();
  const int p = m.negative_families();
  const Box& box = m.box();

  // snap piece values to the nu-lattice anchored at the first piece
  std::vector<Vec> vals(psi.states.size());
  for (size_t i = 0; i < psi.states.size(); ++i) {
    Vec w(n);
    for (int c = 0; c < n; ++c) {
      const double anchor = psi.states[0].w[c];
      double v = anchor + std::round((psi.states[i].w[c] - anchor) / nu) * nu;
      while (v > box[c].hi) v -= nu;
      while (v < box[c].lo) v += nu;
      w[c] = v;
    }
    vals[i] = w;
  }

  // rebuild, merging equal neighbours and spreading multi-nu upward jumps
  Profile out;
  out.a = psi.a;
  out.b = psi.b;
  out.states.push_back(m.state_from_w(vals[0]));
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    const Vec prev = out.states.back().w;  // copy: out.states grows below
    const Vec next = vals[i + 1];
    if (prev == next) continue;
    const double x0 = psi.breaks[i];
    const double x_next = i + 2 < vals.size() ? psi.breaks[i + 1] : psi.b;

    int wide_comp = -1;
    for (int c = 0; c < n; ++c) {
      const double jump = next[c] - prev[c];
      if (jump > nu * (1.0 + 1e-9)) {
        if (wide_comp >= 0)
          throw HypothesisError(
              "target has a simultaneous multi-nu upward jump in two "
              "components; not representable by the construction");
        wide_comp = c;
      }
    }
    if (wide_comp < 0) {
      out.breaks.push_back(x0);
      out.states.push_back(m.state_from_w(next));
      continue;
    }
    // spread the wide component into single-nu steps with quotient-safe
    // spacing; the other component moves with the first step
    const int c = wide_comp;
    const int k = static_cast<int>(std::round((next[c] - prev[c]) / nu));
    const double weight = (c >= p) ? std::max(x0 - psi.a, 0.02 * (psi.b - psi.a))
                                   : std::max(psi.b - x0, 0.02 * (psi.b - psi.a));
    const double delta = nu * weight / rho_prime;
    if (x0 + (k - 1) * delta >= x_next - 1e-12)
      throw HypothesisError(
          "target upward jump too wide to spread before the next feature");
    for (int j = 1; j <= k; ++j) {
      Vec w = next;
      w[c] = prev[c] + j * nu;
      if (j == k) w[c] = next[c];
      out.breaks.push_back(x0 + (j - 1) * delta);
      out.states.push_back(m.state_from_w(w));
    }
  }
  out.validate(m);
  return out;
}

WashoutBlock forward_washout(std::shared_ptr<const Model> m,
                             const Profile& phi, double T, double nu) {
  require_temple(*m);
  Engine eng(m, phi, BoundaryControls::absorbing(), nu);
  const double t_end = 0.25 * T;
  eng.run_until(t_end);
  if (eng.front_count() != 0)
    throw NumericalAbort(
        "washout incomplete: fronts survive past a quarter horizon");
  WashoutBlock blk{eng.finish(t_end), State{}, {}, {}};
  blk.omega_prime = blk.traj.trace_a.back().s;
  if (!same_state_w(blk.omega_prime, blk.traj.trace_b.back().s))
    throw NumericalAbort("washout did not end at a constant state");
  blk.alpha = schedule_from_steps(blk.traj.trace_a, 0.0);
  blk.beta = schedule_from_steps(blk.traj.trace_b, 0.0);
  return blk;
}

BackwardBlock backward_block(std::shared_ptr<const Model> m,
                             const Profile& psi_nu, double tau, double T,
                             double nu) {
  require_temple(*m);
  const double span = tau - 0.75 * T;
  if (!(span > 0.0)) throw HypothesisError("backward block needs tau > 3T/4");

  auto rev = make_temple2_backward(m->box()[0], m->box()[1]);
  Profile psi_rev = psi_nu;  // identity chart: states transfer unchanged
  EngineOptions opts;
  opts.forbid_same_family_collisions = true;
  Engine eng(rev, psi_rev, BoundaryControls::absorbing(), nu, opts);
  eng.run_until(span);
  if (eng.front_count() != 0)
    throw HypothesisError(
        "backward fronts survive to the connection seam; the target "
        "violates the admissible-class bound or tau is too small");
  BackwardBlock blk{eng.finish(span), State{}, 0.0, {}, {}};
  blk.omega = blk.traj.trace_a.back().s;
  if (!same_state_w(blk.omega, blk.traj.trace_b.back().s))
    throw NumericalAbort("backward block did not end at a constant state");

  double s_last = 0.0;
  for (const Event& e : blk.traj.events)
    if (e.kind == EventKind::BoundaryHitLeft ||
        e.kind == EventKind::BoundaryHitRight)
      s_last = std::max(s_last, e.time);
  blk.tau_prime = tau - s_last;
  if (!(blk.tau_prime > 0.75 * T))
    throw HypothesisError("backward exits reach the connection seam");

  blk.alpha = reverse_schedule(blk.traj.trace_a, 0.75 * T, tau);
  blk.beta = reverse_schedule(blk.traj.trace_b, 0.75 * T, tau);
  return blk;
}

Connection connect_states(const Model& m, const State& omega_prime,
                          const State& omega, double t_lo, double t_hi) {
  require_temple(m);
  Connection c;
  Vec mid(2);
  mid[0] = omega_prime.w[0];
  mid[1] = omega.w[1];
  c.mid = m.state_from_w(mid);
  c.t_inject_a = t_lo;
  c.t_inject_b = 0.5 * (t_lo + t_hi);
  return c;
}

SteerPlan steer_to_target(std::shared_ptr<const Model> m, const Profile& phi,
                          const Profile& psi, double tau, double nu,
                          SteerOptions opts) {
  require_temple(*m);
  phi.validate(*m);
  psi.validate(*m);
  if (phi.a != psi.a || phi.b != psi.b)
    throw ConfigError("initial and target profiles on different intervals");

  SteerPlan plan;
  plan.T = horizon(*m, phi.a, phi.b);
  plan.tau = tau;
  if (!(tau > plan.T))
    throw HypothesisError("steering horizon must exceed T = 4(b-a)/lambda_min");

  const double rho_prime =
      opts.rho_prime > 0.0 ? opts.rho_prime : 0.25 * m->speeds().c0;
  const double h = opts.membership_h > 0.0 ? opts.membership_h
                                           : (phi.b - phi.a) / 1000.0;
  const auto membership = check_membership(*m, psi, rho_prime, h, 2.0 * nu);
  if (!membership.passed)
    throw HypothesisError(
        "target outside the admissible class at rho' = " +
        std::to_string(rho_prime));

  plan.target = psi;
  plan.target_nu = quantize_target(*m, psi, nu, rho_prime);
  plan.quantization_error = l1_distance(plan.target_nu, psi, true);

  auto washout = forward_washout(m, phi, plan.T, nu);
  plan.omega_prime = washout.omega_prime;

  auto back = backward_block(m, plan.target_nu, tau, plan.T, nu);
  plan.omega = back.omega;
  plan.tau_prime = back.tau_prime;

  const auto conn =
      connect_states(*m, plan.omega_prime, plan.omega, 0.25 * plan.T,
                     0.75 * plan.T);

  // assemble the full control pair
  ControlPair full;
  full.a = washout.alpha;
  full.a.append(conn.t_inject_a, conn.mid);
  for (size_t k = 0; k < back.alpha.times.size(); ++k)
    full.a.append(back.alpha.times[k], back.alpha.values[k]);
  full.b = washout.beta;
  full.b.append(conn.t_inject_a, plan.omega_prime);
  full.b.append(conn.t_inject_b, plan.omega);
  for (size_t k = 0; k < back.beta.times.size(); ++k)
    full.b.append(back.beta.times[k], back.beta.values[k]);
  plan.controls = full;

  // forward re-simulation from phi with the assembled controls
  Engine eng(m, phi, BoundaryControls::from_pair(full), nu);
  auto traj = eng.finish(tau);
  plan.events = traj.events.size();

  // block-matching invariants
  const Profile at_quarter = sample_profile(traj, 0.25 * plan.T);
  if (at_quarter.pieces() != 1 ||
      !same_state_w(at_quarter.states[0], plan.omega_prime))
    throw NumericalAbort("re-simulation does not match omega' at T/4");
  const Profile at_three_quarter = sample_profile(traj, 0.75 * plan.T);
  if (at_three_quarter.pieces() != 1 ||
      !same_state_w(at_three_quarter.states[0], plan.omega))
    throw NumericalAbort("re-simulation does not match omega at 3T/4");

  plan.achieved = sample_profile(traj, tau);
  plan.l1_error = l1_distance(plan.achieved, psi, true);
  return plan;
}

}  // namespace wavectl
