#pragma once

// Shared helpers for the test suites: seeded profile generators and a
// first-order finite-volume reference solver (local Lax-Friedrichs flux)
// used as an independent oracle for the exact Riemann solutions.

#include <algorithm>
#include <cmath>
#include <vector>

#include "wavectl/engine.hpp"
#include "wavectl/models.hpp"
#include "wavectl/profile.hpp"
#include "wavectl/random.hpp"
#include "wavectl/riemann.hpp"

namespace testsupport {

using namespace wavectl;

/// Random piecewise-constant profile with values inside the central part of
/// the box (margin as a fraction of the half-width kept clear on each side).
inline Profile random_profile(const Model& m, double a, double b, int pieces,
                              Rng& rng, double margin = 0.4) {
  Profile p;
  p.a = a;
  p.b = b;
  std::vector<double> xs;
  for (int i = 0; i + 1 < pieces; ++i)
    xs.push_back(rng.uniform(a + 0.02 * (b - a), b - 0.02 * (b - a)));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  p.breaks = xs;
  for (size_t i = 0; i < xs.size() + 1; ++i) {
    Vec w(m.dim());
    for (int c = 0; c < m.dim(); ++c) {
      const Interval& iv = m.box()[c];
      const double half = 0.5 * iv.width() * (1.0 - margin);
      w[c] = iv.mid() + rng.uniform(-half, half);
    }
    p.states.push_back(m.state_from_w(w));
  }
  return p;
}

/// Cell averages of the solution of the Riemann problem (L at x<0, R at x>0)
/// at time T computed with a first-order finite-volume scheme and the local
/// Lax-Friedrichs numerical flux. Independent of the exact solver.
inline std::vector<Vec> fv_riemann_reference(const Model& m, const State& L,
                                             const State& R, double T,
                                             double x_lo, double x_hi,
                                             int cells, double cfl = 0.45) {
  const int n = m.dim();
  std::vector<Vec> u(cells);
  const double dx = (x_hi - x_lo) / cells;
  for (int i = 0; i < cells; ++i) {
    const double xc = x_lo + (i + 0.5) * dx;
    u[i] = xc < 0.0 ? L.u : R.u;
  }
  auto max_speed = [&](const Vec& s) {
    const Vec lam = m.eigen_w(m.to_riemann(s)).lambda;
    double a = 0.0;
    for (int k = 0; k < n; ++k) a = std::max(a, std::abs(lam[k]));
    return a;
  };
  double t = 0.0;
  std::vector<Vec> fluxes(cells + 1);
  while (t < T) {
    double amax = 1e-12;
    for (const Vec& s : u) amax = std::max(amax, max_speed(s));
    const double dt = std::min(cfl * dx / amax, T - t);
    for (int i = 0; i <= cells; ++i) {
      const Vec& ul = u[std::max(i - 1, 0)];
      const Vec& ur = u[std::min(i, cells - 1)];
      const double a = std::max(max_speed(ul), max_speed(ur));
      fluxes[i] =
          0.5 * (m.flux(ul) + m.flux(ur)) + (0.5 * a) * (ul - ur);
    }
    for (int i = 0; i < cells; ++i)
      u[i] += (dt / dx) * (fluxes[i] - fluxes[i + 1]);
    t += dt;
  }
  return u;
}

/// Evaluates the self-similar fan solution at x/t.
inline Vec fan_value_at(const std::vector<Wave>& fan, const State& L,
                        double xi) {
  Vec v = L.u;
  for (const Wave& w : fan) {
    if (xi > w.speed) v = w.right.u;
  }
  return v;
}

}  // namespace testsupport
