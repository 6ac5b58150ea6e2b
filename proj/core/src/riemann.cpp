#include "wavectl/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wavectl {

std::vector<Wave> solve_riemann(const Model& m, const State& L, const State& R,
                                double nu) {
  if (!(nu > 0.0)) throw ConfigError("nu must be positive");
  if (L.w == R.w) return {};
  return m.riemann_waves(L, R, nu);
}

namespace {

std::vector<Wave> filter_by_speed_sign(std::vector<Wave> fan, bool positive) {
  std::vector<Wave> kept;
  for (auto& wv : fan) {
    if (wv.speed == 0.0)
      throw NumericalAbort(
          "boundary Riemann fan contains a zero-speed wave; the speed "
          "separation hypothesis excludes this on Gamma");
    if ((wv.speed > 0.0) == positive) kept.push_back(std::move(wv));
  }
  return kept;
}

}  // namespace

std::vector<Wave> solve_boundary_riemann_left(const Model& m,
                                              const State& control,
                                              const State& trace, double nu) {
  if (control.w == trace.w) return {};
  return filter_by_speed_sign(m.riemann_waves(control, trace, nu), true);
}

std::vector<Wave> solve_boundary_riemann_right(const Model& m,
                                               const State& control,
                                               const State& trace, double nu) {
  if (control.w == trace.w) return {};
  return filter_by_speed_sign(m.riemann_waves(trace, control, nu), false);
}

double rh_residual(const Model& m, const State& L, const State& R,
                   double sigma) {
  return (m.flux(R.u) - m.flux(L.u) - sigma * (R.u - L.u)).norm2();
}

void check_fan(const Model& m, const std::vector<Wave>& fan, const State& L,
               const State& R, double nu, double lax_tol) {
  auto fail = [&](const std::string& what) {
    throw NumericalAbort("invalid wave fan (" + m.name() + "): " + what);
  };
  if (fan.empty()) {
    if (!(L.w == R.w)) fail("empty fan between distinct states");
    return;
  }
  if (!(fan.front().left.w == L.w)) fail("fan does not start at L");
  if (!(fan.back().right.w == R.w)) fail("fan does not end at R");
  for (size_t k = 0; k + 1 < fan.size(); ++k) {
    if (!(fan[k].right.w == fan[k + 1].left.w)) fail("states do not chain");
    if (fan[k + 1].speed < fan[k].speed - 1e-12) fail("speeds decrease");
    if (fan[k + 1].family < fan[k].family) fail("families out of order");
  }
  for (const Wave& wv : fan) {
    if (!m.contains_w(wv.left.w) || !m.contains_w(wv.right.w))
      fail("fan state outside Gamma");
    if (wv.kind == WaveKind::Rarefaction) {
      if (wv.strength > nu * (1.0 + 1e-9)) fail("rarefaction front above nu");
    } else {
      const double ll = m.lambda(wv.family, wv.left);
      const double lr = m.lambda(wv.family, wv.right);
      if (!(lr < wv.speed + lax_tol && wv.speed < ll + lax_tol))
        fail("Lax condition violated");
    }
  }
}

}  // namespace wavectl
