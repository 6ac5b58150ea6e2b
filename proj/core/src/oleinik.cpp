#include "wavectl/oleinik.hpp"

#include <algorithm>
#include <cmath>

namespace wavectl {

namespace {

// evaluation positions: midpoints of constant pieces plus the h-grid
std::vector<double> pair_positions(const Profile& psi, double h) {
  std::vector<double> xs;
  for (int i = 0; i < psi.pieces(); ++i)
    xs.push_back(0.5 * (psi.piece_lo(i) + psi.piece_hi(i)));
  const int grid = static_cast<int>(std::floor((psi.b - psi.a) / h));
  for (int j = 1; j < grid; ++j) xs.push_back(psi.a + j * h);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

OleinikReport oleinik_ratios(const Model& m, const Profile& psi, double h) {
  if (!(h > 0.0 && h < psi.b - psi.a))
    throw ConfigError("oleinik resolution h must lie in ]0, b-a[");
  const int n = m.dim();
  const int p = m.negative_families();
  OleinikReport rep;
  rep.h = h;
  rep.ratio.assign(n, -std::numeric_limits<double>::infinity());
  rep.witness_x.assign(n, psi.a);
  rep.witness_y.assign(n, psi.b);

  const auto xs = pair_positions(psi, h);
  std::vector<Vec> w(xs.size());
  for (size_t k = 0; k < xs.size(); ++k) w[k] = psi.at(xs[k]).w;

  const double min_sep = h * (1.0 - 1e-12);
  for (size_t ix = 0; ix < xs.size(); ++ix) {
    for (size_t iy = ix + 1; iy < xs.size(); ++iy) {
      const double dx = xs[iy] - xs[ix];
      if (dx < min_sep) continue;
      for (int i = 0; i < n; ++i) {
        const double weight = (i >= p) ? (xs[ix] - psi.a) : (psi.b - xs[iy]);
        const double q = (w[iy][i] - w[ix][i]) / dx * weight;
        if (q > rep.ratio[i]) {
          rep.ratio[i] = q;
          rep.witness_x[i] = xs[ix];
          rep.witness_y[i] = xs[iy];
        }
      }
    }
  }
  return rep;
}

OleinikReport check_membership(const Model& m, const Profile& psi, double rho,
                               double h, double eps_jump) {
  OleinikReport rep = oleinik_ratios(m, psi, h);
  const int n = m.dim();
  rep.pass.assign(n, true);
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    rep.pass[i] = rep.ratio[i] <= rho;
    ok = ok && rep.pass[i];
  }
  for (int k = 0; k + 1 < psi.pieces(); ++k) {
    for (int i = 0; i < n; ++i) {
      const double jump = psi.states[k + 1].w[i] - psi.states[k].w[i];
      if (jump > rep.worst_jump) {
        rep.worst_jump = jump;
        if (jump > eps_jump) {
          rep.upward_jump_ok = false;
          rep.jump_witness_piece = k;
        }
      }
    }
  }
  ok = ok && rep.upward_jump_ok;
  rep.passed = ok;
  return rep;
}

Lemma1Report lemma1_check(const Trajectory& traj,
                          const std::vector<double>& times, double k_bound,
                          double h, double delta) {
  const Model& m = *traj.model;
  if (m.dim() != 2)
    throw HypothesisError("lemma1_check applies to 2x2 systems");
  Lemma1Report rep;
  rep.k_bound = k_bound;
  rep.delta = delta;
  for (double t : times) {
    if (!(t > 0.0)) throw ConfigError("lemma1_check needs times > 0");
    const Profile psi = sample_profile(traj, t);
    const double tv = total_variation(psi, true);
    // sup of the plain (unweighted) quotient over the same pair set
    double worst = -std::numeric_limits<double>::infinity();
    const auto xs = pair_positions(psi, h);
    std::vector<Vec> w(xs.size());
    for (size_t k = 0; k < xs.size(); ++k) w[k] = psi.at(xs[k]).w;
    const double min_sep = h * (1.0 - 1e-12);
    for (size_t ix = 0; ix < xs.size(); ++ix)
      for (size_t iy = ix + 1; iy < xs.size(); ++iy) {
        const double dx = xs[iy] - xs[ix];
        if (dx < min_sep) continue;
        for (int i = 0; i < 2; ++i)
          worst = std::max(worst, (w[iy][i] - w[ix][i]) / dx);
      }
    const double measured = worst * t;
    rep.times.push_back(t);
    rep.measured_k.push_back(measured);
    rep.tv.push_back(tv);
    rep.within_scope.push_back(tv < delta);
    const bool pass = measured <= k_bound;
    rep.pass.push_back(pass);
    rep.all_pass = rep.all_pass && pass;
  }
  return rep;
}

}  // namespace wavectl
