#include "wavectl/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "wavectl/types.hpp"

namespace wavectl {

Vec Model::flux(const Vec&) const {
  throw NumericalAbort("model '" + name_ + "' has no conservative flux");
}

State Model::hugoniot_from_left(const State&, int, double) const {
  throw NumericalAbort("model '" + name_ +
                       "' does not expose its Hugoniot curves");
}

State Model::state_from_w(const Vec& w) const {
  if (!contains_w(w))
    throw OutOfBoxError("state outside Gamma for model '" + name_ + "'");
  return State{from_riemann(w), w};
}

State Model::state_from_u(const Vec& u) const {
  Vec w = to_riemann(u);
  if (!contains_w(w))
    throw OutOfBoxError("state outside Gamma for model '" + name_ + "'");
  return State{u, w};
}

namespace {

/// Visits an axis-aligned grid over the box (grid points per dimension).
void for_each_grid_point(const Box& box, int grid,
                         const std::function<void(const Vec&)>& fn) {
  const int n = static_cast<int>(box.size());
  std::vector<int> idx(n, 0);
  Vec w(n);
  while (true) {
    for (int i = 0; i < n; ++i) {
      const double t = (grid == 1) ? 0.5 : static_cast<double>(idx[i]) / (grid - 1);
      w[i] = box[i].lo + t * box[i].width();
    }
    fn(w);
    int d = 0;
    while (d < n && ++idx[d] == grid) idx[d++] = 0;
    if (d == n) break;
  }
}

/// Flux Jacobian by central differences, step 1e-6 scaled by magnitude.
std::array<Vec, kMaxDim> flux_jacobian_columns(const Model& m, const Vec& u) {
  const int n = m.dim();
  std::array<Vec, kMaxDim> cols;
  for (int j = 0; j < n; ++j) {
    const double eps = 1e-6 * std::max(1.0, std::abs(u[j]));
    Vec up = u, dn = u;
    up[j] += eps;
    dn[j] -= eps;
    cols[j] = (1.0 / (2.0 * eps)) * (m.flux(up) - m.flux(dn));
  }
  return cols;
}

Vec matvec(const std::array<Vec, kMaxDim>& cols, const Vec& x) {
  Vec y(cols[0].size(), 0.0);
  for (int j = 0; j < x.size(); ++j) y += x[j] * cols[j];
  return y;
}

double wedge(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

void Model::measure_speed_bounds(int grid) {
  double c0 = std::numeric_limits<double>::infinity();
  double lmin = std::numeric_limits<double>::infinity();
  double lmax = 0.0;
  for_each_grid_point(box_, grid, [&](const Vec& w) {
    const Vec lam = eigen_w(w).lambda;
    for (int i = 0; i < n_; ++i) {
      lmin = std::min(lmin, std::abs(lam[i]));
      lmax = std::max(lmax, std::abs(lam[i]));
    }
    if (p_ >= 1) c0 = std::min(c0, -lam[p_ - 1]);
    if (p_ < n_) c0 = std::min(c0, lam[p_]);
  });
  speeds_ = SpeedBounds{c0, lmin, lmax};
}

ValidationReport validate_model(const Model& m, int grid_per_dim) {
  ValidationReport rep;
  const int n = m.dim();
  const int p = m.negative_families();

  rep.strict_hyperbolic = true;
  rep.genuinely_nonlinear = true;
  rep.speed_separated = true;
  rep.chart_ok = true;
  rep.eigen_residual_ok = true;
  rep.min_gn = std::numeric_limits<double>::infinity();
  double c0 = std::numeric_limits<double>::infinity();
  double lmin = std::numeric_limits<double>::infinity();
  double lmax = 0.0;
  rep.wedge_checked = (n == 2 && m.has_flux());
  rep.wedge_max = {-std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};

  for_each_grid_point(m.box(), grid_per_dim, [&](const Vec& w) {
    const Spectrum sp = m.eigen_w(w);
    const Vec u = m.from_riemann(w);

    for (int i = 0; i + 1 < n; ++i) {
      if (!(sp.lambda[i + 1] - sp.lambda[i] > 1e-9)) {
        rep.strict_hyperbolic = false;
        rep.failures.push_back("eigenvalues not separated at a grid state");
      }
    }
    for (int i = 0; i < n; ++i) {
      lmin = std::min(lmin, std::abs(sp.lambda[i]));
      lmax = std::max(lmax, std::abs(sp.lambda[i]));
    }
    if (p >= 1 && !(sp.lambda[p - 1] < 0.0)) rep.speed_separated = false;
    if (p < n && !(sp.lambda[p] > 0.0)) rep.speed_separated = false;
    if (p >= 1) c0 = std::min(c0, -sp.lambda[p - 1]);
    if (p < n) c0 = std::min(c0, sp.lambda[p]);

    // chart round-trip
    const Vec w2 = m.to_riemann(u);
    rep.max_chart_roundtrip =
        std::max(rep.max_chart_roundtrip, (w2 - w).norm_inf());

    // genuine nonlinearity: directional derivative of lambda_i along r_i,
    // in the space the eigenvectors live in (u for flux models, w otherwise)
    for (int i = 0; i < n; ++i) {
      const Vec& r = sp.r[i];
      const double eps = 1e-6;
      double lam_p, lam_m;
      if (m.has_flux()) {
        lam_p = m.eigen_w(m.to_riemann(u + eps * r)).lambda[i];
        lam_m = m.eigen_w(m.to_riemann(u + (-eps) * r)).lambda[i];
      } else {
        lam_p = m.eigen_w(w + eps * r).lambda[i];
        lam_m = m.eigen_w(w + (-eps) * r).lambda[i];
      }
      const double gn = (lam_p - lam_m) / (2.0 * eps);
      rep.min_gn = std::min(rep.min_gn, gn);
      if (!(gn > 1e-6)) {
        rep.genuinely_nonlinear = false;
        rep.failures.push_back("genuine nonlinearity degenerate at a state");
      }
    }

    if (m.has_flux()) {
      const auto cols = flux_jacobian_columns(m, u);
      for (int i = 0; i < n; ++i) {
        const Vec resid = matvec(cols, sp.r[i]) - sp.lambda[i] * sp.r[i];
        rep.max_eigen_residual =
            std::max(rep.max_eigen_residual, resid.norm2());
      }
      if (rep.wedge_checked) {
        // Dr_i . r_i by central differences of the eigenvector field.
        const double eps = 1e-6;
        auto dr = [&](int i) {
          const Vec rp = m.eigen_w(m.to_riemann(u + eps * sp.r[i])).r[i];
          const Vec rm = m.eigen_w(m.to_riemann(u + (-eps) * sp.r[i])).r[i];
          return (1.0 / (2.0 * eps)) * (rp - rm);
        };
        rep.wedge_max[0] = std::max(rep.wedge_max[0], wedge(sp.r[0], sp.r[1]));
        rep.wedge_max[1] = std::max(rep.wedge_max[1], wedge(sp.r[0], dr(0)));
        rep.wedge_max[2] = std::max(rep.wedge_max[2], wedge(sp.r[1], dr(1)));
      }
    }
  });

  if (rep.max_chart_roundtrip > 1e-10) {
    rep.chart_ok = false;
    rep.failures.push_back("chart round-trip above 1e-10");
  }
  if (m.has_flux() && rep.max_eigen_residual > 1e-9) {
    rep.eigen_residual_ok = false;
    rep.failures.push_back("eigen residual above 1e-9");
  }
  if (!(c0 > 0.0) || !std::isfinite(lmax)) {
    rep.speed_separated = false;
    rep.failures.push_back("speed separation failed");
  }
  rep.wedge_ok = rep.wedge_checked && rep.wedge_max[0] < 0.0 &&
                 rep.wedge_max[1] < 0.0 && rep.wedge_max[2] < 0.0;
  rep.c0 = c0;
  rep.lambda_min = lmin;
  rep.lambda_max = lmax;
  return rep;
}

}  // namespace wavectl
