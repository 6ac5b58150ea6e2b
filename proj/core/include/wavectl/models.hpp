#pragma once

#include <memory>

#include "wavectl/model.hpp"

namespace wavectl {

/// Scalar f(u) = u^2/2 on [lo, hi] with lo > 0, so every speed is positive
/// (p = 0). Engine sanity model; the strict two-sided form of the speed
/// separation hypothesis does not apply to it.
std::shared_ptr<const Model> make_burgers(double lo = 1.0, double hi = 3.0);

/// Genuinely nonlinear 2x2 Temple-class system given directly in Riemann
/// coordinates on Gamma = [w1_lo, w1_hi] x [w2_lo, w2_hi] (defaults
/// [-3,-1] x [1,3]) with
///   lambda_1(w) = w_1 + w_2/4,   lambda_2(w) = w_2 + w_1/4,   p = 1.
/// i-waves change only w_i; there is no conservative flux, the system is
/// simulated entirely in the w chart.
std::shared_ptr<const Model> make_temple2(Interval w1 = {-3.0, -1.0},
                                          Interval w2 = {1.0, 3.0});

/// Isentropic-flow style 2x2 system in the variables (rho, u):
///   rho_t + (u rho)_x = 0
///   u_t + (u^2/2 + K^2 rho^(gamma-1)/(gamma-1))_x = 0,     1 < gamma < 3.
/// Gamma is the largest w-product box whose image stays inside the given
/// (rho, u) ranges. Riemann coordinates w = u -/+ h(rho),
/// h(rho) = 2K/(gamma-1) rho^((gamma-1)/2).
std::shared_ptr<const Model> make_gas(double gamma = 2.0, double K = 1.0,
                                      Interval rho_range = {0.8, 1.2},
                                      Interval u_range = {-0.2, 0.2});

/// Lagrangian-coordinates contrast model (specific volume v, velocity u):
///   v_t - u_x = 0
///   u_t + p(v)_x = 0,      p(v) = K^2 v^(-gamma).
/// Strictly hyperbolic and genuinely nonlinear, but r_1 ^ r_2 > 0: the
/// interaction of two shocks of the same family produces a rarefaction of
/// the other family, the opposite of the gas model's geometry.
std::shared_ptr<const Model> make_psystem(double gamma = 2.0, double K = 1.0,
                                          Interval v_range = {0.8, 1.2},
                                          Interval u_range = {-0.2, 0.2});

/// Time-reversed Temple system used by the backward construction: engine
/// family f carries the original family n-1-f with speed -lambda and the
/// shock/rarefaction orientation swapped, so running this model forward in
/// backward time traces the past of a Temple solution.
std::shared_ptr<const Model> make_temple2_backward(Interval w1 = {-3.0, -1.0},
                                                   Interval w2 = {1.0, 3.0});

/// Built-in lookup by name ("burgers", "temple2", "gas", "psystem") with
/// the default parameters; throws ConfigError on unknown names.
std::shared_ptr<const Model> make_model_by_name(const std::string& name);

}  // namespace wavectl
