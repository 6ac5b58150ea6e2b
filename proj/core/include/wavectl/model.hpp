#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "wavectl/types.hpp"

namespace wavectl {

struct Wave;  // riemann.hpp

/// Eigenvalues (sorted ascending) and unit right eigenvectors at a state.
/// For models with a conservative flux the eigenvectors live in u-space; for
/// models defined directly in Riemann coordinates they are the coordinate
/// axes. Eigenvectors are oriented so that genuinely nonlinear fields have
/// D(lambda_i) . r_i > 0.
struct Spectrum {
  Vec lambda;
  std::array<Vec, kMaxDim> r;
};

/// Speed bounds measured over the admissible box Gamma.
struct SpeedBounds {
  double c0 = 0.0;          // separation: lambda_p <= -c0 < 0 < c0 <= lambda_{p+1}
  double lambda_min = 0.0;  // min_i inf_Gamma |lambda_i|
  double lambda_max = 0.0;  // max_i sup_Gamma |lambda_i|
};

/// A strictly hyperbolic system on a product box Gamma of Riemann
/// coordinates. Immutable after construction; safe to share between threads.
class Model {
 public:
  virtual ~Model() = default;

  const std::string& name() const { return name_; }
  int dim() const { return n_; }
  /// Number p of strictly negative characteristic families.
  int negative_families() const { return p_; }
  const Box& box() const { return box_; }
  const SpeedBounds& speeds() const { return speeds_; }

  virtual bool has_flux() const = 0;
  /// Systems whose shock and rarefaction curves coincide and are straight in
  /// the Riemann chart (interactions change only wave speeds).
  virtual bool temple_class() const { return false; }

  virtual Vec flux(const Vec& u) const;
  virtual Vec to_riemann(const Vec& u) const = 0;
  virtual Vec from_riemann(const Vec& w) const = 0;
  virtual Spectrum eigen_w(const Vec& w) const = 0;

  /// Exact solver for the Riemann problem (L, R): ordered elementary waves
  /// with rarefactions split into fronts of strength <= nu. Throws
  /// OutOfBoxError when the wave curves do not intersect inside Gamma.
  virtual std::vector<Wave> riemann_waves(const State& L, const State& R,
                                          double nu) const = 0;

  /// Right state of the admissible shock of the given family through `left`
  /// with |w_family(right) - w_family(left)| = strength.
  virtual State hugoniot_from_left(const State& left, int family,
                                   double strength) const;

  double lambda(int family, const State& s) const {
    return eigen_w(s.w).lambda[family];
  }

  bool contains_w(const Vec& w, double slack = 1e-9) const {
    for (int i = 0; i < n_; ++i)
      if (!box_[i].contains(w[i], slack)) return false;
    return true;
  }

  State state_from_w(const Vec& w) const;
  State state_from_u(const Vec& u) const;

 protected:
  Model(std::string name, int n, int p, Box box)
      : name_(std::move(name)), n_(n), p_(p), box_(std::move(box)) {}

  /// Called once at the end of the concrete constructor.
  void measure_speed_bounds(int grid = 33);

  std::string name_;
  int n_;
  int p_;
  Box box_;
  SpeedBounds speeds_;
};

/// Grid-sampled hypothesis report: strict hyperbolicity, genuine
/// nonlinearity, speed separation, chart bijectivity, and (for 2x2 systems
/// with a flux) the wedge-sign conditions behind the shock-interaction
/// geometry. Failures are recorded, never thrown.
struct ValidationReport {
  bool strict_hyperbolic = false;
  bool genuinely_nonlinear = false;
  bool speed_separated = false;
  bool chart_ok = false;
  bool eigen_residual_ok = false;
  bool wedge_checked = false;  // only 2x2 flux models
  bool wedge_ok = false;
  // max over the grid of the three wedge products
  // r1^r2, r1^(Dr1 r1), r2^(Dr2 r2); all must be < 0.
  std::array<double, 3> wedge_max{};
  double c0 = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double max_eigen_residual = 0.0;
  double max_chart_roundtrip = 0.0;
  double min_gn = 0.0;  // min over grid and families of D(lambda_i) . r_i
  std::vector<std::string> failures;

  bool hypotheses_ok() const {
    return strict_hyperbolic && genuinely_nonlinear && speed_separated &&
           chart_ok && eigen_residual_ok;
  }
};

ValidationReport validate_model(const Model& m, int grid_per_dim = 21);

}  // namespace wavectl
