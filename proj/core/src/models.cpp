#include "wavectl/models.hpp"

#include <cmath>
#include <limits>

#include "wavectl/riemann.hpp"

namespace wavectl {

namespace {

constexpr double kZeroJump = 1e-14;  // jumps below this are dropped

Vec unit2(double x, double y) {
  const double s = std::sqrt(x * x + y * y);
  return Vec{x / s, y / s};
}

// ---------------------------------------------------------------------------
// burgers: f(u) = u^2/2 on [lo, hi], lo > 0, p = 0
// ---------------------------------------------------------------------------

class BurgersModel final : public Model {
 public:
  BurgersModel(double lo, double hi)
      : Model("burgers", 1, 0, Box{{lo, hi}}) {
    if (!(lo > 0.0 && hi > lo))
      throw ConfigError("burgers range must satisfy 0 < lo < hi");
    measure_speed_bounds();
  }

  bool has_flux() const override { return true; }
  Vec flux(const Vec& u) const override { return Vec{0.5 * u[0] * u[0]}; }
  Vec to_riemann(const Vec& u) const override { return u; }
  Vec from_riemann(const Vec& w) const override { return w; }

  Spectrum eigen_w(const Vec& w) const override {
    Spectrum sp;
    sp.lambda = Vec{w[0]};
    sp.r[0] = Vec{1.0};
    return sp;
  }

  State hugoniot_from_left(const State& left, int family,
                           double strength) const override {
    if (family != 0) throw ConfigError("burgers has a single family");
    return state_from_u(Vec{left.u[0] - strength});
  }

  std::vector<Wave> riemann_waves(const State& L, const State& R,
                                  double nu) const override {
    std::vector<Wave> fan;
    const double ul = L.u[0], ur = R.u[0];
    if (std::abs(ur - ul) < kZeroJump) return fan;
    if (ul > ur) {
      Wave wv;
      wv.family = 0;
      wv.kind = WaveKind::Shock;
      wv.left = L;
      wv.right = R;
      wv.speed = 0.5 * (ul + ur);  // Rankine-Hugoniot for the quadratic flux
      wv.strength = std::abs(ur - ul);
      fan.push_back(wv);
    } else {
      detail::split_rarefaction(
          0, L, R, ul, ur, nu,
          [&](double v) { return State{Vec{v}, Vec{v}}; },
          [&](double mid) { return mid; }, fan);
    }
    return fan;
  }
};

// ---------------------------------------------------------------------------
// temple2: 2x2 Temple system given directly in Riemann coordinates,
//   lambda_1 = w1 + w2/4, lambda_2 = w2 + w1/4, p = 1.
// The same class, with reversed = true, implements the time-reversed system
// used by the backward construction: engine family f carries the original
// family 1-f with negated speed, and jumps are never split (the past of a
// Temple solution consists of the same fronts traced back as lines).
// ---------------------------------------------------------------------------

class TempleModel final : public Model {
 public:
  TempleModel(Interval w1, Interval w2, bool reversed)
      : Model(reversed ? "temple2-backward" : "temple2", 2, 1, Box{w1, w2}),
        reversed_(reversed) {
    measure_speed_bounds();
  }

  bool has_flux() const override { return false; }
  bool temple_class() const override { return true; }
  Vec to_riemann(const Vec& u) const override { return u; }
  Vec from_riemann(const Vec& w) const override { return w; }

  double lambda_forward(int comp, const Vec& w) const {
    return comp == 0 ? w[0] + 0.25 * w[1] : w[1] + 0.25 * w[0];
  }
  // engine family f moves component comp(f)
  int comp_of(int family) const { return reversed_ ? 1 - family : family; }
  double lambda_family(int family, const Vec& w) const {
    const int c = comp_of(family);
    return reversed_ ? -lambda_forward(c, w) : lambda_forward(c, w);
  }

  Spectrum eigen_w(const Vec& w) const override {
    Spectrum sp;
    sp.lambda = Vec{lambda_family(0, w), lambda_family(1, w)};
    for (int f = 0; f < 2; ++f) {
      Vec r(2, 0.0);
      r[comp_of(f)] = reversed_ ? -1.0 : 1.0;  // oriented for D(lambda).r > 0
      sp.r[f] = r;
    }
    return sp;
  }

  State hugoniot_from_left(const State& left, int family,
                           double strength) const override {
    if (reversed_)
      throw NumericalAbort("hugoniot_from_left on the reversed model");
    Vec w = left.w;
    w[family] -= strength;  // shock and rarefaction curves coincide
    return state_from_w(w);
  }

  std::vector<Wave> riemann_waves(const State& L, const State& R,
                                  double nu) const override {
    std::vector<Wave> fan;
    // Intermediate state by component copy: family 0 changes comp_of(0)
    // first, then family 1 changes the other component.
    const int c0 = comp_of(0), c1 = comp_of(1);
    Vec wm(2);
    wm[c0] = R.w[c0];
    wm[c1] = L.w[c1];
    const State M{wm, wm};
    add_family_waves(0, L, M, nu, fan);
    add_family_waves(1, M, R, nu, fan);
    return fan;
  }

 private:
  void add_family_waves(int family, const State& from, const State& to,
                        double nu, std::vector<Wave>& fan) const {
    const int c = comp_of(family);
    const double jump = to.w[c] - from.w[c];
    if (std::abs(jump) < kZeroJump) return;
    // Admissible shocks are downward jumps of the component in both the
    // forward and the reversed orientation (a forward shock is traced
    // backward as a single line, never re-expanded).
    if (jump < 0.0) {
      Wave wv;
      wv.family = family;
      wv.kind = WaveKind::Shock;
      wv.left = from;
      wv.right = to;
      wv.speed =
          0.5 * (lambda_family(family, from.w) + lambda_family(family, to.w));
      wv.strength = -jump;
      fan.push_back(wv);
      return;
    }
    if (reversed_) {
      // The past of an upward jump is a single rarefaction line; a jump
      // above nu would require two same-family rarefaction fronts meeting,
      // which no front-tracking solution admits.
      if (jump > nu * (1.0 + 1e-9))
        throw HypothesisError(
            "backward construction: upward jump exceeds nu, state outside "
            "the admissible target class");
      Wave wv;
      wv.family = family;
      wv.kind = WaveKind::Rarefaction;
      wv.left = from;
      wv.right = to;
      Vec mid = from.w;
      mid[c] = 0.5 * (from.w[c] + to.w[c]);
      wv.speed = lambda_family(family, mid);
      wv.strength = jump;
      fan.push_back(wv);
      return;
    }
    const Vec base = from.w;
    detail::split_rarefaction(
        family, from, to, from.w[c], to.w[c], nu,
        [&](double v) {
          Vec w = base;
          w[c] = v;
          return State{w, w};
        },
        [&](double midv) {
          Vec w = base;
          w[c] = midv;
          return lambda_family(family, w);
        },
        fan);
  }

  bool reversed_;
};

// ---------------------------------------------------------------------------
// gas: rho_t + (u rho)_x = 0, u_t + (u^2/2 + K^2 rho^(g-1)/(g-1))_x = 0.
// Riemann coordinates w = u -/+ h(rho), h = (K/theta) rho^theta,
// theta = (g-1)/2. Wave curves: rarefaction branches follow the invariants,
// shock branches satisfy du^2 = 2 drho dP / (rho_l + rho_r).
// ---------------------------------------------------------------------------

class GasModel final : public Model {
 public:
  GasModel(double gamma, double K, Interval rho_range, Interval u_range)
      : Model("gas", 2, 1, w_box(gamma, K, rho_range, u_range)),
        gamma_(gamma),
        K_(K),
        theta_(0.5 * (gamma - 1.0)) {
    measure_speed_bounds();
  }

  bool has_flux() const override { return true; }

  double h(double rho) const { return (K_ / theta_) * std::pow(rho, theta_); }
  double sound(double rho) const { return K_ * std::pow(rho, theta_); }
  double pressure(double rho) const {
    return K_ * K_ * std::pow(rho, gamma_ - 1.0) / (gamma_ - 1.0);
  }
  double dpressure(double rho) const {
    return K_ * K_ * std::pow(rho, gamma_ - 2.0);
  }
  double rho_from_h(double hv) const {
    return std::pow(theta_ * hv / K_, 1.0 / theta_);
  }

  Vec flux(const Vec& s) const override {
    const double rho = s[0], u = s[1];
    return Vec{u * rho, 0.5 * u * u + pressure(rho)};
  }
  Vec to_riemann(const Vec& s) const override {
    const double hr = h(s[0]);
    return Vec{s[1] - hr, s[1] + hr};
  }
  Vec from_riemann(const Vec& w) const override {
    const double u = 0.5 * (w[0] + w[1]);
    const double hv = 0.5 * (w[1] - w[0]);
    return Vec{rho_from_h(hv), u};
  }

  Spectrum eigen_w(const Vec& w) const override {
    const Vec s = from_riemann(w);
    const double rho = s[0], u = s[1], c = sound(rho);
    Spectrum sp;
    sp.lambda = Vec{u - c, u + c};
    sp.r[0] = unit2(-rho, c);
    sp.r[1] = unit2(rho, c);
    return sp;
  }

  std::vector<Wave> riemann_waves(const State& L, const State& R,
                                  double nu) const override;
  State hugoniot_from_left(const State& left, int family,
                           double strength) const override;

  // 1-wave curve through the left state, parameterized by rho.
  double u_curve1(double rho, const Vec& uL) const {
    if (rho <= uL[0]) return uL[1] + h(uL[0]) - h(rho);
    return uL[1] - shock_du(uL[0], rho);
  }
  double du_curve1(double rho, const Vec& uL) const {
    if (rho <= uL[0]) return -sound(rho) / rho;
    return -dshock_du(uL[0], rho);
  }
  // 2-wave curve through the right state.
  double u_curve2(double rho, const Vec& uR) const {
    if (rho <= uR[0]) return uR[1] - h(uR[0]) + h(rho);
    return uR[1] + shock_du(uR[0], rho);
  }
  double du_curve2(double rho, const Vec& uR) const {
    if (rho <= uR[0]) return sound(rho) / rho;
    return dshock_du(uR[0], rho);
  }

 private:
  // |du| along the Hugoniot from rho0 to rho > rho0.
  double shock_du(double rho0, double rho) const {
    const double drho = rho - rho0;
    const double dP = pressure(rho) - pressure(rho0);
    return std::sqrt(2.0 * drho * dP / (rho + rho0));
  }
  double dshock_du(double rho0, double rho) const {
    const double drho = rho - rho0;
    const double dP = pressure(rho) - pressure(rho0);
    const double g = 2.0 * drho * dP / (rho + rho0);
    if (g <= 0.0) return std::numeric_limits<double>::infinity();
    const double dg =
        2.0 * ((dP + drho * dpressure(rho)) * (rho + rho0) - drho * dP) /
        ((rho + rho0) * (rho + rho0));
    return 0.5 * dg / std::sqrt(g);
  }

  static Box w_box(double gamma, double K, Interval rho_range,
                   Interval u_range) {
    if (!(gamma > 1.0 && gamma < 3.0))
      throw ConfigError("gas model requires 1 < gamma < 3");
    if (!(K > 0.0) || !(rho_range.lo > 0.0) || !(rho_range.hi > rho_range.lo))
      throw ConfigError("gas model requires K > 0 and 0 < rho_lo < rho_hi");
    const double theta = 0.5 * (gamma - 1.0);
    auto h = [&](double rho) { return (K / theta) * std::pow(rho, theta); };
    const double h_lo = h(rho_range.lo), h_hi = h(rho_range.hi);
    const double hc = 0.5 * (h_lo + h_hi);
    const double uc = u_range.mid();
    const double r = std::min(0.5 * u_range.width(), 0.5 * (h_hi - h_lo));
    if (!(r > 0.0)) throw ConfigError("gas box degenerate");
    return Box{{uc - hc - r, uc - hc + r}, {uc + hc - r, uc + hc + r}};
  }

  double gamma_, K_, theta_;
};

// ---------------------------------------------------------------------------
// psystem: v_t - u_x = 0, u_t + p(v)_x = 0, p(v) = K^2 v^-gamma.
// Same chart structure with H(v) = (2 sqrt(g) K/(g-1)) v^(-(g-1)/2); the
// r1 ^ r2 wedge has the opposite sign to the gas model.
// ---------------------------------------------------------------------------

class PSystemModel final : public Model {
 public:
  PSystemModel(double gamma, double K, Interval v_range, Interval u_range)
      : Model("psystem", 2, 1, w_box(gamma, K, v_range, u_range)),
        gamma_(gamma),
        K_(K),
        theta_(0.5 * (gamma - 1.0)),
        A_(2.0 * std::sqrt(gamma) * K / (gamma - 1.0)) {
    measure_speed_bounds();
  }

  bool has_flux() const override { return true; }

  double H(double v) const { return A_ * std::pow(v, -theta_); }
  double v_from_H(double Hv) const { return std::pow(A_ / Hv, 1.0 / theta_); }
  double sound(double v) const {
    return std::sqrt(gamma_) * K_ * std::pow(v, -0.5 * (gamma_ + 1.0));
  }
  double pres(double v) const { return K_ * K_ * std::pow(v, -gamma_); }
  double dpres(double v) const {
    return -gamma_ * K_ * K_ * std::pow(v, -gamma_ - 1.0);
  }

  Vec flux(const Vec& s) const override { return Vec{-s[1], pres(s[0])}; }
  Vec to_riemann(const Vec& s) const override {
    const double Hv = H(s[0]);
    return Vec{s[1] - Hv, s[1] + Hv};
  }
  Vec from_riemann(const Vec& w) const override {
    const double u = 0.5 * (w[0] + w[1]);
    const double Hv = 0.5 * (w[1] - w[0]);
    return Vec{v_from_H(Hv), u};
  }

  Spectrum eigen_w(const Vec& w) const override {
    const Vec s = from_riemann(w);
    const double c = sound(s[0]);
    Spectrum sp;
    sp.lambda = Vec{-c, c};
    sp.r[0] = unit2(1.0, c);
    sp.r[1] = unit2(-1.0, c);
    return sp;
  }

  std::vector<Wave> riemann_waves(const State& L, const State& R,
                                  double nu) const override;
  State hugoniot_from_left(const State& left, int family,
                           double strength) const override;

  // 1-wave curve through the left state, parameterized by v (increasing).
  double u_curve1(double v, const Vec& uL) const {
    if (v >= uL[0]) return uL[1] + H(uL[0]) - H(v);  // rarefaction
    return uL[1] - shock_du(uL[0], v);               // shock, v < vL
  }
  double du_curve1(double v, const Vec& uL) const {
    if (v >= uL[0]) return sound(v);
    return -dshock_du_dv(uL[0], v);
  }
  // 2-wave curve through the right state (decreasing in v).
  double u_curve2(double v, const Vec& uR) const {
    if (v >= uR[0]) return uR[1] + H(v) - H(uR[0]);  // rarefaction
    return uR[1] + shock_du(uR[0], v);
  }
  double du_curve2(double v, const Vec& uR) const {
    if (v >= uR[0]) return -sound(v);
    return dshock_du_dv(uR[0], v);
  }

 private:
  // |du| along the Hugoniot from v0 to v < v0: du^2 = -dv dp > 0.
  double shock_du(double v0, double v) const {
    const double dv = v - v0;
    const double dp = pres(v) - pres(v0);
    return std::sqrt(-dv * dp);
  }
  double dshock_du_dv(double v0, double v) const {
    const double dv = v - v0;
    const double dp = pres(v) - pres(v0);
    const double g = -dv * dp;
    if (g <= 0.0) return std::numeric_limits<double>::infinity();
    const double dg = -(dp + dv * dpres(v));
    // derivative of sqrt(g) w.r.t. v; negative since g grows as v decreases
    return 0.5 * dg / std::sqrt(g);
  }

  static Box w_box(double gamma, double K, Interval v_range,
                   Interval u_range) {
    if (!(gamma > 1.0 && gamma < 3.0))
      throw ConfigError("psystem model requires 1 < gamma < 3");
    if (!(K > 0.0) || !(v_range.lo > 0.0) || !(v_range.hi > v_range.lo))
      throw ConfigError("psystem requires K > 0 and 0 < v_lo < v_hi");
    const double theta = 0.5 * (gamma - 1.0);
    const double A = 2.0 * std::sqrt(gamma) * K / (gamma - 1.0);
    auto H = [&](double v) { return A * std::pow(v, -theta); };
    const double H_lo = H(v_range.hi), H_hi = H(v_range.lo);
    const double Hc = 0.5 * (H_lo + H_hi);
    const double uc = u_range.mid();
    const double r = std::min(0.5 * u_range.width(), 0.5 * (H_hi - H_lo));
    if (!(r > 0.0)) throw ConfigError("psystem box degenerate");
    return Box{{uc - Hc - r, uc - Hc + r}, {uc + Hc - r, uc + Hc + r}};
  }

  double gamma_, K_, theta_, A_;
};

// ---------------------------------------------------------------------------
// Shared middle-state solver: finds x such that F(x) = 0 on [lo, hi] given
// that F is strictly monotone; safeguarded Newton with bisection fallback.
// ---------------------------------------------------------------------------

template <typename F, typename DF>
double solve_monotone(const F& f, const DF& df, double x0, double lo,
                      double hi, const char* what) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw OutOfBoxError(std::string("wave curves do not intersect inside the "
                                    "admissible region (") +
                        what + ")");
  double x = std::min(std::max(x0, lo), hi);
  for (int it = 0; it < 60; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= 1e-13) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) break;
    const double d = df(x);
    double xn = (std::isfinite(d) && d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisection fallback
    x = xn;
  }
  if (std::abs(f(x)) > 1e-9)
    throw NumericalAbort(std::string("middle-state solve did not converge (") +
                         what + ")");
  return x;
}

// Assembles the two-family fan of a 2x2 system with convex wave curves.
// CurveState maps (family, rho-like parameter) to the chained State;
// the shock speed comes from the model-specific Rankine-Hugoniot relation.
template <typename ModelT>
std::vector<Wave> assemble_two_family_fan(
    const ModelT& m, const State& L, const State& R, double nu, double mid_par,
    bool shock1, bool shock2, const State& M,
    double (*shock_speed)(const ModelT&, const State&, const State&)) {
  std::vector<Wave> fan;
  auto add_wave = [&](int family, const State& from, const State& to,
                      bool is_shock) {
    const double jump = to.w[family] - from.w[family];
    if (std::abs(jump) < kZeroJump) return;
    if (is_shock) {
      Wave wv;
      wv.family = family;
      wv.kind = WaveKind::Shock;
      wv.left = from;
      wv.right = to;
      wv.speed = shock_speed(m, from, to);
      wv.strength = std::abs(jump);
      fan.push_back(wv);
    } else {
      // rarefaction: the curve keeps the other Riemann coordinate constant
      const int other = 1 - family;
      const Vec base = from.w;
      detail::split_rarefaction(
          family, from, to, from.w[family], to.w[family], nu,
          [&](double wv_) {
            Vec w = base;
            w[family] = wv_;
            (void)other;
            return State{m.from_riemann(w), w};
          },
          [&](double midv) {
            Vec w = base;
            w[family] = midv;
            return m.eigen_w(w).lambda[family];
          },
          fan);
    }
  };
  (void)mid_par;
  add_wave(0, L, M, shock1);
  add_wave(1, M, R, shock2);
  return fan;
}

std::vector<Wave> solve_convex_2x2(const GasModel& m, const State& L,
                                   const State& R, double nu) {
  // middle state: intersection of the 1-curve through L and the 2-curve
  // through R, scalar equation in rho (u1 decreasing, u2 increasing)
  auto F = [&](double rho) {
    return m.u_curve1(rho, L.u) - m.u_curve2(rho, R.u);
  };
  auto dF = [&](double rho) {
    return m.du_curve1(rho, L.u) - m.du_curve2(rho, R.u);
  };
  const double rho_cap = 8.0 * std::max(L.u[0], R.u[0]);
  const double rho_m = solve_monotone(F, dF, 0.5 * (L.u[0] + R.u[0]), 1e-9,
                                      rho_cap, "gas");
  const double u_m = m.u_curve1(rho_m, L.u);
  const Vec um{rho_m, u_m};
  const Vec wm = m.to_riemann(um);
  if (!m.contains_w(wm))
    throw OutOfBoxError("gas Riemann middle state outside Gamma");
  const State M{um, wm};
  const bool shock1 = rho_m > L.u[0];
  const bool shock2 = rho_m > R.u[0];
  auto speed = +[](const GasModel&, const State& a, const State& b) {
    // mass equation: sigma = (rho_r u_r - rho_l u_l) / (rho_r - rho_l)
    return (b.u[0] * b.u[1] - a.u[0] * a.u[1]) / (b.u[0] - a.u[0]);
  };
  return assemble_two_family_fan(m, L, R, nu, rho_m, shock1, shock2, M, speed);
}

std::vector<Wave> solve_convex_2x2(const PSystemModel& m, const State& L,
                                   const State& R, double nu) {
  auto F = [&](double v) {
    return m.u_curve1(v, L.u) - m.u_curve2(v, R.u);
  };
  auto dF = [&](double v) {
    return m.du_curve1(v, L.u) - m.du_curve2(v, R.u);
  };
  const double v_cap = 8.0 * std::max(L.u[0], R.u[0]);
  const double v_m =
      solve_monotone(F, dF, 0.5 * (L.u[0] + R.u[0]), 1e-9, v_cap, "psystem");
  const double u_m = m.u_curve1(v_m, L.u);
  const Vec um{v_m, u_m};
  const Vec wm = m.to_riemann(um);
  if (!m.contains_w(wm))
    throw OutOfBoxError("psystem Riemann middle state outside Gamma");
  const State M{um, wm};
  const bool shock1 = v_m < L.u[0];
  const bool shock2 = v_m < R.u[0];
  auto speed = +[](const PSystemModel&, const State& a, const State& b) {
    // v_t - u_x = 0: sigma = -(u_r - u_l) / (v_r - v_l)
    return -(b.u[1] - a.u[1]) / (b.u[0] - a.u[0]);
  };
  return assemble_two_family_fan(m, L, R, nu, v_m, shock1, shock2, M, speed);
}

std::vector<Wave> GasModel::riemann_waves(const State& L, const State& R,
                                          double nu) const {
  if (L.w == R.w) return {};
  return solve_convex_2x2(*this, L, R, nu);
}

std::vector<Wave> PSystemModel::riemann_waves(const State& L, const State& R,
                                              double nu) const {
  if (L.w == R.w) return {};
  return solve_convex_2x2(*this, L, R, nu);
}

State GasModel::hugoniot_from_left(const State& left, int family,
                                   double strength) const {
  const double target = left.w[family] - strength;
  const double rhoL = left.u[0];
  auto state_at = [&](double rho) {
    const double u = family == 0 ? left.u[1] - shock_du(rhoL, rho)
                                 : left.u[1] - shock_du(rho, rhoL);
    return Vec{rho, u};
  };
  auto F = [&](double rho) {
    return to_riemann(state_at(rho))[family] - target;
  };
  auto dF = [&](double) { return std::numeric_limits<double>::quiet_NaN(); };
  // family 0 shocks compress (rho grows), family 1 shocks expand
  const double lo = family == 0 ? rhoL * (1.0 + 1e-13) : 1e-6 * rhoL;
  const double hi = family == 0 ? 16.0 * rhoL : rhoL * (1.0 - 1e-13);
  const double rho = solve_monotone(F, dF, 0.5 * (lo + hi), lo, hi,
                                    "gas hugoniot");
  return state_from_u(state_at(rho));
}

State PSystemModel::hugoniot_from_left(const State& left, int family,
                                       double strength) const {
  const double target = left.w[family] - strength;
  const double vL = left.u[0];
  auto state_at = [&](double v) {
    const double u = family == 0 ? left.u[1] - shock_du(vL, v)
                                 : left.u[1] - shock_du(v, vL);
    return Vec{v, u};
  };
  auto F = [&](double v) { return to_riemann(state_at(v))[family] - target; };
  auto dF = [&](double) { return std::numeric_limits<double>::quiet_NaN(); };
  // family 0 shocks reduce v, family 1 shocks grow it
  const double lo = family == 0 ? 1e-6 * vL : vL * (1.0 + 1e-13);
  const double hi = family == 0 ? vL * (1.0 - 1e-13) : 16.0 * vL;
  const double v =
      solve_monotone(F, dF, 0.5 * (lo + hi), lo, hi, "psystem hugoniot");
  return state_from_u(state_at(v));
}

}  // namespace

std::shared_ptr<const Model> make_burgers(double lo, double hi) {
  return std::make_shared<BurgersModel>(lo, hi);
}

std::shared_ptr<const Model> make_temple2(Interval w1, Interval w2) {
  return std::make_shared<TempleModel>(w1, w2, false);
}

std::shared_ptr<const Model> make_temple2_backward(Interval w1, Interval w2) {
  return std::make_shared<TempleModel>(w1, w2, true);
}

std::shared_ptr<const Model> make_gas(double gamma, double K,
                                      Interval rho_range, Interval u_range) {
  return std::make_shared<GasModel>(gamma, K, rho_range, u_range);
}

std::shared_ptr<const Model> make_psystem(double gamma, double K,
                                          Interval v_range, Interval u_range) {
  return std::make_shared<PSystemModel>(gamma, K, v_range, u_range);
}

std::shared_ptr<const Model> make_model_by_name(const std::string& name) {
  if (name == "burgers") return make_burgers();
  if (name == "temple2") return make_temple2();
  if (name == "gas") return make_gas();
  if (name == "psystem") return make_psystem();
  throw ConfigError("unknown model '" + name + "'");
}

}  // namespace wavectl
