#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "wavectl/engine.hpp"
#include "wavectl/models.hpp"

using namespace wavectl;
using namespace testsupport;

namespace {

Profile two_piece(const Model& m, double a, double b, double xsplit,
                  const Vec& ul, const Vec& ur) {
  Profile p;
  p.a = a;
  p.b = b;
  p.breaks = {xsplit};
  p.states = {m.state_from_u(ul), m.state_from_u(ur)};
  return p;
}

/// integral of f(trace_a) - f(trace_b) dt over [0, T] from the recorded steps
Vec boundary_flux_integral(const Trajectory& traj, double T) {
  const Model& m = *traj.model;
  Vec acc(m.dim(), 0.0);
  auto add_side = [&](const std::vector<TraceStep>& steps, double sign) {
    for (size_t k = 0; k < steps.size(); ++k) {
      const double t0 = std::min(steps[k].t, T);
      const double t1 = k + 1 < steps.size() ? std::min(steps[k + 1].t, T) : T;
      if (t1 > t0) acc += (sign * (t1 - t0)) * m.flux(steps[k].s.u);
    }
  };
  add_side(traj.trace_a, +1.0);
  add_side(traj.trace_b, -1.0);
  return acc;
}

}  // namespace

TEST_CASE("constant data with matching controls produces no fronts") {
  auto m = make_temple2();
  const State s = m->state_from_w(Vec{-2.0, 2.0});
  Engine eng(m, constant_profile(0.0, 1.0, s), BoundaryControls::absorbing(),
             0.1);
  CHECK(eng.front_count() == 0);
  auto traj = eng.finish(5.0);
  CHECK(traj.events.size() == 1);  // init only
  const Profile p = sample_profile(traj, 3.0);
  CHECK(p.pieces() == 1);
  CHECK(p.states[0].w == s.w);
}

TEST_CASE("burgers step data yields a single shock front") {
  auto m = make_burgers();
  Engine eng(m, two_piece(*m, 0.0, 1.0, 0.5, Vec{3.0}, Vec{1.0}),
             BoundaryControls::absorbing(), 0.1);
  CHECK(eng.front_count() == 1);
  auto traj = eng.finish(0.1);
  const Front& f = traj.fronts[0];
  CHECK(f.kind == WaveKind::Shock);
  CHECK(f.speed == doctest::Approx(2.0));
}

TEST_CASE("temple2 three-piece data matches manual fans") {
  auto m = make_temple2();
  Profile p;
  p.a = 0.0;
  p.b = 1.0;
  p.breaks = {0.3, 0.7};
  p.states = {m->state_from_w(Vec{-2.0, 1.5}), m->state_from_w(Vec{-1.5, 2.0}),
              m->state_from_w(Vec{-2.5, 1.2})};
  const auto fan1 = solve_riemann(*m, p.states[0], p.states[1], 0.2);
  const auto fan2 = solve_riemann(*m, p.states[1], p.states[2], 0.2);
  Engine eng(m, p, BoundaryControls::absorbing(), 0.2);
  CHECK(eng.front_count() ==
        static_cast<int>(fan1.size() + fan2.size()));
  auto traj = eng.finish(0.0);
  for (size_t k = 0; k < fan1.size(); ++k) {
    CHECK(traj.fronts[k].family == fan1[k].family);
    CHECK(traj.fronts[k].speed == fan1[k].speed);
  }
  for (size_t k = 0; k < fan2.size(); ++k) {
    const Front& f = traj.fronts[fan1.size() + k];
    CHECK(f.family == fan2[k].family);
    CHECK(f.speed == fan2[k].speed);
  }
}

TEST_CASE("burgers shocks merge with the hand-computed geometry") {
  auto m = make_burgers();
  Profile p;
  p.a = 0.0;
  p.b = 2.0;
  p.breaks = {0.2, 0.4};
  p.states = {m->state_from_u(Vec{3.0}), m->state_from_u(Vec{2.0}),
              m->state_from_u(Vec{1.0})};
  Engine eng(m, p, BoundaryControls::absorbing(), 0.1);
  CHECK(eng.front_count() == 2);
  const Event e = eng.next_event();
  CHECK(e.kind == EventKind::Collision);
  // speeds 2.5 and 1.5, gap 0.2 -> collide at t = 0.2, x = 0.2 + 2.5*0.2
  CHECK(e.time == doctest::Approx(0.2));
  CHECK(e.x == doctest::Approx(0.7));
  eng.resolve_event(e);
  CHECK(eng.front_count() == 1);
  auto traj = eng.finish(0.3);
  const Front& merged = traj.fronts.back();
  CHECK(merged.alive);
  CHECK(merged.speed == doctest::Approx(2.0));  // (9/2 - 1/2)/2
}

TEST_CASE("temple2 transversal crossing keeps amplitudes bitwise") {
  auto m = make_temple2();
  Profile p;
  p.a = 0.0;
  p.b = 1.0;
  // 2-front on the left (moves right), 1-front on the right (moves left)
  p.breaks = {0.3, 0.7};
  const State s0 = m->state_from_w(Vec{-2.0, 1.5});
  const State s1 = m->state_from_w(Vec{-2.0, 1.2});  // 2-shock jump -0.3
  Vec w2 = s1.w;
  w2[0] = -2.4;  // 1-shock jump -0.4
  const State s2 = m->state_from_w(w2);
  p.states = {s0, s1, s2};
  Engine eng(m, p, BoundaryControls::absorbing(), 0.1);
  REQUIRE(eng.front_count() == 2);
  const Event e = eng.next_event();
  REQUIRE(e.kind == EventKind::Collision);
  eng.resolve_event(e);
  auto traj = eng.finish(e.time + 0.01);
  const auto& ev = traj.events.back();
  REQUIRE(ev.in.size() == 2);
  REQUIRE(ev.out.size() == 2);
  // incoming jumps per family
  double in_jump[2] = {0, 0}, out_jump[2] = {0, 0};
  for (uint32_t id : ev.in) {
    const Front& f = traj.fronts[id];
    in_jump[f.family] += f.right.w[f.family] - f.left.w[f.family];
  }
  for (uint32_t id : ev.out) {
    const Front& f = traj.fronts[id];
    out_jump[f.family] += f.right.w[f.family] - f.left.w[f.family];
  }
  CHECK(in_jump[0] == out_jump[0]);  // exact, not approximate
  CHECK(in_jump[1] == out_jump[1]);
}

TEST_CASE("gas: two 2-shocks collide and emit a 1-shock") {
  auto m = make_gas(2.0, 1.0);
  const State s0 = m->state_from_u(Vec{0.95, 0.1});
  const State s1 = m->hugoniot_from_left(s0, 1, 0.05);
  const State s2 = m->hugoniot_from_left(s1, 1, 0.05);
  Profile p;
  p.a = 0.0;
  p.b = 1.0;
  p.breaks = {0.2, 0.22};
  p.states = {s0, s1, s2};
  Engine eng(m, p, BoundaryControls::absorbing(), 0.01);
  REQUIRE(eng.front_count() == 2);
  const Event e = eng.next_event();
  REQUIRE(e.kind == EventKind::Collision);
  eng.resolve_event(e);
  auto traj = eng.finish(e.time + 1e-6);
  const auto& ev = traj.events.back();
  bool has_1shock = false;
  for (uint32_t id : ev.out) {
    const Front& f = traj.fronts[id];
    if (f.family == 0) {
      CHECK(f.kind == WaveKind::Shock);
      has_1shock = true;
    }
  }
  CHECK(has_1shock);
}

TEST_CASE("conservation defect stays within the per-event budget") {
  auto m = make_burgers();
  Rng rng(21);
  const Profile p = random_profile(*m, 0.0, 1.0, 12, rng);
  Engine eng(m, p, BoundaryControls::absorbing(), 0.02);
  auto traj = eng.finish(2.0);
  REQUIRE(traj.events.size() > 10);
  CHECK(traj.conservation_defect <=
        5e-9 * static_cast<double>(traj.events.size()));
  // end-to-end: the state integral moved exactly by the boundary flux
  const Vec start = integral_u(sample_profile(traj, 0.0));
  const Vec end = integral_u(sample_profile(traj, 2.0));
  const Vec fluxes = boundary_flux_integral(traj, 2.0);
  CHECK((end - start - fluxes).norm1() <=
        5e-9 * static_cast<double>(traj.events.size()));
}

TEST_CASE("determinism: identical configs give identical event logs") {
  auto m = make_temple2();
  Rng rng1(5), rng2(5);
  const Profile p1 = random_profile(*m, 0.0, 1.0, 10, rng1);
  const Profile p2 = random_profile(*m, 0.0, 1.0, 10, rng2);
  auto t1 = Engine(m, p1, BoundaryControls::absorbing(), 0.05).finish(4.0);
  auto t2 = Engine(m, p2, BoundaryControls::absorbing(), 0.05).finish(4.0);
  REQUIRE(t1.events.size() == t2.events.size());
  for (size_t k = 0; k < t1.events.size(); ++k) {
    CHECK(t1.events[k].time == t2.events[k].time);
    CHECK(t1.events[k].x == t2.events[k].x);
    CHECK(t1.events[k].kind == t2.events[k].kind);
    CHECK(t1.events[k].in == t2.events[k].in);
    CHECK(t1.events[k].out == t2.events[k].out);
  }
}

TEST_CASE("scheduled control injects at the switch instant") {
  auto m = make_temple2();
  const State s = m->state_from_w(Vec{-2.0, 2.0});
  const State lo = m->state_from_w(Vec{-2.0, 1.5});
  ControlPair cp;
  cp.a.append(0.0, s);
  cp.a.append(0.5, lo);  // rarefaction train enters from x=a at t=0.5
  cp.b.append(0.0, s);
  Engine eng(m, constant_profile(0.0, 1.0, s),
             BoundaryControls::from_pair(cp), 0.25);
  CHECK(eng.front_count() == 0);
  auto traj = eng.finish(1.0);
  CHECK(traj.injected_fronts == 2);  // jump 0.5 split into two 0.25-fronts
  const Profile prof = sample_profile(traj, 0.9);
  CHECK(prof.states.front().w == lo.w);
  CHECK(total_variation(prof, true) == doctest::Approx(0.5));
}

TEST_CASE("total variation and L1 distance against brute force") {
  auto m = make_temple2();
  Rng rng(13);
  const Profile p = random_profile(*m, 0.0, 1.0, 10, rng);
  double tv = 0.0;
  for (int i = 0; i + 1 < p.pieces(); ++i)
    tv += std::abs(p.states[i + 1].w[0] - p.states[i].w[0]) +
          std::abs(p.states[i + 1].w[1] - p.states[i].w[1]);
  CHECK(total_variation(p, true) == doctest::Approx(tv));
  CHECK(total_variation(constant_profile(0.0, 1.0, p.states[0]), true) == 0.0);

  const Profile q = random_profile(*m, 0.0, 1.0, 7, rng);
  // Riemann-sum oracle
  const int N = 200000;
  double acc = 0.0;
  for (int k = 0; k < N; ++k) {
    const double x = (k + 0.5) / N;
    acc += (q.at(x).w - p.at(x).w).norm1() / N;
  }
  CHECK(l1_distance(p, q, true) == doctest::Approx(acc).epsilon(1e-3));
  CHECK(l1_distance(p, p, true) == 0.0);
  // constants: |v1 - v2| (b - a)
  const Profile c1 = constant_profile(0.0, 1.0, p.states[0]);
  const Profile c2 = constant_profile(0.0, 1.0, p.states[1]);
  CHECK(l1_distance(c1, c2, true) ==
        doctest::Approx((p.states[1].w - p.states[0].w).norm1()));
}

TEST_CASE("sample_profile at t=0 reproduces the initial data") {
  auto m = make_temple2();
  Profile p;
  p.a = 0.0;
  p.b = 1.0;
  p.breaks = {0.5};
  p.states = {m->state_from_w(Vec{-2.0, 2.0}), m->state_from_w(Vec{-2.0, 1.5})};
  Engine eng(m, p, BoundaryControls::absorbing(), 0.1);
  auto traj = eng.finish(0.2);
  const Profile q = sample_profile(traj, 0.0);
  CHECK(l1_distance(p, q, true) == 0.0);
}

TEST_CASE("front cap aborts the run with a diagnostic") {
  auto m = make_burgers();
  Rng rng(3);
  const Profile p = random_profile(*m, 0.0, 1.0, 12, rng);
  EngineOptions opts;
  opts.front_cap = 4;
  CHECK_THROWS_AS(Engine(m, p, BoundaryControls::absorbing(), 0.01, opts),
                  FrontCapError);
}
