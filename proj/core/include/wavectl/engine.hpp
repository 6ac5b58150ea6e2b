#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <vector>

#include "wavectl/profile.hpp"
#include "wavectl/riemann.hpp"

namespace wavectl {

inline constexpr uint32_t kNoFront = 0xffffffffu;

/// Piecewise-constant boundary control on one side; times[0] must be 0.
struct ControlSchedule {
  std::vector<double> times;
  std::vector<State> values;

  const State& at(double t) const;
  void append(double t, const State& s);
  bool empty() const { return times.empty(); }
};

struct ControlPair {
  ControlSchedule a;
  ControlSchedule b;
};

/// Per-side boundary behaviour: absorbing (control follows the trace, the
/// boundary Riemann fan is always empty) or an explicit schedule.
struct BoundaryControls {
  std::optional<ControlSchedule> left;   // nullopt => absorbing at x=a
  std::optional<ControlSchedule> right;  // nullopt => absorbing at x=b

  static BoundaryControls absorbing() { return {}; }
  static BoundaryControls from_pair(ControlPair cp) {
    return BoundaryControls{std::move(cp.a), std::move(cp.b)};
  }
};

/// One discontinuity line x(t) = birth_x + speed (t - birth_time). Fronts
/// are immutable while alive; interactions kill them and create new ones.
struct Front {
  uint32_t id = kNoFront;
  int family = 0;
  WaveKind kind = WaveKind::Shock;
  double speed = 0.0;
  double strength = 0.0;
  State left, right;
  double birth_time = 0.0, birth_x = 0.0;
  double death_time = std::numeric_limits<double>::infinity();
  double death_x = std::numeric_limits<double>::quiet_NaN();
  uint64_t birth_event = 0;
  uint64_t death_event = 0;
  uint32_t prev = kNoFront, next = kNoFront;
  bool alive = false;

  double x_at(double t) const { return birth_x + speed * (t - birth_time); }
};

enum class EventKind : uint8_t {
  Init,
  Collision,
  BoundaryHitLeft,
  BoundaryHitRight,
  ControlChangeLeft,
  ControlChangeRight,
  End
};

const char* event_kind_name(EventKind k);

struct Event {
  uint64_t id = 0;
  double time = 0.0;
  double x = 0.0;
  EventKind kind = EventKind::End;
  std::vector<uint32_t> in;
  std::vector<uint32_t> out;
};

struct TraceStep {
  double t;
  State s;
};

/// Event-indexed history of one run: full front genealogy, event log,
/// boundary traces, and conservation bookkeeping. Profiles at any time are
/// reconstructed from the genealogy.
struct Trajectory {
  std::shared_ptr<const Model> model;
  double a = 0.0, b = 1.0;
  double nu = 0.1;
  double end_time = 0.0;
  std::vector<Front> fronts;
  std::vector<Event> events;
  std::vector<TraceStep> trace_a, trace_b;
  /// Accumulated |d/dt int u - (f(trace_a) - f(trace_b))| dt over the run
  /// (conservative models only; zero otherwise).
  double conservation_defect = 0.0;
  uint64_t injected_fronts = 0;

  const State& trace_at(Side side, double t) const;
};

/// Piecewise-constant solution profile at time t (post-event convention at
/// event instants).
Profile sample_profile(const Trajectory& traj, double t);

inline std::pair<const std::vector<TraceStep>*, const std::vector<TraceStep>*>
boundary_traces(const Trajectory& traj) {
  return {&traj.trace_a, &traj.trace_b};
}

struct EngineOptions {
  uint64_t front_cap = 1000000;
  double tie_tol = 1e-12;
  /// Used by the backward construction: a collision between two fronts of
  /// the same family means the target was outside the admissible class.
  bool forbid_same_family_collisions = false;
};

/// Deterministic event-driven front tracking on [a, b]. One engine is one
/// logical thread of execution; engines share nothing and can run
/// concurrently.
class Engine {
 public:
  Engine(std::shared_ptr<const Model> model, const Profile& phi,
         BoundaryControls controls, double nu, EngineOptions opts = {});

  /// Earliest pending event (ties resolved by position, then kind, then
  /// insertion order). Returns kind End when nothing remains.
  Event next_event();
  void resolve_event(const Event& e);
  void run_until(double t_stop);
  /// Runs to t_stop and returns the finished trajectory; the engine is
  /// consumed.
  Trajectory finish(double t_stop);

  double time() const { return time_; }
  int front_count() const { return alive_count_; }
  uint64_t injected_fronts() const { return injected_; }
  const State& trace(Side side) const {
    return side == Side::Left ? trace_a_ : trace_b_;
  }
  const Model& model() const { return *model_; }

  /// Replaces the control on one side from the current time on and resolves
  /// the boundary Riemann problem immediately.
  void set_control(Side side, const State& value);
  void set_absorbing(Side side);

 private:
  enum class QType : uint8_t { Collision, Boundary, Control };
  struct QEntry {
    double t;
    double x;
    uint8_t rank;  // collision 0, boundary 1, control 2
    uint64_t seq;
    QType type;
    uint32_t f1, f2;
    Side side;
  };
  struct QCompare {
    bool operator()(const QEntry& a, const QEntry& b) const {
      if (a.t != b.t) return a.t > b.t;
      if (a.x != b.x) return a.x > b.x;
      if (a.rank != b.rank) return a.rank > b.rank;
      return a.seq > b.seq;
    }
  };

  State control_value(Side side, double t) const;
  void push_collision(uint32_t i, uint32_t j);
  void push_boundary_watch(uint32_t f, Side side);
  bool entry_valid(const QEntry& e) const;
  std::vector<uint32_t> collision_cluster(const QEntry& e) const;

  uint32_t new_front(const Wave& wv, double t, double x, uint64_t ev);
  void kill_front(uint32_t id, double t, double x, uint64_t ev);
  void advance_defect(double to);
  void s_add(const Front& f, double sign);
  void inject(Side side, double t, const std::vector<Wave>& fan,
              Event& ev_log);
  void boundary_resolve(Side side, double t, Event& ev_log);
  void apply_collision(const Event& e);
  void apply_boundary_hit(const Event& e, Side side);

  std::shared_ptr<const Model> model_;
  double a_, b_, nu_;
  EngineOptions opts_;
  bool has_flux_;
  bool finished_ = false;

  std::vector<Front> fronts_;
  uint32_t head_ = kNoFront, tail_ = kNoFront;
  int alive_count_ = 0;
  uint64_t injected_ = 0;

  struct SideCtl {
    bool absorbing = true;
    ControlSchedule sched;
  };
  SideCtl ctl_a_, ctl_b_;
  State trace_a_, trace_b_;

  std::priority_queue<QEntry, std::vector<QEntry>, QCompare> queue_;
  uint64_t seq_ = 0;
  double time_ = 0.0;

  std::vector<Event> events_;
  std::vector<TraceStep> steps_a_, steps_b_;
  std::optional<Event> pending_;

  Vec flux_sum_;  // sum over alive fronts of speed * (uL - uR)
  double defect_ = 0.0;
  double defect_time_ = 0.0;
};

}  // namespace wavectl
