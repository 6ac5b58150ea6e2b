#include "wavectl/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace wavectl {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::Init: return "init";
    case EventKind::Collision: return "collision";
    case EventKind::BoundaryHitLeft: return "boundary-hit-left";
    case EventKind::BoundaryHitRight: return "boundary-hit-right";
    case EventKind::ControlChangeLeft: return "control-change-left";
    case EventKind::ControlChangeRight: return "control-change-right";
    case EventKind::End: return "end";
  }
  return "?";
}

const State& ControlSchedule::at(double t) const {
  assert(!times.empty());
  auto it = std::upper_bound(times.begin(), times.end(), t);
  const size_t i = (it == times.begin()) ? 0 : static_cast<size_t>(it - times.begin() - 1);
  return values[i];
}

void ControlSchedule::append(double t, const State& s) {
  if (!times.empty() && t < times.back())
    throw ConfigError("control schedule times must be nondecreasing");
  times.push_back(t);
  values.push_back(s);
}

const State& Trajectory::trace_at(Side side, double t) const {
  const auto& steps = side == Side::Left ? trace_a : trace_b;
  auto it = std::upper_bound(steps.begin(), steps.end(), t,
                             [](double v, const TraceStep& s) { return v < s.t; });
  const size_t i = (it == steps.begin()) ? 0 : static_cast<size_t>(it - steps.begin() - 1);
  return steps[i].s;
}

Profile sample_profile(const Trajectory& traj, double t) {
  struct Item {
    double x;
    double speed;
    uint32_t id;
    const Front* f;
  };
  std::vector<Item> items;
  for (const Front& f : traj.fronts) {
    if (f.birth_time <= t && t < f.death_time)
      items.push_back({std::clamp(f.x_at(t), traj.a, traj.b), f.speed, f.id, &f});
  }
  std::sort(items.begin(), items.end(), [](const Item& u, const Item& v) {
    if (u.x != v.x) return u.x < v.x;
    if (u.speed != v.speed) return u.speed < v.speed;
    return u.id < v.id;
  });

  Profile p;
  p.a = traj.a;
  p.b = traj.b;
  p.states = {traj.trace_at(Side::Left, t)};
  for (const Item& it : items) {
    if (it.x <= traj.a) {
      p.states[0] = it.f->right;
    } else if (it.x >= traj.b) {
      // zero-width piece at the right edge; domain keeps the left state
    } else if (!p.breaks.empty() && it.x == p.breaks.back()) {
      p.states.back() = it.f->right;
    } else {
      p.breaks.push_back(it.x);
      p.states.push_back(it.f->right);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

Engine::Engine(std::shared_ptr<const Model> model, const Profile& phi,
               BoundaryControls controls, double nu, EngineOptions opts)
    : model_(std::move(model)),
      a_(phi.a),
      b_(phi.b),
      nu_(nu),
      opts_(opts),
      has_flux_(model_->has_flux()) {
  phi.validate(*model_);
  if (!(nu > 0.0)) throw ConfigError("nu must be positive");

  if (controls.left) {
    ctl_a_.absorbing = false;
    ctl_a_.sched = std::move(*controls.left);
    if (ctl_a_.sched.empty() || ctl_a_.sched.times.front() != 0.0)
      throw ConfigError("left control schedule must start at t=0");
  }
  if (controls.right) {
    ctl_b_.absorbing = false;
    ctl_b_.sched = std::move(*controls.right);
    if (ctl_b_.sched.empty() || ctl_b_.sched.times.front() != 0.0)
      throw ConfigError("right control schedule must start at t=0");
  }

  if (has_flux_) flux_sum_ = Vec(model_->dim(), 0.0);

  trace_a_ = phi.states.front();
  trace_b_ = phi.states.back();
  steps_a_.push_back({0.0, trace_a_});
  steps_b_.push_back({0.0, trace_b_});

  // initial fronts: one Riemann fan per interior jump
  Event init;
  init.id = 0;
  init.time = 0.0;
  init.x = a_;
  init.kind = EventKind::Init;
  uint32_t last = kNoFront;
  for (size_t i = 0; i + 1 < phi.states.size(); ++i) {
    const auto fan =
        solve_riemann(*model_, phi.states[i], phi.states[i + 1], nu_);
    for (const Wave& wv : fan) {
      const uint32_t id = new_front(wv, 0.0, phi.breaks[i], 0);
      fronts_[id].prev = last;
      if (last != kNoFront)
        fronts_[last].next = id;
      else
        head_ = id;
      last = id;
      init.out.push_back(id);
    }
  }
  tail_ = last;
  events_.push_back(std::move(init));

  for (uint32_t id = head_; id != kNoFront; id = fronts_[id].next)
    if (fronts_[id].next != kNoFront) push_collision(id, fronts_[id].next);
  if (head_ != kNoFront) push_boundary_watch(head_, Side::Left);
  if (tail_ != kNoFront) push_boundary_watch(tail_, Side::Right);

  // scheduled control switches
  for (Side side : {Side::Left, Side::Right}) {
    const SideCtl& c = side == Side::Left ? ctl_a_ : ctl_b_;
    if (c.absorbing) continue;
    for (size_t k = 1; k < c.sched.times.size(); ++k)
      queue_.push(QEntry{c.sched.times[k], side == Side::Left ? a_ : b_, 2,
                         seq_++, QType::Control, kNoFront, kNoFront, side});
  }

  // boundary Riemann problems at t=0
  for (Side side : {Side::Left, Side::Right}) {
    Event ev;
    ev.id = events_.size();
    ev.time = 0.0;
    ev.x = side == Side::Left ? a_ : b_;
    ev.kind = side == Side::Left ? EventKind::ControlChangeLeft
                                 : EventKind::ControlChangeRight;
    boundary_resolve(side, 0.0, ev);
    if (!ev.out.empty()) events_.push_back(std::move(ev));
  }
}

State Engine::control_value(Side side, double t) const {
  const SideCtl& c = side == Side::Left ? ctl_a_ : ctl_b_;
  if (c.absorbing) return side == Side::Left ? trace_a_ : trace_b_;
  return c.sched.at(t);
}

uint32_t Engine::new_front(const Wave& wv, double t, double x, uint64_t ev) {
  if (fronts_.size() >= opts_.front_cap)
    throw FrontCapError("front cap exceeded (" +
                        std::to_string(opts_.front_cap) + ") at t=" +
                        std::to_string(t));
  Front f;
  f.id = static_cast<uint32_t>(fronts_.size());
  f.family = wv.family;
  f.kind = wv.kind;
  f.speed = wv.speed;
  f.strength = wv.strength;
  f.left = wv.left;
  f.right = wv.right;
  f.birth_time = t;
  f.birth_x = x;
  f.birth_event = ev;
  f.alive = true;
  fronts_.push_back(std::move(f));
  ++alive_count_;
  if (has_flux_) s_add(fronts_.back(), +1.0);
  return fronts_.back().id;
}

void Engine::kill_front(uint32_t id, double t, double x, uint64_t ev) {
  Front& f = fronts_[id];
  assert(f.alive);
  f.alive = false;
  f.death_time = t;
  f.death_x = x;
  f.death_event = ev;
  --alive_count_;
  if (has_flux_) s_add(f, -1.0);
}

void Engine::s_add(const Front& f, double sign) {
  flux_sum_ += (sign * f.speed) * (f.left.u - f.right.u);
}

void Engine::advance_defect(double to) {
  if (!has_flux_) {
    defect_time_ = to;
    return;
  }
  const double dt = to - defect_time_;
  if (dt > 0.0) {
    const Vec boundary = model_->flux(trace_a_.u) - model_->flux(trace_b_.u);
    defect_ += dt * (flux_sum_ - boundary).norm1();
  }
  defect_time_ = to;
}

void Engine::push_collision(uint32_t i, uint32_t j) {
  const Front& fi = fronts_[i];
  const Front& fj = fronts_[j];
  if (!(fi.speed > fj.speed)) return;
  const double t_ref = std::max(fi.birth_time, fj.birth_time);
  const double gap = std::max(0.0, fj.x_at(t_ref) - fi.x_at(t_ref));
  double t_c = t_ref + gap / (fi.speed - fj.speed);
  t_c = std::max(t_c, time_);
  const double x_c = fi.x_at(t_c);
  queue_.push(QEntry{t_c, x_c, 0, seq_++, QType::Collision, i, j, Side::Left});
}

void Engine::push_boundary_watch(uint32_t f, Side side) {
  const Front& fr = fronts_[f];
  double t_hit, x;
  if (side == Side::Left) {
    if (!(fr.speed < 0.0)) return;
    t_hit = fr.birth_time + (a_ - fr.birth_x) / fr.speed;
    x = a_;
  } else {
    if (!(fr.speed > 0.0)) return;
    t_hit = fr.birth_time + (b_ - fr.birth_x) / fr.speed;
    x = b_;
  }
  t_hit = std::max(t_hit, time_);
  queue_.push(QEntry{t_hit, x, 1, seq_++, QType::Boundary, f, kNoFront, side});
}

bool Engine::entry_valid(const QEntry& e) const {
  switch (e.type) {
    case QType::Collision:
      return fronts_[e.f1].alive && fronts_[e.f2].alive &&
             fronts_[e.f1].next == e.f2;
    case QType::Boundary:
      return fronts_[e.f1].alive &&
             (e.side == Side::Left ? head_ == e.f1 : tail_ == e.f1);
    case QType::Control:
      return true;
  }
  return false;
}

std::vector<uint32_t> Engine::collision_cluster(const QEntry& e) const {
  const double t = e.t, x = e.x, tol = opts_.tie_tol;
  std::vector<uint32_t> ids{e.f1, e.f2};
  uint32_t p = fronts_[e.f1].prev;
  while (p != kNoFront && std::abs(fronts_[p].x_at(t) - x) <= tol) {
    ids.insert(ids.begin(), p);
    p = fronts_[p].prev;
  }
  uint32_t q = fronts_[e.f2].next;
  while (q != kNoFront && std::abs(fronts_[q].x_at(t) - x) <= tol) {
    ids.push_back(q);
    q = fronts_[q].next;
  }
  return ids;
}

Event Engine::next_event() {
  if (finished_) throw NumericalAbort("engine already finished");
  if (pending_) return *pending_;
  while (!queue_.empty() && !entry_valid(queue_.top())) queue_.pop();
  if (queue_.empty()) {
    Event e;
    e.kind = EventKind::End;
    e.time = std::numeric_limits<double>::infinity();
    e.id = events_.size();
    pending_ = e;
    return e;
  }
  const QEntry top = queue_.top();
  Event e;
  e.id = events_.size();
  e.time = top.t;
  e.x = top.x;
  switch (top.type) {
    case QType::Collision:
      e.kind = EventKind::Collision;
      e.in = collision_cluster(top);
      break;
    case QType::Boundary:
      e.kind = top.side == Side::Left ? EventKind::BoundaryHitLeft
                                      : EventKind::BoundaryHitRight;
      e.in = {top.f1};
      break;
    case QType::Control:
      e.kind = top.side == Side::Left ? EventKind::ControlChangeLeft
                                      : EventKind::ControlChangeRight;
      break;
  }
  pending_ = e;
  return e;
}

void Engine::inject(Side side, double t, const std::vector<Wave>& fan,
                    Event& ev_log) {
  if (fan.empty()) return;
  injected_ += fan.size();
  std::vector<uint32_t> ids;
  for (const Wave& wv : fan) {
    ids.push_back(new_front(wv, t, side == Side::Left ? a_ : b_, ev_log.id));
    ev_log.out.push_back(ids.back());
  }
  for (size_t k = 0; k + 1 < ids.size(); ++k) {
    fronts_[ids[k]].next = ids[k + 1];
    fronts_[ids[k + 1]].prev = ids[k];
  }
  if (side == Side::Left) {
    const uint32_t old_head = head_;
    fronts_[ids.back()].next = old_head;
    if (old_head != kNoFront)
      fronts_[old_head].prev = ids.back();
    else
      tail_ = ids.back();
    head_ = ids.front();
    trace_a_ = fan.front().left;
    steps_a_.push_back({t, trace_a_});
    if (old_head != kNoFront) push_collision(ids.back(), old_head);
    push_boundary_watch(head_, Side::Left);
    if (tail_ == ids.back()) push_boundary_watch(tail_, Side::Right);
  } else {
    const uint32_t old_tail = tail_;
    fronts_[ids.front()].prev = old_tail;
    if (old_tail != kNoFront)
      fronts_[old_tail].next = ids.front();
    else
      head_ = ids.front();
    tail_ = ids.back();
    trace_b_ = fan.back().right;
    steps_b_.push_back({t, trace_b_});
    if (old_tail != kNoFront) push_collision(old_tail, ids.front());
    push_boundary_watch(tail_, Side::Right);
    if (head_ == ids.front()) push_boundary_watch(head_, Side::Left);
  }
}

void Engine::boundary_resolve(Side side, double t, Event& ev_log) {
  const State& tr = side == Side::Left ? trace_a_ : trace_b_;
  const State c = control_value(side, t);
  if (c.w == tr.w) return;
  const auto fan =
      side == Side::Left
          ? solve_boundary_riemann_left(*model_, c, tr, nu_)
          : solve_boundary_riemann_right(*model_, c, tr, nu_);
  inject(side, t, fan, ev_log);
}

void Engine::apply_collision(const Event& e) {
  const auto& ids = e.in;
  if (opts_.forbid_same_family_collisions) {
    for (size_t i = 0; i + 1 < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        if (fronts_[ids[i]].family == fronts_[ids[j]].family)
          throw HypothesisError(
              "same-family fronts collide in the backward construction; "
              "target violates the admissible-class bound");
  }
  const uint32_t before = fronts_[ids.front()].prev;
  const uint32_t after = fronts_[ids.back()].next;
  const State L = fronts_[ids.front()].left;
  const State R = fronts_[ids.back()].right;
  for (uint32_t id : ids) kill_front(id, e.time, e.x, e.id);

  const auto fan = solve_riemann(*model_, L, R, nu_);
  std::vector<uint32_t> out;
  for (const Wave& wv : fan) out.push_back(new_front(wv, e.time, e.x, e.id));
  events_.back().out = out;

  // splice the new chain between before and after
  uint32_t first = out.empty() ? after : out.front();
  uint32_t lastid = out.empty() ? before : out.back();
  for (size_t k = 0; k + 1 < out.size(); ++k) {
    fronts_[out[k]].next = out[k + 1];
    fronts_[out[k + 1]].prev = out[k];
  }
  if (!out.empty()) {
    fronts_[out.front()].prev = before;
    fronts_[out.back()].next = after;
  }
  if (before != kNoFront)
    fronts_[before].next = first;
  else
    head_ = first;
  if (after != kNoFront)
    fronts_[after].prev = lastid;
  else
    tail_ = lastid;

  if (out.empty()) {
    if (before != kNoFront && after != kNoFront) push_collision(before, after);
  } else {
    if (before != kNoFront) push_collision(before, out.front());
    if (after != kNoFront) push_collision(out.back(), after);
  }
  if (head_ != kNoFront && (out.empty() ? before == kNoFront : head_ == out.front()))
    push_boundary_watch(head_, Side::Left);
  if (tail_ != kNoFront && (out.empty() ? after == kNoFront : tail_ == out.back()))
    push_boundary_watch(tail_, Side::Right);
}

void Engine::apply_boundary_hit(const Event& e, Side side) {
  const uint32_t id = e.in.front();
  const Front& f = fronts_[id];
  if (side == Side::Left) {
    head_ = f.next;
    if (head_ != kNoFront)
      fronts_[head_].prev = kNoFront;
    else
      tail_ = kNoFront;
    trace_a_ = f.right;
    steps_a_.push_back({e.time, trace_a_});
  } else {
    tail_ = f.prev;
    if (tail_ != kNoFront)
      fronts_[tail_].next = kNoFront;
    else
      head_ = kNoFront;
    trace_b_ = f.left;
    steps_b_.push_back({e.time, trace_b_});
  }
  kill_front(id, e.time, e.x, e.id);
  if (side == Side::Left && head_ != kNoFront)
    push_boundary_watch(head_, Side::Left);
  if (side == Side::Right && tail_ != kNoFront)
    push_boundary_watch(tail_, Side::Right);
  boundary_resolve(side, e.time, events_.back());
}

void Engine::resolve_event(const Event& e) {
  if (!pending_ || pending_->id != e.id)
    throw NumericalAbort("resolve_event called out of order");
  pending_.reset();
  if (e.kind == EventKind::End) return;

  advance_defect(e.time);
  time_ = e.time;
  events_.push_back(e);
  Event& logged = events_.back();
  logged.out.clear();

  switch (e.kind) {
    case EventKind::Collision: {
      queue_.pop();
      apply_collision(e);
      break;
    }
    case EventKind::BoundaryHitLeft:
      queue_.pop();
      apply_boundary_hit(e, Side::Left);
      break;
    case EventKind::BoundaryHitRight:
      queue_.pop();
      apply_boundary_hit(e, Side::Right);
      break;
    case EventKind::ControlChangeLeft:
      queue_.pop();
      boundary_resolve(Side::Left, e.time, logged);
      break;
    case EventKind::ControlChangeRight:
      queue_.pop();
      boundary_resolve(Side::Right, e.time, logged);
      break;
    default:
      break;
  }
}

void Engine::run_until(double t_stop) {
  while (true) {
    const Event e = next_event();
    if (e.kind == EventKind::End || e.time > t_stop) break;
    resolve_event(e);
  }
  advance_defect(t_stop);
  time_ = std::max(time_, t_stop);
  pending_.reset();
}

Trajectory Engine::finish(double t_stop) {
  run_until(t_stop);
  finished_ = true;
  Trajectory traj;
  traj.model = model_;
  traj.a = a_;
  traj.b = b_;
  traj.nu = nu_;
  traj.end_time = t_stop;
  traj.fronts = std::move(fronts_);
  traj.events = std::move(events_);
  traj.trace_a = std::move(steps_a_);
  traj.trace_b = std::move(steps_b_);
  traj.conservation_defect = defect_;
  traj.injected_fronts = injected_;
  return traj;
}

void Engine::set_control(Side side, const State& value) {
  SideCtl& c = side == Side::Left ? ctl_a_ : ctl_b_;
  c.absorbing = false;
  c.sched = ControlSchedule{};
  c.sched.append(0.0, value);
  Event ev;
  ev.id = events_.size();
  ev.time = time_;
  ev.x = side == Side::Left ? a_ : b_;
  ev.kind = side == Side::Left ? EventKind::ControlChangeLeft
                               : EventKind::ControlChangeRight;
  advance_defect(time_);
  events_.push_back(ev);
  boundary_resolve(side, time_, events_.back());
  pending_.reset();
}

void Engine::set_absorbing(Side side) {
  SideCtl& c = side == Side::Left ? ctl_a_ : ctl_b_;
  c.absorbing = true;
  c.sched = ControlSchedule{};
}

}  // namespace wavectl
