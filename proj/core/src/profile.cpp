#include "wavectl/profile.hpp"

#include <algorithm>
#include <cmath>

namespace wavectl {

const State& Profile::at(double x) const {
  // piece i covers [piece_lo, piece_hi); the last piece includes b
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
  return states[static_cast<size_t>(it - breaks.begin())];
}

void Profile::validate(const Model& m) const {
  if (!(b > a)) throw ConfigError("profile interval degenerate");
  if (states.size() != breaks.size() + 1)
    throw ConfigError("profile piece/breakpoint count mismatch");
  double prev = a;
  for (double x : breaks) {
    if (!(x > prev && x < b))
      throw ConfigError("profile breakpoints must increase strictly in ]a,b[");
    prev = x;
  }
  for (const State& s : states)
    if (!m.contains_w(s.w))
      throw OutOfBoxError("profile state outside Gamma");
}

Profile constant_profile(double a, double b, const State& s) {
  Profile p;
  p.a = a;
  p.b = b;
  p.states = {s};
  return p;
}

double total_variation(const Profile& p, bool in_riemann) {
  double tv = 0.0;
  for (size_t i = 0; i + 1 < p.states.size(); ++i) {
    const Vec& x = in_riemann ? p.states[i].w : p.states[i].u;
    const Vec& y = in_riemann ? p.states[i + 1].w : p.states[i + 1].u;
    tv += (y - x).norm1();
  }
  return tv;
}

double l1_distance(const Profile& p1, const Profile& p2, bool in_riemann) {
  if (p1.a != p2.a || p1.b != p2.b)
    throw ConfigError("l1_distance: profiles on different intervals");
  double acc = 0.0;
  size_t i = 0, j = 0;
  double x = p1.a;
  while (x < p1.b) {
    const double hi1 = p1.piece_hi(static_cast<int>(i));
    const double hi2 = p2.piece_hi(static_cast<int>(j));
    const double hi = std::min(hi1, hi2);
    const Vec& a = in_riemann ? p1.states[i].w : p1.states[i].u;
    const Vec& b = in_riemann ? p2.states[j].w : p2.states[j].u;
    acc += (b - a).norm1() * (hi - x);
    if (hi1 <= hi) ++i;
    if (hi2 <= hi) ++j;
    x = hi;
  }
  return acc;
}

namespace {
Vec integrate(const Profile& p, bool riemann) {
  Vec acc(riemann ? p.states[0].w.size() : p.states[0].u.size(), 0.0);
  for (int i = 0; i < p.pieces(); ++i) {
    const double width = p.piece_hi(i) - p.piece_lo(i);
    acc += width * (riemann ? p.states[i].w : p.states[i].u);
  }
  return acc;
}
}  // namespace

Vec integral_u(const Profile& p) { return integrate(p, false); }
Vec integral_w(const Profile& p) { return integrate(p, true); }

}  // namespace wavectl
