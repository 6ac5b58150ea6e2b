#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavectl {

inline constexpr int kMaxDim = 4;
inline constexpr const char* kVersion = "0.1.0";

/// Fixed-capacity numeric vector used for states, Riemann coordinates and
/// eigenvalue tuples. Capacity kMaxDim, logical size set at construction.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n, double fill = 0.0) : n_(n) {
    assert(n >= 0 && n <= kMaxDim);
    for (int i = 0; i < n; ++i) v_[i] = fill;
  }
  Vec(std::initializer_list<double> xs) : n_(static_cast<int>(xs.size())) {
    assert(n_ <= kMaxDim);
    int i = 0;
    for (double x : xs) v_[i++] = x;
  }

  int size() const { return n_; }
  double& operator[](int i) {
    assert(i >= 0 && i < n_);
    return v_[i];
  }
  double operator[](int i) const {
    assert(i >= 0 && i < n_);
    return v_[i];
  }
  const double* begin() const { return v_.data(); }
  const double* end() const { return v_.data() + n_; }
  double* begin() { return v_.data(); }
  double* end() { return v_.data() + n_; }

  friend Vec operator+(Vec a, const Vec& b) {
    assert(a.n_ == b.n_);
    for (int i = 0; i < a.n_; ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend Vec operator-(Vec a, const Vec& b) {
    assert(a.n_ == b.n_);
    for (int i = 0; i < a.n_; ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend Vec operator*(double s, Vec a) {
    for (int i = 0; i < a.n_; ++i) a.v_[i] *= s;
    return a;
  }
  Vec& operator+=(const Vec& b) {
    assert(n_ == b.n_);
    for (int i = 0; i < n_; ++i) v_[i] += b.v_[i];
    return *this;
  }

  double norm1() const {
    double s = 0;
    for (int i = 0; i < n_; ++i) s += std::abs(v_[i]);
    return s;
  }
  double norm2() const {
    double s = 0;
    for (int i = 0; i < n_; ++i) s += v_[i] * v_[i];
    return std::sqrt(s);
  }
  double norm_inf() const {
    double s = 0;
    for (int i = 0; i < n_; ++i) s = std::max(s, std::abs(v_[i]));
    return s;
  }
  double dot(const Vec& b) const {
    assert(n_ == b.n_);
    double s = 0;
    for (int i = 0; i < n_; ++i) s += v_[i] * b.v_[i];
    return s;
  }

  /// Exact component-wise equality (bit-level for finite values).
  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> v_{};
  int n_ = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
};

/// Product box in Riemann coordinates (the set Gamma of admissible states).
using Box = std::vector<Interval>;

enum class Side : uint8_t { Left, Right };  // boundary x=a / x=b

inline const char* side_name(Side s) { return s == Side::Left ? "a" : "b"; }

/// A state carries both the conservative components u and the Riemann
/// coordinates w. Models construct State so the two stay chart-consistent;
/// for models defined directly in Riemann coordinates u and w coincide.
struct State {
  Vec u;
  Vec w;
};

inline bool same_state_w(const State& x, const State& y) { return x.w == y.w; }

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps these to its exit codes: ConfigError -> 2,
// HypothesisError -> 3, NumericalAbort (incl. OutOfBoxError, FrontCapError)
// -> 4.
// ---------------------------------------------------------------------------

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfBoxError : NumericalAbort {
  using NumericalAbort::NumericalAbort;
};

struct FrontCapError : NumericalAbort {
  using NumericalAbort::NumericalAbort;
};

}  // namespace wavectl
