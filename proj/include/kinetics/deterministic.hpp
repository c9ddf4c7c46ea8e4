#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "kinetics/model.hpp"

namespace kinetics {

struct IntegratorConfig {
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  double h_init = 0.0;  // 0 selects the starting step automatically
  double h_max = std::numeric_limits<double>::infinity();
  std::uint64_t max_steps = 10'000'000;
};

/// dy/dt = f(t, y), written into `dydt` (same length as y).
using OdeRhs =
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct RkStepResult {
  std::vector<double> y;  // 5th-order proposal at t + h
  double error;           // weighted RMS of the embedded 4th/5th difference
};

/// One Dormand-Prince 5(4) step from (t, y) with step size h. The error is
/// scaled by abs_tol + rel_tol * max(|y_i|, |y_new_i|); a value above 1
/// means the step should be rejected and retried with a smaller h.
/// Throws SimulationError when the right-hand side produces non-finite values.
RkStepResult rk_step(const OdeRhs& rhs, double t, std::span<const double> y,
                     double h, const IntegratorConfig& config = {});

/// Adaptive Dormand-Prince 5(4) integrator with PI step-size control and a
/// 4th-order continuous extension on every accepted step (Hermite base plus
/// the classical correction stage).
class Dopri5 {
 public:
  Dopri5(OdeRhs rhs, double t0, std::vector<double> y0,
         IntegratorConfig config = {});

  /// Take one accepted step, capped so the new time never exceeds t_limit.
  /// Returns false (and does nothing) when already at or beyond t_limit.
  bool advance(double t_limit);

  double t_previous() const { return t_prev_; }
  double t_current() const { return t_; }
  std::span<const double> current() const { return y_; }

  /// Dense-output evaluation for t in [t_previous(), t_current()] of the
  /// last accepted step. Exact at both endpoints.
  void interpolate(double t, std::span<double> out) const;

  /// Floor the current state at zero componentwise. Returns true if any
  /// component was lifted.
  bool clamp_nonnegative();

  std::uint64_t accepted_steps() const { return accepted_; }
  std::uint64_t rejected_steps() const { return rejected_; }

 private:
  void compute_dense_coefficients(double h);

  OdeRhs rhs_;
  IntegratorConfig config_;
  double t_ = 0.0;
  double t_prev_ = 0.0;
  std::vector<double> y_;       // state at t_
  std::vector<double> y_prev_;  // state at t_prev_
  std::vector<double> f_;       // rhs at (t_, y_), reused FSAL-style
  std::array<std::vector<double>, 7> k_;
  std::array<std::vector<double>, 5> rcont_;
  std::vector<double> y_trial_;
  double h_ = 0.0;
  double err_old_ = 1e-4;
  bool have_step_ = false;
  std::uint64_t accepted_ = 0;
  std::uint64_t rejected_ = 0;
};

/// Mean-field right-hand side dx/dt = nu * a(x) with the continuous
/// extension of the combinatorial propensities.
std::vector<double> rre_rhs(const ReactionNetwork& network,
                            std::span<const double> amounts);

/// Integrate the reaction-rate equations from x0 and sample onto the grid
/// via dense output. Components that undershoot zero are floored (flagged
/// in the trajectory metadata).
Trajectory integrate_rre(const ReactionNetwork& network, std::vector<double> x0,
                         double t_end, std::vector<double> grid,
                         const IntegratorConfig& config = {});

}  // namespace kinetics
