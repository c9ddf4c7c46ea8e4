#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kinetics/model.hpp"
#include "kinetics/rng.hpp"

namespace kinetics {

/// Outcome of one exact-SSA draw.
struct StepEvent {
  enum class Kind { Fired, Exhausted };
  Kind kind = Kind::Exhausted;
  double dt = 0.0;           // waiting time, only meaningful when Fired
  std::size_t reaction = 0;  // fired reaction index, only when Fired

  bool fired() const { return kind == Kind::Fired; }
};

/// One step of the Gillespie direct method. Draws two uniforms; the state is
/// not modified (the caller applies the reaction). Returns Exhausted when
/// all propensities vanish.
StepEvent ssa_step(const ReactionNetwork& network, const SystemState& state,
                   RngStream& rng);

/// Deterministic core of ssa_step with the two uniforms supplied by the
/// caller: dt = ln(1/u1)/a0, fired reaction = first j with
/// cumulative propensity > u2*a0.
StepEvent ssa_step_from_uniforms(const ReactionNetwork& network,
                                 const SystemState& state, double u1, double u2);

/// Exact CTMC sample path from the network's initial amounts, sampled onto
/// the grid (piecewise constant: a grid point takes the state after the last
/// event at or before it).
Trajectory simulate_ssa(const ReactionNetwork& network, double t_end,
                        std::vector<double> grid, std::uint64_t seed);

/// Species-based tau-selection bound: for each species with nonzero
/// mu_i = sum_j nu_ij a_j or sigma2_i = sum_j nu_ij^2 a_j, bound tau by
/// max(eps*x_i/g_i, 1)/|mu_i| and its square over sigma2_i, where g_i is the
/// highest reactant order species i appears in (1 when it is no reactant).
/// Returns +infinity when every propensity is zero.
double select_tau(const ReactionNetwork& network, const SystemState& state,
                  double epsilon = 0.03);

struct LeapResult {
  bool rejected = false;   // some amount would have gone negative
  SystemState state;       // only valid when !rejected
};

/// Poisson tau-leap: fire k_j ~ Poisson(a_j(x) * tau) of every reaction
/// simultaneously. Rejected is a value (callers halve tau and retry), never
/// an error.
LeapResult tau_leap_step(const ReactionNetwork& network,
                         const SystemState& state, double tau, RngStream& rng);

/// tau_leap_step with the firing counts supplied by the caller.
LeapResult tau_leap_step_from_counts(const ReactionNetwork& network,
                                     const SystemState& state,
                                     std::span<const std::uint64_t> counts);

/// One Euler-Maruyama step of the Chemical Langevin Equation:
///   x' = x + sum_j nu_j a_j tau + sum_j nu_j sqrt(a_j tau) z_j.
/// Components falling below zero are clamped; *clamped counts them.
SystemState cle_step(const ReactionNetwork& network, const SystemState& state,
                     double tau, RngStream& rng,
                     std::uint64_t* clamped = nullptr);

/// cle_step with the standard normal draws supplied by the caller
/// (one per reaction).
SystemState cle_step_from_normals(const ReactionNetwork& network,
                                  const SystemState& state, double tau,
                                  std::span<const double> z,
                                  std::uint64_t* clamped = nullptr);

/// Approximate-simulation scheme selector.
struct ApproxMethod {
  enum class Kind { TauAdaptive, TauFixed, Cle };
  Kind kind = Kind::TauAdaptive;
  double tau = 0.0;        // step size for TauFixed / Cle
  double epsilon = 0.03;   // tau-selection control for TauAdaptive
};

/// Repeated stepping with the chosen scheme, sampled onto the grid. The
/// adaptive leaper falls back to bursts of exact SSA steps whenever the
/// selected tau drops below 10/a0. Clamp/rejection/fallback counts are
/// recorded in the trajectory metadata.
Trajectory simulate_approx(const ReactionNetwork& network,
                           const ApproxMethod& method, double t_end,
                           std::vector<double> grid, std::uint64_t seed);

}  // namespace kinetics
