#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kinetics/deterministic.hpp"
#include "kinetics/model.hpp"
#include "kinetics/rng.hpp"

namespace kinetics {

/// Reaction-level split into stochastically fired (slow) and
/// deterministically integrated (fast) subsets. Always disjoint and
/// exhaustive.
struct Partition {
  std::vector<std::size_t> slow;
  std::vector<std::size_t> fast;
};

struct HybridConfig {
  std::int64_t amount_threshold = 100;    // theta_x
  double propensity_threshold = 10.0;     // theta_a, events per unit time
  double repartition_interval = 0.0;      // 0 selects t_end / 100
  IntegratorConfig integrator;
};

/// Reaction j is slow iff a_j(x) < theta_a or any of its reactants is
/// below theta_x; otherwise fast. With a positive theta_a this puts every
/// zero-propensity reaction in the slow set.
Partition partition_reactions(const ReactionNetwork& network,
                              const SystemState& state,
                              const HybridConfig& config);

struct JumpResult {
  std::optional<double> time;  // jump time, or nullopt if none before t_end
  SystemState state;           // state at the jump (or at t_end)
};

/// Evolve the fast subsystem by its rate equations while accumulating the
/// integrated slow hazard G(t); the next jump fires where G crosses an
/// Exp(1) threshold drawn from `rng`. Root located on the dense output to
/// 1e-10 relative accuracy in t. Firing-reaction selection is the caller's
/// (it needs the propensities at the returned state).
JumpResult next_jump(const ReactionNetwork& network, const SystemState& state,
                     const Partition& partition, double t_end, RngStream& rng,
                     const IntegratorConfig& integrator = {});

/// next_jump with the exponential threshold supplied by the caller.
JumpResult next_jump_with_threshold(const ReactionNetwork& network,
                                    const SystemState& state,
                                    const Partition& partition, double t_end,
                                    double threshold,
                                    const IntegratorConfig& integrator = {});

/// Piecewise deterministic Markov process simulation: deterministic flow of
/// the fast reactions punctuated by integer jumps of the slow ones.
/// Repartitions after every jump and every repartition_interval of simulated
/// time. Grid samples come from the dense deterministic segments; a grid
/// point equal to a jump time takes the post-jump state.
Trajectory simulate_hybrid(const ReactionNetwork& network, double t_end,
                           std::vector<double> grid, std::uint64_t seed,
                           const HybridConfig& config = {});

}  // namespace kinetics
