#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kinetics/deterministic.hpp"
#include "kinetics/model.hpp"

namespace kinetics {

/// All amount vectors inside per-species caps, enumerated lexicographically
/// (species 0 most significant) with a stable state <-> index bijection.
class StateSpace {
 public:
  static constexpr std::size_t kDefaultLimit = 1'000'000;

  std::size_t size() const { return size_; }
  const std::vector<std::int64_t>& caps() const { return caps_; }

  /// Index of an in-cap amount vector.
  std::size_t index_of(std::span<const double> amounts) const;

  /// Amount vector at an index.
  std::vector<double> state_at(std::size_t index) const;

  /// True when every component lies in [0, cap].
  bool contains(std::span<const double> amounts) const;

 private:
  friend StateSpace enumerate_states(const ReactionNetwork&,
                                     std::vector<std::int64_t>, std::size_t);
  std::vector<std::int64_t> caps_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Build the truncated state space. Caps must dominate the initial amounts;
/// the total size must not exceed `limit` (ValidationError otherwise).
StateSpace enumerate_states(const ReactionNetwork& network,
                            std::vector<std::int64_t> caps,
                            std::size_t limit = StateSpace::kDefaultLimit);

/// Sparse CME generator on the truncated space. Transitions that would leave
/// the caps route their rate to a leak accumulator so every row, leak
/// included, sums to zero exactly by construction.
struct Generator {
  struct Transition {
    std::size_t from;
    std::size_t to;
    double rate;
  };
  struct Leak {
    std::size_t from;
    double rate;
  };

  std::size_t states = 0;
  std::vector<Transition> transitions;
  std::vector<Leak> leaks;
  std::vector<double> exit_rate;  // total outflow per state = -diagonal
};

Generator build_generator(const ReactionNetwork& network,
                          const StateSpace& space);

/// Distribution over a StateSpace plus the probability mass lost through
/// the truncation boundary.
struct ProbabilityVector {
  std::vector<double> p;
  double leaked = 0.0;
};

/// Point mass on the given amounts.
ProbabilityVector delta_distribution(const StateSpace& space,
                                     std::span<const double> amounts);

/// Integrate dp/dt = Q^T p to time t (leak tracked as an extra component)
/// with the Dormand-Prince integrator at oracle tolerances (rel 1e-8).
/// Entries that go microscopically negative are clipped to zero.
ProbabilityVector solve_cme(const ReactionNetwork& network,
                            const StateSpace& space,
                            const ProbabilityVector& p0, double t);
ProbabilityVector solve_cme(const Generator& generator,
                            const ProbabilityVector& p0, double t);

/// Stationary distribution of the truncated chain: solves Q^T p = 0 with one
/// row replaced by the normalization constraint, by dense LU. Transitions
/// leaving the caps are dropped (reflecting truncation), so for a chain in
/// detailed balance this is the exact truncated-renormalized law. The caller
/// is responsible for irreducibility on the truncated space.
ProbabilityVector stationary_distribution(const StateSpace& space,
                                          const Generator& generator);

/// Mean of one species under the distribution.
double distribution_mean(const StateSpace& space, const ProbabilityVector& dist,
                         std::size_t species);

}  // namespace kinetics
