#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kinetics/deterministic.hpp"
#include "kinetics/hybrid.hpp"
#include "kinetics/model.hpp"
#include "kinetics/stochastic.hpp"

namespace kinetics {

/// Seed for run i of an ensemble: splitmix64_mix(master + i * golden).
/// Injective in i (the state offsets are distinct mod 2^64 and the mix is a
/// bijection), so distinct runs never share a stream. Stable forever.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index);

/// Streaming per-species, per-grid-point mean and scatter (Welford update,
/// Chan merge). The stored representation (n, mean, m2) makes merging
/// associative, which is what keeps parallel aggregation deterministic for a
/// fixed worker layout.
class EnsembleStatistics {
 public:
  EnsembleStatistics() = default;
  EnsembleStatistics(std::vector<double> grid, std::size_t species_count);

  /// Accumulate one run. The trajectory grid must match.
  void add(const Trajectory& trajectory);

  /// Chan/pairwise merge of another accumulator into this one.
  void merge(const EnsembleStatistics& other);

  std::uint64_t runs() const { return n_; }
  std::size_t species_count() const { return species_count_; }
  const std::vector<double>& grid() const { return grid_; }

  double mean(std::size_t grid_point, std::size_t species) const {
    return mean_[grid_point * species_count_ + species];
  }
  /// Sample variance m2/(n-1); 0 when fewer than two runs.
  double variance(std::size_t grid_point, std::size_t species) const;
  double m2(std::size_t grid_point, std::size_t species) const {
    return m2_[grid_point * species_count_ + species];
  }

 private:
  std::vector<double> grid_;
  std::size_t species_count_ = 0;
  std::uint64_t n_ = 0;
  std::vector<double> mean_;  // grid-major [g * species + s]
  std::vector<double> m2_;
};

EnsembleStatistics merge_statistics(EnsembleStatistics a,
                                    const EnsembleStatistics& b);

/// Which simulator to run, with its options. One struct shared by the
/// ensemble engine, the sweep runner and the CLI.
struct Method {
  enum class Kind { Ssa, TauAdaptive, TauFixed, Cle, Ode, Hybrid };
  Kind kind = Kind::Ssa;
  double tau = 0.0;
  double epsilon = 0.03;
  IntegratorConfig integrator;
  HybridConfig hybrid;

  bool deterministic() const { return kind == Kind::Ode; }
  std::string name() const;
};

/// One simulation run with the chosen method.
Trajectory run_single(const ReactionNetwork& network, const Method& method,
                      double t_end, const std::vector<double>& grid,
                      std::uint64_t seed);

struct EnsembleOptions {
  Method method;
  std::uint64_t n_runs = 1;
  double t_end = 0.0;
  std::vector<double> grid;
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
};

/// Optional per-run tap, called from worker threads (distinct run indices,
/// so writing to preallocated per-run slots needs no locking).
using RunSink = std::function<void(std::uint64_t run_index, const Trajectory&)>;

/// Run n_runs mutually independent simulations, run i seeded with
/// derive_run_seed(master_seed, i), on a pool of `workers` threads owning
/// contiguous run-index ranges. Per-run trajectories depend only on
/// (network, method, run seed) -- never on the worker count. Accumulators
/// merge in ascending range order. A failing run aborts the ensemble with
/// its index in the error message.
EnsembleStatistics run_ensemble(const ReactionNetwork& network,
                                const EnsembleOptions& options,
                                const RunSink& sink = {});

struct SweepAxis {
  std::string param;
  std::vector<double> values;
};

struct SweepConfig {
  std::vector<SweepAxis> axes;
  std::uint64_t runs_per_point = 1;
  Method method;
  std::uint64_t master_seed = 0;
  double t_end = 0.0;
  std::vector<double> grid;
};

struct SweepPointResult {
  std::vector<double> coordinates;  // one value per axis
  EnsembleStatistics stats;
};

struct SweepResults {
  std::vector<std::string> axis_names;
  std::vector<SweepPointResult> points;  // Cartesian order, last axis fastest
};

/// Ensemble per grid point of the Cartesian product of the axes, iterated
/// with the last axis fastest. Point k uses master seed
/// derive_run_seed(config.master_seed, k), so adding an axis value never
/// perturbs other points' results.
SweepResults parameter_sweep(const ReactionNetwork& network,
                             const SweepConfig& config, unsigned workers);

}  // namespace kinetics
