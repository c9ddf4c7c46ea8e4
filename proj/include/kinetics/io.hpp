#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kinetics/cme.hpp"
#include "kinetics/ensemble.hpp"
#include "kinetics/model.hpp"

namespace kinetics {

/// Shortest decimal representation that parses back to the same double
/// (std::to_chars general form). All numeric CSV/SVG output goes through
/// this, which is what makes repeated runs byte-identical.
std::string format_double(double value);

/// FNV-1a 64-bit content hash, reported in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// "time,<species...>" rows, one per grid point.
std::string trajectory_csv(const ReactionNetwork& network,
                           const Trajectory& trajectory);

/// "time,<species>_mean,<species>_var,..." rows, one per grid point.
std::string statistics_csv(const ReactionNetwork& network,
                           const EnsembleStatistics& stats);

/// "param:<name>,...,time,<species>_mean,<species>_var,..." rows in
/// point-then-time order.
std::string sweep_csv(const ReactionNetwork& network,
                      const SweepResults& results);

/// "state_<species>,...,probability" rows sorted by state index, with a
/// trailing "# leaked,<value>" comment.
std::string distribution_csv(const ReactionNetwork& network,
                             const StateSpace& space,
                             const ProbabilityVector& dist);

/// Static SVG line chart of a trajectory (one polyline per species).
std::string trajectory_svg(const ReactionNetwork& network,
                           const Trajectory& trajectory);

/// Static SVG chart of ensemble statistics: mean polyline per species with a
/// +/- one-standard-deviation band.
std::string statistics_svg(const ReactionNetwork& network,
                           const EnsembleStatistics& stats);

/// Static SVG chart of sweep results: one mean polyline per (point, species).
std::string sweep_svg(const ReactionNetwork& network,
                      const SweepResults& results);

}  // namespace kinetics
