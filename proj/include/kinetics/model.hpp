#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kinetics {

struct Species {
  std::string name;
  std::int64_t initial_amount = 0;

  friend bool operator==(const Species&, const Species&) = default;
};

/// A named rate value declared with `param`. Reactions may bind their rate
/// constant to a parameter by name; sweeps rebind parameters per point.
struct Parameter {
  std::string name;
  double value = 0.0;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct Reaction {
  std::string name;
  // species index -> stoichiometric coefficient (> 0). Ordered by index so
  // iteration order is deterministic.
  std::map<std::size_t, int> reactants;
  std::map<std::size_t, int> products;
  double rate_constant = 0.0;                 // stochastic rate constant c
  std::optional<std::size_t> rate_param;      // set when bound to a parameter

  /// Total reactant stoichiometry (0, 1 or 2 for elementary reactions).
  int order() const;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Immutable mass-action reaction network. Species and reactions keep their
/// declaration order; all vectors and matrices index by that order.
/// Safe to share across threads once constructed.
class ReactionNetwork {
 public:
  /// Validates invariants (unique names, resolvable references, order <= 2,
  /// positive rates) and computes the stoichiometry matrix.
  static ReactionNetwork create(std::vector<Species> species,
                                std::vector<Parameter> params,
                                std::vector<Reaction> reactions);

  const std::vector<Species>& species() const { return species_; }
  const std::vector<Parameter>& params() const { return params_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  std::size_t species_count() const { return species_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  /// nu[i][j]: net change of species i when reaction j fires.
  int stoich(std::size_t species, std::size_t reaction) const {
    return nu_[species * reactions_.size() + reaction];
  }

  /// Sparse column nu[:,j] as (species index, delta) pairs.
  const std::vector<std::pair<std::size_t, int>>& stoich_column(
      std::size_t reaction) const {
    return nu_columns_[reaction];
  }

  std::optional<std::size_t> species_index(std::string_view name) const;
  std::optional<std::size_t> param_index(std::string_view name) const;

  std::vector<double> initial_amounts() const;

  /// Copy of this network with one parameter set to a new value; reactions
  /// bound to that parameter pick up the new rate constant.
  ReactionNetwork with_param(std::string_view name, double value) const;

  friend bool operator==(const ReactionNetwork& a, const ReactionNetwork& b) {
    return a.species_ == b.species_ && a.params_ == b.params_ &&
           a.reactions_ == b.reactions_;
  }

 private:
  ReactionNetwork() = default;

  std::vector<Species> species_;
  std::vector<Parameter> params_;
  std::vector<Reaction> reactions_;
  std::vector<int> nu_;  // row-major species x reactions
  std::vector<std::vector<std::pair<std::size_t, int>>> nu_columns_;
};

/// The value of X(t): simulation clock plus per-species amounts. Stochastic
/// methods keep the amounts integer-valued (stored exactly in doubles).
struct SystemState {
  double time = 0.0;
  std::vector<double> amounts;
};

struct TrajectoryMeta {
  std::uint64_t steps = 0;
  std::uint64_t rejected_leaps = 0;
  std::uint64_t clamp_events = 0;
  std::uint64_t fallback_ssa_steps = 0;
  std::uint64_t jumps = 0;
  bool floored = false;
};

/// A sample path reduced onto a fixed time grid.
struct Trajectory {
  std::vector<double> grid;
  std::vector<std::vector<double>> samples;  // one amounts vector per grid time
  std::string method;
  std::optional<std::uint64_t> seed;
  TrajectoryMeta meta;
};

/// Integer vector w with w^T nu = 0: the linear combination w.x is invariant
/// under every reaction. Canonical form: entries coprime, first nonzero > 0.
struct ConservationLaw {
  std::vector<std::int64_t> coefficients;

  friend bool operator==(const ConservationLaw&, const ConservationLaw&) = default;
};

/// Parse the line-oriented model text format:
///
///   # comment
///   species <name> = <non-negative integer>
///   param <name> = <positive real>
///   reaction <name>: <lhs> -> <rhs> @ <positive real | param name>
///
/// <lhs>/<rhs> are '+'-separated terms "<coeff?> <species>", or the literal
/// '0' for no reactants/products. Throws ParseError with line/column on any
/// syntax or reference error.
ReactionNetwork parse_model(std::string_view text);

/// Inverse of parse_model: parse_model(render_model(n)) == n.
std::string render_model(const ReactionNetwork& network);

/// Number of distinct reactant tuples a single species contributes:
/// 1, x, or x(x-1)/2 for stoichiometry 0, 1, 2. Evaluated on real x for the
/// deterministic methods; negative values on fractional x < 1 are clamped
/// to 0 so propensities stay non-negative.
double combinations(double amount, int stoichiometry);

/// Propensity a_j(x) = c_j * h_j(x).
double propensity(const ReactionNetwork& network,
                  std::span<const double> amounts, std::size_t reaction);

/// All propensities at once into `out` (size = reaction count).
void propensities(const ReactionNetwork& network,
                  std::span<const double> amounts, std::span<double> out);

/// Apply nu[:,j] to the amounts in place; time is untouched. Throws
/// SimulationError if any amount would become negative (a simulator bug:
/// callers fire reactions only with positive propensity).
void apply_reaction(SystemState& state, const ReactionNetwork& network,
                    std::size_t reaction);

/// Basis of the integer left null space of nu, each vector canonicalized;
/// empty when the null space is trivial. Exact integer arithmetic.
std::vector<ConservationLaw> conservation_laws(const ReactionNetwork& network);

}  // namespace kinetics
