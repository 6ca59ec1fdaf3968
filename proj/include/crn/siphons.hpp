#pragma once

#include "crn/network.hpp"
#include "crn/species_set.hpp"
#include "crn/transversals.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crn {

/// Why a set fails to be a siphon: `reaction` produces `species` in Z while
/// its reactant complex avoids Z. For the empty set both indices are -1.
struct SiphonViolation {
  int reaction = -1;
  int species = -1;
  std::string message;
};

class NotASiphonError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::optional<SiphonViolation> siphon_violation(const ReactionNetwork& net, const SpeciesSet& z);
inline bool is_siphon(const ReactionNetwork& net, const SpeciesSet& z) { return !siphon_violation(net, z); }
/// Throws NotASiphonError carrying the violation message.
void require_siphon(const ReactionNetwork& net, const SpeciesSet& z);

/// For each species z, the inclusion-minimal reactant supports of reactions
/// that produce z without consuming it. Z is a siphon iff Z is non-empty and
/// every clause of every z in Z meets Z.
struct SiphonConstraintTable {
  std::vector<std::vector<SpeciesSet>> clauses;
};

SiphonConstraintTable constraint_table(const ReactionNetwork& net);

enum class EnumerationRoute { Branching, Transversals, BruteForce };
const char* to_string(EnumerationRoute route);

struct EnumerationConfig {
  std::optional<std::uint64_t> max_results;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Use minimal transversals when the network is strongly connected.
  bool use_fast_path = true;
};

struct SiphonEnumeration {
  std::vector<SpeciesSet> siphons;  // canonical order
  bool exhaustive = true;
  EnumerationRoute route = EnumerationRoute::Branching;
};

/// Inclusion-minimal siphons.
SiphonEnumeration minimal_siphons(const ReactionNetwork& net, const EnumerationConfig& config = {});

/// Same result through the monomial hypergraph. Throws std::invalid_argument
/// unless the network is strongly connected.
SiphonEnumeration minimal_siphons_fast(const ReactionNetwork& net, const TransversalConfig& config = {});
/// Count and size histogram of the minimal siphons of a strongly connected
/// network without materializing them.
TransversalCount count_minimal_siphons_fast(const ReactionNetwork& net, const TransversalConfig& config = {});

/// Checks every non-empty subset. Throws std::invalid_argument for s > 22.
std::vector<SpeciesSet> brute_force_minimal_siphons(const ReactionNetwork& net);
inline constexpr int kBruteForceLimit = 22;

namespace serial {
SiphonEnumeration branch_minimal_siphons(const ReactionNetwork& net, const EnumerationConfig& config = {});
}
namespace parallel {
SiphonEnumeration branch_minimal_siphons(const ReactionNetwork& net, const EnumerationConfig& config = {});
}

}  // namespace crn
