#pragma once

#include "crn/network.hpp"
#include "crn/species_set.hpp"

#include <chrono>
#include <optional>
#include <vector>

namespace crn {

/// An irreducible component of the non-negative boundary variety of the
/// binomial steady-state ideal of a weakly reversible network: the points
/// with x_Z = 0 whose remaining coordinates satisfy the toric equations of
/// the reactions that avoid Z.
///
/// Its zero set Z is always a siphon but need not be inclusion-minimal: a
/// component of a larger zero set survives whenever it is not in the
/// closure of a component of a smaller one.
struct BoundaryComponent {
  SpeciesSet zero_set;
  /// Dimension of the component: |[s] \ Z| - rank of the surviving reactions.
  int dimension = 0;
};

struct ComponentConfig {
  std::optional<std::chrono::milliseconds> time_budget;
};

struct ComponentEnumeration {
  std::vector<BoundaryComponent> components;  // canonical order of zero sets
  bool exhaustive = true;
  /// Number of siphons examined as candidate zero sets.
  std::size_t candidates = 0;
};

/// Throws std::invalid_argument unless every linkage class is strongly
/// connected.
ComponentEnumeration boundary_components(const ReactionNetwork& net, const ComponentConfig& config = {});

/// All siphons of a weakly reversible network, i.e. the non-empty sets that
/// meet either every complex or no complex of each linkage class.
std::vector<SpeciesSet> all_siphons_weakly_reversible(const ReactionNetwork& net);

}  // namespace crn
