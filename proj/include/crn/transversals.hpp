#pragma once

#include "crn/network.hpp"
#include "crn/species_set.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace crn {

struct Hypergraph {
  int num_vertices = 0;
  std::vector<SpeciesSet> edges;  // each non-empty
};

/// Distinct supports of the non-zero complexes.
Hypergraph complex_support_hypergraph(const ReactionNetwork& net);

struct TransversalConfig {
  std::optional<std::uint64_t> max_results;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct TransversalResult {
  std::vector<SpeciesSet> sets;  // canonical order
  bool exhaustive = true;
};

struct TransversalCount {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_size;
  bool exhaustive = true;
};

/// Minimal hitting sets by depth-first MMCS (minimal-set-of-critical-sets
/// search). Throws std::invalid_argument on an empty edge.
TransversalResult minimal_transversals(const Hypergraph& h, const TransversalConfig& config = {});
/// Same search without materializing the sets.
TransversalCount count_minimal_transversals(const Hypergraph& h, const TransversalConfig& config = {});

namespace serial {
TransversalResult minimal_transversals(const Hypergraph& h, const TransversalConfig& config = {});
TransversalCount count_minimal_transversals(const Hypergraph& h, const TransversalConfig& config = {});
/// Edge-by-edge Berge dualization. Slow; used as a test oracle.
std::vector<SpeciesSet> berge_transversals(const Hypergraph& h);
}  // namespace serial

namespace parallel {
TransversalResult minimal_transversals(const Hypergraph& h, const TransversalConfig& config = {});
TransversalCount count_minimal_transversals(const Hypergraph& h, const TransversalConfig& config = {});
}  // namespace parallel

}  // namespace crn
