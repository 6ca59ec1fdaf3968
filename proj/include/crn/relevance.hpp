#pragma once

#include "crn/components.hpp"
#include "crn/geometry.hpp"
#include "crn/linalg.hpp"
#include "crn/lp.hpp"
#include "crn/network.hpp"
#include "crn/siphons.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crn {

/// Two independent relevance routes disagreed, or a witness failed to
/// re-verify. Never expected; surfaced as exit code 4 by the CLI.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class RelevanceRoute { StarLp, Facet, FaceLp };
const char* to_string(RelevanceRoute route);

struct RelevanceVerdict {
  SpeciesSet siphon;
  bool relevant = false;
  RelevanceRoute route = RelevanceRoute::StarLp;
  /// Non-relevant via (★): a primitive integer l in L_cons, l >= 0, supp(l) inside Z.
  std::optional<RationalVector> conservation_witness;
  /// Non-relevant via facets: a facet whose complement lies in Z.
  std::optional<Facet> facet;
  /// c0-relevant: a point of the face F_Z.
  std::optional<RationalVector> face_point;
  /// Farkas multipliers when the route's LP is infeasible.
  std::optional<RationalVector> farkas;
  /// Omega route: index of the first sample that witnesses relevance.
  std::optional<int> sample_index;
  bool cross_checked = false;

  bool operator==(const RelevanceVerdict&) const = default;
};

/// Shared, precomputed data for relevance queries on one network.
struct RelevanceContext {
  const ReactionNetwork* net = nullptr;
  SubspaceBasis conservation;
  ConeQ cone;

  explicit RelevanceContext(const ReactionNetwork& network);
  int num_species() const { return net->num_species(); }
};

/// { l = v A, l_i = 0 off Z, l_i >= 0 on Z, sum_Z l_i = 1 } over (l, v).
LinearSystem star_system(const SubspaceBasis& conservation, const SpeciesSet& z);

/// Throws NotASiphonError unless z is a siphon.
RelevanceVerdict is_relevant_star(const RelevanceContext& ctx, const SpeciesSet& z);
/// Throws NotPointedError when Q has lineality.
RelevanceVerdict is_relevant_facet(const RelevanceContext& ctx, const SpeciesSet& z);
/// Throws std::invalid_argument unless c0 > 0.
RelevanceVerdict is_c0_relevant(const RelevanceContext& ctx, const RationalVector& c0, const SpeciesSet& z);
RelevanceVerdict is_c0_relevant(const RelevanceContext& ctx, const InvariantPolytope& p, const SpeciesSet& z);
/// OR over the samples. Throws std::invalid_argument on an empty list.
RelevanceVerdict omega_relevant(const RelevanceContext& ctx, const std::vector<RationalVector>& samples, const SpeciesSet& z);

/// Star route, cross-checked against the facet route when Q is pointed.
/// Throws InvariantViolation on disagreement.
RelevanceVerdict checked_relevance(const RelevanceContext& ctx, const SpeciesSet& z);

/// Re-verifies whatever witness or certificate the verdict carries.
bool verify_verdict(const RelevanceContext& ctx, const RelevanceVerdict& v, const std::optional<RationalVector>& c0 = std::nullopt);

/// Minimal siphons that are relevant, in canonical order.
std::vector<SpeciesSet> relevant_minimal_siphons(const ReactionNetwork& net);

/// Groups sets into orbits under the given permutations (perm[i] is the
/// image of species i). Orbit members are indices into `sets`; orbits are
/// ordered by their first member.
std::vector<std::vector<int>> orbits(const std::vector<SpeciesSet>& sets, const std::vector<std::vector<int>>& permutations);

// ---------------------------------------------------------------------------
// Network-level analysis

struct AnalysisOptions {
  std::optional<RationalVector> c0;
  std::vector<RationalVector> omega;
  std::vector<std::vector<int>> symmetries;
  EnumerationConfig enumeration;
  /// Also analyze the boundary components (weakly reversible networks only).
  bool components = false;
};

struct SiphonReport {
  SpeciesSet members;
  RelevanceVerdict verdict;
  std::optional<bool> c0_relevant;
  std::optional<int> face_dimension;  // when c0-relevant
  std::vector<int> omega_relevant_samples;
  /// Dimension of the boundary component (component list only).
  std::optional<int> component_dimension;

  bool operator==(const SiphonReport&) const = default;
};

struct FacetReport {
  SpeciesSet generators;
  SpeciesSet complement;
  RationalVector normal;

  bool operator==(const FacetReport&) const = default;
};

struct AnalysisReport {
  std::vector<std::string> species;
  int num_complexes = 0;
  int num_reactions = 0;
  bool strongly_connected = false;
  bool components_strongly_connected = false;
  int num_linkage_classes = 0;
  int num_strong_components = 0;

  std::vector<RationalVector> conservation_basis;
  int cone_dimension = 0;
  bool cone_pointed = true;
  std::vector<FacetReport> facets;

  std::string enumeration_route;
  bool exhaustive = true;
  std::vector<SiphonReport> siphons;
  std::vector<SiphonReport> components;  // when requested
  std::vector<std::vector<int>> siphon_orbits;
  std::vector<std::vector<int>> component_orbits;

  std::optional<RationalVector> c0;
  std::vector<RationalVector> omega;

  bool all_non_relevant = false;
  std::optional<std::string> certificate;
  std::optional<std::string> steady_face_note;
  std::string toric_note;

  long long lp_solves = 0;
  long long lp_verified = 0;
  std::optional<double> elapsed_ms;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const ReactionNetwork& net, const AnalysisOptions& options = {});

}  // namespace crn
