#pragma once

#include "crn/linalg.hpp"
#include "crn/lp.hpp"
#include "crn/species_set.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace crn {

/// Raised when a facet-based query is made on a cone with lineality.
class NotPointedError : public std::runtime_error {
public:
  NotPointedError()
      : std::runtime_error("cone Q is not pointed; facet-based relevance is unavailable, use the conservation-law LP route")
  {
  }
};

/// A facet of Q: `generators` are the columns of A lying on it and `normal`
/// is an integer functional vanishing exactly on those columns and positive
/// on all others.
struct Facet {
  SpeciesSet generators;
  RationalVector normal;

  SpeciesSet complement(int num_species) const { return crn::complement(generators, num_species); }
  bool operator==(const Facet&) const = default;
};

/// The cone generated by the columns of a conservation basis A.
struct ConeQ {
  RationalMatrix generators;  // A, rows span L_cons
  int num_species = 0;
  int dim = 0;
  bool pointed = true;
  std::vector<Facet> facets;  // empty when not pointed or dim == 0

  bool has_conservation_relations() const noexcept { return dim > 0; }
};

/// Detects pointedness and enumerates facets when the cone is pointed.
ConeQ build_cone(const SubspaceBasis& conservation);
ConeQ build_cone(const ReactionNetwork& net);

/// Throws NotPointedError when !q.pointed. Returns [] for dim 0.
std::vector<Facet> cone_facets(const ConeQ& q);
/// Exactly re-checks the defining property of a facet against A.
bool verify_facet(const ConeQ& q, const Facet& f);

/// P = { x >= 0 : A x = A c0 }.
struct InvariantPolytope {
  RationalMatrix A;
  RationalVector b;
  RationalVector c0;

  int num_species() const noexcept { return A.cols(); }
};

/// Throws std::invalid_argument unless c0 is strictly positive and has one
/// entry per species.
InvariantPolytope make_polytope(const SubspaceBasis& conservation, RationalVector c0);
InvariantPolytope make_polytope(const ReactionNetwork& net, RationalVector c0);

/// Distinct supports of the vertices of P in canonical order.
std::vector<SpeciesSet> vertex_supports(const InvariantPolytope& p);

/// The face F_Z = { x in P : x_Z = 0 } as a linear system.
LinearSystem face_system(const InvariantPolytope& p, const SpeciesSet& zero_set);
/// A point of F_Z, or nullopt when the face is empty.
std::optional<RationalVector> face_nonempty(const InvariantPolytope& p, const SpeciesSet& zero_set);
/// dim F_Z, or nullopt when empty.
std::optional<int> face_dimension(const InvariantPolytope& p, const SpeciesSet& zero_set);

/// Vertex-support list identifying the chamber of Q that contains A c0.
std::vector<SpeciesSet> chamber_signature(const ReactionNetwork& net, const RationalVector& c0);

/// Serial reference kernels. The public entry points above dispatch to the
/// OpenMP versions in `parallel`; both return identical canonical output.
namespace serial {
std::vector<Facet> enumerate_facets(const ConeQ& q);
std::vector<SpeciesSet> enumerate_vertex_supports(const InvariantPolytope& p);
}  // namespace serial

namespace parallel {
std::vector<Facet> enumerate_facets(const ConeQ& q);
std::vector<SpeciesSet> enumerate_vertex_supports(const InvariantPolytope& p);
}  // namespace parallel

}  // namespace crn
