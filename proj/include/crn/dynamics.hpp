#pragma once

#include "crn/network.hpp"
#include "crn/rational.hpp"
#include "crn/species_set.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace crn {

/// A network together with one positive rate per reaction.
struct MassActionSystem {
  const ReactionNetwork* network = nullptr;
  RationalVector kappa;

  /// Throws std::invalid_argument unless kappa has one positive entry per
  /// reaction.
  MassActionSystem(const ReactionNetwork& net, RationalVector rates);
};

/// Rate label of reaction r: its declared label, else "k<r+1>".
std::string rate_label(const ReactionNetwork& net, int r);

/// Reads "label = value" lines (# comments allowed). Every reaction must
/// receive a rate; a label shared by several reactions sets all of them.
RationalVector parse_kappa(const ReactionNetwork& net, std::string_view text);

struct Term {
  Rational coefficient;
  std::vector<std::uint64_t> exponents;

  bool operator==(const Term&) const = default;
};

/// rows[i] is the right-hand side of dc_i/dt, terms sorted by exponent
/// vector, like monomials combined, zero coefficients dropped.
struct PolynomialVectorField {
  std::vector<std::vector<Term>> rows;

  int num_species() const noexcept { return static_cast<int>(rows.size()); }
  bool operator==(const PolynomialVectorField&) const = default;
};

PolynomialVectorField build_rhs(const MassActionSystem& sys);
/// Throws std::invalid_argument on a dimension mismatch or a negative entry.
RationalVector eval_rhs(const PolynomialVectorField& field, std::span<const Rational> point);

/// The right-hand side with the rates kept symbolic: each monomial carries
/// an integer combination of reactions.
struct SymbolicTerm {
  std::vector<std::uint64_t> exponents;
  std::map<int, Integer> rates;  // reaction -> integer coefficient
};
using SymbolicVectorField = std::vector<std::vector<SymbolicTerm>>;

SymbolicVectorField symbolic_rhs(const ReactionNetwork& net);

/// "dB/dt = k14*A^2*C - (k41 + k43)*B*C + k34*E", one line per species.
std::string format_symbolic(const ReactionNetwork& net, const SymbolicVectorField& field);
std::string format_field(const ReactionNetwork& net, const PolynomialVectorField& field);
std::string format_monomial(const ReactionNetwork& net, const std::vector<std::uint64_t>& exponents);

/// Exact random rationals p/q with 1 <= q <= bound and 0 <= p <= bound
/// (1 <= p for positive draws).
class ExactSampler {
public:
  explicit ExactSampler(std::uint64_t seed, long bound = 12) : rng_(seed), bound_(bound) {}

  Rational positive();
  Rational nonnegative();
  RationalVector positive_vector(int n);

private:
  std::mt19937_64 rng_;
  long bound_;
};

/// Seed of trial t derived from a master seed.
std::uint64_t trial_seed(std::uint64_t master, int trial);

struct FaceCounterexample {
  /// Empty for structural failures.
  RationalVector kappa;
  RationalVector point;
  int species = -1;
  Rational value;
  std::string message;
};

/// Samples random rates and random non-negative points with x_Z = 0 and
/// checks that dx_z/dt vanishes for z in Z; then checks the structural form
/// (every positive term of dz/dt involves a variable of Z).
/// Throws NotASiphonError unless z is a siphon.
std::optional<FaceCounterexample> check_face_invariance(const ReactionNetwork& net, const SpeciesSet& z, int trials,
                                                        std::uint64_t seed);

/// Structural half of check_face_invariance; no sampling, no precondition.
/// Returns nullopt exactly when z is a siphon (or empty).
std::optional<FaceCounterexample> structural_face_check(const ReactionNetwork& net, const SpeciesSet& z);

/// Random points on the face x_Z = 0 must be steady states.
/// Throws std::invalid_argument unless the network is strongly connected,
/// NotASiphonError unless z is a siphon.
std::optional<FaceCounterexample> check_steady_face(const ReactionNetwork& net, const SpeciesSet& z, int trials,
                                                    std::uint64_t seed);

}  // namespace crn
