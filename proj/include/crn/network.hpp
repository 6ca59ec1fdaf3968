#pragma once

#include "crn/rational.hpp"
#include "crn/species_set.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crn {

/// Syntax or validation failure while reading a reaction file.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// A network that violates a structural invariant (self-loop, duplicate edge, ...).
class NetworkError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SpeciesTable {
public:
  SpeciesTable() = default;
  explicit SpeciesTable(std::vector<std::string> names);

  /// Returns the index of `name`, appending it if new.
  int intern(const std::string& name);
  std::optional<int> find(std::string_view name) const;

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Resolves a list of names; throws std::invalid_argument on unknown names.
  SpeciesSet resolve(const std::vector<std::string>& names) const;
  std::string format(const SpeciesSet& set, std::string_view sep = " ") const;

  bool operator==(const SpeciesTable& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Exponent vector of a complex. The all-zero vector is the zero complex "0".
struct Complex {
  std::vector<std::uint64_t> exponents;

  bool is_zero() const;
  bool contains(int species) const { return exponents[static_cast<std::size_t>(species)] > 0; }
  SpeciesSet support() const;

  bool operator==(const Complex&) const = default;
};

struct Reaction {
  int source = 0;
  int target = 0;
  std::optional<std::string> rate_label;

  bool operator==(const Reaction&) const = default;
};

/// Immutable after construction. Coordinates of every vector derived from a
/// network follow the species-table order.
class ReactionNetwork {
public:
  /// Validates: complexes distinct and of length s, every complex used by
  /// some reaction, no self-loops, no duplicate directed edges, at least one
  /// reaction. Throws NetworkError.
  ReactionNetwork(SpeciesTable species, std::vector<Complex> complexes, std::vector<Reaction> reactions);

  const SpeciesTable& species() const noexcept { return species_; }
  int num_species() const noexcept { return species_.size(); }
  int num_complexes() const noexcept { return static_cast<int>(complexes_.size()); }
  int num_reactions() const noexcept { return static_cast<int>(reactions_.size()); }
  const std::vector<Complex>& complexes() const noexcept { return complexes_; }
  const Complex& complex(int i) const { return complexes_.at(static_cast<std::size_t>(i)); }
  const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
  const Reaction& reaction(int r) const { return reactions_.at(static_cast<std::size_t>(r)); }

  bool operator==(const ReactionNetwork&) const = default;

private:
  SpeciesTable species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
};

/// Reads the line-oriented reaction format:
///
///     # comment
///     species A, B, C
///     2A + C <-> A + D ; k=k1
///     0 -> A
///
/// `<->` becomes two directed reactions (labels suffixed `_fwd` / `_rev`).
/// Species are indexed by declaration first, then by first appearance.
ReactionNetwork parse_network(std::string_view text);
ReactionNetwork load_network(const std::string& path);

/// Canonical text form; parse_network(to_text(net)) == net.
std::string to_text(const ReactionNetwork& net);
std::string format_complex(const ReactionNetwork& net, int complex_index);
std::string format_reaction(const ReactionNetwork& net, int reaction_index);

struct ConnectivityInfo {
  std::vector<std::vector<int>> strong_components;
  std::vector<std::vector<int>> linkage_classes;
  bool is_strongly_connected = false;
  bool components_strongly_connected = false;
};

ConnectivityInfo connectivity(const ReactionNetwork& net);

/// y_target - y_source for every reaction, in reaction order.
std::vector<std::vector<Integer>> stoichiometric_generators(const ReactionNetwork& net);

}  // namespace crn
