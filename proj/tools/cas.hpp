#pragma once

#include "crn/network.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace crn::cli {

/// IG: c^{y_i}(c^{y_j} - c^{y_i}) per reaction. JG: c^{y_i} - c^{y_j} per
/// edge pair. MG: the complex monomials (strongly connected networks).
enum class CasFlavor { IG, JG, MG };

std::optional<CasFlavor> parse_flavor(std::string_view text);

/// Generator list "ideal(...)" in Macaulay2 syntax, variables named as in
/// cas_variable.
std::string cas_ideal(const ReactionNetwork& net, CasFlavor flavor);
/// Species name with every character outside [A-Za-z0-9] removed.
std::string cas_variable(const std::string& name);

/// A Macaulay2 script declaring the ring, the ideal and the decomposition
/// calls. Throws std::invalid_argument for MG on a network that is not
/// strongly connected, or when two species collapse to one variable name.
std::string export_cas_script(const ReactionNetwork& net, CasFlavor flavor = CasFlavor::IG);

}  // namespace crn::cli
