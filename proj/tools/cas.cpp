#include "cas.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace crn::cli {

std::optional<CasFlavor> parse_flavor(std::string_view text)
{
  if (text == "IG" || text == "ig") return CasFlavor::IG;
  if (text == "JG" || text == "jg") return CasFlavor::JG;
  if (text == "MG" || text == "mg") return CasFlavor::MG;
  return std::nullopt;
}

std::string cas_variable(const std::string& name)
{
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

namespace {

std::string monomial(const ReactionNetwork& net, int complex_index)
{
  const auto& e = net.complex(complex_index).exponents;
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += cas_variable(net.species().name(static_cast<int>(i)));
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string cas_ideal(const ReactionNetwork& net, CasFlavor flavor)
{
  std::vector<std::string> gens;
  switch (flavor) {
    case CasFlavor::IG:
      for (const auto& rx : net.reactions()) {
        const auto src = monomial(net, rx.source);
        const auto tgt = monomial(net, rx.target);
        gens.push_back(src == "1" ? tgt + "-1" : src + "*(" + tgt + "-" + src + ")");
      }
      break;
    case CasFlavor::JG: {
      std::set<std::pair<int, int>> seen;
      for (const auto& rx : net.reactions()) {
        const auto key = std::minmax(rx.source, rx.target);
        if (!seen.insert(key).second) continue;
        gens.push_back(monomial(net, rx.source) + "-" + monomial(net, rx.target));
      }
      break;
    }
    case CasFlavor::MG:
      for (int k = 0; k < net.num_complexes(); ++k) gens.push_back(monomial(net, k));
      break;
  }
  std::string out = "ideal(";
  for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + gens[k];
  return out + ")";
}

std::string export_cas_script(const ReactionNetwork& net, CasFlavor flavor)
{
  if (flavor == CasFlavor::MG && !connectivity(net).is_strongly_connected) {
    throw std::invalid_argument("the monomial flavor needs a strongly connected reaction graph");
  }
  std::set<std::string> used;
  std::string vars;
  for (const auto& name : net.species().names()) {
    const auto v = cas_variable(name);
    if (v.empty() || std::isdigit(static_cast<unsigned char>(v[0])) || !used.insert(v).second) {
      throw std::invalid_argument("species name '" + name + "' has no usable variable name");
    }
    vars += (vars.empty() ? "" : ", ") + v;
  }
  auto fresh = [&](std::string base) {
    while (used.count(base)) base += "0";
    used.insert(base);
    return base;
  };
  const auto ring = fresh("R");
  const auto prod = fresh("prod" + ring);
  const auto ideal_name = fresh(flavor == CasFlavor::IG ? "I" : flavor == CasFlavor::JG ? "J" : "M");

  std::string out;
  out += "-- boundary decomposition for external cross-validation\n";
  out += ring + " = QQ[" + vars + "];\n";
  out += prod + " = ideal product gens " + ring + ";\n";
  out += ideal_name + " = " + cas_ideal(net, flavor) + ";\n";
  switch (flavor) {
    case CasFlavor::IG:
      out += "decompose(" + ideal_name + " + " + prod + ")\n";
      out += "-- primes containing no variable correspond to positive steady states\n";
      out += "saturate(" + ideal_name + ", " + prod + ")\n";
      break;
    case CasFlavor::JG:
      out += "decompose(" + ideal_name + " + " + prod + ")\n";
      break;
    case CasFlavor::MG:
      out += "-- generators of the dual are the minimal siphons\n";
      out += "decompose " + ideal_name + "\n";
      out += "dual radical monomialIdeal " + ideal_name + "\n";
      break;
  }
  return out;
}

}  // namespace crn::cli
