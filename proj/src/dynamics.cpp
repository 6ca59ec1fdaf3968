#include "crn/dynamics.hpp"

#include "crn/siphons.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crn {

MassActionSystem::MassActionSystem(const ReactionNetwork& net, RationalVector rates) : network(&net), kappa(std::move(rates))
{
  if (static_cast<int>(kappa.size()) != net.num_reactions()) {
    throw std::invalid_argument("expected " + std::to_string(net.num_reactions()) + " rates, got " + std::to_string(kappa.size()));
  }
  for (std::size_t r = 0; r < kappa.size(); ++r) {
    if (kappa[r] <= 0) throw std::invalid_argument("rate of " + format_reaction(net, static_cast<int>(r)) + " is not positive");
  }
}

std::string rate_label(const ReactionNetwork& net, int r)
{
  const auto& label = net.reaction(r).rate_label;
  return label ? *label : "k" + std::to_string(r + 1);
}

namespace {

std::string_view trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational monomial_value(const std::vector<std::uint64_t>& exponents, std::span<const Rational> x)
{
  Rational v = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (std::uint64_t e = 0; e < exponents[i]; ++e) v *= x[i];
    if (v == 0) break;
  }
  return v;
}

}  // namespace

RationalVector parse_kappa(const ReactionNetwork& net, std::string_view text)
{
  std::map<std::string, std::vector<int>> by_label;
  for (int r = 0; r < net.num_reactions(); ++r) by_label[rate_label(net, r)].push_back(r);

  RationalVector kappa(static_cast<std::size_t>(net.num_reactions()));
  std::vector<char> set(kappa.size(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim(std::string_view(line).substr(0, line.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected label = value");
    const std::string label(trim(view.substr(0, eq)));
    auto it = by_label.find(label);
    if (it == by_label.end()) throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown rate label " + label);
    const Rational value = parse_rational(trim(view.substr(eq + 1)));
    for (int r : it->second) {
      kappa[r] = value;
      set[r] = 1;
    }
  }
  for (int r = 0; r < net.num_reactions(); ++r) {
    if (!set[r]) throw std::invalid_argument("no rate given for " + rate_label(net, r));
  }
  return kappa;
}

PolynomialVectorField build_rhs(const MassActionSystem& sys)
{
  const auto& net = *sys.network;
  const int s = net.num_species();
  std::vector<std::map<std::vector<std::uint64_t>, Rational>> acc(static_cast<std::size_t>(s));
  for (int r = 0; r < net.num_reactions(); ++r) {
    const auto& y_i = net.complex(net.reaction(r).source).exponents;
    const auto& y_j = net.complex(net.reaction(r).target).exponents;
    for (int k = 0; k < s; ++k) {
      if (y_i[k] == y_j[k]) continue;
      const Rational delta = Rational(static_cast<long>(y_j[k])) - Rational(static_cast<long>(y_i[k]));
      acc[k][y_i] += sys.kappa[r] * delta;
    }
  }
  PolynomialVectorField f;
  f.rows.resize(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) {
    for (auto it = acc[k].rbegin(); it != acc[k].rend(); ++it) {
      if (it->second != 0) f.rows[k].push_back({it->second, it->first});
    }
  }
  return f;
}

RationalVector eval_rhs(const PolynomialVectorField& field, std::span<const Rational> point)
{
  if (static_cast<int>(point.size()) != field.num_species()) throw std::invalid_argument("point has the wrong dimension");
  for (const auto& x : point) {
    if (x < 0) throw std::invalid_argument("point has a negative coordinate");
  }
  RationalVector out(point.size());
  for (std::size_t k = 0; k < field.rows.size(); ++k) {
    for (const auto& t : field.rows[k]) out[k] += t.coefficient * monomial_value(t.exponents, point);
  }
  return out;
}

SymbolicVectorField symbolic_rhs(const ReactionNetwork& net)
{
  const int s = net.num_species();
  std::vector<std::map<std::vector<std::uint64_t>, std::map<int, Integer>>> acc(static_cast<std::size_t>(s));
  for (int r = 0; r < net.num_reactions(); ++r) {
    const auto& y_i = net.complex(net.reaction(r).source).exponents;
    const auto& y_j = net.complex(net.reaction(r).target).exponents;
    for (int k = 0; k < s; ++k) {
      if (y_i[k] == y_j[k]) continue;
      acc[k][y_i][r] += Integer(static_cast<unsigned long>(y_j[k])) - Integer(static_cast<unsigned long>(y_i[k]));
    }
  }
  SymbolicVectorField out(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) {
    for (auto it = acc[k].rbegin(); it != acc[k].rend(); ++it) out[k].push_back({it->first, it->second});
  }
  return out;
}

std::string format_monomial(const ReactionNetwork& net, const std::vector<std::uint64_t>& exponents)
{
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += net.species().name(static_cast<int>(i));
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void append_term(std::string& line, bool negative, const std::string& coefficient, const std::string& monomial)
{
  if (line.empty()) line = negative ? "-" : "";
  else line += negative ? " - " : " + ";
  if (coefficient == "1") line += monomial;
  else if (monomial == "1") line += coefficient;
  else line += coefficient + "*" + monomial;
}

}  // namespace

std::string format_symbolic(const ReactionNetwork& net, const SymbolicVectorField& field)
{
  std::string out;
  for (std::size_t k = 0; k < field.size(); ++k) {
    std::string rhs;
    for (const auto& t : field[k]) {
      bool all_neg = true;
      for (const auto& [r, c] : t.rates) all_neg = all_neg && c < 0;
      std::string expr;
      for (const auto& [r, c] : t.rates) {
        const Integer mag = all_neg ? Integer(-c) : c;
        if (mag == 0) continue;
        const std::string one = (abs(mag) == 1 ? "" : Integer(abs(mag)).get_str() + "*") + rate_label(net, r);
        if (expr.empty()) expr = (mag < 0 ? "-" : "") + one;
        else expr += (mag < 0 ? " - " : " + ") + one;
      }
      if (expr.empty()) continue;
      if (t.rates.size() > 1) expr = "(" + expr + ")";
      append_term(rhs, all_neg, expr, format_monomial(net, t.exponents));
    }
    out += "d" + net.species().name(static_cast<int>(k)) + "/dt = " + (rhs.empty() ? "0" : rhs) + "\n";
  }
  return out;
}

std::string format_field(const ReactionNetwork& net, const PolynomialVectorField& field)
{
  std::string out;
  for (int k = 0; k < field.num_species(); ++k) {
    std::string rhs;
    for (const auto& t : field.rows[k]) {
      const Rational mag = abs(t.coefficient);
      append_term(rhs, t.coefficient < 0, to_string(mag), format_monomial(net, t.exponents));
    }
    out += "d" + net.species().name(k) + "/dt = " + (rhs.empty() ? "0" : rhs) + "\n";
  }
  return out;
}

Rational ExactSampler::positive()
{
  std::uniform_int_distribution<long> d(1, bound_);
  const long p = d(rng_);
  Rational out(p, d(rng_));
  out.canonicalize();
  return out;
}

Rational ExactSampler::nonnegative()
{
  std::uniform_int_distribution<long> num(0, bound_);
  std::uniform_int_distribution<long> den(1, bound_);
  const long p = num(rng_);
  Rational out(p, den(rng_));
  out.canonicalize();
  return out;
}

RationalVector ExactSampler::positive_vector(int n)
{
  RationalVector v;
  for (int i = 0; i < n; ++i) v.push_back(positive());
  return v;
}

std::uint64_t trial_seed(std::uint64_t master, int trial)
{
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32), static_cast<std::uint32_t>(trial)};
  std::uint64_t out = 0;
  std::vector<std::uint32_t> words(2);
  seq.generate(words.begin(), words.end());
  out = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out;
}

std::optional<FaceCounterexample> structural_face_check(const ReactionNetwork& net, const SpeciesSet& z)
{
  const auto field = symbolic_rhs(net);
  for (int k : z) {
    for (const auto& t : field[k]) {
      const bool touches = std::any_of(z.begin(), z.end(), [&](int i) { return t.exponents[i] > 0; });
      if (touches) continue;
      for (const auto& [r, c] : t.rates) {
        if (c > 0) {
          FaceCounterexample cx;
          cx.species = k;
          cx.message = "d" + net.species().name(k) + "/dt has the positive term " + rate_label(net, r) + "*" +
                       format_monomial(net, t.exponents) + " avoiding the set";
          return cx;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

/// Runs `trials` sampled checks concurrently; returns the counterexample of
/// the lowest failing trial so the outcome does not depend on scheduling.
template <class Check>
std::optional<FaceCounterexample> sampled(const ReactionNetwork& net, const SpeciesSet& z, int trials, std::uint64_t seed,
                                          Check check)
{
  std::vector<std::optional<FaceCounterexample>> results(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    ExactSampler rng(trial_seed(seed, t));
    const MassActionSystem sys(net, rng.positive_vector(net.num_reactions()));
    RationalVector x(static_cast<std::size_t>(net.num_species()));
    for (int i = 0; i < net.num_species(); ++i) {
      if (!std::binary_search(z.begin(), z.end(), i)) x[i] = rng.nonnegative();
    }
    const auto rhs = eval_rhs(build_rhs(sys), x);
    if (auto bad = check(rhs)) {
      results[t] = FaceCounterexample{sys.kappa, x, *bad, rhs[*bad],
                                      "d" + net.species().name(*bad) + "/dt = " + to_string(rhs[*bad]) + " on the face"};
    }
  }
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FaceCounterexample> check_face_invariance(const ReactionNetwork& net, const SpeciesSet& z, int trials,
                                                        std::uint64_t seed)
{
  require_siphon(net, z);
  auto cx = sampled(net, z, trials, seed, [&](const RationalVector& rhs) -> std::optional<int> {
    for (int i : z) {
      if (rhs[i] != 0) return i;
    }
    return std::nullopt;
  });
  if (cx) return cx;
  return structural_face_check(net, z);
}

std::optional<FaceCounterexample> check_steady_face(const ReactionNetwork& net, const SpeciesSet& z, int trials,
                                                    std::uint64_t seed)
{
  if (!connectivity(net).is_strongly_connected) {
    throw std::invalid_argument("steady-face check requires a strongly connected reaction graph");
  }
  require_siphon(net, z);
  return sampled(net, z, trials, seed, [](const RationalVector& rhs) -> std::optional<int> {
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (rhs[i] != 0) return static_cast<int>(i);
    }
    return std::nullopt;
  });
}

}  // namespace crn
