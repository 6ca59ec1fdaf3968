#include "crn/siphons.hpp"

#include "budget.hpp"

#include <omp.h>

#include <climits>
#include <stdexcept>

namespace crn {

const char* to_string(EnumerationRoute route)
{
  switch (route) {
    case EnumerationRoute::Branching: return "branching";
    case EnumerationRoute::Transversals: return "transversals";
    case EnumerationRoute::BruteForce: return "brute_force";
  }
  return "?";
}

std::optional<SiphonViolation> siphon_violation(const ReactionNetwork& net, const SpeciesSet& z)
{
  if (z.empty()) return SiphonViolation{-1, -1, "empty set is not a siphon by definition"};
  for (int i : z) {
    if (i < 0 || i >= net.num_species()) throw std::invalid_argument("species index out of range");
  }
  for (int r = 0; r < net.num_reactions(); ++r) {
    const auto& rx = net.reaction(r);
    const auto& source = net.complex(rx.source);
    const auto& target = net.complex(rx.target);
    const bool source_meets = std::any_of(z.begin(), z.end(), [&](int i) { return source.contains(i); });
    if (source_meets) continue;
    for (int i : z) {
      if (!target.contains(i)) continue;
      return SiphonViolation{r, i,
                             "reaction " + format_reaction(net, r) + " produces " + net.species().name(i) +
                                 " but its reactant complex avoids the set"};
    }
  }
  return std::nullopt;
}

void require_siphon(const ReactionNetwork& net, const SpeciesSet& z)
{
  if (auto v = siphon_violation(net, z)) throw NotASiphonError("not a siphon: " + v->message);
}

SiphonConstraintTable constraint_table(const ReactionNetwork& net)
{
  SiphonConstraintTable t;
  t.clauses.resize(static_cast<std::size_t>(net.num_species()));
  for (const auto& rx : net.reactions()) {
    const auto& source = net.complex(rx.source);
    const auto& target = net.complex(rx.target);
    for (int z : target.support()) {
      if (!source.contains(z)) t.clauses[z].push_back(source.support());
    }
  }
  for (auto& c : t.clauses) c = inclusion_minimal(std::move(c));
  return t;
}

namespace {

struct BitClauses {
  int s = 0;
  std::vector<std::vector<IndexBitset>> by_species;

  explicit BitClauses(const ReactionNetwork& net) : s(net.num_species())
  {
    const auto table = constraint_table(net);
    by_species.resize(table.clauses.size());
    for (std::size_t z = 0; z < table.clauses.size(); ++z) {
      for (const auto& c : table.clauses[z]) by_species[z].emplace_back(s, c);
    }
  }

  /// Species that cannot lie in a siphon avoiding `blocked`: closes `blocked`
  /// under "some clause of z lies inside the blocked set".
  IndexBitset close(IndexBitset blocked) const
  {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int z = 0; z < s; ++z) {
        if (blocked.test(z)) continue;
        for (const auto& c : by_species[z]) {
          if (c.is_subset_of(blocked)) {
            blocked.set(z);
            changed = true;
            break;
          }
        }
      }
    }
    return blocked;
  }
};

/// Depth-first search for the minimal siphons whose smallest member is the
/// seed. Branches on the open clause with the fewest admissible species;
/// sibling branches forbid the species taken by earlier siblings, so the
/// subtrees are disjoint.
class Brancher {
public:
  Brancher(const BitClauses& clauses, Budget& budget) : c_(clauses), budget_(budget) {}

  void run_seed(int seed, std::vector<IndexBitset>& found)
  {
    IndexBitset blocked(c_.s);
    for (int i = 0; i < seed; ++i) blocked.set(i);
    blocked = c_.close(std::move(blocked));
    if (blocked.test(seed)) return;
    IndexBitset z(c_.s);
    z.set(seed);
    found_ = &found;
    search(z, blocked);
  }

private:
  void search(IndexBitset& z, IndexBitset& forbidden)
  {
    if (budget_.stop()) return;
    budget_.tick(++nodes_);
    for (const auto& f : *found_) {
      if (f.is_subset_of(z)) return;
    }

    const IndexBitset* best = nullptr;
    int best_count = INT_MAX;
    z.for_each([&](int member) {
      if (best_count == 0) return;
      for (const auto& clause : c_.by_species[member]) {
        if (clause.intersects(z)) continue;
        IndexBitset open = clause;
        open.subtract(forbidden);
        const int n = open.count();
        if (n < best_count) {
          best_count = n;
          best = &clause;
          if (n == 0) return;
        }
      }
    });

    if (!best) {
      if (budget_.admit()) found_->push_back(z);
      return;
    }
    if (best_count == 0) return;

    IndexBitset open = *best;
    open.subtract(forbidden);
    const auto options = open.members();
    for (std::size_t k = 0; k < options.size(); ++k) {
      z.set(options[k]);
      search(z, forbidden);
      z.reset(options[k]);
      forbidden.set(options[k]);
    }
    for (int v : options) forbidden.reset(v);
  }

  const BitClauses& c_;
  Budget& budget_;
  std::vector<IndexBitset>* found_ = nullptr;
  std::uint64_t nodes_ = 0;
};

SiphonEnumeration finish(const std::vector<std::vector<IndexBitset>>& per_seed, const Budget& budget)
{
  std::vector<SpeciesSet> all;
  for (const auto& part : per_seed) {
    for (const auto& f : part) all.push_back(f.members());
  }
  SiphonEnumeration out;
  out.siphons = inclusion_minimal(std::move(all));
  out.exhaustive = !budget.stop();
  out.route = EnumerationRoute::Branching;
  return out;
}

SpeciesSet unused_species(const ReactionNetwork& net)
{
  SpeciesSet out;
  for (int i = 0; i < net.num_species(); ++i) {
    const bool used = std::any_of(net.complexes().begin(), net.complexes().end(), [&](const Complex& c) { return c.contains(i); });
    if (!used) out.push_back(i);
  }
  return out;
}

bool has_zero_complex(const ReactionNetwork& net)
{
  return std::any_of(net.complexes().begin(), net.complexes().end(), [](const Complex& c) { return c.is_zero(); });
}

void require_strongly_connected(const ReactionNetwork& net)
{
  if (!connectivity(net).is_strongly_connected) {
    throw std::invalid_argument("transversal route requires a strongly connected reaction graph");
  }
}

}  // namespace

namespace serial {

SiphonEnumeration branch_minimal_siphons(const ReactionNetwork& net, const EnumerationConfig& config)
{
  const BitClauses clauses(net);
  Budget budget(config.time_budget, config.max_results);
  std::vector<std::vector<IndexBitset>> found(1);
  Brancher b(clauses, budget);
  for (int seed = 0; seed < clauses.s && !budget.stop(); ++seed) b.run_seed(seed, found[0]);
  return finish(found, budget);
}

}  // namespace serial

namespace parallel {

SiphonEnumeration branch_minimal_siphons(const ReactionNetwork& net, const EnumerationConfig& config)
{
  const BitClauses clauses(net);
  Budget budget(config.time_budget, config.max_results);
  // Siphons found under one seed never contain a smaller seed, so each seed
  // can prune against its own list only.
  std::vector<std::vector<IndexBitset>> found(static_cast<std::size_t>(clauses.s));
#pragma omp parallel for schedule(dynamic)
  for (int seed = 0; seed < clauses.s; ++seed) {
    Brancher b(clauses, budget);
    b.run_seed(seed, found[seed]);
  }
  return finish(found, budget);
}

}  // namespace parallel

SiphonEnumeration minimal_siphons_fast(const ReactionNetwork& net, const TransversalConfig& config)
{
  require_strongly_connected(net);
  SiphonEnumeration out;
  out.route = EnumerationRoute::Transversals;
  // In a strongly connected network a siphon meets every complex or none.
  if (!has_zero_complex(net)) {
    auto tr = minimal_transversals(complex_support_hypergraph(net), config);
    out.siphons = std::move(tr.sets);
    out.exhaustive = tr.exhaustive;
  }
  for (int i : unused_species(net)) out.siphons.push_back({i});
  canonical_sort(out.siphons);
  return out;
}

TransversalCount count_minimal_siphons_fast(const ReactionNetwork& net, const TransversalConfig& config)
{
  require_strongly_connected(net);
  TransversalCount out;
  if (!has_zero_complex(net)) out = count_minimal_transversals(complex_support_hypergraph(net), config);
  const auto unused = unused_species(net);
  if (!unused.empty()) {
    out.total += unused.size();
    out.by_size[1] += unused.size();
  }
  return out;
}

SiphonEnumeration minimal_siphons(const ReactionNetwork& net, const EnumerationConfig& config)
{
  if (config.use_fast_path && connectivity(net).is_strongly_connected) {
    return minimal_siphons_fast(net, TransversalConfig{config.max_results, config.time_budget});
  }
  return parallel::branch_minimal_siphons(net, config);
}

std::vector<SpeciesSet> brute_force_minimal_siphons(const ReactionNetwork& net)
{
  const int s = net.num_species();
  if (s > kBruteForceLimit) {
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceLimit) + " species");
  }
  auto mask_of = [&](const Complex& c) {
    std::uint32_t m = 0;
    for (int i : c.support()) m |= 1U << i;
    return m;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (reactant mask, product mask)
  for (const auto& rx : net.reactions()) edges.emplace_back(mask_of(net.complex(rx.source)), mask_of(net.complex(rx.target)));

  // Every proper subset of a mask is numerically smaller, so a siphon that
  // contains no earlier minimal siphon is itself minimal.
  std::vector<std::uint32_t> minimal;
  const std::uint32_t end = s == 32 ? 0 : (1U << s);
  for (std::uint32_t z = 1; z < end; ++z) {
    const bool siphon = std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return !(e.second & z) || (e.first & z); });
    if (!siphon) continue;
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](std::uint32_t m) { return (m & ~z) == 0; });
    if (!dominated) minimal.push_back(z);
  }
  std::vector<SpeciesSet> out;
  for (auto m : minimal) {
    SpeciesSet set;
    for (int i = 0; i < s; ++i) {
      if (m >> i & 1U) set.push_back(i);
    }
    out.push_back(std::move(set));
  }
  canonical_sort(out);
  return out;
}

}  // namespace crn
