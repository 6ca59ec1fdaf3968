#include "crn/transversals.hpp"

#include "budget.hpp"

#include <omp.h>

#include <climits>
#include <set>
#include <stdexcept>

namespace crn {

Hypergraph complex_support_hypergraph(const ReactionNetwork& net)
{
  Hypergraph h;
  h.num_vertices = net.num_species();
  std::set<SpeciesSet> seen;
  for (const auto& c : net.complexes()) {
    if (c.is_zero()) continue;
    auto supp = c.support();
    if (seen.insert(supp).second) h.edges.push_back(std::move(supp));
  }
  return h;
}

namespace {

void check_edges(const Hypergraph& h)
{
  for (const auto& e : h.edges) {
    if (e.empty()) throw std::invalid_argument("hypergraph has an empty edge");
    for (int v : e) {
      if (v < 0 || v >= h.num_vertices) throw std::invalid_argument("hypergraph edge vertex out of range");
    }
  }
}

/// Sink for transversals: either collects them or only counts by size.
struct Sink {
  bool collect = true;
  std::vector<SpeciesSet> sets;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_size;

  void emit(const std::vector<int>& s)
  {
    ++total;
    ++by_size[static_cast<int>(s.size())];
    if (collect) sets.push_back(make_species_set(s));
  }

  void absorb(Sink&& other)
  {
    total += other.total;
    for (const auto& [k, v] : other.by_size) by_size[k] += v;
    sets.insert(sets.end(), std::make_move_iterator(other.sets.begin()), std::make_move_iterator(other.sets.end()));
  }
};

struct Task {
  std::vector<int> chosen;
  IndexBitset cand;
  bool complete = false;  // chosen is already a minimal transversal
};

/// Incremental MMCS state: hit counts per edge, the sum of chosen vertices in
/// each edge (which names the owner while the count is one) and the number
/// of critical edges per chosen vertex.
class Mmcs {
public:
  Mmcs(const Hypergraph& h, Budget& budget) : h_(h), budget_(budget), cand_(h.num_vertices)
  {
    const auto m = h.edges.size();
    edge_bits_.reserve(m);
    incident_.resize(static_cast<std::size_t>(h.num_vertices));
    for (std::size_t e = 0; e < m; ++e) {
      edge_bits_.emplace_back(h.num_vertices, h.edges[e]);
      for (int v : h.edges[e]) incident_[v].push_back(static_cast<int>(e));
    }
    hit_.assign(m, 0);
    owner_sum_.assign(m, 0);
    crit_.assign(static_cast<std::size_t>(h.num_vertices), 0);
    uncovered_ = static_cast<int>(m);
    for (int v = 0; v < h.num_vertices; ++v) {
      if (!incident_[v].empty()) cand_.set(v);
    }
  }

  /// Replays a task prefix; the prefix was minimal when it was recorded.
  void load(const Task& t)
  {
    for (int v : t.chosen) add(v);
    cand_ = t.cand;
  }

  void run(Sink& sink) { search(sink, nullptr, -1); }

  /// Records the search tree nodes at `depth` instead of descending.
  void expand(int depth, std::vector<Task>& frontier) { Sink unused; search(unused, &frontier, depth); }

private:
  bool add(int v)
  {
    for (int e : incident_[v]) {
      if (hit_[e] == 0) {
        --uncovered_;
        ++crit_[v];
      } else if (hit_[e] == 1) {
        --crit_[owner_sum_[e]];
      }
      ++hit_[e];
      owner_sum_[e] += v;
    }
    chosen_.push_back(v);
    for (int u : chosen_) {
      if (crit_[u] == 0) return false;
    }
    return true;
  }

  void remove(int v)
  {
    chosen_.pop_back();
    for (int e : incident_[v]) {
      --hit_[e];
      owner_sum_[e] -= v;
      if (hit_[e] == 0) {
        ++uncovered_;
        --crit_[v];
      } else if (hit_[e] == 1) {
        ++crit_[owner_sum_[e]];
      }
    }
  }

  void search(Sink& sink, std::vector<Task>* frontier, int depth)
  {
    if (budget_.stop()) return;
    budget_.tick(++nodes_);
    if (uncovered_ == 0) {
      if (frontier) {
        frontier->push_back({chosen_, cand_, true});
      } else if (budget_.admit()) {
        sink.emit(chosen_);
      }
      return;
    }
    if (frontier && static_cast<int>(chosen_.size()) == depth) {
      frontier->push_back({chosen_, cand_, false});
      return;
    }

    int best = -1;
    int best_count = INT_MAX;
    for (std::size_t e = 0; e < edge_bits_.size(); ++e) {
      if (hit_[e] != 0) continue;
      const int c = edge_bits_[e].intersection_count(cand_);
      if (c < best_count) {
        best_count = c;
        best = static_cast<int>(e);
        if (c == 0) return;
      }
    }

    std::vector<int> branch;
    for (int v : h_.edges[best]) {
      if (cand_.test(v)) branch.push_back(v);
    }
    for (int v : branch) cand_.reset(v);
    for (int v : branch) {
      if (add(v)) search(sink, frontier, depth);
      remove(v);
      cand_.set(v);
      if (budget_.stop()) {
        for (int w : branch) cand_.set(w);
        return;
      }
    }
  }

  const Hypergraph& h_;
  Budget& budget_;
  std::vector<IndexBitset> edge_bits_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> hit_;
  std::vector<int> owner_sum_;
  std::vector<int> crit_;
  int uncovered_ = 0;
  std::vector<int> chosen_;
  IndexBitset cand_;
  std::uint64_t nodes_ = 0;
};

Sink run_serial(const Hypergraph& h, const TransversalConfig& cfg, bool collect, bool& exhaustive)
{
  check_edges(h);
  Budget budget(cfg.time_budget, cfg.max_results);
  Sink sink;
  sink.collect = collect;
  Mmcs(h, budget).run(sink);
  exhaustive = !budget.stop();
  return sink;
}

Sink run_parallel(const Hypergraph& h, const TransversalConfig& cfg, bool collect, bool& exhaustive)
{
  check_edges(h);
  Budget budget(cfg.time_budget, cfg.max_results);

  // Deepen the split until there is enough independent work per thread.
  const std::size_t wanted = 64 * static_cast<std::size_t>(omp_get_max_threads());
  std::vector<Task> frontier;
  for (int depth = 1; depth <= 16; ++depth) {
    frontier.clear();
    Mmcs(h, budget).expand(depth, frontier);
    if (frontier.size() >= wanted) break;
    if (std::all_of(frontier.begin(), frontier.end(), [](const Task& t) { return t.complete; })) break;
  }

  const int n = static_cast<int>(frontier.size());
  std::vector<Sink> parts(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    parts[i].collect = collect;
    const Task& t = frontier[i];
    if (t.complete) {
      if (budget.admit()) parts[i].emit(t.chosen);
      continue;
    }
    Mmcs worker(h, budget);
    worker.load(t);
    worker.run(parts[i]);
  }

  Sink sink;
  sink.collect = collect;
  for (auto& p : parts) sink.absorb(std::move(p));
  exhaustive = !budget.stop();
  return sink;
}

TransversalResult to_result(Sink&& sink, bool exhaustive)
{
  TransversalResult r;
  r.sets = std::move(sink.sets);
  canonical_sort(r.sets);
  r.exhaustive = exhaustive;
  return r;
}

TransversalCount to_count(const Sink& sink, bool exhaustive) { return {sink.total, sink.by_size, exhaustive}; }

}  // namespace

namespace serial {

TransversalResult minimal_transversals(const Hypergraph& h, const TransversalConfig& config)
{
  bool exhaustive = true;
  auto sink = run_serial(h, config, true, exhaustive);
  return to_result(std::move(sink), exhaustive);
}

TransversalCount count_minimal_transversals(const Hypergraph& h, const TransversalConfig& config)
{
  bool exhaustive = true;
  const auto sink = run_serial(h, config, false, exhaustive);
  return to_count(sink, exhaustive);
}

std::vector<SpeciesSet> berge_transversals(const Hypergraph& h)
{
  check_edges(h);
  std::vector<SpeciesSet> current{SpeciesSet{}};
  for (const auto& edge : h.edges) {
    std::vector<SpeciesSet> next;
    for (const auto& t : current) {
      if (intersects(t, edge)) {
        next.push_back(t);
        continue;
      }
      for (int v : edge) {
        auto grown = t;
        grown.push_back(v);
        next.push_back(make_species_set(std::move(grown)));
      }
    }
    current = inclusion_minimal(std::move(next));
  }
  return current;
}

}  // namespace serial

namespace parallel {

TransversalResult minimal_transversals(const Hypergraph& h, const TransversalConfig& config)
{
  bool exhaustive = true;
  auto sink = run_parallel(h, config, true, exhaustive);
  return to_result(std::move(sink), exhaustive);
}

TransversalCount count_minimal_transversals(const Hypergraph& h, const TransversalConfig& config)
{
  bool exhaustive = true;
  const auto sink = run_parallel(h, config, false, exhaustive);
  return to_count(sink, exhaustive);
}

}  // namespace parallel

TransversalResult minimal_transversals(const Hypergraph& h, const TransversalConfig& config)
{
  return parallel::minimal_transversals(h, config);
}

TransversalCount count_minimal_transversals(const Hypergraph& h, const TransversalConfig& config)
{
  return parallel::count_minimal_transversals(h, config);
}

}  // namespace crn
