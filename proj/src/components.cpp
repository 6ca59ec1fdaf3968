#include "crn/components.hpp"

#include "crn/linalg.hpp"
#include "crn/lp.hpp"

#include <stdexcept>

namespace crn {

namespace {

using Row = std::vector<long long>;

/// Rank by fraction-free elimination in 128-bit integers; falls back to
/// exact rationals if an intermediate would leave 64 bits.
int integer_rank(std::vector<Row> a)
{
  const int R = static_cast<int>(a.size());
  if (R == 0) return 0;
  const int C = static_cast<int>(a[0].size());
  long long prev = 1;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) {
        const __int128 v = (static_cast<__int128>(a[r][c]) * a[i][j] - static_cast<__int128>(a[i][c]) * a[r][j]) / prev;
        if (v > INT64_MAX || v < INT64_MIN) {
          RationalMatrix m(0, C);
          for (const auto& row : a) {
            RationalVector q;
            for (long long x : row) q.emplace_back(static_cast<long>(x));
            m.append_row(q);
          }
          return rank(m);
        }
        a[i][j] = static_cast<long long>(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

struct Candidate {
  IndexBitset zero;
  std::vector<Row> lattice;  // generators of the reactions avoiding Z
  int rank = 0;
};

class ComponentSearch {
public:
  explicit ComponentSearch(const ReactionNetwork& net) : s_(net.num_species())
  {
    for (const auto& g : stoichiometric_generators(net)) {
      Row row;
      for (const auto& x : g) row.push_back(x.get_si());
      gens_.push_back(std::move(row));
    }
    for (const auto& rx : net.reactions()) {
      IndexBitset touched(s_);
      for (int i : net.complex(rx.source).support()) touched.set(i);
      for (int i : net.complex(rx.target).support()) touched.set(i);
      touched_.push_back(std::move(touched));
    }
  }

  Candidate make(const SpeciesSet& z) const
  {
    Candidate c{IndexBitset(s_, z), {}, 0};
    for (std::size_t r = 0; r < gens_.size(); ++r) {
      if (!touched_[r].intersects(c.zero)) c.lattice.push_back(gens_[r]);
    }
    c.rank = integer_rank(c.lattice);
    return c;
  }

  /// True when the component with zero set `big` lies in the closure of the
  /// component with zero set `small` (small strictly inside big).
  bool in_closure(const Candidate& small, const Candidate& big) const
  {
    IndexBitset w_bits = big.zero;
    w_bits.subtract(small.zero);
    const auto w = w_bits.members();

    std::vector<Row> restricted;
    for (const auto& g : small.lattice) {
      Row row;
      for (int i : w) row.push_back(g[i]);
      restricted.push_back(std::move(row));
    }
    // The closure stratum where exactly W vanishes carries the toric
    // equations of small's lattice restricted to vectors vanishing on W; it
    // matches big's component iff the dimensions agree.
    if (small.rank - integer_rank(restricted) != big.rank) return false;

    // That stratum is non-empty iff some strictly positive vector on W is
    // orthogonal to the restricted lattice.
    const bool ones_work = std::all_of(restricted.begin(), restricted.end(), [](const Row& row) {
      long long sum = 0;
      for (long long x : row) sum += x;
      return sum == 0;
    });
    if (ones_work) return true;
    const int k = static_cast<int>(w.size());
    LinearSystem sys(k);  // v = 1 + t, t >= 0
    for (const auto& row : restricted) {
      RationalVector coeffs;
      Rational rhs = 0;
      for (long long x : row) {
        coeffs.emplace_back(static_cast<long>(x));
        rhs -= static_cast<long>(x);
      }
      sys.add_equation(coeffs, rhs);
    }
    return feasible(sys).feasible();
  }

private:
  int s_;
  std::vector<Row> gens_;
  std::vector<IndexBitset> touched_;
};

void require_weakly_reversible(const ReactionNetwork& net)
{
  if (!connectivity(net).components_strongly_connected) {
    throw std::invalid_argument("boundary components require every linkage class to be strongly connected");
  }
}

}  // namespace

std::vector<SpeciesSet> all_siphons_weakly_reversible(const ReactionNetwork& net)
{
  require_weakly_reversible(net);
  const int s = net.num_species();
  const auto info = connectivity(net);
  std::vector<int> class_of(static_cast<std::size_t>(net.num_complexes()));
  for (std::size_t c = 0; c < info.linkage_classes.size(); ++c) {
    for (int k : info.linkage_classes[c]) class_of[k] = static_cast<int>(c);
  }
  const int num_classes = static_cast<int>(info.linkage_classes.size());

  // 1 = in, 0 = out, -1 = undecided.
  std::vector<int> state(static_cast<std::size_t>(s), -1);
  auto consistent = [&] {
    std::vector<char> hit(num_classes, 0), dead(num_classes, 0);
    for (int k = 0; k < net.num_complexes(); ++k) {
      bool any_in = false, all_out = true;
      for (int i : net.complex(k).support()) {
        if (state[i] == 1) any_in = true;
        if (state[i] != 0) all_out = false;
      }
      if (any_in) hit[class_of[k]] = 1;
      if (all_out) dead[class_of[k]] = 1;
    }
    for (int c = 0; c < num_classes; ++c) {
      if (hit[c] && dead[c]) return false;
    }
    return true;
  };

  std::vector<SpeciesSet> out;
  SpeciesSet current;
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == s) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    for (int choice : {1, 0}) {
      state[i] = choice;
      if (choice) current.push_back(i);
      if (consistent()) self(self, i + 1);
      if (choice) current.pop_back();
    }
    state[i] = -1;
  };
  dfs(dfs, 0);
  canonical_sort(out);
  return out;
}

ComponentEnumeration boundary_components(const ReactionNetwork& net, const ComponentConfig& config)
{
  using Clock = std::chrono::steady_clock;
  const auto deadline = config.time_budget ? std::optional(Clock::now() + *config.time_budget) : std::nullopt;

  const auto siphons = all_siphons_weakly_reversible(net);
  const ComponentSearch search(net);
  std::vector<Candidate> found;
  ComponentEnumeration out;
  out.candidates = siphons.size();

  // Candidates arrive by increasing size, so every possible smaller zero set
  // has already been classified; by transitivity it suffices to compare
  // against components found so far. Larger ones are tried first since they
  // usually settle the question sooner.
  for (const auto& z : siphons) {
    if (deadline && Clock::now() > *deadline) {
      out.exhaustive = false;
      break;
    }
    Candidate cand = search.make(z);
    bool dominated = false;
    for (auto it = found.rbegin(); it != found.rend() && !dominated; ++it) {
      if (it->zero == cand.zero || !it->zero.is_subset_of(cand.zero)) continue;
      dominated = search.in_closure(*it, cand);
    }
    if (dominated) continue;
    out.components.push_back({z, net.num_species() - static_cast<int>(z.size()) - cand.rank});
    found.push_back(std::move(cand));
  }
  return out;
}

}  // namespace crn
