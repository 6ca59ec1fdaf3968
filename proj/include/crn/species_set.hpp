#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace crn {

/// Sorted, duplicate-free list of species indices.
using SpeciesSet = std::vector<int>;

inline SpeciesSet make_species_set(std::vector<int> members)
{
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

inline bool is_subset(const SpeciesSet& sub, const SpeciesSet& super)
{
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline bool intersects(const SpeciesSet& a, const SpeciesSet& b)
{
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline SpeciesSet complement(const SpeciesSet& set, int universe)
{
  SpeciesSet out;
  out.reserve(static_cast<std::size_t>(universe) - set.size());
  auto it = set.begin();
  for (int i = 0; i < universe; ++i) {
    if (it != set.end() && *it == i) { ++it; continue; }
    out.push_back(i);
  }
  return out;
}

/// Canonical order used for every list of sets this library returns:
/// by cardinality, then lexicographically.
struct CanonicalLess {
  bool operator()(const SpeciesSet& a, const SpeciesSet& b) const
  {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline void canonical_sort(std::vector<SpeciesSet>& sets)
{
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

/// Keeps the inclusion-minimal members and returns them in canonical order.
inline std::vector<SpeciesSet> inclusion_minimal(std::vector<SpeciesSet> sets)
{
  canonical_sort(sets);
  std::vector<SpeciesSet> out;
  for (auto& candidate : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(),
        [&](const SpeciesSet& kept) { return is_subset(kept, candidate); });
    if (!dominated) out.push_back(std::move(candidate));
  }
  return out;
}

/// Fixed-universe bitset used inside the enumeration kernels.
class IndexBitset {
public:
  using Word = std::uint64_t;

  IndexBitset() = default;
  explicit IndexBitset(int universe) : words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}
  IndexBitset(int universe, const SpeciesSet& members) : IndexBitset(universe)
  {
    for (int m : members) set(m);
  }

  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= Word{1} << (i & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(Word{1} << (i & 63)); }
  bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

  bool any() const
  {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  int count() const
  {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool intersects(const IndexBitset& other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }
  int intersection_count(const IndexBitset& other) const
  {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
    return c;
  }
  bool is_subset_of(const IndexBitset& other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }
  IndexBitset& operator|=(const IndexBitset& other)
  {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  IndexBitset& operator&=(const IndexBitset& other)
  {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  IndexBitset& subtract(const IndexBitset& other)
  {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64) + bit);
        w &= w - 1;
      }
    }
  }

  SpeciesSet members() const
  {
    SpeciesSet out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const IndexBitset&) const = default;

private:
  std::vector<Word> words_;
};

}  // namespace crn
