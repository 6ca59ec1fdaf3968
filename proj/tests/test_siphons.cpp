#include "crn/siphons.hpp"
#include "crn/transversals.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crn;

namespace {

Hypergraph path(int s)
{
  Hypergraph h{s, {}};
  for (int i = 0; i + 1 < s; ++i) h.edges.push_back({i, i + 1});
  return h;
}

}  // namespace

TEST_SUITE("siphon_enumeration")
{
  TEST_CASE("is_siphon on the four-complex example")
  {
    const auto net = test::load("ex1_1.crn");
    CHECK(is_siphon(net, test::set_of(net, "A B E")));
    const auto v = siphon_violation(net, test::set_of(net, "E"));
    REQUIRE(v);
    CHECK(format_reaction(net, v->reaction).rfind("A + D -> E", 0) == 0);
    CHECK(is_siphon(net, test::set_of(net, "A B C D E")));
    CHECK_FALSE(is_siphon(net, {}));
    CHECK_THROWS_AS(require_siphon(net, test::set_of(net, "E")), NotASiphonError);
  }

  TEST_CASE("minimal siphons of the three small examples")
  {
    const auto a = test::load("ex1_1.crn");
    CHECK(minimal_siphons(a).siphons == test::sets_of(a, {"A B E", "A C E", "C D E"}));
    const auto b = test::load("ex1_2.crn");
    CHECK(minimal_siphons(b).siphons == test::sets_of(b, {"E Q R", "I R", "P Q R S"}));
    const auto c = test::load("ex1_3.crn");
    CHECK(minimal_siphons(c).siphons == test::sets_of(c, {"E X", "F Y", "P S_0 X Y"}));
    for (const auto* net : {&a, &b, &c}) CHECK(brute_force_minimal_siphons(*net) == minimal_siphons(*net).siphons);
  }

  TEST_CASE("tiny networks")
  {
    const auto xy = test::load("x_to_y.crn");
    CHECK(brute_force_minimal_siphons(xy) == std::vector<SpeciesSet>{{0}});
    CHECK(minimal_siphons(xy).siphons == std::vector<SpeciesSet>{{0}});
    const auto dimer = parse_network("2A -> A\n");
    CHECK(minimal_siphons(dimer).siphons == std::vector<SpeciesSet>{{0}});
    const auto inflow = parse_network("0 -> A\nA -> B\n");
    CHECK(minimal_siphons(inflow).siphons.empty());
  }

  TEST_CASE("fast path on strongly connected networks")
  {
    const auto net = test::load("ex1_1.crn");
    const auto fast = minimal_siphons_fast(net);
    CHECK(fast.route == EnumerationRoute::Transversals);
    CHECK(fast.siphons == test::sets_of(net, {"A B E", "A C E", "C D E"}));
    CHECK(complex_support_hypergraph(net).edges.size() == 4);
    CHECK_THROWS_AS(minimal_siphons_fast(test::load("ex1_2.crn")), std::invalid_argument);
    const auto xy = test::load("x_y_reversible.crn");
    CHECK(minimal_siphons_fast(xy).siphons == std::vector<SpeciesSet>{{0, 1}});
  }

  TEST_CASE("transversals of short paths")
  {
    CHECK(minimal_transversals(path(2)).sets == std::vector<SpeciesSet>{{0}, {1}});
    auto expected = std::vector<SpeciesSet>{{1, 3}, {0, 2, 4}, {1, 2, 4}, {0, 2, 3}};
    canonical_sort(expected);
    CHECK(minimal_transversals(path(5)).sets == expected);
    CHECK(serial::berge_transversals(path(5)) == expected);
    CHECK_THROWS_AS(minimal_transversals(Hypergraph{2, {{}}}), std::invalid_argument);
  }

  TEST_CASE("path covers match the dynamic-programming oracle")
  {
    for (int s = 2; s <= 24; ++s) {
      const auto c = count_minimal_transversals(path(s));
      CHECK(c.by_size == test::path_cover_histogram(s));
      CHECK(c.total == test::total(c.by_size));
    }
  }

  TEST_CASE("the dynamic-programming oracle agrees with brute force")
  {
    for (int s = 2; s <= 14; ++s) {
      std::map<int, std::uint64_t> by_size;
      for (std::uint32_t m = 1; m < (1U << s); ++m) {
        bool ok = true;
        for (int i = 0; i + 1 < s && ok; ++i) ok = (m >> i & 1U) || (m >> (i + 1) & 1U);
        for (int i = 0; i < s && ok; ++i) {
          if (!(m >> i & 1U)) continue;
          const bool left = i > 0 && !(m >> (i - 1) & 1U);
          const bool right = i + 1 < s && !(m >> (i + 1) & 1U);
          ok = left || right;
        }
        if (ok) ++by_size[std::popcount(m)];
      }
      CHECK(by_size == test::path_cover_histogram(s));
    }
  }

  TEST_CASE("chain recursion")
  {
    std::vector<std::uint64_t> n(51);
    for (int s = 2; s <= 50; ++s) n[s] = test::total(test::path_cover_histogram(s));
    CHECK(n[2] == 2);
    CHECK(n[3] == 2);
    CHECK(n[4] == 3);
    for (int s = 5; s <= 50; ++s) CHECK(n[s] == n[s - 2] + n[s - 3]);
    CHECK(n[50] == 1221537);
  }

  TEST_CASE("the 50-species chain")
  {
    const auto net = test::load("chain50.crn");
    const auto c = count_minimal_siphons_fast(net);
    CHECK(c.total == 1221537);
    CHECK(c.by_size == test::path_cover_histogram(50));
    const std::map<int, std::uint64_t> expected{{25, 26}, {26, 2300}, {27, 42504}, {28, 245157}, {29, 497420},
                                                {30, 352716}, {31, 77520}, {32, 3876}, {33, 18}};
    CHECK(c.by_size == expected);
  }

  TEST_CASE("adjacent minors have 28 minimal siphons")
  {
    const auto net = test::load("adjacent_minors_5x5.crn");
    const auto e = minimal_siphons(net);
    CHECK(e.exhaustive);
    CHECK(e.siphons.size() == 28);
    for (const auto& z : e.siphons) CHECK(is_siphon(net, z));
  }

  TEST_CASE("budgets stop the search and say so")
  {
    const auto net = test::load("chain50.crn");
    const auto c = count_minimal_siphons_fast(net, TransversalConfig{std::nullopt, std::chrono::milliseconds(1)});
    CHECK_FALSE(c.exhaustive);
    const auto capped = minimal_siphons(net, EnumerationConfig{10, std::nullopt, true});
    CHECK_FALSE(capped.exhaustive);
    CHECK(capped.siphons.size() <= 10);
  }

  TEST_CASE("relabeling species permutes the output")
  {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 40; ++k) {
      const auto net = test::random_network(rng, {.species = 7, .complexes = 6, .reactions = 8});
      std::vector<int> perm(7);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Complex> complexes;
      for (const auto& c : net.complexes()) {
        Complex d{std::vector<std::uint64_t>(7)};
        for (int i = 0; i < 7; ++i) d.exponents[perm[i]] = c.exponents[i];
        complexes.push_back(d);
      }
      std::vector<std::string> names(7);
      for (int i = 0; i < 7; ++i) names[perm[i]] = net.species().name(i);
      const ReactionNetwork relabeled(SpeciesTable(names), complexes, net.reactions());
      std::vector<SpeciesSet> mapped;
      for (const auto& z : minimal_siphons(net).siphons) {
        SpeciesSet m;
        for (int i : z) m.push_back(perm[i]);
        mapped.push_back(make_species_set(m));
      }
      canonical_sort(mapped);
      CHECK(minimal_siphons(relabeled).siphons == mapped);
    }
  }
}
