#include "crn/network.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crn;

TEST_SUITE("network_model")
{
  TEST_CASE("square with one reversible pair")
  {
    const auto net = parse_network("2A + C <-> A + D\nA + D -> E\nE -> B + C\nB + C -> 2A + C\n");
    CHECK(net.num_species() == 5);
    CHECK(net.num_complexes() == 4);
    CHECK(net.num_reactions() == 5);
    // species by first appearance: A, C, D, E, B
    CHECK(net.complex(0).exponents == std::vector<std::uint64_t>{2, 1, 0, 0, 0});
  }

  TEST_CASE("reversible pair is strongly connected")
  {
    const auto net = parse_network("X -> Y\nY -> X\n");
    CHECK(net.num_species() == 2);
    CHECK(net.num_reactions() == 2);
    CHECK(connectivity(net).is_strongly_connected);
  }

  TEST_CASE("syntax errors carry a position")
  {
    CHECK_THROWS_AS(parse_network("A + -> B\n"), ParseError);
    try {
      parse_network("A -> B\nA + -> B\n");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }

  TEST_CASE("validation")
  {
    CHECK_THROWS(parse_network("A -> A\n"));
    CHECK_THROWS(parse_network("A -> B\nA -> B\n"));
    CHECK_THROWS(parse_network("# nothing\n"));
    CHECK_THROWS(parse_network("2.5A -> B\n"));
  }

  TEST_CASE("zero complex and labels")
  {
    const auto net = parse_network("0 -> A ; k=in\nA -> 0 ; k=out\n");
    CHECK(net.num_complexes() == 2);
    CHECK(net.complex(0).is_zero());
    CHECK(net.reaction(0).rate_label == "in");
  }

  TEST_CASE("reversible arrows get suffixed labels")
  {
    const auto net = parse_network("X <-> Y ; k=k1\n");
    REQUIRE(net.num_reactions() == 2);
    CHECK(net.reaction(0).rate_label == "k1_fwd");
    CHECK(net.reaction(1).rate_label == "k1_rev");
  }

  TEST_CASE("species declaration fixes the order")
  {
    const auto net = parse_network("species C, B, A\nA + B -> C\n");
    CHECK(net.species().names() == std::vector<std::string>{"C", "B", "A"});
    const auto implicit = parse_network("A + B -> C\n");
    CHECK(implicit.species().names() == std::vector<std::string>{"A", "B", "C"});
  }

  TEST_CASE("connectivity of the example networks")
  {
    CHECK(connectivity(test::load("ex1_1.crn")).is_strongly_connected);
    const auto info = connectivity(test::load("ex1_2.crn"));
    CHECK(info.strong_components.size() == 2);
    CHECK(info.components_strongly_connected);
    CHECK_FALSE(info.is_strongly_connected);
    const auto single = connectivity(parse_network("A -> B\n"));
    CHECK(single.strong_components.size() == 2);
    CHECK_FALSE(single.components_strongly_connected);
  }

  TEST_CASE("stoichiometric generators")
  {
    const auto net = test::load("ex1_1.crn");
    const auto gens = stoichiometric_generators(net);
    REQUIRE(gens.size() == 8);
    CHECK(gens[0] == std::vector<Integer>{-1, 0, -1, 1, 0});  // A^2C -> AD
    const auto xy = stoichiometric_generators(parse_network("X -> Y\nY -> X\n"));
    CHECK(xy == std::vector<std::vector<Integer>>{{-1, 1}, {1, -1}});
  }

  TEST_CASE("canonical text round trip")
  {
    for (const char* name : {"ex1_1.crn", "ex1_2.crn", "ex1_3.crn", "chain50.crn", "adjacent_minors_5x5.crn"}) {
      const auto net = test::load(name);
      CHECK(parse_network(to_text(net)) == net);
    }
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
      const auto net = test::random_network(rng);
      CHECK(parse_network(to_text(net)) == net);
    }
  }

  TEST_CASE("connectivity ignores reaction order")
  {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
      const auto net = test::random_network(rng);
      auto reactions = net.reactions();
      std::shuffle(reactions.begin(), reactions.end(), rng);
      const ReactionNetwork shuffled(net.species(), net.complexes(), reactions);
      const auto a = connectivity(net), b = connectivity(shuffled);
      CHECK(a.is_strongly_connected == b.is_strongly_connected);
      CHECK(a.components_strongly_connected == b.components_strongly_connected);
      CHECK(a.strong_components.size() == b.strong_components.size());
      CHECK(a.linkage_classes.size() == b.linkage_classes.size());
    }
  }
}
