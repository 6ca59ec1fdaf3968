#include "crn/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crn;

namespace {

std::vector<SpeciesSet> complements(const ReactionNetwork& net, const ConeQ& q)
{
  std::vector<SpeciesSet> out;
  for (const auto& f : cone_facets(q)) out.push_back(f.complement(net.num_species()));
  canonical_sort(out);
  return out;
}

const RationalVector kOmega1{Rational(1, 10), Rational(1, 10), 1, Rational(1, 10), Rational(1, 10)};

}  // namespace

TEST_SUITE("polyhedral_geometry")
{
  TEST_CASE("facets of the four-complex example")
  {
    const auto net = test::load("ex1_1.crn");
    const auto q = build_cone(net);
    CHECK(q.pointed);
    CHECK(q.dim == 2);
    CHECK(complements(net, q) == test::sets_of(net, {"C D E", "A B D E"}));
    for (const auto& f : q.facets) CHECK(verify_facet(q, f));
  }

  TEST_CASE("triangle cones")
  {
    for (const char* name : {"ex1_2.crn", "ex1_3.crn"}) {
      const auto net = test::load(name);
      const auto q = build_cone(net);
      CHECK(q.dim == 3);
      CHECK(cone_facets(q).size() == 3);
    }
  }

  TEST_CASE("one-dimensional cone has the origin as its facet")
  {
    const auto net = test::load("x_y_reversible.crn");
    const auto q = build_cone(net);
    REQUIRE(q.facets.size() == 1);
    CHECK(q.facets[0].generators.empty());
    CHECK(q.facets[0].complement(2) == SpeciesSet{0, 1});
  }

  TEST_CASE("no conservation relations")
  {
    const auto net = parse_network("0 -> A\nA -> 0\n");
    const auto q = build_cone(net);
    CHECK(q.dim == 0);
    CHECK_FALSE(q.has_conservation_relations());
    CHECK(cone_facets(q).empty());
  }

  TEST_CASE("square cone")
  {
    SubspaceBasis b{RationalMatrix::identity(2), 2};
    const auto q = build_cone(b);
    CHECK(q.facets.size() == 2);
  }

  TEST_CASE("non-pointed cone refuses facets")
  {
    // x1 - x2 is conserved: the columns (1) and (-1) span a line.
    SubspaceBasis b{RationalMatrix::from_rows({{1, -1}}, 2), 2};
    const auto q = build_cone(b);
    CHECK_FALSE(q.pointed);
    CHECK_THROWS_AS(cone_facets(q), NotPointedError);
  }

  TEST_CASE("vertex supports in two chambers")
  {
    const auto net = test::load("ex1_1.crn");
    CHECK(vertex_supports(make_polytope(net, kOmega1)) == test::sets_of(net, {"C D", "C E", "A C", "B C"}));
    CHECK(vertex_supports(make_polytope(net, test::constant(5, 1))) == test::sets_of(net, {"A D", "B D", "E", "A C", "B C"}));
    const auto xy = test::load("x_y_reversible.crn");
    CHECK(vertex_supports(make_polytope(xy, RationalVector{1, 1})) == test::sets_of(xy, {"X", "Y"}));
  }

  TEST_CASE("make_polytope validates c0")
  {
    const auto net = test::load("ex1_1.crn");
    CHECK_THROWS_AS(make_polytope(net, RationalVector{1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_polytope(net, RationalVector{1, 0, 1, 1, 1}), std::invalid_argument);
  }

  TEST_CASE("face_nonempty")
  {
    const auto net = test::load("ex1_1.crn");
    const auto p = make_polytope(net, kOmega1);
    CHECK(face_nonempty(p, {}) == kOmega1);
    CHECK_FALSE(face_nonempty(p, test::set_of(net, "A C E")));
    const auto x = face_nonempty(p, test::set_of(net, "A B E"));
    REQUIRE(x);
    for (int i : test::set_of(net, "A B E")) CHECK((*x)[i] == 0);
  }

  TEST_CASE("Birkhoff face dimensions")
  {
    const auto net = test::load("adjacent_minors_5x5.crn");
    const auto p = make_polytope(net, test::constant(25, 1));
    CHECK(face_dimension(p, test::set_of(net, "c14 c21 c22 c23 c24 c32 c34 c42 c43 c44 c45 c52")) == 0);
    CHECK(face_dimension(p, test::set_of(net, "c14 c21 c22 c23 c24 c33 c34 c35 c41 c42 c43 c53")) == 1);
    CHECK(face_dimension(p, test::set_of(net, "c14 c24 c31 c32 c33 c34 c42 c43 c44 c45 c52")) == 1);
    CHECK(face_dimension(p, test::set_of(net, "c14 c24 c31 c32 c33 c34 c43 c44 c45 c53")) == 3);
    CHECK(face_dimension(p, {}) == 16);
    // Lowered centre: values frozen from an independent floating-point LP
    // oracle (per-cell maximization plus rank of the surviving columns).
    for (const Rational eps : {Rational(1, 2), Rational(1, 4)}) {
      const auto d = make_polytope(net, test::grid_with_centre(1 - eps));
      CHECK(face_dimension(d, test::set_of(net, "c14 c21 c22 c23 c24 c32 c34 c42 c43 c44 c45 c52")) == 0);
      CHECK(face_dimension(d, test::set_of(net, "c14 c21 c22 c23 c24 c33 c34 c35 c41 c42 c43 c53")) == 2);
      CHECK(face_dimension(d, test::set_of(net, "c14 c24 c31 c32 c33 c34 c42 c43 c44 c45 c52")) == 2);
      CHECK(face_dimension(d, test::set_of(net, "c14 c24 c31 c32 c33 c34 c43 c44 c45 c53")) == 4);
    }
  }

  TEST_CASE("chamber signatures")
  {
    const auto net = test::load("ex1_1.crn");
    const RationalVector other{Rational(1, 5), Rational(1, 10), 2, Rational(1, 10), Rational(1, 10)};
    CHECK(chamber_signature(net, kOmega1) == chamber_signature(net, other));
    CHECK(chamber_signature(net, test::constant(5, 1)) != chamber_signature(net, RationalVector{1, 1, 2, 1, 1}));
    RationalVector mid(5);
    for (int i = 0; i < 5; ++i) mid[i] = (kOmega1[i] + other[i]) / 2;
    CHECK(chamber_signature(net, mid) == chamber_signature(net, kOmega1));
    const auto xy = test::load("x_y_reversible.crn");
    CHECK(chamber_signature(xy, RationalVector{1, 1}) == chamber_signature(xy, RationalVector{3, Rational(1, 7)}));
  }

  TEST_CASE("vertex supports and faces are dual")
  {
    const auto net = test::load("ex1_1.crn");
    for (const auto& c0 : {kOmega1, test::constant(5, 1), RationalVector{2, 1, 1, 1, 1}}) {
      const auto p = make_polytope(net, c0);
      const auto supports = vertex_supports(p);
      for (const auto& v : supports) CHECK(face_dimension(p, complement(v, 5)) == 0);
      for (int mask = 0; mask < 32; ++mask) {
        SpeciesSet z;
        for (int i = 0; i < 5; ++i) {
          if (mask >> i & 1) z.push_back(i);
        }
        const bool some_vertex = std::any_of(supports.begin(), supports.end(), [&](const SpeciesSet& v) { return !intersects(v, z); });
        CHECK(face_nonempty(p, z).has_value() == some_vertex);
      }
    }
  }

  TEST_CASE("serial and parallel kernels agree")
  {
    for (const char* name : {"ex1_1.crn", "ex1_2.crn", "ex1_3.crn"}) {
      const auto net = test::load(name);
      const auto q = build_cone(net);
      CHECK(serial::enumerate_facets(q) == parallel::enumerate_facets(q));
      const auto p = make_polytope(net, test::constant(net.num_species(), 1));
      CHECK(serial::enumerate_vertex_supports(p) == parallel::enumerate_vertex_supports(p));
    }
    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
      const auto net = test::random_network(rng, {.species = 6, .complexes = 5, .reactions = 5});
      const auto q = build_cone(net);
      if (!q.pointed) continue;
      CHECK(serial::enumerate_facets(q) == parallel::enumerate_facets(q));
      for (const auto& f : q.facets) CHECK(verify_facet(q, f));
      const auto p = make_polytope(net, test::constant(6, 1));
      CHECK(serial::enumerate_vertex_supports(p) == parallel::enumerate_vertex_supports(p));
    }
  }
}
