#include "crn/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crn;

namespace {

RationalMatrix rows(const std::vector<RationalVector>& r) { return RationalMatrix::from_rows(r, static_cast<int>(r[0].size())); }

}  // namespace

TEST_SUITE("exact_arith")
{
  TEST_CASE("row_reduce basics")
  {
    const auto id = row_reduce(RationalMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.rref == RationalMatrix::identity(3));
    CHECK(row_reduce(RationalMatrix(2, 4)).rank == 0);
  }

  TEST_CASE("row_reduce is idempotent")
  {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int k = 0; k < 30; ++k) {
      RationalMatrix m(4, 6);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 6; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + 4) % 3);
        for (int j = 0; j < 6; ++j) m(i, j).canonicalize();
      }
      const auto r = row_reduce(m);
      CHECK(row_reduce(r.rref).rref == r.rref);
      CHECK(r.rank == static_cast<int>(r.pivot_cols.size()));
    }
  }

  TEST_CASE("stoichiometric rank of the four-complex example")
  {
    const auto net = test::load("ex1_1.crn");
    CHECK(rank(stoichiometric_matrix(net)) == 3);
  }

  TEST_CASE("conservation basis of the four-complex example")
  {
    const auto net = test::load("ex1_1.crn");
    const auto basis = conservation_basis(net);
    CHECK(basis.dim() == 2);
    CHECK(same_row_space(basis.basis_rows, rows({{0, 0, 1, 1, 1}, {1, 2, 0, 1, 2}})));
    CHECK(in_row_space(basis, RationalVector{1, 2, 0, 1, 2}));
    CHECK_FALSE(in_row_space(basis, RationalVector{1, 0, 0, 0, 0}));
  }

  TEST_CASE("conservation basis of a reversible pair")
  {
    const auto basis = conservation_basis(parse_network("X -> Y\nY -> X\n"));
    REQUIRE(basis.dim() == 1);
    CHECK(RationalVector(basis.basis_rows.row(0).begin(), basis.basis_rows.row(0).end()) == RationalVector{1, 1});
    CHECK(in_row_space(basis, RationalVector{2, 2}));
    CHECK_FALSE(in_row_space(basis, RationalVector{1, 0}));
    CHECK_THROWS_AS(in_row_space(basis, RationalVector{1, 1, 1}), std::invalid_argument);
  }

  TEST_CASE("adjacent minors conserve row and column sums")
  {
    const auto net = test::load("adjacent_minors_5x5.crn");
    const auto basis = conservation_basis(net);
    CHECK(basis.dim() == 9);
    RationalMatrix sums(0, 25);
    for (int i = 0; i < 5; ++i) {
      RationalVector row(25), col(25);
      for (int j = 0; j < 5; ++j) {
        row[i * 5 + j] = 1;
        col[j * 5 + i] = 1;
      }
      sums.append_row(row);
      sums.append_row(col);
    }
    CHECK(same_row_space(basis.basis_rows, sums));
  }

  TEST_CASE("conservation is orthogonal to stoichiometry and dimensions add up")
  {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; ++k) {
      const auto net = test::random_network(rng, {.species = 5 + k % 4, .complexes = 6, .reactions = 7});
      const auto cons = conservation_basis(net);
      const auto stoi = stoichiometric_basis(net);
      CHECK(cons.dim() + stoi.dim() == net.num_species());
      const auto m = stoichiometric_matrix(net);
      for (int r = 0; r < cons.dim(); ++r) {
        for (int g = 0; g < m.rows(); ++g) CHECK(dot(cons.basis_rows.row(r), m.row(g)) == 0);
      }
    }
  }

  TEST_CASE("integer_normalize")
  {
    CHECK(integer_normalize(RationalVector{0, Rational(-1, 2), Rational(3, 2)}) == RationalVector{0, 1, -3});
  }

  TEST_CASE("solve_square")
  {
    const auto m = rows({{2, 1}, {1, 1}});
    const auto x = solve_square(m, RationalVector{3, 2});
    REQUIRE(x);
    CHECK(*x == RationalVector{1, 1});
    CHECK_FALSE(solve_square(rows({{1, 1}, {2, 2}}), RationalVector{1, 2}));
  }
}
