#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "mtutte/dm.hpp"
#include "mtutte/zonotope.hpp"

using namespace mtutte;
using namespace mtutte::testing;

TEST_CASE("series of the worked examples") {
  auto plane = lattice_list(2, {{2, 0}, {0, 2}, {1, 1}, {1, -1}});
  CHECK(dm_hilbert_series(plane).coefficients == std::vector<Int>{8, 4, 2});
  CHECK(dm_hilbert_series(plane).to_string() == "8 + 4*y + 2*y^2");

  auto skew = lattice_list(2, {{3, 3}, {1, -1}, {2, 0}});
  CHECK(dm_hilbert_series(skew).coefficients == std::vector<Int>{12, 2});

  auto basis = lattice_list(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(dm_hilbert_series(basis).coefficients == std::vector<Int>{1});
}

TEST_CASE("point decomposition of the worked examples") {
  auto plane = lattice_list(2, {{2, 0}, {0, 2}, {1, 1}, {1, -1}});
  auto dec = dm_decomposition_check(plane);
  REQUIRE(dec.summands.size() == 4);
  CHECK(dec.total.coefficients == std::vector<Int>{8, 4, 2});
  // the two identity-like points see all four characters, the others two
  std::multiset<std::string> series;
  for (const auto& s : dec.summands)
    series.insert(s.series.to_string("y", false));
  CHECK(series == std::multiset<std::string>{"1", "1", "3 + 2*y + y^2",
                                             "3 + 2*y + y^2"});

  auto triple = lattice_list(1, {{3}});
  auto dec3 = dm_decomposition_check(triple);
  CHECK(dec3.summands.size() == 3);
  CHECK(dec3.total.coefficients == std::vector<Int>{3});

  auto basis = lattice_list(2, {{1, 0}, {0, 1}});
  auto decb = dm_decomposition_check(basis);
  CHECK(decb.summands.size() == 1);
  CHECK(decb.total.coefficients == std::vector<Int>{1});
}

TEST_CASE("dimension equals the volume") {
  CHECK(dm_dimension(lattice_list(2, {{2, 0}, {0, 2}, {1, 1}, {1, -1}})) == 14);
  CHECK(dm_dimension(lattice_list(2, {{3, 3}, {1, -1}, {2, 0}})) == 14);
  CHECK(dm_dimension(lattice_list(2, {{1, 0}, {0, 1}})) == 1);

  auto gen = seeded(404);
  for (int trial = 0; trial < 20; ++trial) {
    CharacterList x = random_lattice_list(gen, 3, 5, 3, /*full_rank=*/true);
    auto dec = dm_decomposition_check(x);
    CHECK(dec.total.dimension() == volume(x));
    CHECK(dec.total.coefficients == dm_hilbert_series(x).coefficients);

    // degree bound with equality from the full sublist
    int degree = static_cast<int>(dec.total.coefficients.size()) - 1;
    CHECK(degree == static_cast<int>(x.size()) - x.group.free_rank);
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(dm_hilbert_series(lattice_list(2, {{1, 0}})),
                  precondition_error);
  FgGroup g{1, {2}};
  CHECK_THROWS_AS(dm_hilbert_series(CharacterList{g, {make_element(g, {1}, {0})}}),
                  precondition_error);
}
