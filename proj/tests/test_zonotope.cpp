#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "mtutte/zonotope.hpp"

using namespace mtutte;
using namespace mtutte::testing;

namespace {

const CharacterList kSkewThree = lattice_list(2, {{3, 3}, {1, -1}, {2, 0}});
const CharacterList kPlaneFour = lattice_list(2, {{2, 0}, {0, 2}, {1, 1}, {1, -1}});

}  // namespace

TEST_CASE("volume on the worked examples") {
  CHECK(volume(kSkewThree) == 14);
  CHECK(volume(kPlaneFour) == 14);
  CHECK(volume(lattice_list(2, {{1, 0}, {0, 1}})) == 1);
  CHECK(volume(lattice_list(2, {{1, 0}})) == 0);
  FgGroup g{1, {2}};
  CHECK_THROWS_AS(volume(CharacterList{g, {}}), precondition_error);
}

TEST_CASE("facet systems") {
  auto fs = facet_system(lattice_list(2, {{1, 0}, {0, 1}}));
  REQUIRE(fs.entries.size() == 2);
  for (const auto& e : fs.entries) {
    CHECK(e.h_plus == 1);
    CHECK(e.h_minus == 0);
  }
  CHECK(facet_system(kSkewThree).entries.size() == 3);
  CHECK(facet_system(kPlaneFour).entries.size() == 4);
  CHECK(facet_system(CharacterList{FgGroup{0, {}}, {}}).entries.empty());
}

TEST_CASE("lattice point counts and the membership test") {
  CHECK(lattice_points(kSkewThree).count == 21);
  CHECK(lattice_points(kPlaneFour).count == 21);

  auto unit = lattice_list(2, {{1, 0}, {0, 1}});
  auto pts = lattice_points(unit, /*collect=*/true);
  CHECK(pts.count == 4);
  REQUIRE(pts.points.size() == 4);
  // lexicographic order
  CHECK(pts.points[0] == std::vector<Int>{0, 0});
  CHECK(pts.points[1] == std::vector<Int>{0, 1});
  CHECK(pts.points[2] == std::vector<Int>{1, 0});
  CHECK(pts.points[3] == std::vector<Int>{1, 1});

  auto fs = facet_system(unit);
  CHECK(fs.contains({Int(0), Int(1)}));
  CHECK_FALSE(fs.contains({Int(2), Int(0)}));
  CHECK_FALSE(fs.contains({Int(-1), Int(0)}));
}

TEST_CASE("stratification on the worked examples") {
  auto st = stratification(kSkewThree);
  CHECK(st.counts == std::vector<Int>{9, 4, 1});
  CHECK(st.total_in_z == 21);
  CHECK(st.volume == 14);

  auto stb = stratification(lattice_list(2, {{1, 0}, {0, 1}}));
  CHECK(stb.counts == std::vector<Int>{0, 0, 1});

  auto sts = stratification(lattice_list(1, {{2}}));
  CHECK(sts.counts == std::vector<Int>{1, 1});

  // the origin stratum is a single point even when it is interior
  auto stp = stratification(lattice_list(1, {{1}, {-1}}));
  CHECK(stp.counts == std::vector<Int>{1, 1});
}

TEST_CASE("strata counts match the y=1 slice of the polynomial") {
  auto gen = seeded(2024);
  for (int trial = 0; trial < 25; ++trial) {
    CharacterList x = random_lattice_list(gen, 3, 5, 3, /*full_rank=*/true);
    auto st = stratification(x);
    UniPoly slice = m_tutte_expansion(x).specialize_y(1);
    Int total = 0;
    for (std::size_t k = 0; k < st.counts.size(); ++k) {
      CHECK(st.counts[k] == slice.coeff(static_cast<int>(k)));
      total += st.counts[k];
    }
    CHECK(total == st.volume);
  }
}

TEST_CASE("strata counts do not depend on the shift order") {
  auto gen = seeded(2025);
  for (int trial = 0; trial < 10; ++trial) {
    CharacterList x = random_lattice_list(gen, 2, 5, 3, true);
    auto reference = stratification(x);
    for (int p = 0; p < 3; ++p) {
      auto order = random_permutation(gen, static_cast<int>(x.size()));
      CHECK(stratification_with_order(x, order).counts == reference.counts);
    }
  }
}

TEST_CASE("interior face counts of parallelepipeds") {
  auto basis = lattice_list(2, {{1, 0}, {0, 1}});
  auto h = h_interior_counts(basis);
  for (const auto& [subset, value] : h)
    CHECK(value == (subset.empty() ? 1 : 0));

  auto seg = lattice_list(1, {{2}});
  auto h2 = h_interior_counts(seg);
  CHECK(h2[{}] == 1);
  CHECK(h2[{0}] == 1);

  auto sq = lattice_list(2, {{2, 0}, {0, 2}});
  auto h3 = h_interior_counts(sq);
  CHECK(h3[{}] == 1);
  CHECK(h3[{0}] == 1);
  CHECK(h3[{1}] == 1);
  CHECK(h3[std::vector<int>{0, 1}] == 1);

  CHECK_THROWS_AS(h_interior_counts(kSkewThree), precondition_error);
}

TEST_CASE("interior counts aggregate to the polynomial slice") {
  auto gen = seeded(2026);
  for (int trial = 0; trial < 20; ++trial) {
    // random independent list
    CharacterList x = random_lattice_list(gen, 3, 3, 4, false);
    if (list_rank(x) != x.size()) continue;
    auto h = h_interior_counts(x);

    Int total = 0;
    for (const auto& [subset, value] : h) {
      CHECK(value >= 0);
      total += value;
    }
    CHECK(total == multiplicity(x.group, x.elems));

    const int n = static_cast<int>(x.size());
    UniPoly slice = m_tutte_expansion(x).specialize_y(1);
    for (int k = 0; k <= n; ++k) {
      Int sum = 0;
      for (const auto& [subset, value] : h)
        if (static_cast<int>(subset.size()) == n - k) sum += value;
      CHECK(sum == slice.coeff(k));
    }
  }
}

TEST_CASE("volume and strata are basis independent") {
  auto gen = seeded(2027);
  for (int trial = 0; trial < 10; ++trial) {
    CharacterList x = random_lattice_list(gen, 3, 5, 3, true);
    IntMatrix u = random_unimodular(gen, x.group.free_rank);
    CharacterList moved = change_basis(x, u);
    CHECK(volume(moved) == volume(x));
    CHECK(stratification(moved).counts == stratification(x).counts);
  }
}
