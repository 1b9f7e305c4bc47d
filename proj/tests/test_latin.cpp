#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>

#include "qls/errors.hpp"
#include "qls/latin.hpp"

using namespace qls;

namespace {

// Independent orthogonality oracle: superimpose and count distinct
// ordered pairs.
bool pairs_cover(const OLSPair& p) {
  const std::size_t t = p.first.order;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      seen.insert({p.first.cells[i][j], p.second.cells[i][j]});
  return seen.size() == t * t;
}

}  // namespace

TEST_CASE("cyclic squares") {
  const LatinSquare l3 = cyclic_ls(3);
  CHECK(l3.cells == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0},
                                                  {2, 0, 1}});
  const LatinSquare l2 = cyclic_ls(2);
  CHECK(l2.cells == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(validate_ls(cyclic_ls(9)).pass);
  CHECK(validate_ls(cyclic_ls(5)).pass);
}

TEST_CASE("corner squares put the top symbol in the lower-right corner") {
  for (std::size_t v = 2; v <= 9; ++v) {
    const LatinSquare L = corner_ls(v);
    CHECK(validate_ls(L).pass);
    CHECK(L.cells[v - 1][v - 1] == static_cast<int>(v - 1));
  }
  CHECK(corner_ls(3).cells[2][2] == 2);
  CHECK(corner_ls(5).cells[4][4] == 4);
}

TEST_CASE("idempotent squares") {
  for (std::size_t v : {3, 5, 7, 9, 11, 13, 15, 4, 6, 8, 10, 12}) {
    const LatinSquare L = idempotent_ls(v);
    CHECK(validate_ls(L).pass);
    for (std::size_t i = 0; i < v; ++i)
      CHECK(L.cells[i][i] == static_cast<int>(i));
  }
  CHECK_THROWS_AS(idempotent_ls(14), UnsupportedOrder);
  CHECK_THROWS_AS(idempotent_ls(2), UnsupportedOrder);
}

TEST_CASE("orthogonal pairs for every supported order up to 16") {
  for (std::size_t t : {3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16}) {
    const OLSPair p = ols_pair(t);
    CHECK(validate_ls(p.first).pass);
    CHECK(validate_ls(p.second).pass);
    CHECK(validate_ols(p).pass);
    CHECK(pairs_cover(p));
  }
  CHECK_THROWS_AS(ols_pair(1), UnsupportedOrder);
  CHECK_THROWS_AS(ols_pair(2), UnsupportedOrder);
  CHECK_THROWS_AS(ols_pair(6), UnsupportedOrder);
  CHECK_THROWS_AS(ols_pair(10), UnsupportedOrder);
}

TEST_CASE("odd-order orthogonal pair uses the (i+j, i+2j) formula") {
  const OLSPair p = ols_pair(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(p.first.cells[i][j] == static_cast<int>((i + j) % 3));
      CHECK(p.second.cells[i][j] == static_cast<int>((i + 2 * j) % 3));
    }
  CHECK(pairs_cover(p));
}

TEST_CASE("product squares remain Latin") {
  const LatinSquare p = product_ls(cyclic_ls(3), cyclic_ls(4));
  CHECK(p.order == 12);
  CHECK(validate_ls(p).pass);
}

TEST_CASE("validators report exact violations") {
  LatinSquare bad;
  bad.order = 5;
  bad.cells = {{0, 0, 1, 2, 3},
               {1, 2, 3, 4, 0},
               {2, 3, 4, 0, 1},
               {3, 4, 0, 1, 2},
               {4, 0, 1, 2, 3}};
  const ValidationResult r = validate_ls(bad);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.first_violation.empty());

  OLSPair same{cyclic_ls(4), cyclic_ls(4)};
  CHECK_FALSE(validate_ols(same).pass);
}
