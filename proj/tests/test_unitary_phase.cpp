#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qls/errors.hpp"
#include "qls/linalg.hpp"
#include "qls/unitary_phase.hpp"

using namespace qls;

namespace {

Mat permutation(const std::vector<std::size_t>& perm) {
  Mat p(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    p.at(perm[j], j) = cplx{1.0, 0.0};
  return p;
}

// Random structured unitary: permutation * block-diagonal composition of
// identities and phased Fourier blocks * permutation.
Mat random_structured_unitary(std::mt19937& rng, std::size_t v) {
  std::uniform_real_distribution<double> angle(0.1, std::numbers::pi - 0.1);
  std::uniform_int_distribution<std::size_t> coin(0, 1);
  std::vector<Mat> blocks;
  std::size_t left = v;
  while (left > 0) {
    std::uniform_int_distribution<std::size_t> size(1, left);
    const std::size_t s = size(rng);
    if (s == 1 || coin(rng) == 0)
      blocks.push_back(Mat::identity(s));
    else
      blocks.push_back(phased_fourier(s, angle(rng)));
    left -= s;
  }
  std::vector<std::size_t> p1(v), p2(v);
  for (std::size_t i = 0; i < v; ++i) p1[i] = p2[i] = i;
  std::shuffle(p1.begin(), p1.end(), rng);
  std::shuffle(p2.begin(), p2.end(), rng);
  return permutation(p1).multiply(block_diag(blocks)).multiply(
      permutation(p2));
}

}  // namespace

TEST_CASE("cardinality of a unitary with itself and with permutations") {
  const Mat f = fourier_matrix(4);
  CHECK(unitary_cardinality(f, f).count == 0);
  const Mat p = permutation({2, 0, 3, 1});
  CHECK(unitary_cardinality(p, Mat::identity(4)).count == 0);
  CHECK_THROWS_AS(unitary_cardinality(Mat::identity(2), Mat::identity(3)),
                  DimensionMismatch);
}

TEST_CASE("Lemma 2.1 property: C is never 1 and never exceeds v") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  std::uniform_real_distribution<double> angle(0.1, std::numbers::pi - 0.1);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t v = dim(rng);
    const Mat V = random_structured_unitary(rng, v);
    Mat U;
    if (rep % 2 == 0) {
      // Share columns with V through a padded phased rotation.
      std::uniform_int_distribution<std::size_t> block(2, v);
      const std::size_t s = block(rng);
      U = V.multiply(padded_phased_fourier(v, s, {angle(rng)}).matrix);
    } else {
      U = random_structured_unitary(rng, v);
    }
    const UnitaryCardinality c = unitary_cardinality(U, V);
    CHECK(c.count <= v);
    CHECK(c.count != 1);  // also enforced inside the call
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("Lemma 2.2: distinct family phases give totally distinct columns") {
  for (std::size_t K = 2; K <= 8; ++K) {
    for (std::size_t v = 2; v <= 8; ++v) {
      const auto fam = phase_family(K, v);
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b) {
          const Mat fa = phased_fourier(v, fam[a].theta);
          const Mat fb = phased_fourier(v, fam[b].theta);
          CHECK(unitary_cardinality(fa, fb).count == v);
        }
    }
  }
  // The spec's spot value: C(F_4^0.3, F_4^1.1) = 4.
  CHECK(unitary_cardinality(phased_fourier(4, 0.3), phased_fourier(4, 1.1))
            .count == 4);
}

TEST_CASE("Lemma 2.3: padded block contributes exactly s fresh columns") {
  for (std::size_t v = 2; v <= 8; ++v) {
    const auto fam = phase_family(3, v);
    for (std::size_t s = 2; s <= v; ++s)
      for (const PhaseAngle& theta : fam) {
        const Mat m = padded_phased_fourier(v, s, theta).matrix;
        CHECK(unitary_cardinality(m, Mat::identity(v)).count == s);
      }
  }
  const Mat spot =
      block_diag({Mat::identity(2), phased_fourier(2, std::numbers::pi / 3)});
  CHECK(unitary_cardinality(spot, Mat::identity(4)).count == 2);
}

TEST_CASE("Lemma 2.4: two padded blocks with distinct phases") {
  for (std::size_t v = 2; v <= 8; ++v) {
    const auto fam = phase_family(2, v);
    for (std::size_t s = 2; s <= v; ++s)
      for (std::size_t t = s; t <= v; ++t) {
        const Mat U = padded_phased_fourier(v, s, fam[0]).matrix;
        const Mat V = padded_phased_fourier(v, t, fam[1]).matrix;
        CHECK(unitary_cardinality(V, U).count == t);
      }
  }
}

TEST_CASE("Corollary 2.5: one more family member stays distinct from all") {
  std::mt19937 rng(9001);
  for (std::size_t l = 1; l <= 4; ++l) {
    for (std::size_t v = 2; v <= 8; ++v) {
      const auto fam = phase_family(l + 1, v);
      std::uniform_int_distribution<std::size_t> block(2, v);
      std::vector<Mat> us;
      std::size_t smax = 2;
      for (std::size_t i = 0; i < l; ++i) {
        const std::size_t s = block(rng);
        smax = std::max(smax, s);
        us.push_back(padded_phased_fourier(v, s, fam[i]).matrix);
      }
      // The new block must be at least as large as every earlier one;
      // otherwise an earlier block's surplus basis columns also count.
      for (std::size_t t = smax; t <= v; ++t) {
        const Mat V = padded_phased_fourier(v, t, fam[l]).matrix;
        CHECK(unitary_cardinality(V, Mat::identity(v)).count == t);
        for (const Mat& U : us)
          CHECK(unitary_cardinality(V, U).count == t);
      }
    }
  }
}

TEST_CASE("padded phased Fourier shape and errors") {
  const PaddedPhasedFourier p = padded_phased_fourier(5, 2, {std::numbers::pi / 4});
  CHECK(p.dim == 5);
  CHECK(p.block_size == 2);
  CHECK(is_unitary(p.matrix));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(p.matrix.at(i, j) == (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));

  const Mat full = padded_phased_fourier(4, 4, {0.7}).matrix;
  const Mat direct = phased_fourier(4, 0.7);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(full.at(i, j) == direct.at(i, j));

  CHECK_THROWS_AS(padded_phased_fourier(3, 1, {0.5}), InvalidBlockSize);
  CHECK_THROWS_AS(padded_phased_fourier(3, 4, {0.5}), InvalidBlockSize);
}

TEST_CASE("phase families are equally spaced and audited") {
  const auto one = phase_family(1, 8);
  REQUIRE(one.size() == 1);
  CHECK(one[0].theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));

  const auto three = phase_family(3, 8);
  REQUIRE(three.size() == 3);
  CHECK(three[0].theta == doctest::Approx(std::numbers::pi / 4));
  CHECK(three[1].theta == doctest::Approx(std::numbers::pi / 2));
  CHECK(three[2].theta == doctest::Approx(3 * std::numbers::pi / 4));

  // Brute-force overlap audit at K=3, v_max=4: every cross-phase column
  // pair stays well outside the ambiguity band.
  double worst = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      const Mat fa = phased_fourier(4, three[a].theta);
      const Mat fb = phased_fourier(4, three[b].theta);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          worst = std::max(worst, std::abs(inner(fa.column(i), fb.column(j))));
    }
  CHECK(worst < 1.0 - 1e-4);

  CHECK_THROWS_AS(phase_family(5000, 64), InsufficientSeparation);
}
