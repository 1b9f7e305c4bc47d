#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qls/linalg.hpp"

namespace qls {

// Global phase angle restricted to [0, pi); two phased Fourier matrices
// with distinct angles in this half-open interval have no common column.
struct PhaseAngle {
  double theta = 0.0;
};

// block_diag(I_{v-s}, F_s^theta). The padded block never has size 1:
// a single-column phased block would contribute exactly one fresh
// column, which the cardinality bound C != 1 forbids.
struct PaddedPhasedFourier {
  std::size_t dim = 0;
  std::size_t block_size = 0;
  PhaseAngle theta;
  Mat matrix;
};

// Cardinality C of U with V: the number of columns of U that match no
// column of V up to global phase. witness[j] holds the matched column
// of V, or nullopt when column j of U is distinct.
struct UnitaryCardinality {
  std::size_t count = 0;
  std::vector<std::optional<std::size_t>> witness;
};

UnitaryCardinality unitary_cardinality(const Mat& U, const Mat& V,
                                       const Tolerance& tol = default_tolerance());

PaddedPhasedFourier padded_phased_fourier(std::size_t v, std::size_t s,
                                          PhaseAngle theta);

// K equally spaced angles a*pi/(K+1), a = 1..K. Audited: for every
// pair of angles and every block size d <= v_max, the largest overlap
// a legitimate "distinct" column pair can attain, |(e^{i delta}+d-1)/d|,
// must stay at least a factor of 10 below the ambiguity band.
std::vector<PhaseAngle> phase_family(std::size_t K, std::size_t v_max,
                                     const Tolerance& tol = default_tolerance());

}  // namespace qls
