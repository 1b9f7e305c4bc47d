#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qls/latin.hpp"
#include "qls/linalg.hpp"

namespace qls {

// v x v grid of unit vectors in C^v whose every row and column is an
// orthonormal basis. A "block" reuses the same grid type with vectors
// living in a larger ambient dimension.
using Grid = std::vector<std::vector<Vec>>;

struct QLS {
  std::size_t order = 0;
  Grid grid;

  const Vec& at(std::size_t i, std::size_t j) const { return grid[i][j]; }
};

struct VerificationReport {
  bool pass = false;
  double worst_row_deviation = 0.0;
  double worst_col_deviation = 0.0;
  double worst_norm_deviation = 0.0;

  struct Failure {
    std::string kind;  // "row-orthogonality", "column-orthogonality", "norm"
    std::size_t i = 0, j = 0, k = 0;
  };
  std::optional<Failure> first_failure;

  double worst_deviation() const {
    return std::max({worst_row_deviation, worst_col_deviation,
                     worst_norm_deviation});
  }
};

struct CardinalityReport {
  std::size_t c = 0;
  // class_of[i*v+j] = phase-equivalence class index of cell (i, j)
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups;
  // Closest observed overlaps on each side of the decision boundary:
  // the largest cross-class overlap and the smallest intra-class one.
  double max_cross_overlap = 0.0;
  double min_intra_overlap = 1.0;
};

QLS classical_qls(const LatinSquare& L);

// block[i][j] = basis[L[i][j]]; the basis may live in a larger ambient
// dimension than L.order.
Grid basis_qls(const LatinSquare& L, const std::vector<Vec>& basis,
               const Tolerance& tol = default_tolerance());

VerificationReport verify_qls(const QLS& phi,
                              const Tolerance& tol = default_tolerance());

// Rotates u by a unit scalar so its first component of magnitude above
// the pivot threshold becomes real and positive. Idempotent.
Vec canonical_phase(const Vec& u, const Tolerance& tol = default_tolerance());

CardinalityReport qls_cardinality(const QLS& phi,
                                  const Tolerance& tol = default_tolerance());

}  // namespace qls
