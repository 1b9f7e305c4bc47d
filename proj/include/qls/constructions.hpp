#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qls/qls_core.hpp"
#include "qls/unitary_phase.hpp"

namespace qls {

// Per-slot block sizes for the three parameterized constructions. Every
// slot value is either 0 (identity block) or lies in [2, cap]; a value
// of 1 is never legal because a single fresh column cannot occur.

struct WilsonBlocks {
  // d[a-1][i] for a in 1..t-1, i in 0..t-1; cap m.
  std::vector<std::vector<std::size_t>> d;
  // Corner block size for V_s'; cap s.
  std::size_t corner = 0;
};

struct Wilson1Blocks {
  // d[a-1][i] for a in 1..t-1, i in 0..t-2; cap m.
  std::vector<std::vector<std::size_t>> d;
  // diag[a-1] for a in 1..t-2: block size of V_m^a; cap m. Row t-1 has
  // no such slot: its diagonal cell is served by the final block, so a
  // rotation there would never appear in the grid.
  std::vector<std::size_t> diag;
  // Block size of V_{m+1}^t; cap m+1.
  std::size_t final_slot = 0;
};

struct DirectProductBlocks {
  // d[i-1][j] for i in 1..t-1, j in 0..t-1; cap m.
  std::vector<std::vector<std::size_t>> d;
};

struct CardinalityAccounting {
  std::size_t base = 0;                     // mt+s, mt+1, or mt
  std::vector<std::size_t> contributions;   // per-slot counts, fixed order
  std::size_t predicted_c = 0;              // base + sum of contributions
};

enum class Method { classical, maximal, wilson, wilson1, direct_product, catalog };

std::string method_name(Method m);

struct ConstructionPlan {
  Method method = Method::classical;
  std::size_t v = 0;
  std::size_t c = 0;
  std::size_t m = 0, t = 0, s = 0;  // as applicable
  WilsonBlocks wilson;
  Wilson1Blocks wilson1;
  DirectProductBlocks direct_product;
  CardinalityAccounting accounting;
};

// grid[i][j] = column j of diag(omega^{sigma(0) i}, ..., omega^{sigma(v-1) i}) F_v,
// sigma swapping indices 1 and 2; cardinality v^2.
QLS maximal_qls(std::size_t v);

// Order mt+s, 2 <= s < t, from an orthogonal pair of order t.
QLS wilson_qls(std::size_t m, std::size_t t, std::size_t s,
               const WilsonBlocks& blocks);

// Order mt+1 from an idempotent square of order t >= 3.
QLS wilson1_qls(std::size_t m, std::size_t t, const Wilson1Blocks& blocks);

// Order mt via tensor-product cells rotated by per-row-block unitaries.
QLS direct_product_qls(std::size_t m, std::size_t t,
                       const DirectProductBlocks& blocks);

// Writes target as a sum of terms, term i in {0} union [2, caps[i]].
// Returns true and fills out on success; exactly reports infeasibility.
bool solve_slot_composition(const std::vector<std::size_t>& caps,
                            std::size_t target, std::vector<std::size_t>& out);

ConstructionPlan plan_cardinality(std::size_t v, std::size_t c);

// Executes any non-catalog plan (catalog realization lives with the
// catalog itself).
QLS execute_plan(const ConstructionPlan& plan);

enum class Achievability { achievable, excluded, unknown };

struct AchievabilityEntry {
  std::size_t c = 0;
  Achievability status = Achievability::excluded;
  std::string provenance;
};

std::vector<AchievabilityEntry> achievable_set(std::size_t v);

}  // namespace qls
