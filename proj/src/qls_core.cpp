#include "qls/qls_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qls/errors.hpp"

namespace qls {

namespace {

std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void uf_union(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

QLS classical_qls(const LatinSquare& L) {
  ValidationResult r = validate_ls(L);
  if (!r.pass) throw InvalidParameters("classical_qls: " + r.first_violation);
  QLS out;
  out.order = L.order;
  out.grid.assign(L.order, std::vector<Vec>(L.order));
  for (std::size_t i = 0; i < L.order; ++i)
    for (std::size_t j = 0; j < L.order; ++j)
      out.grid[i][j] =
          Vec::basis(L.order, static_cast<std::size_t>(L.cells[i][j]));
  return out;
}

Grid basis_qls(const LatinSquare& L, const std::vector<Vec>& basis,
               const Tolerance& tol) {
  if (basis.size() != L.order)
    throw DimensionMismatch("basis_qls: basis size must equal the square's order");
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].dim() < L.order)
      throw DimensionMismatch("basis_qls: ambient dimension below the order");
    if (std::abs(basis[a].norm() - 1.0) > tol.eps_unit)
      throw NonOrthonormalBasis("basis_qls: basis vector " + std::to_string(a) +
                                " is not a unit vector");
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (std::abs(inner(basis[a], basis[b])) > tol.eps_unit)
        throw NonOrthonormalBasis("basis_qls: basis vectors " +
                                  std::to_string(a) + " and " +
                                  std::to_string(b) + " are not orthogonal");
  }
  Grid block(L.order, std::vector<Vec>(L.order));
  for (std::size_t i = 0; i < L.order; ++i)
    for (std::size_t j = 0; j < L.order; ++j)
      block[i][j] = basis[static_cast<std::size_t>(L.cells[i][j])];
  return block;
}

VerificationReport verify_qls(const QLS& phi, const Tolerance& tol) {
  const std::size_t v = phi.order;
  if (phi.grid.size() != v)
    throw ShapeError("verify_qls: grid has wrong number of rows");
  for (std::size_t i = 0; i < v; ++i) {
    if (phi.grid[i].size() != v)
      throw ShapeError("verify_qls: row " + std::to_string(i) +
                       " has wrong length");
    for (std::size_t j = 0; j < v; ++j)
      if (phi.grid[i][j].dim() != v)
        throw ShapeError("verify_qls: cell (" + std::to_string(i) + "," +
                         std::to_string(j) + ") has wrong dimension");
  }

  VerificationReport rep;
  auto note = [&](double dev, double& worst, const char* kind, std::size_t i,
                  std::size_t j, std::size_t k) {
    worst = std::max(worst, dev);
    if (dev > tol.eps_unit && !rep.first_failure)
      rep.first_failure = VerificationReport::Failure{kind, i, j, k};
  };

  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      note(std::abs(phi.grid[i][j].norm() - 1.0), rep.worst_norm_deviation,
           "norm", i, j, j);

  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      for (std::size_t k = j + 1; k < v; ++k)
        note(std::abs(inner(phi.grid[i][j], phi.grid[i][k])),
             rep.worst_row_deviation, "row-orthogonality", i, j, k);

  for (std::size_t j = 0; j < v; ++j)
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t k = i + 1; k < v; ++k)
        note(std::abs(inner(phi.grid[i][j], phi.grid[k][j])),
             rep.worst_col_deviation, "column-orthogonality", i, k, j);

  rep.pass = rep.worst_deviation() <= tol.eps_unit;
  return rep;
}

Vec canonical_phase(const Vec& u, const Tolerance& tol) {
  (void)tol;
  constexpr double pivot_threshold = 1e-6;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const double mag = std::abs(u[k]);
    if (mag > pivot_threshold) {
      const cplx rot = std::conj(u[k]) / mag;
      Vec out(u.dim());
      for (std::size_t l = 0; l < u.dim(); ++l) out[l] = rot * u[l];
      // The pivot is exactly real-positive by construction.
      out[k] = cplx{mag, 0.0};
      return out;
    }
  }
  throw ZeroVector("canonical_phase: no component above the pivot threshold");
}

CardinalityReport qls_cardinality(const QLS& phi, const Tolerance& tol) {
  VerificationReport ver = verify_qls(phi, tol);
  if (!ver.pass)
    throw InvalidQLS("qls_cardinality: grid fails verification (worst deviation " +
                     std::to_string(ver.worst_deviation()) + ")");

  const std::size_t v = phi.order;
  const std::size_t n = v * v;
  auto cell = [&](std::size_t idx) -> const Vec& {
    return phi.grid[idx / v][idx % v];
  };

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const double ov = std::abs(inner(cell(a), cell(b)));
      if (ov >= tol.tau_same) {
        uf_union(parent, a, b);
      } else if (ov > 1.0 - tol.band_low) {
        throw AmbiguousPhase(
            "qls_cardinality: overlap " + std::to_string(ov) +
            " between cells " + std::to_string(a) + " and " +
            std::to_string(b) + " lies in the ambiguity band");
      }
    }

  CardinalityReport rep;
  rep.class_of.assign(n, 0);
  std::vector<long long> label(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t root = uf_find(parent, a);
    if (label[root] < 0) {
      label[root] = static_cast<long long>(rep.groups.size());
      rep.groups.emplace_back();
    }
    rep.class_of[a] = static_cast<std::size_t>(label[root]);
    rep.groups[rep.class_of[a]].emplace_back(a / v, a % v);
  }
  rep.c = rep.groups.size();

  // Full pairwise audit: grouping by union-find must be consistent as
  // an equivalence relation, and every cross-class pair must be
  // cleanly distinct.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const double ov = std::abs(inner(cell(a), cell(b)));
      if (rep.class_of[a] == rep.class_of[b]) {
        if (ov < tol.tau_same)
          throw InconsistentGrouping(
              "qls_cardinality: transitivity audit failed at cells " +
              std::to_string(a) + "," + std::to_string(b) + " (overlap " +
              std::to_string(ov) + ")");
        rep.min_intra_overlap = std::min(rep.min_intra_overlap, ov);
      } else {
        if (ov > 1.0 - tol.band_low)
          throw InconsistentGrouping(
              "qls_cardinality: cross-class overlap " + std::to_string(ov) +
              " too close to the same-phase boundary");
        rep.max_cross_overlap = std::max(rep.max_cross_overlap, ov);
      }
    }

  if (rep.c < v || rep.c > n)
    throw InconsistentCardinality(
        "qls_cardinality: measured c = " + std::to_string(rep.c) +
        " violates the bound v <= c <= v^2");
  if (rep.c == v + 1)
    throw InconsistentCardinality(
        "qls_cardinality: measured c = v + 1 = " + std::to_string(rep.c) +
        ", which no quantum Latin square attains; numerical inconsistency");
  return rep;
}

}  // namespace qls
