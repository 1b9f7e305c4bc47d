#include "qls/unitary_phase.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qls/errors.hpp"

namespace qls {

UnitaryCardinality unitary_cardinality(const Mat& U, const Mat& V,
                                       const Tolerance& tol) {
  if (U.dim() != V.dim())
    throw DimensionMismatch("unitary_cardinality: dimension mismatch");
  if (!is_unitary(U, tol) || !is_unitary(V, tol))
    throw NonOrthonormalBasis("unitary_cardinality: input is not unitary");
  const std::size_t v = U.dim();
  UnitaryCardinality out;
  out.witness.assign(v, std::nullopt);
  for (std::size_t j = 0; j < v; ++j) {
    const Vec u = U.column(j);
    for (std::size_t k = 0; k < v; ++k) {
      const double overlap = std::abs(inner(u, V.column(k)));
      if (overlap >= tol.tau_same) {
        if (!out.witness[j]) out.witness[j] = k;
      } else if (overlap > 1.0 - tol.band_low) {
        throw AmbiguousPhase(
            "unitary_cardinality: overlap " + std::to_string(overlap) +
            " between U column " + std::to_string(j) + " and V column " +
            std::to_string(k) + " lies in the ambiguity band");
      }
    }
    if (!out.witness[j]) ++out.count;
  }
  if (out.count == 1)
    throw InconsistentCardinality(
        "unitary_cardinality: measured C == 1, which is structurally "
        "impossible; tolerance settings are unsound for this input");
  return out;
}

PaddedPhasedFourier padded_phased_fourier(std::size_t v, std::size_t s,
                                          PhaseAngle theta) {
  if (s < 2 || s > v)
    throw InvalidBlockSize("padded_phased_fourier requires 2 <= s <= v");
  PaddedPhasedFourier out;
  out.dim = v;
  out.block_size = s;
  out.theta = theta;
  if (s == v) {
    out.matrix = phased_fourier(v, theta.theta);
  } else {
    out.matrix = block_diag({Mat::identity(v - s), phased_fourier(s, theta.theta)});
  }
  return out;
}

std::vector<PhaseAngle> phase_family(std::size_t K, std::size_t v_max,
                                     const Tolerance& tol) {
  if (K < 1) throw InvalidParameters("phase_family requires K >= 1");
  if (v_max < 2) v_max = 2;
  // Adjacent angles differ by delta = pi/(K+1); for block size d the
  // largest overlap between "distinct" columns of two phased Fourier
  // blocks is |(e^{i delta} + d - 1)| / d. Demand a 10x margin below
  // the ambiguity band so legitimate overlaps can never be mistaken
  // for same-phase matches.
  const double delta = std::numbers::pi / static_cast<double>(K + 1);
  const double d = static_cast<double>(v_max);
  const double worst =
      std::abs(cplx{std::cos(delta) + d - 1.0, std::sin(delta)}) / d;
  if (worst > 1.0 - 10.0 * tol.band_low)
    throw InsufficientSeparation(
        "phase_family: K = " + std::to_string(K) + " angles at block sizes up to " +
        std::to_string(v_max) +
        " leave worst-case overlap " + std::to_string(worst) +
        " inside the safety margin; reduce K or widen the tolerance");
  std::vector<PhaseAngle> out;
  out.reserve(K);
  for (std::size_t a = 1; a <= K; ++a)
    out.push_back({static_cast<double>(a) * std::numbers::pi /
                   static_cast<double>(K + 1)});
  return out;
}

}  // namespace qls
