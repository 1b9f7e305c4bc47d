#include "qls/constructions.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "qls/errors.hpp"
#include "qls/latin.hpp"

namespace qls {

namespace {

// I_{dim-d} padded with F_d^theta, or plain identity for d == 0.
Mat slot_matrix(std::size_t dim, std::size_t d, double theta) {
  if (d == 0) return Mat::identity(dim);
  return padded_phased_fourier(dim, d, PhaseAngle{theta}).matrix;
}

void check_slot(std::size_t d, std::size_t cap, const char* what) {
  if (d == 1 || d > cap)
    throw InvalidParameters(std::string(what) +
                            ": slot value must be 0 or in [2, cap]");
}

std::vector<Vec> columns_of(const Mat& U, std::size_t first, std::size_t count) {
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(U.column(first + k));
  return out;
}

// Places block[i][j] = basis[L(i,j)] at (rows[i], cols[j]), optionally
// skipping the lower-right corner cell.
void place_block(QLS& phi, const LatinSquare& L, const std::vector<Vec>& basis,
                 const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, bool skip_corner) {
  for (std::size_t i = 0; i < L.order; ++i)
    for (std::size_t j = 0; j < L.order; ++j) {
      if (skip_corner && i + 1 == L.order && j + 1 == L.order) continue;
      phi.grid[rows[i]][cols[j]] =
          basis[static_cast<std::size_t>(L.cells[i][j])];
    }
}

std::vector<std::size_t> range_indices(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = first + k;
  return out;
}

bool ols_available(std::size_t t) {
  try {
    ols_pair(t);
    return true;
  } catch (const UnsupportedOrder&) {
    return false;
  }
}

bool idempotent_available(std::size_t t) {
  try {
    idempotent_ls(t);
    return true;
  } catch (const UnsupportedOrder&) {
    return false;
  }
}

const std::vector<std::size_t>& catalog8_explicit() {
  static const std::vector<std::size_t> cs = {
      17, 19, 21, 23, 25, 27, 29, 31, 33, 34, 35, 36, 37, 38, 39,
      40, 41, 42, 43, 44, 46, 47, 48, 50, 51, 52, 54, 56, 60};
  return cs;
}

const std::vector<std::size_t>& catalog8_open() {
  static const std::vector<std::size_t> cs = {45, 49, 53, 55, 57, 58,
                                              59, 61, 62, 63};
  return cs;
}

CardinalityAccounting make_accounting(std::size_t base,
                                      const std::vector<std::size_t>& contrib) {
  CardinalityAccounting acc;
  acc.base = base;
  acc.contributions = contrib;
  acc.predicted_c = base;
  for (std::size_t x : contrib) acc.predicted_c += x;
  return acc;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::classical: return "classical";
    case Method::maximal: return "maximal";
    case Method::wilson: return "wilson";
    case Method::wilson1: return "wilson1";
    case Method::direct_product: return "direct_product";
    case Method::catalog: return "catalog";
  }
  return "?";
}

QLS maximal_qls(std::size_t v) {
  if (v < 4)
    throw OrderTooSmall(
        "maximal_qls requires v >= 4; non-classical squares of order 2 or 3 "
        "do not exist");
  // sigma swaps the basis indices 1 and 2; row i of the grid holds the
  // columns of diag(omega^{sigma(k) i})_k times F_v.
  auto sigma = [](std::size_t k) { return k == 1 ? 2 : (k == 2 ? 1 : k); };
  const double scale = 1.0 / std::sqrt(static_cast<double>(v));
  QLS out;
  out.order = v;
  out.grid.assign(v, std::vector<Vec>(v));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      Vec cell(v);
      for (std::size_t k = 0; k < v; ++k)
        cell[k] = scale * root_of_unity(
                              v, static_cast<long long>(sigma(k) * i + k * j));
      out.grid[i][j] = cell;
    }
  return out;
}

QLS wilson_qls(std::size_t m, std::size_t t, std::size_t s,
               const WilsonBlocks& blocks) {
  if (m < 2 || t < 3 || s < 2 || s >= t)
    throw InvalidParameters("wilson_qls requires m >= 2 and 2 <= s < t");
  if (blocks.d.size() != t - 1)
    throw InvalidParameters("wilson_qls: block table needs t-1 rows");
  for (const auto& row : blocks.d) {
    if (row.size() != t)
      throw InvalidParameters("wilson_qls: block table needs t slots per row");
    for (std::size_t d : row) check_slot(d, m, "wilson_qls");
  }
  check_slot(blocks.corner, s, "wilson_qls corner");

  const std::size_t v = m * t + s;
  const OLSPair ols = ols_pair(t);
  const std::vector<PhaseAngle> fam =
      phase_family(t, std::max({m, s, std::size_t{2}}));

  // U_0 = I; U_a = blockdiag(U_a^0,...,U_a^{t-1}, I_s) for 1 <= a <= t-1;
  // U_t = blockdiag(I_m,...,I_m, V_s').
  std::vector<Mat> U(t + 1);
  U[0] = Mat::identity(v);
  for (std::size_t a = 1; a < t; ++a) {
    std::vector<Mat> parts;
    for (std::size_t i = 0; i < t; ++i)
      parts.push_back(slot_matrix(m, blocks.d[a - 1][i], fam[a - 1].theta));
    parts.push_back(Mat::identity(s));
    U[a] = block_diag(parts);
  }
  {
    std::vector<Mat> parts(t, Mat::identity(m));
    parts.push_back(slot_matrix(s, blocks.corner, fam[t - 1].theta));
    U[t] = block_diag(parts);
  }

  QLS out;
  out.order = v;
  out.grid.assign(v, std::vector<Vec>(v));
  const LatinSquare ls_m = cyclic_ls(m);
  const LatinSquare ls_corner = corner_ls(m + 1);

  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b) {
      const std::size_t lab = static_cast<std::size_t>(ols.first.cells[a][b]);
      const std::size_t lpab = static_cast<std::size_t>(ols.second.cells[a][b]);
      std::vector<Vec> basis = columns_of(U[a], m * lab, m);
      if (lpab >= s) {
        place_block(out, ls_m, basis, range_indices(m * a, m),
                    range_indices(m * b, m), false);
      } else {
        basis.push_back(Vec::basis(v, m * t + lpab));
        std::vector<std::size_t> rows = range_indices(m * a, m);
        std::vector<std::size_t> cols = range_indices(m * b, m);
        rows.push_back(m * t + lpab);
        cols.push_back(m * t + lpab);
        place_block(out, ls_corner, basis, rows, cols, true);
      }
    }
  place_block(out, cyclic_ls(s), columns_of(U[t], m * t, s),
              range_indices(m * t, s), range_indices(m * t, s), false);
  return out;
}

QLS wilson1_qls(std::size_t m, std::size_t t, const Wilson1Blocks& blocks) {
  if (m < 2 || t < 3)
    throw InvalidParameters("wilson1_qls requires m >= 2 and t >= 3");
  if (blocks.d.size() != t - 1)
    throw InvalidParameters("wilson1_qls: block table needs t-1 rows");
  if (blocks.diag.size() != t - 2)
    throw InvalidParameters("wilson1_qls: diagonal table needs t-2 slots");
  for (const auto& row : blocks.d) {
    if (row.size() != t - 1)
      throw InvalidParameters("wilson1_qls: block table needs t-1 slots per row");
    for (std::size_t d : row) check_slot(d, m, "wilson1_qls");
  }
  for (std::size_t d : blocks.diag) check_slot(d, m, "wilson1_qls diag");
  check_slot(blocks.final_slot, m + 1, "wilson1_qls final");

  const std::size_t v = m * t + 1;
  const LatinSquare L = idempotent_ls(t);
  const std::vector<PhaseAngle> fam = phase_family(2 * t - 2, m + 1);

  // U_a = blockdiag(U_a^0,...,U_a^{t-2}, diag(V_m^a, 1)); U_0 = I;
  // U_t = blockdiag(I_m,...,I_m, V_{m+1}^t). Row t-1 carries no V_m
  // rotation: the label t-1 occurs in row t-1 only at the diagonal cell,
  // which the final block serves, so a rotation there would be dead.
  std::vector<Mat> U(t + 1);
  U[0] = Mat::identity(v);
  for (std::size_t a = 1; a < t; ++a) {
    std::vector<Mat> parts;
    for (std::size_t i = 0; i + 1 < t; ++i)
      parts.push_back(slot_matrix(m, blocks.d[a - 1][i], fam[a - 1].theta));
    if (a + 1 < t)
      parts.push_back(
          slot_matrix(m, blocks.diag[a - 1], fam[t - 1 + a - 1].theta));
    else
      parts.push_back(Mat::identity(m));
    parts.push_back(Mat::identity(1));
    U[a] = block_diag(parts);
  }
  {
    std::vector<Mat> parts(t - 1, Mat::identity(m));
    parts.push_back(slot_matrix(m + 1, blocks.final_slot, fam[2 * t - 3].theta));
    U[t] = block_diag(parts);
  }

  QLS out;
  out.order = v;
  out.grid.assign(v, std::vector<Vec>(v));
  const LatinSquare ls_m = cyclic_ls(m);
  const LatinSquare ls_corner = corner_ls(m + 1);

  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b) {
      const std::size_t lab = static_cast<std::size_t>(L.cells[a][b]);
      if (a != b) {
        place_block(out, ls_m, columns_of(U[a], m * lab, m),
                    range_indices(m * a, m), range_indices(m * b, m), false);
      } else if (a + 1 < t) {
        std::vector<Vec> basis = columns_of(U[a], m * lab, m);
        basis.push_back(Vec::basis(v, m * t));
        std::vector<std::size_t> rows = range_indices(m * a, m);
        std::vector<std::size_t> cols = rows;
        rows.push_back(m * t);
        cols.push_back(m * t);
        place_block(out, ls_corner, basis, rows, cols, true);
      } else {
        // a = b = t-1: the full (m+1)x(m+1) block rotated by U_t.
        place_block(out, ls_corner, columns_of(U[t], m * lab, m + 1),
                    range_indices(m * (t - 1), m + 1),
                    range_indices(m * (t - 1), m + 1), false);
      }
    }
  return out;
}

QLS direct_product_qls(std::size_t m, std::size_t t,
                       const DirectProductBlocks& blocks) {
  if (m < 2 || t < 2)
    throw InvalidParameters("direct_product_qls requires m >= 2 and t >= 2");
  if (blocks.d.size() != t - 1)
    throw InvalidParameters("direct_product_qls: block table needs t-1 rows");
  for (const auto& row : blocks.d) {
    if (row.size() != t)
      throw InvalidParameters(
          "direct_product_qls: block table needs t slots per row");
    for (std::size_t d : row) check_slot(d, m, "direct_product_qls");
  }

  const std::size_t v = m * t;
  const LatinSquare Lt = cyclic_ls(t);
  const LatinSquare Lm = cyclic_ls(m);
  const std::vector<PhaseAngle> fam =
      t >= 2 ? phase_family(t > 1 ? t - 1 : 1, m) : std::vector<PhaseAngle>{};

  std::vector<Mat> U(t);
  U[0] = Mat::identity(v);
  for (std::size_t i = 1; i < t; ++i) {
    std::vector<Mat> parts;
    for (std::size_t j = 0; j < t; ++j)
      parts.push_back(slot_matrix(m, blocks.d[i - 1][j], fam[i - 1].theta));
    U[i] = block_diag(parts);
  }

  QLS out;
  out.order = v;
  out.grid.assign(v, std::vector<Vec>(v));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t l = 0; l < m; ++l)
          out.grid[m * i + k][m * j + l] = U[i].column(
              m * static_cast<std::size_t>(Lt.cells[i][j]) +
              static_cast<std::size_t>(Lm.cells[k][l]));
  return out;
}

bool solve_slot_composition(const std::vector<std::size_t>& caps,
                            std::size_t target, std::vector<std::size_t>& out) {
  const std::size_t n = caps.size();
  std::size_t total = 0;
  for (std::size_t c : caps) {
    if (c < 2) throw InvalidParameters("solve_slot_composition: cap below 2");
    total += c;
  }
  out.assign(n, 0);
  if (target == 0) return true;
  if (target == 1 || target > total) return false;

  // Exact reachability over sums, term i in {0} union [2, caps[i]].
  std::vector<std::vector<char>> reach(n + 1,
                                       std::vector<char>(target + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t sum = 0; sum <= target; ++sum) {
      if (!reach[i][sum]) continue;
      reach[i + 1][sum] = 1;
      for (std::size_t x = 2; x <= caps[i] && sum + x <= target; ++x)
        reach[i + 1][sum + x] = 1;
    }
  if (!reach[n][target]) return false;

  std::size_t sum = target;
  for (std::size_t i = n; i-- > 0;) {
    if (reach[i][sum]) {
      out[i] = 0;
      continue;
    }
    for (std::size_t x = 2; x <= caps[i] && x <= sum; ++x)
      if (reach[i][sum - x]) {
        out[i] = x;
        sum -= x;
        break;
      }
  }
  return true;
}

namespace {

std::optional<ConstructionPlan> plan_direct_product(std::size_t m, std::size_t t,
                                                    std::size_t c,
                                                    bool& range_hit) {
  const std::size_t base = m * t;
  const std::size_t top = m * t * t;
  if (c < base || c > top) return std::nullopt;
  const std::size_t extra = c - base;
  if (m == 2 && extra % 2 != 0) {
    range_hit = true;  // inside the interval, outside the even-only claim
    return std::nullopt;
  }
  std::vector<std::size_t> caps((t - 1) * t, m);
  std::vector<std::size_t> sol;
  if (!solve_slot_composition(caps, extra, sol)) {
    range_hit = true;
    return std::nullopt;
  }
  ConstructionPlan plan;
  plan.method = Method::direct_product;
  plan.v = base;
  plan.c = c;
  plan.m = m;
  plan.t = t;
  plan.direct_product.d.assign(t - 1, std::vector<std::size_t>(t, 0));
  for (std::size_t i = 1; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      plan.direct_product.d[i - 1][j] = sol[(i - 1) * t + j];
  plan.accounting = make_accounting(base, sol);
  return plan;
}

std::optional<ConstructionPlan> plan_wilson1(std::size_t m, std::size_t t,
                                             std::size_t c, bool& range_hit) {
  const std::size_t base = m * t + 1;
  const std::size_t top = m * t * t + 2;
  if (c < base || c > top) return std::nullopt;
  std::vector<std::size_t> caps((t - 1) * (t - 1), m);
  caps.insert(caps.end(), t - 2, m);
  caps.push_back(m + 1);
  std::vector<std::size_t> sol;
  if (!solve_slot_composition(caps, c - base, sol)) {
    range_hit = true;
    return std::nullopt;
  }
  ConstructionPlan plan;
  plan.method = Method::wilson1;
  plan.v = base;
  plan.c = c;
  plan.m = m;
  plan.t = t;
  plan.wilson1.d.assign(t - 1, std::vector<std::size_t>(t - 1, 0));
  for (std::size_t a = 1; a < t; ++a)
    for (std::size_t i = 0; i + 1 < t; ++i)
      plan.wilson1.d[a - 1][i] = sol[(a - 1) * (t - 1) + i];
  plan.wilson1.diag.assign(t - 2, 0);
  for (std::size_t a = 1; a + 1 < t; ++a)
    plan.wilson1.diag[a - 1] = sol[(t - 1) * (t - 1) + (a - 1)];
  plan.wilson1.final_slot = sol.back();
  plan.accounting = make_accounting(base, sol);
  return plan;
}

std::optional<ConstructionPlan> plan_wilson(std::size_t m, std::size_t t,
                                            std::size_t s, std::size_t c,
                                            bool& range_hit) {
  const std::size_t base = m * t + s;
  const std::size_t top = m * t * t + 2 * s;
  if (c < base || c > top) return std::nullopt;
  const std::size_t extra = c - base;
  if (m == 2 && s == 2 && extra % 2 != 0) {
    range_hit = true;  // the odd gap the theorem leaves open
    return std::nullopt;
  }
  std::vector<std::size_t> caps((t - 1) * t, m);
  caps.push_back(s);
  std::vector<std::size_t> sol;
  if (!solve_slot_composition(caps, extra, sol)) {
    range_hit = true;
    return std::nullopt;
  }
  ConstructionPlan plan;
  plan.method = Method::wilson;
  plan.v = base;
  plan.c = c;
  plan.m = m;
  plan.t = t;
  plan.s = s;
  plan.wilson.d.assign(t - 1, std::vector<std::size_t>(t, 0));
  for (std::size_t a = 1; a < t; ++a)
    for (std::size_t i = 0; i < t; ++i)
      plan.wilson.d[a - 1][i] = sol[(a - 1) * t + i];
  plan.wilson.corner = sol.back();
  plan.accounting = make_accounting(base, sol);
  return plan;
}

}  // namespace

ConstructionPlan plan_cardinality(std::size_t v, std::size_t c) {
  if (v < 2) throw InvalidParameters("plan_cardinality requires v >= 2");
  if (c < v || c > v * v)
    throw Unachievable("no quantum Latin square of order " + std::to_string(v) +
                       " has cardinality " + std::to_string(c) +
                       " (bound v <= c <= v^2)");
  if (c == v) {
    ConstructionPlan plan;
    plan.method = Method::classical;
    plan.v = v;
    plan.c = c;
    plan.accounting = make_accounting(v, {});
    return plan;
  }
  if (v < 4)
    throw Unachievable("orders 2 and 3 admit only classical squares (c = v)");
  if (c == v + 1)
    throw Unachievable("cardinality v + 1 is never attained");
  if (c == v * v) {
    ConstructionPlan plan;
    plan.method = Method::maximal;
    plan.v = v;
    plan.c = c;
    plan.accounting = make_accounting(v * v, {});
    return plan;
  }

  bool range_hit = false;

  for (std::size_t m = 2; m * 2 <= v; ++m) {
    if (v % m != 0) continue;
    const std::size_t t = v / m;
    if (t < 2) continue;
    if (auto plan = plan_direct_product(m, t, c, range_hit)) return *plan;
  }
  for (std::size_t m = 2; m * 3 <= v - 1; ++m) {
    if ((v - 1) % m != 0) continue;
    const std::size_t t = (v - 1) / m;
    if (t < 3 || !idempotent_available(t)) continue;
    if (auto plan = plan_wilson1(m, t, c, range_hit)) return *plan;
  }
  for (std::size_t s = 2; s < v; ++s)
    for (std::size_t t = s + 1; t * 2 + s <= v; ++t) {
      if (t < 3 || t == 6 || (v - s) % t != 0 || !ols_available(t)) continue;
      const std::size_t m = (v - s) / t;
      if (m < 2) continue;
      if (auto plan = plan_wilson(m, t, s, c, range_hit)) return *plan;
    }

  if (v == 8) {
    const auto& explicit_cs = catalog8_explicit();
    if (std::find(explicit_cs.begin(), explicit_cs.end(), c) !=
        explicit_cs.end()) {
      ConstructionPlan plan;
      plan.method = Method::catalog;
      plan.v = 8;
      plan.c = c;
      plan.accounting = make_accounting(c, {});
      return plan;
    }
    const auto& open_cs = catalog8_open();
    if (std::find(open_cs.begin(), open_cs.end(), c) != open_cs.end())
      throw UnknownAchievability("cardinality " + std::to_string(c) +
                                 " at order 8 is an open value");
  }
  if (range_hit)
    throw UnknownAchievability(
        "cardinality " + std::to_string(c) + " at order " + std::to_string(v) +
        " lies inside a construction's interval but in a gap the known "
        "results leave open");
  throw Unachievable("no supported construction reaches cardinality " +
                     std::to_string(c) + " at order " + std::to_string(v));
}

QLS execute_plan(const ConstructionPlan& plan) {
  switch (plan.method) {
    case Method::classical:
      return classical_qls(cyclic_ls(plan.v));
    case Method::maximal:
      return maximal_qls(plan.v);
    case Method::wilson:
      return wilson_qls(plan.m, plan.t, plan.s, plan.wilson);
    case Method::wilson1:
      return wilson1_qls(plan.m, plan.t, plan.wilson1);
    case Method::direct_product:
      return direct_product_qls(plan.m, plan.t, plan.direct_product);
    case Method::catalog:
      throw NotInCatalog(
          "execute_plan: catalog plans are realized by the catalog module");
  }
  throw InvalidParameters("execute_plan: unknown method");
}

std::vector<AchievabilityEntry> achievable_set(std::size_t v) {
  if (v < 2) throw InvalidParameters("achievable_set requires v >= 2");
  std::vector<AchievabilityEntry> out;
  for (std::size_t c = v; c <= v * v; ++c) {
    AchievabilityEntry e;
    e.c = c;
    try {
      ConstructionPlan plan = plan_cardinality(v, c);
      e.status = Achievability::achievable;
      e.provenance = method_name(plan.method);
      if (plan.method == Method::wilson)
        e.provenance += "(m=" + std::to_string(plan.m) +
                        ",t=" + std::to_string(plan.t) +
                        ",s=" + std::to_string(plan.s) + ")";
      else if (plan.method == Method::wilson1 ||
               plan.method == Method::direct_product)
        e.provenance += "(m=" + std::to_string(plan.m) +
                        ",t=" + std::to_string(plan.t) + ")";
    } catch (const UnknownAchievability&) {
      e.status = Achievability::unknown;
      e.provenance = "open";
    } catch (const Unachievable&) {
      e.status = Achievability::excluded;
      e.provenance = c == v + 1 ? "excluded (c = v+1)" : "no known construction";
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace qls
