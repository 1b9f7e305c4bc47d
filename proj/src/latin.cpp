#include "qls/latin.hpp"

#include <algorithm>

#include "qls/errors.hpp"

namespace qls {

namespace {

LatinSquare make_square(std::size_t v) {
  LatinSquare sq;
  sq.order = v;
  sq.cells.assign(v, std::vector<int>(v, 0));
  return sq;
}

LatinSquare from_table(const std::vector<std::vector<int>>& table) {
  LatinSquare sq;
  sq.order = table.size();
  sq.cells = table;
  return sq;
}

// Idempotent squares of even order, found once by offline backtracking.
const std::vector<std::vector<int>>& idempotent_table(std::size_t v) {
  static const std::vector<std::vector<int>> t4 = {
      {0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}};
  static const std::vector<std::vector<int>> t6 = {
      {0, 2, 1, 4, 5, 3}, {2, 1, 3, 5, 0, 4}, {4, 5, 2, 0, 3, 1},
      {1, 4, 5, 3, 2, 0}, {5, 3, 0, 1, 4, 2}, {3, 0, 4, 2, 1, 5}};
  static const std::vector<std::vector<int>> t8 = {
      {0, 2, 1, 4, 3, 6, 7, 5}, {2, 1, 0, 5, 6, 7, 3, 4},
      {1, 0, 2, 6, 7, 4, 5, 3}, {4, 5, 7, 3, 0, 1, 2, 6},
      {3, 6, 5, 7, 4, 0, 1, 2}, {6, 7, 3, 0, 2, 5, 4, 1},
      {7, 3, 4, 1, 5, 2, 6, 0}, {5, 4, 6, 2, 1, 3, 0, 7}};
  static const std::vector<std::vector<int>> t10 = {
      {0, 2, 1, 4, 3, 6, 5, 8, 9, 7}, {2, 1, 0, 5, 6, 3, 4, 9, 7, 8},
      {1, 0, 2, 6, 7, 8, 9, 3, 4, 5}, {4, 5, 6, 3, 8, 9, 7, 0, 1, 2},
      {3, 6, 5, 9, 4, 7, 8, 1, 2, 0}, {6, 3, 7, 8, 9, 5, 1, 2, 0, 4},
      {5, 8, 9, 7, 0, 2, 6, 4, 3, 1}, {8, 9, 3, 0, 1, 4, 2, 7, 5, 6},
      {9, 7, 4, 2, 5, 1, 0, 6, 8, 3}, {7, 4, 8, 1, 2, 0, 3, 5, 6, 9}};
  static const std::vector<std::vector<int>> t12 = {
      {0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 11, 9},
      {2, 1, 0, 5, 6, 3, 4, 9, 10, 11, 7, 8},
      {1, 0, 2, 6, 5, 4, 3, 10, 11, 8, 9, 7},
      {4, 5, 6, 3, 0, 1, 2, 11, 9, 7, 8, 10},
      {3, 7, 8, 9, 4, 10, 11, 0, 1, 2, 5, 6},
      {6, 8, 7, 10, 11, 5, 9, 1, 0, 3, 2, 4},
      {5, 9, 10, 7, 8, 11, 6, 2, 3, 0, 4, 1},
      {8, 3, 4, 11, 1, 9, 10, 7, 2, 5, 6, 0},
      {7, 10, 11, 0, 9, 2, 1, 4, 8, 6, 3, 5},
      {10, 11, 5, 8, 2, 0, 7, 6, 4, 9, 1, 3},
      {11, 6, 9, 1, 7, 8, 0, 3, 5, 4, 10, 2},
      {9, 4, 3, 2, 10, 7, 8, 5, 6, 1, 0, 11}};
  switch (v) {
    case 4: return t4;
    case 6: return t6;
    case 8: return t8;
    case 10: return t10;
    case 12: return t12;
    default: throw UnsupportedOrder("no idempotent table for this even order");
  }
}

// GF(2^k) multiplication by the generator x; reduction polynomials
// x^2+x+1 (GF(4)) and x^3+x+1 (GF(8)).
int gf_times_x(int a, std::size_t order) {
  int r = a << 1;
  if (order == 4) {
    if (r & 4) r ^= 0b111;
  } else {
    if (r & 8) r ^= 0b1011;
  }
  return r;
}

bool ols_supported(std::size_t t) {
  if (t >= 3 && t % 2 == 1) return true;
  if (t == 4 || t == 8) return true;
  if (t < 9) return false;
  for (std::size_t d = 3; d * d <= t; ++d)
    if (t % d == 0 && ols_supported(d) && ols_supported(t / d)) return true;
  return false;
}

}  // namespace

LatinSquare cyclic_ls(std::size_t v) {
  if (v < 1) throw InvalidParameters("cyclic_ls requires v >= 1");
  LatinSquare sq = make_square(v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      sq.cells[i][j] = static_cast<int>((i + j) % v);
  return sq;
}

LatinSquare corner_ls(std::size_t v) {
  if (v < 2) throw InvalidParameters("corner_ls requires v >= 2");
  LatinSquare sq = make_square(v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      sq.cells[i][j] = static_cast<int>((i + j + 1) % v);
  return sq;
}

LatinSquare idempotent_ls(std::size_t v) {
  if (v < 3) throw UnsupportedOrder("no idempotent Latin square of order < 3");
  if (v % 2 == 1) {
    LatinSquare sq = make_square(v);
    const std::size_t half = (v + 1) / 2;  // inverse of 2 mod v
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        sq.cells[i][j] = static_cast<int>((half * (i + j)) % v);
    return sq;
  }
  if (v > 12)
    throw UnsupportedOrder(
        "idempotent Latin squares of even order > 12 are not built in; "
        "supply one via file");
  return from_table(idempotent_table(v));
}

LatinSquare product_ls(const LatinSquare& a, const LatinSquare& b) {
  const std::size_t n1 = a.order, n2 = b.order;
  LatinSquare sq = make_square(n1 * n2);
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t i2 = 0; i2 < n2; ++i2)
      for (std::size_t j1 = 0; j1 < n1; ++j1)
        for (std::size_t j2 = 0; j2 < n2; ++j2)
          sq.cells[i1 * n2 + i2][j1 * n2 + j2] =
              a.cells[i1][j1] * static_cast<int>(n2) + b.cells[i2][j2];
  return sq;
}

OLSPair ols_pair(std::size_t t) {
  if (t == 2 || t == 6)
    throw UnsupportedOrder("no orthogonal Latin square pair of order 2 or 6");
  if (t < 3) throw UnsupportedOrder("ols_pair requires t >= 3");
  if (t % 2 == 1) {
    OLSPair p;
    p.first = make_square(t);
    p.second = make_square(t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        p.first.cells[i][j] = static_cast<int>((i + j) % t);
        p.second.cells[i][j] = static_cast<int>((i + 2 * j) % t);
      }
    return p;
  }
  if (t == 4 || t == 8) {
    OLSPair p;
    p.first = make_square(t);
    p.second = make_square(t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        p.first.cells[i][j] = static_cast<int>(i ^ j);
        p.second.cells[i][j] =
            gf_times_x(static_cast<int>(i), t) ^ static_cast<int>(j);
      }
    return p;
  }
  // MacNeish product over a supported factorization.
  for (std::size_t d = 3; d * d <= t; ++d) {
    if (t % d == 0 && ols_supported(d) && ols_supported(t / d)) {
      OLSPair a = ols_pair(d);
      OLSPair b = ols_pair(t / d);
      return OLSPair{product_ls(a.first, b.first),
                     product_ls(a.second, b.second)};
    }
  }
  throw UnsupportedOrder(
      "orthogonal Latin square pair of this order is not built in; "
      "supply one via file");
}

ValidationResult validate_ls(const LatinSquare& square) {
  const std::size_t v = square.order;
  if (square.cells.size() != v)
    return {false, "cell array has wrong number of rows"};
  for (std::size_t i = 0; i < v; ++i)
    if (square.cells[i].size() != v)
      return {false, "row " + std::to_string(i) + " has wrong length"};
  for (std::size_t i = 0; i < v; ++i) {
    std::vector<bool> seen(v, false);
    for (std::size_t j = 0; j < v; ++j) {
      const int s = square.cells[i][j];
      if (s < 0 || static_cast<std::size_t>(s) >= v)
        return {false, "symbol out of range at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
      if (seen[s])
        return {false, "row " + std::to_string(i) + " repeats symbol " +
                           std::to_string(s)};
      seen[s] = true;
    }
  }
  for (std::size_t j = 0; j < v; ++j) {
    std::vector<bool> seen(v, false);
    for (std::size_t i = 0; i < v; ++i) {
      const int s = square.cells[i][j];
      if (seen[s])
        return {false, "column " + std::to_string(j) + " repeats symbol " +
                           std::to_string(s)};
      seen[s] = true;
    }
  }
  return {true, {}};
}

ValidationResult validate_ols(const OLSPair& pair) {
  if (pair.first.order != pair.second.order)
    return {false, "squares have different orders"};
  ValidationResult r = validate_ls(pair.first);
  if (!r.pass) return {false, "first square: " + r.first_violation};
  r = validate_ls(pair.second);
  if (!r.pass) return {false, "second square: " + r.first_violation};
  const std::size_t t = pair.first.order;
  std::vector<bool> seen(t * t, false);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      const std::size_t key =
          static_cast<std::size_t>(pair.first.cells[i][j]) * t +
          static_cast<std::size_t>(pair.second.cells[i][j]);
      if (seen[key])
        return {false, "ordered pair (" +
                           std::to_string(pair.first.cells[i][j]) + "," +
                           std::to_string(pair.second.cells[i][j]) +
                           ") occurs twice"};
      seen[key] = true;
    }
  return {true, {}};
}

}  // namespace qls
