#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qls {

// v x v array over [0, v-1]; every symbol once per row and column.
struct LatinSquare {
  std::size_t order = 0;
  std::vector<std::vector<int>> cells;

  int at(std::size_t i, std::size_t j) const { return cells[i][j]; }
};

struct OLSPair {
  LatinSquare first;
  LatinSquare second;
};

struct ValidationResult {
  bool pass = false;
  std::string first_violation;  // empty when pass
};

// cells[i][j] = (i + j) mod v
LatinSquare cyclic_ls(std::size_t v);

// cells[i][j] = (i + j + 1) mod v, so the symbol v-1 sits in the
// lower-right corner.
LatinSquare corner_ls(std::size_t v);

// L(i,i) = i. Odd v via ((v+1)/2)(i+j) mod v; even v in {4,...,12} via
// embedded tables. Throws UnsupportedOrder otherwise.
LatinSquare idempotent_ls(std::size_t v);

// Orthogonal pair of order t. Odd t via (i+j, i+2j) mod t; t in {4, 8}
// via finite-field tables; composite t via the MacNeish product of
// supported factors. Throws UnsupportedOrder for t in {1, 2, 6} and for
// unsupported t = 2 (mod 4).
OLSPair ols_pair(std::size_t t);

// Componentwise product square: order t1*t2.
LatinSquare product_ls(const LatinSquare& a, const LatinSquare& b);

ValidationResult validate_ls(const LatinSquare& square);
ValidationResult validate_ols(const OLSPair& pair);

}  // namespace qls
