#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qls/errors.hpp"

namespace qls {

using cplx = std::complex<double>;

// Numerical policy for all "equal up to global phase" decisions.
//
// An overlap magnitude |<u|w>| is classified as
//   same phase      if  |<u|w>| >= tau_same
//   distinct        if  |<u|w>| <= 1 - band_low
//   ambiguous       otherwise  (always an error, never a guess)
struct Tolerance {
  double eps_unit = 1e-9;      // orthonormality slack
  double tau_same = 1.0 - 1e-8;
  double band_low = 1e-5;

  bool valid() const {
    return eps_unit > 0 && eps_unit < band_low && band_low < 1 &&
           tau_same > 1.0 - band_low && tau_same < 1.0;
  }
};

inline Tolerance default_tolerance() { return {}; }

// Unit column vector in C^dim. Construction does not normalize; callers
// that need the unit invariant check it via norm().
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : amp_(dim, cplx{0.0, 0.0}) {}
  Vec(std::initializer_list<cplx> init) : amp_(init) {}
  explicit Vec(std::vector<cplx> amp) : amp_(std::move(amp)) {}

  static Vec basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amp_.size(); }
  cplx& operator[](std::size_t k) { return amp_[k]; }
  const cplx& operator[](std::size_t k) const { return amp_[k]; }

  double norm() const;

  const std::vector<cplx>& amplitudes() const { return amp_; }

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<cplx> amp_;
};

// Dense square complex matrix, column-major semantics: column k is the
// k-th vector of the frame. Most instances are unitary by construction;
// is_unitary() is the checkable contract.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {}

  static Mat identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  cplx& at(std::size_t row, std::size_t col) { return data_[col * dim_ + row]; }
  const cplx& at(std::size_t row, std::size_t col) const {
    return data_[col * dim_ + row];
  }

  Vec column(std::size_t col) const;
  void set_column(std::size_t col, const Vec& v);

  // this * other
  Mat multiply(const Mat& other) const;
  Mat adjoint() const;

  // this applied to a column vector
  Vec apply(const Vec& v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

struct UnitarityReport {
  bool unitary = false;
  double max_deviation = 0.0;  // max |(M^dagger M - I)_{jk}|
};

// <u|w> = sum_k conj(u_k) w_k
cplx inner(const Vec& u, const Vec& w);

// omega^{kl} with the exponent reduced mod v before trig evaluation.
cplx root_of_unity(std::size_t v, long long exponent);

// F_v(k,l) = omega^{kl} / sqrt(v), omega = e^{2 pi i / v}
Mat fourier_matrix(std::size_t v);

// F_v with its first row scaled by e^{i theta}.
Mat phased_fourier(std::size_t v, double theta);

Mat block_diag(const std::vector<Mat>& blocks);

Vec tensor(const Vec& u, const Vec& w);

UnitarityReport unitarity(const Mat& m);
bool is_unitary(const Mat& m, const Tolerance& tol = default_tolerance());

}  // namespace qls
