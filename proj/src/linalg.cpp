#include "qls/linalg.hpp"

#include <cmath>
#include <numbers>

namespace qls {

Vec Vec::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("basis index out of range");
  Vec v(dim);
  v[index] = cplx{1.0, 0.0};
  return v;
}

double Vec::norm() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = cplx{1.0, 0.0};
  return m;
}

Vec Mat::column(std::size_t col) const {
  Vec v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = at(r, col);
  return v;
}

void Mat::set_column(std::size_t col, const Vec& v) {
  if (v.dim() != dim_) throw DimensionMismatch("column dimension mismatch");
  for (std::size_t r = 0; r < dim_; ++r) at(r, col) = v[r];
}

Mat Mat::multiply(const Mat& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix product dimension mismatch");
  Mat out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx okc = other.at(k, c);
      if (okc == cplx{}) continue;
      for (std::size_t r = 0; r < dim_; ++r) {
        out.at(r, c) += at(r, k) * okc;
      }
    }
  }
  return out;
}

Mat Mat::adjoint() const {
  Mat out(dim_);
  for (std::size_t c = 0; c < dim_; ++c)
    for (std::size_t r = 0; r < dim_; ++r)
      out.at(c, r) = std::conj(at(r, c));
  return out;
}

Vec Mat::apply(const Vec& v) const {
  if (v.dim() != dim_) throw DimensionMismatch("matrix-vector dimension mismatch");
  Vec out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    const cplx vc = v[c];
    if (vc == cplx{}) continue;
    for (std::size_t r = 0; r < dim_; ++r) out[r] += at(r, c) * vc;
  }
  return out;
}

cplx inner(const Vec& u, const Vec& w) {
  if (u.dim() != w.dim()) throw DimensionMismatch("inner product dimension mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t k = 0; k < u.dim(); ++k) s += std::conj(u[k]) * w[k];
  return s;
}

cplx root_of_unity(std::size_t v, long long exponent) {
  const long long m = static_cast<long long>(v);
  long long e = exponent % m;
  if (e < 0) e += m;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(v);
  return cplx{std::cos(angle), std::sin(angle)};
}

Mat fourier_matrix(std::size_t v) {
  if (v < 1) throw InvalidParameters("fourier_matrix requires v >= 1");
  Mat m(v);
  const double scale = 1.0 / std::sqrt(static_cast<double>(v));
  for (std::size_t l = 0; l < v; ++l)
    for (std::size_t k = 0; k < v; ++k)
      m.at(k, l) = scale * root_of_unity(v, static_cast<long long>(k * l));
  return m;
}

Mat phased_fourier(std::size_t v, double theta) {
  Mat m = fourier_matrix(v);
  const cplx phase{std::cos(theta), std::sin(theta)};
  for (std::size_t l = 0; l < v; ++l) m.at(0, l) *= phase;
  return m;
}

Mat block_diag(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw InvalidParameters("block_diag requires at least one block");
  std::size_t total = 0;
  for (const Mat& b : blocks) total += b.dim();
  Mat out(total);
  std::size_t offset = 0;
  for (const Mat& b : blocks) {
    for (std::size_t c = 0; c < b.dim(); ++c)
      for (std::size_t r = 0; r < b.dim(); ++r)
        out.at(offset + r, offset + c) = b.at(r, c);
    offset += b.dim();
  }
  return out;
}

Vec tensor(const Vec& u, const Vec& w) {
  Vec out(u.dim() * w.dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b)
      out[a * w.dim() + b] = u[a] * w[b];
  return out;
}

UnitarityReport unitarity(const Mat& m) {
  UnitarityReport rep;
  const std::size_t v = m.dim();
  for (std::size_t j = 0; j < v; ++j) {
    for (std::size_t k = j; k < v; ++k) {
      cplx g = inner(m.column(j), m.column(k));
      if (j == k) g -= cplx{1.0, 0.0};
      rep.max_deviation = std::max(rep.max_deviation, std::abs(g));
    }
  }
  rep.unitary = rep.max_deviation <= default_tolerance().eps_unit;
  return rep;
}

bool is_unitary(const Mat& m, const Tolerance& tol) {
  UnitarityReport rep = unitarity(m);
  return rep.max_deviation <= tol.eps_unit;
}

}  // namespace qls
