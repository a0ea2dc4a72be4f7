// Spectral scalar/vector/tensor fields: dense complex coefficient arrays on a
// shared Grid, value semantics throughout.
#pragma once

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "veflow/grid.hpp"

namespace veflow {

// Fourier coefficients of one scalar field. real_parity marks fields that are
// real-valued in sample space, i.e. coeffs(-k) = conj(coeffs(k)); every
// multiplier in ops.hpp preserves that symmetry.
template <typename Scalar>
class SpectralField {
 public:
  using Complex = std::complex<Scalar>;
  using CoeffArray = Eigen::ArrayX<Complex>;

  explicit SpectralField(const Grid& grid, bool real_parity = true)
      : grid_(grid),
        coeffs_(CoeffArray::Zero(grid.size())),
        real_parity_(real_parity) {}
  SpectralField(const Grid& grid, CoeffArray coeffs, bool real_parity = true)
      : grid_(grid), coeffs_(std::move(coeffs)), real_parity_(real_parity) {
    if (coeffs_.size() != grid_.size())
      throw std::invalid_argument("SpectralField: coefficient count " +
                                  std::to_string(coeffs_.size()) +
                                  " does not match grid " +
                                  grid_.shapeString());
  }

  const Grid& grid() const { return grid_; }
  const CoeffArray& coeffs() const { return coeffs_; }
  CoeffArray& coeffs() { return coeffs_; }
  Complex operator[](Eigen::Index i) const { return coeffs_[i]; }
  Complex& operator[](Eigen::Index i) { return coeffs_[i]; }
  bool realParity() const { return real_parity_; }
  void setRealParity(bool p) { real_parity_ = p; }

  Complex mean() const { return coeffs_[0]; }
  void stripMean() { coeffs_[0] = Complex(0, 0); }

  void setZero() { coeffs_.setZero(); }

  SpectralField& operator+=(const SpectralField& o) {
    requireSameGrid(grid_, o.grid_, "SpectralField::operator+=");
    coeffs_ += o.coeffs_;
    return *this;
  }
  SpectralField& operator-=(const SpectralField& o) {
    requireSameGrid(grid_, o.grid_, "SpectralField::operator-=");
    coeffs_ -= o.coeffs_;
    return *this;
  }
  SpectralField& operator*=(Scalar a) {
    coeffs_ *= a;
    return *this;
  }

  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    a += b;
    return a;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    a -= b;
    return a;
  }
  friend SpectralField operator*(Scalar s, SpectralField a) {
    a *= s;
    return a;
  }

 private:
  Grid grid_;
  CoeffArray coeffs_;
  bool real_parity_;
};

// N spectral components on one shared grid.
template <typename Scalar>
class VectorField {
 public:
  explicit VectorField(const Grid& grid)
      : grid_(grid), comp_(grid.dim(), SpectralField<Scalar>(grid)) {}

  const Grid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }
  const SpectralField<Scalar>& operator[](int i) const { return comp_[i]; }
  SpectralField<Scalar>& operator[](int i) { return comp_[i]; }

  void setZero() {
    for (auto& c : comp_) c.setZero();
  }
  void stripMean() {
    for (auto& c : comp_) c.stripMean();
  }

  VectorField& operator+=(const VectorField& o) {
    for (int i = 0; i < dim(); ++i) comp_[i] += o.comp_[i];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    for (int i = 0; i < dim(); ++i) comp_[i] -= o.comp_[i];
    return *this;
  }
  VectorField& operator*=(Scalar a) {
    for (auto& c : comp_) c *= a;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) {
    a += b;
    return a;
  }
  friend VectorField operator-(VectorField a, const VectorField& b) {
    a -= b;
    return a;
  }
  friend VectorField operator*(Scalar s, VectorField a) {
    a *= s;
    return a;
  }

 private:
  Grid grid_;
  std::vector<SpectralField<Scalar>> comp_;
};

// N x N spectral components, row-major, on one shared grid.
template <typename Scalar>
class TensorField {
 public:
  explicit TensorField(const Grid& grid)
      : grid_(grid),
        comp_(static_cast<std::size_t>(grid.dim()) * grid.dim(),
              SpectralField<Scalar>(grid)) {}

  const Grid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }
  const SpectralField<Scalar>& operator()(int i, int j) const {
    return comp_[static_cast<std::size_t>(i) * dim() + j];
  }
  SpectralField<Scalar>& operator()(int i, int j) {
    return comp_[static_cast<std::size_t>(i) * dim() + j];
  }

  void setZero() {
    for (auto& c : comp_) c.setZero();
  }
  void stripMean() {
    for (auto& c : comp_) c.stripMean();
  }

  TensorField& operator+=(const TensorField& o) {
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
    return *this;
  }
  TensorField& operator-=(const TensorField& o) {
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
    return *this;
  }
  TensorField& operator*=(Scalar a) {
    for (auto& c : comp_) c *= a;
    return *this;
  }
  friend TensorField operator+(TensorField a, const TensorField& b) {
    a += b;
    return a;
  }
  friend TensorField operator-(TensorField a, const TensorField& b) {
    a -= b;
    return a;
  }
  friend TensorField operator*(Scalar s, TensorField a) {
    a *= s;
    return a;
  }

 private:
  Grid grid_;
  std::vector<SpectralField<Scalar>> comp_;
};

using Fieldd = SpectralField<double>;
using VectorFieldd = VectorField<double>;
using TensorFieldd = TensorField<double>;

}  // namespace veflow
