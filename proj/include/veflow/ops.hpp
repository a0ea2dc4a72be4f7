// Differential operators as Fourier multipliers, Leray projection, dealiased
// pointwise products, and the small algebra the solver is built from.
//
// Mean-zero gauge: Lambda^s for s < 0 and the Leray projector set the k = 0
// output to zero; fields fed to negative powers must already be mean-free.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "veflow/fft.hpp"
#include "veflow/field.hpp"
#include "veflow/grid.hpp"

namespace veflow {

// --- L2 norms (box [0,2pi)^N measure) ------------------------------------

template <typename Scalar>
Scalar normL2(const SpectralField<Scalar>& f) {
  return std::sqrt(f.grid().boxVolume() * f.coeffs().abs2().sum());
}

template <typename Scalar>
Scalar normL2(const VectorField<Scalar>& v) {
  Scalar s = 0;
  for (int i = 0; i < v.dim(); ++i) s += v[i].coeffs().abs2().sum();
  return std::sqrt(v.grid().boxVolume() * s);
}

template <typename Scalar>
Scalar normL2(const TensorField<Scalar>& t) {
  Scalar s = 0;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) s += t(i, j).coeffs().abs2().sum();
  return std::sqrt(t.grid().boxVolume() * s);
}

template <typename Scalar>
Scalar sampleNormL2(const Grid& grid, const Eigen::ArrayX<Scalar>& samples) {
  return std::sqrt(grid.cellVolume() * samples.abs2().sum());
}

// --- multipliers ----------------------------------------------------------

template <typename Scalar>
SpectralField<Scalar> deriv(const SpectralField<Scalar>& f, int axis) {
  if (axis < 0 || axis >= f.grid().dim())
    throw std::invalid_argument("deriv: axis " + std::to_string(axis) +
                                " out of range for dim " +
                                std::to_string(f.grid().dim()));
  SpectralField<Scalar> out(f.grid(), f.realParity());
  const int k[3] = {0, 0, 0};
  (void)k;
  f.grid().forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    const int kj = axis == 0 ? k0 : (axis == 1 ? k1 : k2);
    out[flat] = std::complex<Scalar>(0, static_cast<Scalar>(kj)) * f[flat];
  });
  return out;
}

template <typename Scalar>
SpectralField<Scalar> laplacian(const SpectralField<Scalar>& f) {
  SpectralField<Scalar> out(f.grid(), f.realParity());
  f.grid().forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    const Scalar k2abs =
        static_cast<Scalar>(k0) * k0 + static_cast<Scalar>(k1) * k1 +
        static_cast<Scalar>(k2) * k2;
    out[flat] = -k2abs * f[flat];
  });
  return out;
}

// Lambda^s f = F^{-1}(|k|^s fhat). k = 0 maps to zero for s > 0, is kept for
// s = 0, and must be zero on input for s < 0 (mean-zero gauge).
template <typename Scalar>
SpectralField<Scalar> lambdaPow(const SpectralField<Scalar>& f, Scalar s) {
  if (s < 0) {
    const Scalar scale = std::sqrt(f.coeffs().abs2().sum());
    if (std::abs(f[0]) > 1e-12 * std::max<Scalar>(scale, Scalar(1e-300)))
      throw std::invalid_argument(
          "lambdaPow: negative power needs a zero k=0 mode (mean-zero "
          "gauge); got |mean| = " +
          std::to_string(std::abs(f[0])));
  }
  if (s == 0) return f;
  SpectralField<Scalar> out(f.grid(), f.realParity());
  f.grid().forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    const Scalar kk = static_cast<Scalar>(k0) * k0 +
                      static_cast<Scalar>(k1) * k1 +
                      static_cast<Scalar>(k2) * k2;
    out[flat] = kk == 0 ? std::complex<Scalar>(0, 0)
                        : std::pow(std::sqrt(kk), s) * f[flat];
  });
  return out;
}

template <typename Scalar>
SpectralField<Scalar> dealias(SpectralField<Scalar> f) {
  const int cut = f.grid().dealiasCutoff();
  f.grid().forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    if (std::abs(k0) > cut || std::abs(k1) > cut || std::abs(k2) > cut)
      f[flat] = std::complex<Scalar>(0, 0);
  });
  return f;
}

// Leray projector P = I - k k^T / |k|^2; the k = 0 mode is zeroed (mean-zero
// gauge for velocities).
template <typename Scalar>
VectorField<Scalar> lerayProject(const VectorField<Scalar>& u) {
  const Grid& g = u.grid();
  VectorField<Scalar> out(g);
  g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    const Scalar kk = static_cast<Scalar>(k0) * k0 +
                      static_cast<Scalar>(k1) * k1 +
                      static_cast<Scalar>(k2) * k2;
    if (kk == 0) {
      for (int i = 0; i < g.dim(); ++i)
        out[i][flat] = std::complex<Scalar>(0, 0);
      return;
    }
    const Scalar k[3] = {static_cast<Scalar>(k0), static_cast<Scalar>(k1),
                         static_cast<Scalar>(k2)};
    std::complex<Scalar> kdotu(0, 0);
    for (int j = 0; j < g.dim(); ++j) kdotu += k[j] * u[j][flat];
    kdotu /= kk;
    for (int i = 0; i < g.dim(); ++i)
      out[i][flat] = u[i][flat] - k[i] * kdotu;
  });
  return out;
}

// --- derived fields -------------------------------------------------------

template <typename Scalar>
VectorField<Scalar> gradient(const SpectralField<Scalar>& f) {
  VectorField<Scalar> out(f.grid());
  for (int j = 0; j < f.grid().dim(); ++j) out[j] = deriv(f, j);
  return out;
}

template <typename Scalar>
SpectralField<Scalar> divergence(const VectorField<Scalar>& v) {
  SpectralField<Scalar> out = deriv(v[0], 0);
  for (int j = 1; j < v.dim(); ++j) out += deriv(v[j], j);
  return out;
}

// (grad v)_ij = dv_i/dx_j.
template <typename Scalar>
TensorField<Scalar> velocityGradient(const VectorField<Scalar>& v) {
  TensorField<Scalar> out(v.grid());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) out(i, j) = deriv(v[i], j);
  return out;
}

// (div T)_i = d_j T_ij (paper's row convention).
template <typename Scalar>
VectorField<Scalar> rowDivergence(const TensorField<Scalar>& t) {
  VectorField<Scalar> out(t.grid());
  for (int i = 0; i < t.dim(); ++i) {
    out[i] = deriv(t(i, 0), 0);
    for (int j = 1; j < t.dim(); ++j) out[i] += deriv(t(i, j), j);
  }
  return out;
}

// (div T^T)_i = d_j T_ji.
template <typename Scalar>
VectorField<Scalar> colDivergence(const TensorField<Scalar>& t) {
  VectorField<Scalar> out(t.grid());
  for (int i = 0; i < t.dim(); ++i) {
    out[i] = deriv(t(0, i), 0);
    for (int j = 1; j < t.dim(); ++j) out[i] += deriv(t(j, i), j);
  }
  return out;
}

// --- dealiased products ---------------------------------------------------

// Product of two fields already in sample space; forward transform then the
// 2/3-rule mask.
template <typename Scalar>
SpectralField<Scalar> productOfPhysical(const Grid& grid,
                                        const Eigen::ArrayX<Scalar>& a,
                                        const Eigen::ArrayX<Scalar>& b) {
  return dealias(toSpectral<Scalar>(grid, (a * b).eval()));
}

template <typename Scalar>
SpectralField<Scalar> dealiasedProduct(const SpectralField<Scalar>& f,
                                       const SpectralField<Scalar>& g) {
  requireSameGrid(f.grid(), g.grid(), "dealiasedProduct");
  return productOfPhysical<Scalar>(f.grid(), toPhysical(f), toPhysical(g));
}

// v . grad f with the velocity samples precomputed by the caller.
template <typename Scalar>
SpectralField<Scalar> advectPhysical(
    const Grid& grid, const std::vector<Eigen::ArrayX<Scalar>>& v_samples,
    const SpectralField<Scalar>& f) {
  SpectralField<Scalar> out = productOfPhysical<Scalar>(
      grid, v_samples[0], toPhysical(deriv(f, 0)));
  for (int j = 1; j < grid.dim(); ++j)
    out += productOfPhysical<Scalar>(grid, v_samples[static_cast<size_t>(j)],
                                     toPhysical(deriv(f, j)));
  return out;
}

template <typename Scalar>
std::vector<Eigen::ArrayX<Scalar>> toPhysicalVector(
    const VectorField<Scalar>& v) {
  std::vector<Eigen::ArrayX<Scalar>> out;
  out.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) out.push_back(toPhysical(v[i]));
  return out;
}

template <typename Scalar>
SpectralField<Scalar> advect(const VectorField<Scalar>& v,
                             const SpectralField<Scalar>& f) {
  requireSameGrid(v.grid(), f.grid(), "advect");
  return advectPhysical<Scalar>(v.grid(), toPhysicalVector(v), f);
}

// Pointwise maximum of |v(x)| over the grid (CFL diagnostics).
template <typename Scalar>
Scalar maxAbsPhysical(const VectorField<Scalar>& v) {
  auto samples = toPhysicalVector(v);
  Eigen::ArrayX<Scalar> mag2 = samples[0].abs2();
  for (int i = 1; i < v.dim(); ++i) mag2 += samples[static_cast<size_t>(i)].abs2();
  return std::sqrt(mag2.maxCoeff());
}

// --- det(I + E) -----------------------------------------------------------

// Pointwise determinant of I + E(x), returned as real-space samples.
template <typename Scalar>
Eigen::ArrayX<Scalar> detIPlusE(const TensorField<Scalar>& e) {
  const Grid& g = e.grid();
  const int d = g.dim();
  std::vector<Eigen::ArrayX<Scalar>> s;
  s.reserve(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s.push_back(toPhysical(e(i, j)));
  auto at = [&](int i, int j) -> const Eigen::ArrayX<Scalar>& {
    return s[static_cast<size_t>(i) * d + j];
  };
  Eigen::ArrayX<Scalar> det(g.size());
  if (d == 2) {
    det = (1 + at(0, 0)) * (1 + at(1, 1)) - at(0, 1) * at(1, 0);
  } else {
    const auto a = (1 + at(0, 0)).eval(), e11 = (1 + at(1, 1)).eval(),
               e22 = (1 + at(2, 2)).eval();
    det = a * (e11 * e22 - at(1, 2) * at(2, 1)) -
          at(0, 1) * (at(1, 0) * e22 - at(1, 2) * at(2, 0)) +
          at(0, 2) * (at(1, 0) * at(2, 1) - e11 * at(2, 0));
  }
  return det;
}

// --- exact lattice dilation f(x) -> f(2x) ---------------------------------

// Doubles every wavenumber; requires the input band-limited to half the
// retained lattice so no mass is lost.
template <typename Scalar>
SpectralField<Scalar> dilate(const SpectralField<Scalar>& f) {
  const Grid& g = f.grid();
  const int half = g.maxFreq() / 2;
  Scalar lost = 0;
  SpectralField<Scalar> out(g, f.realParity());
  g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    if (std::abs(k0) > half || std::abs(k1) > half || std::abs(k2) > half)
      lost = std::max(lost, std::abs(f[flat]));
  });
  const Scalar scale = std::sqrt(f.coeffs().abs2().sum());
  if (lost > 1e-14 * std::max<Scalar>(scale, Scalar(1e-300)))
    throw std::invalid_argument(
        "dilate: field must be band-limited to half the lattice");
  const int n = g.n();
  g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    if (std::abs(k0) > half || std::abs(k1) > half || std::abs(k2) > half)
      return;
    std::array<int, 3> idx{0, 0, 0};
    const int kk[3] = {2 * k0, 2 * k1, 2 * k2};
    for (int a = 0; a < g.dim(); ++a)
      idx[static_cast<size_t>(a)] = kk[a] >= 0 ? kk[a] : kk[a] + n;
    out[g.ravel(idx)] = f[flat];
  });
  return out;
}

}  // namespace veflow
