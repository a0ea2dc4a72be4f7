// N-dimensional transforms built from Eigen's bundled 1-D FFT.
//
// Normalization: the forward transform carries the 1/(total points) factor,
// so f(x) = sum_k fhat(k) exp(i k.x) and a constant sample field maps to a
// single k = 0 coefficient of the same value. The inverse is a plain
// unscaled synthesis sum.
#pragma once

#include <unsupported/Eigen/FFT>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "veflow/field.hpp"
#include "veflow/grid.hpp"

namespace veflow {

namespace detail {

template <typename Scalar>
Eigen::FFT<Scalar>& fftEngine() {
  thread_local Eigen::FFT<Scalar> engine;
  thread_local bool configured = false;
  if (!configured) {
    engine.SetFlag(Eigen::FFT<Scalar>::Unscaled);
    configured = true;
  }
  return engine;
}

// In-place 1-D transforms along one axis of a C-ordered cube.
template <typename Scalar>
void transformAxis(const Grid& grid,
                   Eigen::ArrayX<std::complex<Scalar>>& data, int axis,
                   bool forward) {
  using Complex = std::complex<Scalar>;
  const int n = grid.n();
  Eigen::Index inner = 1;
  for (int a = axis + 1; a < grid.dim(); ++a) inner *= n;
  const Eigen::Index outer = grid.size() / (inner * n);

  auto& engine = fftEngine<Scalar>();
  std::vector<Complex> line(n), out(n);
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (Eigen::Index i = 0; i < inner; ++i) {
      const Eigen::Index base = o * n * inner + i;
      for (int j = 0; j < n; ++j) line[j] = data[base + j * inner];
      if (forward)
        engine.fwd(out, line);
      else
        engine.inv(out, line);
      for (int j = 0; j < n; ++j) data[base + j * inner] = out[j];
    }
  }
}

}  // namespace detail

// Zeroes the Nyquist planes k_j = -n/2 so the retained lattice is symmetric.
template <typename Scalar>
void zeroNyquist(SpectralField<Scalar>& f) {
  const Grid& g = f.grid();
  const int nyq = g.n() / 2;
  g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    if (k0 == -nyq || k1 == -nyq || k2 == -nyq)
      f[flat] = std::complex<Scalar>(0, 0);
  });
}

// Forward transform of real samples (C order, grid.size() values).
template <typename Scalar>
SpectralField<Scalar> toSpectral(const Grid& grid,
                                 const Eigen::ArrayX<Scalar>& samples) {
  if (samples.size() != grid.size())
    throw std::invalid_argument(
        "toSpectral: got " + std::to_string(samples.size()) +
        " samples for grid " + grid.shapeString() + " (" +
        std::to_string(grid.size()) + " points)");
  SpectralField<Scalar> f(grid);
  f.coeffs() = samples.template cast<std::complex<Scalar>>();
  for (int a = 0; a < grid.dim(); ++a)
    detail::transformAxis<Scalar>(grid, f.coeffs(), a, /*forward=*/true);
  f.coeffs() /= static_cast<Scalar>(grid.size());
  zeroNyquist(f);
  return f;
}

// Inverse transform; returns the real part of the synthesis (imaginary part
// is rounding noise for real-parity fields).
template <typename Scalar>
Eigen::ArrayX<Scalar> toPhysical(const SpectralField<Scalar>& f) {
  Eigen::ArrayX<std::complex<Scalar>> work = f.coeffs();
  for (int a = 0; a < f.grid().dim(); ++a)
    detail::transformAxis<Scalar>(f.grid(), work, a, /*forward=*/false);
  return work.real();
}

}  // namespace veflow
