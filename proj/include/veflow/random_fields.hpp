// Seeded random band-limited fields with exact Hermitian symmetry.
#pragma once

#include <cmath>
#include <cstdint>

#include "veflow/field.hpp"
#include "veflow/grid.hpp"
#include "veflow/ops.hpp"
#include "veflow/rng.hpp"

namespace veflow {

// A wavenumber is "canonical" if it is the lexicographically positive member
// of the pair {k, -k}; coefficients are drawn on canonical modes only and
// mirrored, so the field is real-valued by construction.
inline bool canonicalMode(int k0, int k1, int k2) {
  if (k0 != 0) return k0 > 0;
  if (k1 != 0) return k1 > 0;
  return k2 > 0;
}

// Random real field supported on k_lo <= |k| <= k_hi, coefficients
// ~ N(0,1) per active mode, scaled by |k|^(-spectral_slope). Deterministic
// in (grid, seed).
template <typename Scalar>
SpectralField<Scalar> randomBandlimitedField(const Grid& grid,
                                             std::uint64_t seed, Scalar k_lo,
                                             Scalar k_hi,
                                             Scalar spectral_slope = 0) {
  if (k_lo < 1 || k_hi < k_lo)
    throw std::invalid_argument("randomBandlimitedField: empty band [" +
                                std::to_string(k_lo) + ", " +
                                std::to_string(k_hi) + "]");
  Rng rng(seed);
  SpectralField<Scalar> f(grid);
  const int n = grid.n();
  grid.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
    if (!canonicalMode(k0, k1, k2)) return;
    const Scalar kabs = std::sqrt(static_cast<Scalar>(k0) * k0 +
                                  static_cast<Scalar>(k1) * k1 +
                                  static_cast<Scalar>(k2) * k2);
    if (kabs < k_lo || kabs > k_hi) return;
    const Scalar amp = std::pow(kabs, -spectral_slope);
    const std::complex<Scalar> z(amp * static_cast<Scalar>(rng.gaussian()),
                                 amp * static_cast<Scalar>(rng.gaussian()));
    f[flat] = z;
    std::array<int, 3> conj_idx{0, 0, 0};
    const int kk[3] = {-k0, -k1, -k2};
    for (int a = 0; a < grid.dim(); ++a)
      conj_idx[static_cast<size_t>(a)] = kk[a] >= 0 ? kk[a] : kk[a] + n;
    f[grid.ravel(conj_idx)] = std::conj(z);
  });
  return f;
}

template <typename Scalar>
VectorField<Scalar> randomBandlimitedVector(const Grid& grid,
                                            std::uint64_t seed, Scalar k_lo,
                                            Scalar k_hi,
                                            Scalar spectral_slope = 0) {
  VectorField<Scalar> v(grid);
  for (int i = 0; i < grid.dim(); ++i)
    v[i] = randomBandlimitedField<Scalar>(grid, splitSeed(seed, i), k_lo,
                                          k_hi, spectral_slope);
  return v;
}

template <typename Scalar>
TensorField<Scalar> randomBandlimitedTensor(const Grid& grid,
                                            std::uint64_t seed, Scalar k_lo,
                                            Scalar k_hi,
                                            Scalar spectral_slope = 0) {
  TensorField<Scalar> t(grid);
  for (int i = 0; i < grid.dim(); ++i)
    for (int j = 0; j < grid.dim(); ++j)
      t(i, j) = randomBandlimitedField<Scalar>(
          grid, splitSeed(seed, 16 + i * grid.dim() + j), k_lo, k_hi,
          spectral_slope);
  return t;
}

// Divergence-free, mean-zero random velocity.
template <typename Scalar>
VectorField<Scalar> randomSolenoidalVector(const Grid& grid,
                                           std::uint64_t seed, Scalar k_lo,
                                           Scalar k_hi,
                                           Scalar spectral_slope = 0) {
  VectorField<Scalar> v = lerayProject(
      randomBandlimitedVector<Scalar>(grid, seed, k_lo, k_hi, spectral_slope));
  v.stripMean();
  return v;
}

}  // namespace veflow
