// Periodic cubic grid on [0,2pi)^N with a symmetric integer wavenumber lattice.
#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace veflow {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// N-dimensional (N = 2 or 3) periodic grid, n points per axis, box length
// 2*pi per axis. Spectral data is stored in C order (last axis fastest) with
// the usual FFT frequency layout per axis: index i maps to wavenumber i for
// i < n/2 and i - n otherwise. The Nyquist plane k_j = -n/2 has no Hermitian
// partner on the lattice and is kept identically zero, so every retained
// wavenumber k has -k retained as well.
class Grid {
 public:
  Grid(int dim, int points_per_axis) : dim_(dim), n_(points_per_axis) {
    if (dim_ != 2 && dim_ != 3)
      throw std::invalid_argument("Grid: dim must be 2 or 3, got " +
                                  std::to_string(dim_));
    if (n_ < 16 || (n_ & (n_ - 1)) != 0)
      throw std::invalid_argument(
          "Grid: points_per_axis must be a power of two >= 16, got " +
          std::to_string(n_));
    total_ = 1;
    for (int a = 0; a < dim_; ++a) total_ *= n_;
  }

  int dim() const { return dim_; }
  int n() const { return n_; }
  Eigen::Index size() const { return total_; }
  double domainLength() const { return kTwoPi; }
  double cellVolume() const { return std::pow(kTwoPi / n_, dim_); }
  double boxVolume() const { return std::pow(kTwoPi, dim_); }

  // Largest |k_j| kept per axis (Nyquist excluded).
  int maxFreq() const { return n_ / 2 - 1; }
  // 2/3-rule cutoff: modes with any |k_j| > dealiasCutoff() are zeroed by
  // dealiased products.
  int dealiasCutoff() const { return n_ / 3; }

  int freq(int axis_index) const {
    return axis_index < n_ / 2 ? axis_index : axis_index - n_;
  }
  bool isNyquist(int axis_index) const { return axis_index == n_ / 2; }

  std::array<int, 3> unravel(Eigen::Index flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(flat % n_);
      flat /= n_;
    }
    return idx;
  }
  Eigen::Index ravel(const std::array<int, 3>& idx) const {
    Eigen::Index flat = 0;
    for (int a = 0; a < dim_; ++a) flat = flat * n_ + idx[a];
    return flat;
  }

  // Visits every lattice site as (flat index, k_0, k_1, k_2); k_2 = 0 in 2-D.
  // The Nyquist index maps to k_j = -n/2; callers treating it as a live mode
  // must check isNyquist themselves (all multiplier code keeps it zero).
  template <typename F>
  void forEachMode(F&& f) const {
    if (dim_ == 2) {
      Eigen::Index flat = 0;
      for (int i0 = 0; i0 < n_; ++i0) {
        const int k0 = freq(i0);
        for (int i1 = 0; i1 < n_; ++i1, ++flat) f(flat, k0, freq(i1), 0);
      }
    } else {
      Eigen::Index flat = 0;
      for (int i0 = 0; i0 < n_; ++i0) {
        const int k0 = freq(i0);
        for (int i1 = 0; i1 < n_; ++i1) {
          const int k1 = freq(i1);
          for (int i2 = 0; i2 < n_; ++i2, ++flat) f(flat, k0, k1, freq(i2));
        }
      }
    }
  }

  bool operator==(const Grid& o) const {
    return dim_ == o.dim_ && n_ == o.n_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

  std::string shapeString() const {
    std::string s = std::to_string(n_);
    for (int a = 1; a < dim_; ++a) s += "x" + std::to_string(n_);
    return s;
  }

 private:
  int dim_;
  int n_;
  Eigen::Index total_;
};

inline void requireSameGrid(const Grid& a, const Grid& b, const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": grid mismatch (" +
                                a.shapeString() + " vs " + b.shapeString() +
                                ")");
}

}  // namespace veflow
