#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "veflow/fft.hpp"
#include "veflow/field.hpp"
#include "veflow/grid.hpp"
#include "veflow/ops.hpp"
#include "veflow/random_fields.hpp"

using namespace veflow;

namespace {

Eigen::ArrayXd sampleFunction(const Grid& g,
                              double (*fn)(double, double, double)) {
  Eigen::ArrayXd s(g.size());
  const double h = kTwoPi / g.n();
  g.forEachMode([&](Eigen::Index flat, int, int, int) {
    auto idx = g.unravel(flat);
    s[flat] = fn(h * idx[0], h * idx[1], h * idx[2]);
  });
  return s;
}

double relErr(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("grid validates shape") {
  CHECK_THROWS_AS(Grid(4, 32), std::invalid_argument);
  CHECK_THROWS_AS(Grid(2, 24), std::invalid_argument);
  CHECK_THROWS_AS(Grid(2, 8), std::invalid_argument);
  Grid g(3, 16);
  CHECK(g.size() == 4096);
  CHECK(g.dealiasCutoff() == 5);
  CHECK(g.freq(15) == -1);
  CHECK(g.freq(7) == 7);
}

TEST_CASE("cos(x1) transforms to the two symmetric modes of value 1/2") {
  Grid g(2, 32);
  auto f = toSpectral<double>(
      g, sampleFunction(g, [](double x, double, double) { return std::cos(x); }));
  int nonzero = 0;
  g.forEachMode([&](Eigen::Index flat, int k0, int k1, int) {
    const double a = std::abs(f[flat]);
    if (a > 1e-13) {
      ++nonzero;
      CHECK(std::abs(k0) == 1);
      CHECK(k1 == 0);
      CHECK(std::abs(f[flat] - std::complex<double>(0.5, 0.0)) < 1e-14);
    }
  });
  CHECK(nonzero == 2);
}

TEST_CASE("constant field maps to a single k=0 coefficient") {
  Grid g(2, 16);
  Eigen::ArrayXd ones = Eigen::ArrayXd::Ones(g.size());
  auto f = toSpectral<double>(g, ones);
  CHECK(std::abs(f[0] - 1.0) < 1e-14);
  CHECK(std::sqrt(f.coeffs().abs2().sum() - std::norm(f[0])) < 1e-13);
}

TEST_CASE("transform rejects sample count mismatch with grid shape") {
  Grid g(2, 16);
  Eigen::ArrayXd bad = Eigen::ArrayXd::Zero(g.size() - 1);
  CHECK_THROWS_WITH_AS(toSpectral<double>(g, bad),
                       doctest::Contains("16x16"), std::invalid_argument);
}

TEST_CASE("round trip reproduces random real fields") {
  for (int dim : {2, 3}) {
    Grid g(dim, dim == 2 ? 64 : 16);
    Rng rng(7 + static_cast<unsigned>(dim));
    Eigen::ArrayXd s(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) s[i] = rng.gaussian();
    auto f = toSpectral<double>(g, s);
    // Nyquist planes are zeroed by the forward transform, so compare against
    // the Nyquist-free part of the input.
    auto back = toPhysical(f);
    auto f2 = toSpectral<double>(g, back);
    auto back2 = toPhysical(f2);
    CHECK((back - back2).abs().maxCoeff() <= 1e-12 * back.abs().maxCoeff());
    // Hermitian symmetry of the forward transform of a real field.
    const int n = g.n();
    double herm = 0;
    g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
      std::array<int, 3> conj_idx{0, 0, 0};
      const int kk[3] = {-k0, -k1, -k2};
      bool ok = true;
      for (int a = 0; a < g.dim(); ++a) {
        if (kk[a] == n / 2) ok = false;  // reflected Nyquist, zero anyway
        conj_idx[static_cast<size_t>(a)] = kk[a] >= 0 ? kk[a] : kk[a] + n;
      }
      if (!ok) return;
      herm = std::max(herm,
                      std::abs(f[flat] - std::conj(f[g.ravel(conj_idx)])));
    });
    CHECK(herm < 1e-13);
  }
}

TEST_CASE("Parseval holds for random fields") {
  Grid g(2, 32);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = randomBandlimitedField<double>(g, 1000 + trial, 1, 10);
    const double spec = normL2(f);
    const double phys = sampleNormL2(g, toPhysical(f));
    CHECK(relErr(phys, spec) <= 1e-12);
  }
}

TEST_CASE("derivative is exact on single modes and commutes") {
  Grid g(2, 32);
  auto sinx = toSpectral<double>(
      g, sampleFunction(g, [](double x, double, double) { return std::sin(x); }));
  auto cosx = toSpectral<double>(
      g, sampleFunction(g, [](double x, double, double) { return std::cos(x); }));
  auto d = deriv(sinx, 0);
  CHECK((d.coeffs() - cosx.coeffs()).abs().maxCoeff() < 1e-14);

  // field constant in x2
  auto d2 = deriv(sinx, 1);
  CHECK(d2.coeffs().abs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(deriv(sinx, 2), std::invalid_argument);

  auto f = randomBandlimitedField<double>(g, 99, 1, 10);
  auto d12 = deriv(deriv(f, 0), 1);
  auto d21 = deriv(deriv(f, 1), 0);
  double num = (d12.coeffs() - d21.coeffs()).abs().maxCoeff();
  CHECK(num <= 1e-13 * d12.coeffs().abs().maxCoeff());
}

TEST_CASE("lambda power multiplies single modes by |k|^s") {
  Grid g(2, 32);
  SpectralField<double> f(g);
  // |k| = 5 via k = (3,4)
  std::array<int, 3> idx{3, 4, 0};
  f[g.ravel(idx)] = std::complex<double>(1.0, 0.0);
  std::array<int, 3> cidx{32 - 3, 32 - 4, 0};
  f[g.ravel(cidx)] = std::complex<double>(1.0, 0.0);
  f.setRealParity(true);
  auto lf = lambdaPow(f, 1.0);
  CHECK(std::abs(lf[g.ravel(idx)] - std::complex<double>(5.0, 0.0)) < 1e-13);

  SUBCASE("Lambda^0 is the identity") {
    auto l0 = lambdaPow(f, 0.0);
    CHECK((l0.coeffs() - f.coeffs()).abs().maxCoeff() == 0.0);
  }
  SUBCASE("Lambda^{-1} Lambda^{1} is the identity on mean-zero fields") {
    auto f2 = randomBandlimitedField<double>(g, 4, 1, 10);
    auto r = lambdaPow(lambdaPow(f2, 1.0), -1.0);
    CHECK((r.coeffs() - f2.coeffs()).abs().maxCoeff() <=
          1e-12 * f2.coeffs().abs().maxCoeff());
  }
  SUBCASE("negative power rejects nonzero mean naming the gauge") {
    SpectralField<double> bad(g);
    bad[0] = 1.0;
    CHECK_THROWS_WITH_AS(lambdaPow(bad, -1.0),
                         doctest::Contains("mean-zero"),
                         std::invalid_argument);
  }
  SUBCASE("derivative commutes with lambda on mean-zero fields") {
    auto f2 = randomBandlimitedField<double>(g, 5, 1, 10);
    auto a = deriv(lambdaPow(f2, 0.7), 0);
    auto b = lambdaPow(deriv(f2, 0), 0.7);
    CHECK((a.coeffs() - b.coeffs()).abs().maxCoeff() <=
          1e-12 * a.coeffs().abs().maxCoeff());
  }
}

TEST_CASE("Leray projection") {
  Grid g(2, 32);
  SUBCASE("gradient fields map to zero") {
    auto phi = randomBandlimitedField<double>(g, 11, 1, 9);
    auto u = gradient(phi);
    auto p = lerayProject(u);
    CHECK(normL2(p) <= 1e-13 * normL2(u));
  }
  SUBCASE("divergence-free fields are unchanged and projection is idempotent") {
    auto u = randomSolenoidalVector<double>(g, 12, 1, 9);
    auto p = lerayProject(u);
    VectorFieldd diff = p - u;
    CHECK(normL2(diff) <= 1e-13 * normL2(u));
    auto pp = lerayProject(p);
    VectorFieldd diff2 = pp - p;
    CHECK(normL2(diff2) <= 1e-13 * normL2(p));
  }
  SUBCASE("projected random fields are divergence-free") {
    auto u = randomBandlimitedVector<double>(g, 13, 1, 9);
    auto p = lerayProject(u);
    CHECK(normL2(divergence(p)) <= 1e-12 * normL2(u));
  }
}

TEST_CASE("dealiased product basics") {
  Grid g(2, 32);
  SUBCASE("product with 1 preserves the retained band") {
    auto gfield = randomBandlimitedField<double>(g, 21, 1, g.dealiasCutoff());
    SpectralField<double> one(g);
    one[0] = 1.0;
    auto prod = dealiasedProduct(one, gfield);
    CHECK((prod.coeffs() - gfield.coeffs()).abs().maxCoeff() <=
          1e-13 * gfield.coeffs().abs().maxCoeff());
  }
  SUBCASE("cos^2 x = 1/2 + cos(2x)/2 exactly within the band") {
    auto c = toSpectral<double>(
        g, sampleFunction(g, [](double x, double, double) { return std::cos(x); }));
    auto prod = dealiasedProduct(c, c);
    g.forEachMode([&](Eigen::Index flat, int k0, int k1, int) {
      std::complex<double> want(0, 0);
      if (k0 == 0 && k1 == 0) want = 0.5;
      if (std::abs(k0) == 2 && k1 == 0) want = 0.25;
      CHECK(std::abs(prod[flat] - want) < 1e-14);
    });
  }
  SUBCASE("grid mismatch is rejected") {
    Grid g2(2, 64);
    SpectralField<double> a(g), b(g2);
    CHECK_THROWS_AS(dealiasedProduct(a, b), std::invalid_argument);
  }
  SUBCASE("associativity on band-limited triples") {
    // band-limit inputs so both association orders stay alias-free
    const double kb = g.dealiasCutoff() / 2.0;
    auto a = randomBandlimitedField<double>(g, 31, 1, kb);
    auto b = randomBandlimitedField<double>(g, 32, 1, kb);
    auto c = randomBandlimitedField<double>(g, 33, 1, kb);
    auto ab_c = dealiasedProduct(dealiasedProduct(a, b), c);
    auto a_bc = dealiasedProduct(a, dealiasedProduct(b, c));
    CHECK((ab_c.coeffs() - a_bc.coeffs()).abs().maxCoeff() <=
          1e-12 * std::max(1.0, ab_c.coeffs().abs().maxCoeff()));
  }
}

TEST_CASE("dealiased product equals the exact truncated convolution") {
  // Direct symbolic convolution oracle on the smallest grid.
  for (int dim : {2, 3}) {
    Grid g(dim, 16);
    const int cut = g.dealiasCutoff();
    auto a = randomBandlimitedField<double>(g, 41 + dim, 1, cut);
    auto b = randomBandlimitedField<double>(g, 42 + dim, 1, cut);
    auto prod = dealiasedProduct(a, b);

    // gather nonzero modes of a and b
    struct Mode {
      int k[3];
      std::complex<double> z;
    };
    std::vector<Mode> ma, mb;
    g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
      if (std::abs(a[flat]) > 0) ma.push_back({{k0, k1, k2}, a[flat]});
      if (std::abs(b[flat]) > 0) mb.push_back({{k0, k1, k2}, b[flat]});
    });
    double worst = 0;
    double scale = 0;
    g.forEachMode([&](Eigen::Index flat, int k0, int k1, int k2) {
      if (std::abs(k0) > cut || std::abs(k1) > cut || std::abs(k2) > cut) {
        CHECK(std::abs(prod[flat]) == 0.0);
        return;
      }
      std::complex<double> conv(0, 0);
      for (const auto& x : ma)
        for (const auto& y : mb)
          if (x.k[0] + y.k[0] == k0 && x.k[1] + y.k[1] == k1 &&
              x.k[2] + y.k[2] == k2)
            conv += x.z * y.z;
      worst = std::max(worst, std::abs(prod[flat] - conv));
      scale = std::max(scale, std::abs(conv));
    });
    CHECK(worst < 1e-13 * std::max(1.0, scale));
  }
}

TEST_CASE("det(I+E)") {
  SUBCASE("E = 0 gives det 1 everywhere") {
    Grid g(2, 16);
    TensorFieldd e(g);
    auto det = detIPlusE(e);
    CHECK((det - 1.0).abs().maxCoeff() == 0.0);
  }
  SUBCASE("constructed volume-preserving constant strain") {
    Grid g(2, 16);
    TensorFieldd e(g);
    const double aa = 0.1;
    e(0, 0)[0] = aa;
    e(1, 1)[0] = -aa / (1 + aa);
    auto det = detIPlusE(e);
    CHECK((det - 1.0).abs().maxCoeff() < 1e-14);
  }
  SUBCASE("3-D determinant against a constant matrix") {
    Grid g(3, 16);
    TensorFieldd e(g);
    // det(I+E) for E = diag(0.1, 0.2, z) with z chosen so det = 1
    const double z = 1.0 / (1.1 * 1.2) - 1.0;
    e(0, 0)[0] = 0.1;
    e(1, 1)[0] = 0.2;
    e(2, 2)[0] = z;
    auto det = detIPlusE(e);
    CHECK((det - 1.0).abs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("dilation doubles wavenumbers exactly") {
  Grid g(2, 64);
  auto f = randomBandlimitedField<double>(g, 55, 1, 10);
  auto d = dilate(f);
  g.forEachMode([&](Eigen::Index flat, int k0, int k1, int) {
    if (std::abs(f[flat]) == 0.0) return;
    std::array<int, 3> idx{2 * k0 >= 0 ? 2 * k0 : 2 * k0 + 64,
                           2 * k1 >= 0 ? 2 * k1 : 2 * k1 + 64, 0};
    CHECK(d[g.ravel(idx)] == f[flat]);
  });
  // norms preserved on the lattice
  CHECK(relErr(normL2(d), normL2(f)) < 1e-14);
  // not band-limited -> rejected
  auto wide = randomBandlimitedField<double>(g, 56, 1, 20);
  CHECK_THROWS_AS(dilate(wide), std::invalid_argument);
}

TEST_CASE("float instantiation of the core compiles and round-trips") {
  Grid g(2, 16);
  Rng rng(3);
  Eigen::ArrayXf s(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i)
    s[i] = static_cast<float>(rng.gaussian());
  auto f = toSpectral<float>(g, s);
  auto back = toPhysical(f);
  auto f2 = toSpectral<float>(g, back);
  CHECK((toPhysical(f2) - back).abs().maxCoeff() <= 1e-5f);
}
