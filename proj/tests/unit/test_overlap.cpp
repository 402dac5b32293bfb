#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spdc/errors.hpp"
#include "spdc/overlap.hpp"
#include "test_support.hpp"

namespace {

using namespace spdc;
using spdc_test::rel_diff;
using cplx = std::complex<double>;

FocusingGeometry random_geometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> k(5e6, 4e7), lx(std::log(0.01), std::log(10.0));
  return {k(rng), k(rng), k(rng), std::exp(lx(rng)), std::exp(lx(rng)), std::exp(lx(rng))};
}

FocusingGeometry swapped(const FocusingGeometry& g) { return {g.k_p, g.k_2, g.k_1, g.xi_p, g.xi_2, g.xi_1}; }

FocusingGeometry equal_focus(double k1, double k2, double xi) { return {k1 + k2, k1, k2, xi, xi, xi}; }

TEST(Overlap, AggregateFocalParameterLimits) {
  EXPECT_DOUBLE_EQ(aggregate_focal_parameter(equal_focus(1.3e7, 1.4e7, 0.7)), 0.7);
  const FocusingGeometry plane_pump{2.7e7, 1.3e7, 1.4e7, 1e-14, 0.9, 0.9};
  EXPECT_NEAR(aggregate_focal_parameter(plane_pump), 0.9, 1e-12);
  EXPECT_THROW(aggregate_focal_parameter(FocusingGeometry{1, 1, 1, 0, 0, 0}), DegenerateError);
}

TEST(Overlap, SignalIdlerExchangeSymmetry) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_geometry(rng);
    EXPECT_LT(rel_diff(aggregate_focal_parameter(g), aggregate_focal_parameter(swapped(g))), 1e-14);
    EXPECT_LT(rel_diff(a_plus_b_plus(g), a_plus_b_plus(swapped(g))), 1e-14);
  }
}

TEST(Overlap, QuadraticCoefficient) {
  EXPECT_EQ(quadratic_coefficient(equal_focus(1.3e7, 1.4e7, 2.0)), 0.0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_geometry(rng);
    const double C = quadratic_coefficient(g);
    EXPECT_EQ(C > 0, g.k_p - g.k_1 - g.k_2 > 0);
    // C * [numerator]^2 against the numerator product written out term by term.
    const double num = g.k_1 * g.xi_1 * g.xi_2 - g.k_1 * g.xi_1 * g.xi_p + g.k_2 * g.xi_2 * g.xi_1 -
                       g.k_2 * g.xi_2 * g.xi_p + g.k_p * g.xi_p * g.xi_1 + g.k_p * g.xi_p * g.xi_2;
    const double product = (g.k_p - g.k_1 - g.k_2) * g.xi_1 * g.xi_2 * g.xi_p *
                           (g.k_1 * g.xi_1 + g.k_2 * g.xi_2 + g.k_p * g.xi_p);
    EXPECT_LT(std::abs(C * num * num - product), 1e-12 * std::abs(product));
  }
}

TEST(Overlap, NormalizationCoefficient) {
  const double k1 = 1.4e7;
  const double xi = 0.8;
  const double Lz = 0.01;
  // Equal foci, kp = 2 k1: D = k1 k1 2k1 xi^3 / (Lz 4 k1 xi) = k1^2 xi^2 / (2 Lz).
  EXPECT_LT(rel_diff(normalization_coefficient(equal_focus(k1, k1, xi), Lz), k1 * k1 * xi * xi / (2 * Lz)), 1e-14);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto g = random_geometry(rng);
    const double D = normalization_coefficient(g, Lz);
    EXPECT_GT(D, 0.0);
    g.xi_p *= 2;
    g.xi_1 *= 2;
    g.xi_2 *= 2;
    EXPECT_LT(rel_diff(normalization_coefficient(g, Lz), 4 * D), 1e-14);
  }
  EXPECT_THROW(normalization_coefficient(equal_focus(k1, k1, xi), 0.0), DomainError);
}

TEST(Overlap, APlusBPlus) {
  EXPECT_NEAR(a_plus_b_plus(equal_focus(1.3e7, 1.4e7, 0.3)), 4.0, 1e-14);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_geometry(rng);
    const double sum = g.k_1 * g.xi_1 + g.k_2 * g.xi_2 + g.k_p * g.xi_p;
    const double expected = g.k_p * g.k_p * g.xi_1 * g.xi_2 * g.xi_p / (sum * sum);
    EXPECT_LT(rel_diff(aggregate_focal_parameter(g) / a_plus_b_plus(g), expected), 1e-12);
    // Homogeneous of degree 0 in the xi_j.
    const double ab = a_plus_b_plus(g);
    g.xi_p *= 3.5;
    g.xi_1 *= 3.5;
    g.xi_2 *= 3.5;
    EXPECT_LT(rel_diff(a_plus_b_plus(g), ab), 1e-13);
  }
  EXPECT_THROW(a_plus_b_plus(FocusingGeometry{2, 1, 1, 1, 0, 1}), DegenerateError);
}

TEST(Overlap, PhaseMismatch) {
  const double c = 299792458.0;
  EXPECT_EQ(phase_mismatch_phi(0, 0, 2.0, 1.8, 1.9, 0.01, c), 0.0);
  const double dwm = 3e11;
  EXPECT_DOUBLE_EQ(phase_mismatch_phi(0, dwm, 2.0, 1.8, 1.9, 0.01, c), (1.8 - 1.9) / (2 * c) * dwm * 0.01);
  EXPECT_DOUBLE_EQ(phase_mismatch_phi(0, 2 * dwm, 2.0, 1.8, 1.9, 0.01, c),
                   2 * phase_mismatch_phi(0, dwm, 2.0, 1.8, 1.9, 0.01, c));
  EXPECT_EQ(phase_mismatch_phi(0, dwm, 2.0, 1.85, 1.85, 0.01, c), 0.0);
  EXPECT_EQ(phase_mismatch_phi(0, 0, 2.0, 1.8, 1.9, 0.01, c, 0.25), 0.25);
}

TEST(Overlap, AxialArctanIdentity) {
  for (double xi : {0.1, 1.0, 10.0}) {
    const cplx v = axial_integral(xi, 0.0, 0.0, 1e-13);
    EXPECT_NEAR(v.real(), spdc_test::oracle::lorentz_integral(xi), 1e-10);
    EXPECT_NEAR(v.imag(), 0.0, 1e-10);
  }
  EXPECT_NEAR(axial_integral(1.0, 0.0, 0.0, 1e-13).real(), kPi / 2, 1e-10);
  EXPECT_NEAR(axial_integral(1e-9, 0.0, 0.0, 1e-12).real(), 2.0, 1e-12);
}

TEST(Overlap, AxialMatchesIndependentQuadrature) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> lx(std::log(0.01), std::log(10.0)), C(-0.2, 0.2), phi(-60.0, 60.0);
  for (int i = 0; i < 30; ++i) {
    const double xi = std::exp(lx(rng));
    const double c = C(rng);
    const double p = phi(rng);
    const cplx lib = axial_integral(xi, c, p, 1e-11);
    const cplx ref = spdc_test::oracle::axial(xi, c, p);
    EXPECT_LT(std::abs(lib - ref), 1e-9 * std::abs(ref)) << xi << ' ' << c << ' ' << p;
  }
}

TEST(Overlap, AxialRejectsNonFiniteParameters) {
  EXPECT_THROW(axial_integral(std::nan(""), 0.0, 0.0, 1e-9), SingularityError);
  EXPECT_THROW(axial_integral(1.0, INFINITY, 0.0, 1e-9), SingularityError);
  EXPECT_THROW(axial_integral(1.0, 0.0, 0.0, 0.0), DomainError);
}

// Beams with prescribed focal parameters for a literal-index crystal.
BeamTriple beams_with_xi(const MaterialOptics& m, double xi_p, double xi_1, double xi_2) {
  auto b = spdc_test::beams_for(m);
  return make_beam_triple(with_focal_parameter(b.pump, xi_p, m.Lz), with_focal_parameter(b.signal, xi_1, m.Lz),
                          with_focal_parameter(b.idler, xi_2, m.Lz), m.Lz);
}

TEST(Overlap, DirectEqualsSimplifiedOnRandomConfigurations) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> lx(std::log(0.01), std::log(10.0)), n(1.5, 2.4), dk(-3000.0, 3000.0);
  const double tol = 1e-9;
  for (int i = 0; i < 10; ++i) {
    auto m = spdc_test::literal_type2();
    m.n_p = n(rng);
    m.n_1 = n(rng);
    m.n_2 = n(rng);
    const auto b = beams_with_xi(m, std::exp(lx(rng)), std::exp(lx(rng)), std::exp(lx(rng)));
    const double delta_k = dk(rng);
    const cplx direct = overlap_direct(b, m, delta_k, tol);
    const auto p = make_overlap_params(b, delta_k);
    const cplx simple = overlap_simplified(p, m.chi2_eff(), b.pump.w0, b.signal.w0, b.idler.w0, m.Lz, tol);
    EXPECT_LE(std::abs(direct - simple), 3.0 * (2.0 * tol) * std::abs(direct))
        << "xi " << b.xi_p << ' ' << b.xi_1 << ' ' << b.xi_2 << " C " << p.C_quad;
  }
}

TEST(Overlap, ZeroNonlinearityGivesZero) {
  auto m = spdc_test::literal_type2(0.0);
  const auto b = spdc_test::beams_for(m);
  EXPECT_EQ(overlap_direct(b, m, 100.0), cplx(0.0, 0.0));
}

TEST(Overlap, LinearInChi) {
  auto m = spdc_test::literal_type2();
  const auto b = spdc_test::beams_for(m);
  const cplx o1 = overlap_direct(b, m, 250.0);
  m.d_eff *= 3.0;
  const cplx o3 = overlap_direct(b, m, 250.0);
  EXPECT_EQ(o3, 3.0 * o1);
}

TEST(Overlap, CollimatedSincSuppression) {
  const auto m = spdc_test::literal_type2();
  const auto b = beams_with_xi(m, 0.01, 0.01, 0.01);
  const double ref = std::abs(overlap_direct(b, m, 0.0));
  // Sinc side-lobe maxima, phi / 2 = (j + 1/2) pi.
  for (int j = 3; j <= 9; ++j) {
    const double dk = 2.0 * (j + 0.5) * kPi / m.Lz;
    const double ratio = std::abs(overlap_direct(b, m, dk)) / ref;
    const double expected = std::abs(spdc_test::oracle::sinc(0.5 * dk * m.Lz));
    EXPECT_LT(std::abs(ratio / expected - 1.0), 0.02) << j;
  }
}

TEST(Overlap, QuasiPhaseMatchingPeak) {
  auto m = spdc_test::literal_type2(2.4e-12, 1e-3);
  m.poling_period = 10e-6;
  const auto b = beams_with_xi(m, 0.01, 0.01, 0.01);
  const double K = 2.0 * kPi / *m.poling_period;
  const double step = 2e-3 * K;
  double best = -1;
  double best_dk = 0;
  for (int i = -20; i <= 20; ++i) {
    const double dk = K + i * step;
    const double v = std::abs(overlap_direct(b, m, dk));
    if (v > best) {
      best = v;
      best_dk = dk;
    }
  }
  EXPECT_LE(std::abs(best_dk - K), step);
}

TEST(Overlap, PoledIntegralMatchesDomainSum) {
  auto m = spdc_test::literal_type2(2.4e-12, 1e-3);
  m.poling_period = 10e-6;
  const auto b = beams_with_xi(m, 1e-8, 1e-8, 1e-8);
  const double dk = 2.0 * kPi / *m.poling_period + 1500.0;
  // Collimated: the denominator is 3 w^4 times a constant, so O is the poled
  // phase integral times -i chi sqrt(8/pi) w_p w_1 w_2 / (q-sum at focus).
  const auto qp = scaled_beam_parameter(b.pump, 0.0);
  const auto q1 = std::conj(scaled_beam_parameter(b.signal, 0.0));
  const auto q2 = std::conj(scaled_beam_parameter(b.idler, 0.0));
  const cplx den = qp * q1 + qp * q2 + q1 * q2;
  const cplx expected = cplx{0.0, -1.0} * m.chi2_eff() * std::sqrt(8.0 / kPi) * b.pump.w0 * b.signal.w0 *
                        b.idler.w0 * spdc_test::oracle::poled_phase_integral(dk, *m.poling_period, m.Lz) / den;
  EXPECT_LT(std::abs(overlap_direct(b, m, dk) - expected), 1e-6 * std::abs(expected));
}

}  // namespace
