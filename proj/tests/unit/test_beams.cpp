#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spdc/beams.hpp"
#include "spdc/constants.hpp"
#include "spdc/errors.hpp"
#include "test_support.hpp"

namespace {

using namespace spdc;
using spdc_test::rel_diff;

// Power of |g|^2 inside a disc of radius R, by an independent 2-D quadrature.
double disc_power(const GaussianMode& m, double z, double R) {
  return spdc_test::oracle::disc_integral([&](double x, double y) { return std::norm(mode_function(m, x, y, z)); }, R);
}

TEST(Beams, RayleighRangeTwoWays) {
  const auto m = make_mode(810e-9, 1.8, 30e-6);
  EXPECT_LT(rel_diff(m.rayleigh_range(), kPi * m.w0 * m.w0 * m.n / m.lambda_vac), 1e-12);
}

TEST(Beams, ModeValidation) {
  EXPECT_THROW(make_mode(0.0, 1.0, 1e-5), ValidationError);
  EXPECT_THROW(make_mode(1e-6, 1.0, 0.0), ValidationError);
  EXPECT_THROW(make_mode(1e-6, 0.5, 1e-5), ValidationError);
}

TEST(Beams, ScaledParameterAtFocus) {
  const auto m = make_mode(1.064e-6, 1.5, 25e-6, 1e-3);
  const auto q = scaled_beam_parameter(m, 1e-3);
  EXPECT_EQ(q.real(), -m.w0 * m.w0);
  EXPECT_EQ(q.imag(), 0.0);
}

TEST(Beams, ScaledParameterHandValue) {
  // k = 1e7 /m with n = 1 means lambda = 2 pi 1e-7 m.
  const auto m = make_mode(2.0 * kPi * 1e-7, 1.0, 10e-6);
  const auto q = scaled_beam_parameter(m, 1e-3);
  EXPECT_NEAR(q.real(), -1e-10, 1e-22);
  EXPECT_NEAR(q.imag(), 2e-10, 1e-22);
  // Cross-check through q = z + i z_R, q_bar = 2 i q / k.
  const auto via_q = std::complex<double>(0.0, 2.0) * complex_beam_parameter(m, 1e-3) / m.k();
  EXPECT_LT(std::abs(via_q - q), 1e-12 * std::abs(q));
}

TEST(Beams, ScaledParameterImagIncreasing) {
  const auto m = make_mode(810e-9, 1.8, 30e-6);
  double prev = -1e300;
  for (double z = -5e-3; z <= 5e-3; z += 1e-4) {
    const double im = scaled_beam_parameter(m, z).imag();
    EXPECT_GT(im, prev);
    prev = im;
  }
}

TEST(Beams, OnAxisFocusValue) {
  const auto m = make_mode(810e-9, 1.8, 30e-6);
  const double zr = m.rayleigh_range();
  const auto g = mode_function(m, 0.0, 0.0, 0.0);
  const auto expected = std::sqrt(m.k() * zr / kPi) / std::complex<double>(0.0, zr);
  EXPECT_LT(std::abs(g - expected), 1e-12 * std::abs(expected));
  EXPECT_LT(rel_diff(std::abs(g), std::sqrt(m.k() / (kPi * zr))), 1e-12);
}

TEST(Beams, WaistIntensityIsEMinusTwo) {
  const auto m = make_mode(810e-9, 1.8, 30e-6);
  const double on_axis = std::norm(mode_function(m, 0.0, 0.0, 0.0));
  const double at_waist = std::norm(mode_function(m, m.w0 / std::sqrt(2.0), m.w0 / std::sqrt(2.0), 0.0));
  EXPECT_NEAR(at_waist / on_axis, std::exp(-2.0), 1e-14);
}

TEST(Beams, ModeNormalization) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lam(0.4e-6, 2e-6), n(1.0, 2.5), w(5e-6, 200e-6), z0(-1e-3, 1e-3);
  for (int i = 0; i < 20; ++i) {
    const auto m = make_mode(lam(rng), n(rng), w(rng), z0(rng));
    const double zr = m.rayleigh_range();
    for (double z : {m.z0, m.z0 - 2 * zr, m.z0 + 2 * zr}) {
      EXPECT_NEAR(disc_power(m, z, 6.0 * beam_radius(m, z)), 1.0, 1e-8);
    }
  }
}

TEST(Beams, FocalParameter) {
  const auto m = make_mode(810e-9, 1.8, 30e-6);
  EXPECT_NEAR(focal_parameter(m, 2.0 * m.rayleigh_range()), 1.0, 1e-15);
  EXPECT_EQ(focal_parameter(m, 0.0), 0.0);
  EXPECT_LT(focal_parameter(m, 1e-9), 1e-5);
  const double Lz = 10e-3;
  EXPECT_LT(rel_diff(focal_parameter(m, Lz), Lz / (2.0 * m.rayleigh_range())), 1e-12);
  // Linear in Lz, inverse-quadratic in w0.
  EXPECT_DOUBLE_EQ(focal_parameter(m, 2 * Lz), 2 * focal_parameter(m, Lz));
  auto wide = m;
  wide.w0 *= 2;
  EXPECT_DOUBLE_EQ(focal_parameter(wide, Lz), focal_parameter(m, Lz) / 4);
}

TEST(Beams, WithFocalParameterRoundTrips) {
  const auto m = make_mode(405e-9, 2.2, 20e-6);
  const auto f = with_focal_parameter(m, 2.84, 0.02);
  EXPECT_LT(rel_diff(focal_parameter(f, 0.02), 2.84), 1e-14);
  EXPECT_THROW(with_focal_parameter(m, 0.0, 0.02), DomainError);
}

TEST(Beams, CollocatedFocusSumIsThreeW4) {
  const double w = 20e-6;
  const auto p = make_mode(405e-9, 1.0, w);
  const auto s = make_mode(810e-9, 1.0, w);
  const auto qp = scaled_beam_parameter(p, 0.0);
  const auto q1 = std::conj(scaled_beam_parameter(s, 0.0));
  const auto sum = qp * q1 + qp * q1 + q1 * q1;
  EXPECT_EQ(sum.imag(), 0.0);
  EXPECT_LT(rel_diff(sum.real(), 3.0 * std::pow(w, 4)), 1e-15);
}

TEST(Beams, TripleCarriesFocalParameters) {
  const auto b = make_beam_triple(make_mode(405e-9, 1.8, 30e-6), make_mode(810e-9, 1.75, 40e-6),
                                  make_mode(810e-9, 1.84, 41e-6), 0.01);
  EXPECT_EQ(b.xi_p, focal_parameter(b.pump, 0.01));
  EXPECT_EQ(b.xi_1, focal_parameter(b.signal, 0.01));
  EXPECT_EQ(b.xi_2, focal_parameter(b.idler, 0.01));
  EXPECT_GT(b.xi_p, 0.0);
}

}  // namespace
