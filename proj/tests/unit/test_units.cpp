// Dimensional audit: rebuild the rate prefactors with SI dimensions tracked
// at compile time and check the numbers against the library.

#include <cmath>

#include <gtest/gtest.h>

#include "spdc/rates.hpp"
#include "test_support.hpp"
#include "units.hpp"

namespace {

using namespace spdc_test::units;
using spdc_test::rel_diff;

constexpr Quantity<JouleSecond> hbar{1.054571817e-34};
constexpr Quantity<MeterPerSecond> c{299792458.0};
constexpr Quantity<FaradPerMeter> eps0{8.8541878128e-12};

TEST(Units, ClosedFormIsAProbability) {
  const auto m = spdc_test::literal_type2();
  const auto b = spdc_test::beams_for(m);
  const Quantity<MeterPerVolt> chi{m.chi2_eff()};
  const Quantity<Meter> l1{810e-9}, l2{810e-9};
  const Scalar index{m.ng_1 * m.ng_2 * m.ng_p / (std::pow(m.n_p, 3) * m.n_1 * m.n_2 * std::abs(m.ng_1 - m.ng_2))};
  const auto p = spdc::make_overlap_params(b, 0.0);
  const Scalar shape{std::atan(p.xi_agg) / p.a_plus_b_plus};
  const Scalar pi3{64 * std::pow(std::numbers::pi, 3)};
  const auto N = pi3 * hbar * c / eps0 * index * chi * chi / (l1 * l1 * l2 * l2) * shape;
  static_assert(is_dimensionless(decltype(N){}));
  EXPECT_LT(rel_diff(N.value, spdc::pairs_closed_form(m, b).pairs_per_pump_photon), 1e-12);
}

// |psi|^2 d omega1 d omega2 must be a pure number: hbar / (eps0 l^3) times
// |O|^2 (m/V)^2 is seconds, |s|^2 another second, and the measure (rad/s)^2.
TEST(Units, JsaDensityIsPerFrequencySquared) {
  const Quantity<Meter> lp{405e-9}, l1{810e-9}, l2{810e-9};
  const auto K0 = hbar / (eps0 * lp * l1 * l2);
  const Quantity<Second> s_sq{1.0};  // |s|^2, 1/(rad/s)
  const Quantity<MeterPerVolt> chi{1.0};
  const Quantity<Meter> w{1.0};
  const Quantity<PerCubicMeter> D{1.0};
  const auto O = chi * w * w * w * D;  // overlap, m/V
  const Quantity<Hertz> dw{1.0};
  const auto dN = K0 * s_sq * O * O * dw * dw;
  static_assert(is_dimensionless(decltype(dN){}));
  SUCCEED();
}

TEST(Units, CollimatedRateIsPerSecondPerWatt) {
  const auto m = spdc_test::literal_type2();
  const Quantity<MeterPerVolt> d{m.d_eff};
  const Quantity<Hertz> wp{spdc::angular_frequency(405e-9)};
  const Quantity<Watt> P{1e-3};
  const Quantity<Meter> sigma{20e-6}, Lz{m.Lz};
  const Scalar pre{1.0 / (16 * std::numbers::pi)};
  const Scalar index{m.ng_1 * m.ng_2 / (std::pow(m.n_1 * m.n_2, 2) * m.n_p) / std::abs(m.ng_1 - m.ng_2)};
  const auto R = pre / (eps0 * c * c) * index * d * d * wp * wp * P / (sigma * sigma) * Lz;
  static_assert(std::is_same_v<decltype(R), const Quantity<Hertz>>);
  EXPECT_LT(rel_diff(R.value, spdc::collimated_limit_rates(m, 405e-9, 20e-6, m.Lz).r_sm), 1e-12);
}

}  // namespace
