#include <cmath>

#include <gtest/gtest.h>

#include "mckibben/energy_audit.hpp"
#include "mckibben/errors.hpp"
#include "oracles.hpp"

namespace {

using namespace mckibben;
using oracle::deg;

const BraidSpec kUnit(0.8667282226916319, 16.0);
const double kTheta = deg(80.36937121145954);
const GaugePressure kKilopascal(1e3);

// A stroke whose volume change is not lost in cancellation.
StrokeSpec random_stroke(oracle::Sampler& s, const BraidSpec& braid) {
  for (;;) {
    const double a = s.angle_deg(1.0, 89.0);
    const double b = s.angle_deg(1.0, 89.0);
    const double dv = std::abs(oracle::volume(braid.fiber_length(), braid.turns(), b) -
                               oracle::volume(braid.fiber_length(), braid.turns(), a));
    const double vmax = std::max(oracle::volume(braid.fiber_length(), braid.turns(), a),
                                 oracle::volume(braid.fiber_length(), braid.turns(), b));
    if (dv >= 1e-3 * vmax) return StrokeSpec(a, b);
  }
}

TEST(Energy, VolumeOfResolvedFascicle) {
  EXPECT_NEAR(volume_of(kUnit, kTheta), 3.291211003717007e-5, 1e-18);
}

TEST(Energy, StrokeToSeventyDegrees) {
  const StrokeSpec stroke(kTheta, deg(70.0));
  const EnergyAudit a = audit(kUnit, stroke, kKilopascal);
  EXPECT_NEAR(a.delta_volume, 2.821337291476152e-5, 1e-18);
  EXPECT_NEAR(a.delta_length, 0.1514385109493941, 1e-15);
  EXPECT_NEAR(a.average_force, -0.1863024982079329, 1e-14);
  EXPECT_NEAR(a.energy_in, a.energy_out, 1e-15);
  const WorkIntegral w = work_integral(kUnit, stroke, kKilopascal);
  EXPECT_NEAR(w.value, -kKilopascal.pascals() * a.delta_volume, 1e-12);
}

TEST(Energy, ZeroStrokeIsZeroWork) {
  const StrokeSpec stroke(kTheta, kTheta);
  EXPECT_EQ(work_integral(kUnit, stroke, kKilopascal).value, 0.0);
  EXPECT_EQ(delta_volume(kUnit, stroke), 0.0);
  EXPECT_THROW(average_force(kKilopascal, 1e-6, 0.0), DomainError);
}

TEST(EnergyProperty, GammaFormMatchesTwoStates) {
  oracle::Sampler s(31);
  for (int i = 0; i < 1000; ++i) {
    const BraidSpec braid(s.fiber_length(), s.turns());
    const StrokeSpec stroke = random_stroke(s, braid);
    EXPECT_LT(oracle::rel(delta_volume(braid, stroke), delta_volume_two_state(braid, stroke)),
              1e-12);
  }
}

TEST(EnergyProperty, WorkEqualsMinusPressureTimesVolumeChange) {
  oracle::Sampler s(32);
  for (int i = 0; i < 200; ++i) {
    const BraidSpec braid(s.fiber_length(), s.turns());
    const StrokeSpec stroke = random_stroke(s, braid);
    const GaugePressure p(s.uniform(1e2, 1e6));
    const double dv = delta_volume(braid, stroke);
    const WorkIntegral w = work_integral(braid, stroke, p);
    EXPECT_LT(std::abs(w.value + p.pascals() * dv) / (p.pascals() * std::abs(dv)), 1e-9);
  }
}

TEST(EnergyProperty, ExtensionDrawsPositiveVolumeAndNegativeForce) {
  // Extending past the neutral angle grows the volume and pushes.
  oracle::Sampler s(33);
  for (int i = 0; i < 500; ++i) {
    const BraidSpec braid(s.fiber_length(), s.turns());
    const double t1 = s.uniform(kNeutralAngle + 0.01, kHalfPi - 0.01);
    const double t2 = s.uniform(kNeutralAngle, t1 - 0.005);
    const EnergyAudit a = audit(braid, StrokeSpec(t1, t2), kKilopascal);
    EXPECT_GT(a.delta_volume, 0.0);
    EXPECT_GT(a.delta_length, 0.0);
    EXPECT_LT(a.average_force, 0.0);
  }
}

TEST(EnergyProperty, PackMatchesEquivalent) {
  oracle::Sampler s(34);
  for (int n = 1; n <= 64; ++n) {
    const BraidSpec braid(s.fiber_length(), s.turns());
    const StrokeSpec stroke = random_stroke(s, braid);
    const PackEnergyReport r = pack_vs_equivalent_energy(braid, n, stroke, kKilopascal);
    EXPECT_TRUE(r.equal) << n;
    EXPECT_LT(r.relative_gap, 1e-12);
    EXPECT_LT(oracle::rel(r.average_force_pack, r.average_force_equivalent), 1e-12);
    EXPECT_NEAR(r.equivalent.turns(), braid.turns() / std::sqrt(double(n)), 1e-12);
  }
}

TEST(Energy, ThickWallDoesLessWorkOnExtension) {
  const StrokeSpec stroke(kTheta, deg(70.0));
  const double thin = work_integral(kUnit, stroke, kKilopascal).value;
  const double thick =
      work_integral_thick(kUnit, WallSpec::absolute(1e-3), stroke, kKilopascal).value;
  EXPECT_LT(thin, thick);
  EXPECT_LT(thick, 0.0);
}

}  // namespace
