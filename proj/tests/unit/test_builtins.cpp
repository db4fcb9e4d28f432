#include <gtest/gtest.h>

#include <cmath>

#include "conic/builtins.hpp"
#include "conic/errors.hpp"

using namespace conic;

TEST(Builtins, ConeFields) {
  const ConeParam p(Rational(1, 2), 1);
  EXPECT_EQ(cone_field("const:2.5", p)(ConePoint(0.3, 1.0, {0.0})), 2.5);
  EXPECT_EQ(cone_field("chi:0.5", p)(ConePoint(0.5, 1.0, {0.0})), 1.0);
  EXPECT_EQ(cone_field("chi:0.5", p)(ConePoint(0.4, 1.0, {0.4})), 0.0);
  EXPECT_NEAR(cone_field("harmonic:1", p)(ConePoint(0.5, 0.0, {0.0})), 0.25, 1e-15);
  EXPECT_NEAR(cone_field("monic:5", p)(ConePoint(0.5, 0.0, {3.0})), 9.0, 1e-15);
  EXPECT_NEAR(cone_field("family:0:0.4", p)(ConePoint(0.0, 0.0, {0.0})), 0.0, 1e-15);
  EXPECT_NEAR(cone_field("family:1:0.4", p)(ConePoint(0.0, 0.0, {0.0})), 0.5, 1e-15);
  EXPECT_THROW(cone_field("nope", p), ParseError);
  EXPECT_THROW(cone_field("power:x:1", p), ParseError);
}

TEST(Builtins, ProfilesAreSeeded) {
  const AngularProfile a = AngularProfile::random(4), b = AngularProfile::random(4), c = AngularProfile::random(5);
  EXPECT_EQ(a.a, b.a);
  EXPECT_NE(a.a, c.a);
  EXPECT_EQ(a.b.at(0), 0.0);
}

TEST(Builtins, BoundaryAndRn) {
  EXPECT_NEAR(boundary_field("cos:2")(0.5), std::cos(1.0), 1e-15);
  EXPECT_EQ(boundary_field("const:1")(3.0), 1.0);
  const std::vector<double> x{0.6, 0.8};
  EXPECT_NEAR(rn_field("abs-power:1.5")(x), 1.0, 1e-15);
  EXPECT_THROW(rn_field("smooth:10"), ParseError);
  EXPECT_EQ(split_spec("a:b:c").size(), 3u);
}
