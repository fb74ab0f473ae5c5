#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pachner/error.hpp"
#include "pachner/euclidean4.hpp"

using namespace pachner;

namespace {

using Vec4 = std::array<double, 4>;

Vec4 sub(const Vec4& a, const Vec4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

Vec4 reject(Vec4 v, const std::vector<Vec4>& basis) {
  for (const Vec4& e : basis) {
    const double c = dot(v, e);
    for (int i = 0; i < 4; ++i) v[i] -= c * e[i];
  }
  return v;
}

Vec4 unit(Vec4 v) {
  const double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
  return v;
}

// Angle between the two facets of a 4-simplex through a triangle, computed
// from coordinates: project the two opposite vertices onto the plane
// orthogonal to the triangle.
double coordinate_dihedral(const Configuration4& pts, const std::array<Vertex, 5>& simplex, FaceKey face) {
  std::vector<Vertex> inside;
  std::vector<Vertex> outside;
  for (Vertex v : simplex) (face.contains(v) ? inside : outside).push_back(v);
  const Vec4 origin = pts[index_of(inside[0])];
  std::vector<Vec4> basis;
  basis.push_back(unit(sub(pts[index_of(inside[1])], origin)));
  basis.push_back(unit(reject(sub(pts[index_of(inside[2])], origin), basis)));
  const Vec4 u = reject(sub(pts[index_of(outside[0])], origin), basis);
  const Vec4 w = reject(sub(pts[index_of(outside[1])], origin), basis);
  return std::acos(std::clamp(dot(u, w) / std::sqrt(dot(u, u) * dot(w, w)), -1.0, 1.0));
}

Configuration4 sample(std::uint64_t seed) {
  Rng rng(seed);
  return random_configuration4(rng);
}

}  // namespace

TEST(Euclidean4, RegularSimplexAngle) {
  EdgeLengthVector unit_lengths;
  for (std::size_t i = 0; i < EdgeLengthVector::kCount; ++i) unit_lengths[i] = 1.0;
  const double theta = dihedral_angle(unit_lengths, tuple_of("ABCDE"), FaceKey::parse("ABC"));
  EXPECT_NEAR(theta, std::acos(0.25), 1e-12);

  // Same simplex from explicit coordinates.
  const double a = (1.0 - std::sqrt(5.0)) / 4.0;
  Configuration4 pts{};
  pts[0] = {1, 0, 0, 0};
  pts[1] = {0, 1, 0, 0};
  pts[2] = {0, 0, 1, 0};
  pts[3] = {0, 0, 0, 1};
  pts[4] = {a, a, a, a};
  pts[5] = {9, 9, 9, 9};
  EXPECT_NEAR(coordinate_dihedral(pts, tuple_of("ABCDE"), FaceKey::parse("CDE")), std::acos(0.25), 1e-12);
}

TEST(Euclidean4, LengthAnglesMatchCoordinateAngles) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Configuration4 pts = sample(seed);
    const EdgeLengthVector lengths = EdgeLengthVector::from_points(pts);
    for (const Hinge h : {Hinge::ABC, Hinge::DEF}) {
      const auto cycle = hinge_cycle(h);
      const auto angles = hinge_angles(lengths, h);
      for (std::size_t k = 0; k < 3; ++k)
        EXPECT_NEAR(angles[k], coordinate_dihedral(pts, cycle[k], hinge_face(h)), 1e-10);
    }
  }
}

TEST(Euclidean4, DegenerateLengthsAreNotRealizable) {
  EdgeLengthVector lengths;
  for (std::size_t i = 0; i < EdgeLengthVector::kCount; ++i) lengths[i] = 1.0;
  lengths(Vertex::A, Vertex::B) = 4.0;  // |AB| = 2 breaks the triangle inequality with unit sides
  try {
    dihedral_angle(lengths, tuple_of("ABCDE"), FaceKey::parse("CDE"));
    FAIL() << "expected NotRealizable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRealizable);
  }
}

TEST(Euclidean4, HingeCycles) {
  const auto abc = hinge_cycle(Hinge::ABC);
  EXPECT_EQ(abc[0], tuple_of("ABCDE"));
  EXPECT_EQ(abc[1], tuple_of("ABCEF"));
  EXPECT_EQ(abc[2], tuple_of("ABCFD"));
  const auto def = hinge_cycle(Hinge::DEF);
  EXPECT_EQ(def[0], tuple_of("DEFAB"));
}

TEST(Euclidean4, SignsFollowOrientationAndCloseAtBase) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Configuration4 pts = sample(seed);
    const EdgeLengthVector lengths = EdgeLengthVector::from_points(pts);
    for (const Hinge h : {Hinge::ABC, Hinge::DEF}) {
      const auto cycle = hinge_cycle(h);
      const int first = oriented_volume4(pts, cycle[0]) > 0 ? 1 : -1;
      const SignInference inf = infer_signs(lengths, h, first);
      ASSERT_FALSE(inf.ambiguous()) << seed;
      EXPECT_LT(inf.closure, 1e-9);
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(inf.signs.eps[k], oriented_volume4(pts, cycle[k]) > 0 ? 1 : -1);
      EXPECT_NEAR(deficit_angle(lengths, h, inf.signs), 0.0, 1e-9);
    }
  }
}

TEST(Euclidean4, GradientProperties) {
  const Configuration4 pts = sample(77);
  const EdgeLengthVector lengths = EdgeLengthVector::from_points(pts);
  const AngleSigns signs = infer_signs(lengths, Hinge::ABC, oriented_volume4(pts, hinge_cycle(Hinge::ABC)[0]) > 0 ? 1 : -1).signs;
  const DeficitGradient g = deficit_gradient(lengths, Hinge::ABC, signs);
  EXPECT_LT(g.stability, 1e-6);
  EXPECT_EQ(g.contract(EdgeLengthVector{}), 0.0);

  // Coarser ladder agrees with the default one.
  const DeficitGradient coarse = deficit_gradient(lengths, Hinge::ABC, signs, 2e-2, 5);
  for (std::size_t i = 0; i < EdgeLengthVector::kCount; ++i) EXPECT_NEAR(coarse.gradient[i], g.gradient[i], 1e-6);

  // Angles are scale-free, so d(omega)/d(l^2) scales as 1/s^2 under l -> s l.
  EdgeLengthVector scaled = lengths;
  for (std::size_t i = 0; i < EdgeLengthVector::kCount; ++i) scaled[i] *= 9.0;
  const DeficitGradient gs = deficit_gradient(scaled, Hinge::ABC, signs);
  for (std::size_t i = 0; i < EdgeLengthVector::kCount; ++i) EXPECT_NEAR(gs.gradient[i] * 9.0, g.gradient[i], 1e-6);
}

TEST(Euclidean4, RelationFavoursOwnArea) {
  Rng rng(31);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::vector<EdgeLengthVector> dirs;
    for (int k = 0; k < 5; ++k) dirs.push_back(random_direction(rng));
    const EuclideanReport report = check_euclidean_relation(sample(seed), dirs);
    ASSERT_FALSE(report.sign_ambiguity());
    EXPECT_LT(report.max_own_area(), 1e-6);
    EXPECT_GT(report.max_same_area(), 1e-6);
  }
}

TEST(Euclidean4, RelativeResidual) {
  EXPECT_EQ(relative_residual(0.0, 0.0), 0.0);
  EXPECT_NEAR(relative_residual(1.0, 1.0 + 1e-9), 1e-9, 1e-12);
}
