#include <gtest/gtest.h>

#include "pachner/error.hpp"
#include "pachner/lambda_omega.hpp"
#include "pachner/linalg.hpp"
#include "support.hpp"

using namespace pachner;

TEST(LambdaOmega, SingleFaceGeneratesItsCofaces) {
  LambdaAssignment lambda;
  lambda[FaceKey::parse("BCD")] = Scalar(1);
  const VolumeTable vt = volumes_from_lambda(lambda);
  for (const TetraKey& t : enumerate_tetras()) {
    Scalar expected = 0;
    if (t.str() == "ABCD") expected = 1;
    if (t.str() == "BCDE" || t.str() == "BCDF") expected = -1;
    EXPECT_EQ(vt[t], expected) << t.str();
  }
}

TEST(LambdaOmega, LinearMapRank) {
  const RationalMatrix m = lambda_volume_matrix();
  EXPECT_EQ(m.rows(), 15u);
  EXPECT_EQ(m.cols(), 20u);
  EXPECT_EQ(rank(m), 10u);
}

TEST(LambdaOmega, SolveLambdaGaugeAndRoundTrip) {
  const VolumeTable vt = volume_table(canonical_configuration());
  const LambdaAssignment lambda = solve_lambda(vt);
  EXPECT_EQ(volumes_from_lambda(lambda), vt);
  for (const FaceKey& f : enumerate_faces())
    if (f.contains(Vertex::A)) EXPECT_TRUE(lambda[f].is_zero()) << f.str();
}

TEST(LambdaOmega, InconsistentVolumesAreRejected) {
  VolumeTable vt = volume_table(canonical_configuration());
  vt[TetraKey::parse("ABCD")] += Scalar(1);
  try {
    solve_lambda(vt);
    FAIL() << "expected InconsistentVolumes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentVolumes);
  }
}

TEST(LambdaOmega, PerturbedOmegaMatchesReference) {
  const LambdaAssignment flat = solve_lambda(volume_table(canonical_configuration()));
  const LambdaAssignment bumped = perturb(flat, FaceKey::parse("ABD"), Scalar(1, 7));
  const OmegaPair abc = omega_of_lambda(Hinge::ABC, bumped);
  const OmegaPair def = omega_of_lambda(Hinge::DEF, bumped);
  EXPECT_EQ(abc.w1, Scalar(36, 65));
  EXPECT_EQ(abc.w2, Scalar(-108, 65));
  EXPECT_EQ(def.w1, Scalar(0));
  EXPECT_EQ(def.w2, Scalar(12, 7));
  EXPECT_EQ(volumes_from_lambda(bumped)[TetraKey::parse("ABCD")], Scalar(13, 42));
  EXPECT_FALSE(is_flat(bumped));
}

TEST(LambdaOmega, SingularOmegaAndNotFlat) {
  LambdaAssignment zero;
  try {
    omega_of_lambda(Hinge::ABC, zero);
    FAIL() << "expected SingularOmega";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularOmega);
  }
  const LambdaAssignment flat = solve_lambda(volume_table(canonical_configuration()));
  try {
    flatness_rank(perturb(flat, FaceKey::parse("ABD"), Scalar(1, 7)));
    FAIL() << "expected NotFlat";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFlat);
  }
}

TEST(LambdaOmegaProperty, FlatPoints) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const VolumeTable vt = volume_table(testing_support::random_config(seed));
    const LambdaAssignment lambda = solve_lambda(vt);
    EXPECT_EQ(volumes_from_lambda(lambda), vt);
    EXPECT_TRUE(is_flat(lambda));
    EXPECT_EQ(flatness_rank(lambda), 3u);
    const RationalMatrix jac = omega_jacobian(lambda);
    EXPECT_EQ(jac.rows(), 4u);
    EXPECT_EQ(jac.cols(), 20u);
  }
}

TEST(LambdaOmegaProperty, GaugeShiftKeepsVolumes) {
  // Kernel elements: lambda = boundary of an edge-valued 1-cochain.
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const LambdaAssignment base = testing_support::random_flat_lambda(200 + static_cast<std::uint64_t>(trial));
    SimplexTable<Scalar, 2> mu;
    for (Scalar& v : mu.values()) v = testing_support::random_rational(rng);
    LambdaAssignment shifted = base;
    for (const FaceKey& f : enumerate_faces()) {
      const auto [x, y, z] = f.vertices();
      shifted[f] += mu.get({y, z}) - mu.get({x, z}) + mu.get({x, y});
    }
    EXPECT_EQ(volumes_from_lambda(shifted), volumes_from_lambda(base));
    EXPECT_TRUE(is_flat(shifted));
  }
}

TEST(LambdaOmegaProperty, HolonomyEncodesOmega) {
  Rng rng(8);
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    const LambdaAssignment flat = testing_support::random_flat_lambda(seed);
    const FaceKey face = enumerate_faces()[static_cast<std::size_t>(rng.uniform_int(0, 19))];
    const LambdaAssignment bumped = perturb(flat, face, Scalar(1, 7));
    const VolumeTable vt = volumes_from_lambda(bumped);
    for (const Hinge h : {Hinge::ABC, Hinge::DEF}) {
      try {
        const OmegaPair w = omega(h, vt);
        const Holonomy hol = holonomy(vt, h);
        const Scalar v = vt.get(hinge_map(h, tuple_of("ABCD")));
        EXPECT_EQ(hol.c_a, w.w1 * v);
        EXPECT_EQ(hol.c_b, w.w2 * v);
        EXPECT_EQ(hol.c_x, Scalar(1));
      } catch (const Error&) {
        // a perturbation can hit a zero volume; nothing to compare
      }
    }
  }
}

TEST(LambdaOmegaProperty, DualSeedGivesJacobianColumn) {
  const LambdaAssignment lambda = testing_support::random_flat_lambda(401);
  const RationalMatrix jac = omega_jacobian(lambda);
  for (const FaceKey& f : enumerate_faces()) {
    const auto abc = omega_of_lambda(Hinge::ABC, lift(lambda, f));
    const auto def = omega_of_lambda(Hinge::DEF, lift(lambda, f));
    EXPECT_EQ(abc.w1.derivative(), jac(0, f.index()));
    EXPECT_EQ(abc.w2.derivative(), jac(1, f.index()));
    EXPECT_EQ(def.w1.derivative(), jac(2, f.index()));
    EXPECT_EQ(def.w2.derivative(), jac(3, f.index()));
  }
}
