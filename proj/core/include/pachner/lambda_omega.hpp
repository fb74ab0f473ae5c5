#pragma once

#include <cstddef>

#include "pachner/dual.hpp"
#include "pachner/error.hpp"
#include "pachner/geometry3.hpp"
#include "pachner/labels.hpp"
#include "pachner/linalg.hpp"

namespace pachner {

/// One lambda per 2-face; reads through permuted faces pick up the sign.
template <typename T>
using LambdaAssignmentT = SimplexTable<T, 3>;
using LambdaAssignment = LambdaAssignmentT<Scalar>;

/// V_WXYZ = l_XYZ - l_WYZ + l_WXZ - l_WXY for every canonical tetrahedron.
/// The result satisfies all boundary relations identically.
template <typename T>
VolumeTableT<T> volumes_from_lambda(const LambdaAssignmentT<T>& lambda) {
  VolumeTableT<T> volumes;
  for (const TetraKey& t : enumerate_tetras()) {
    const auto [w, x, y, z] = t.vertices();
    volumes[t] = lambda.get({x, y, z}) - lambda.get({w, y, z}) + lambda.get({w, x, z}) - lambda.get({w, x, y});
  }
  return volumes;
}

/// The 15 x 20 matrix of the linear map lambda -> volumes (rows: tetras,
/// columns: faces, both in enumeration order).
RationalMatrix lambda_volume_matrix();

/**
 * Inverts volumes_from_lambda in the gauge lambda = 0 on the ten faces
 * containing A. Throws InconsistentVolumes if the table violates a
 * boundary relation (no lambda reproduces it).
 */
LambdaAssignment solve_lambda(const VolumeTable& volumes);

/// The two components of the deficit "angle" at a hinge face.
template <typename T>
struct OmegaPairT {
  T w1;
  T w2;
  Hinge hinge;
};
using OmegaPair = OmegaPairT<Scalar>;

/**
 * Deficit components at the hinge. Written for ABC:
 *   w1 = -V_BCDE/(V_ABCD V_ABCE) - V_BCEF/(V_ABCE V_ABCF) + V_BCDF/(V_ABCF V_ABCD)
 *   w2 =  V_ACDE/(V_ABCD V_ABCE) + V_ACEF/(V_ABCE V_ABCF) - V_ACDF/(V_ABCF V_ABCD)
 * For DEF every label goes through the A<->D, B<->E, C<->F map, and each
 * volume is read with the sign of the relabeled ordering.
 * Throws SingularOmega when a denominator volume is zero.
 */
template <typename T>
OmegaPairT<T> omega(Hinge hinge, const VolumeTableT<T>& volumes) {
  const auto vol = [&](const std::array<Vertex, 4>& abc_frame) { return volumes.get(hinge_map(hinge, abc_frame)); };

  const T abcd = vol(tuple_of("ABCD"));
  const T abce = vol(tuple_of("ABCE"));
  const T abcf = vol(tuple_of("ABCF"));
  if (is_zero(abcd) || is_zero(abce) || is_zero(abcf)) {
    throw Error(ErrorCode::SingularOmega, "zero denominator volume at hinge " + std::string(to_string(hinge)));
  }
  const T de = abcd * abce;
  const T ef = abce * abcf;
  const T fd = abcf * abcd;

  T w1 = -vol(tuple_of("BCDE")) / de - vol(tuple_of("BCEF")) / ef + vol(tuple_of("BCDF")) / fd;
  T w2 = vol(tuple_of("ACDE")) / de + vol(tuple_of("ACEF")) / ef - vol(tuple_of("ACDF")) / fd;
  return {std::move(w1), std::move(w2), hinge};
}

template <typename T>
OmegaPairT<T> omega_of_lambda(Hinge hinge, const LambdaAssignmentT<T>& lambda) {
  return omega(hinge, volumes_from_lambda(lambda));
}

/// Dual lift with derivative seed 1 on `seed_face` and 0 elsewhere.
LambdaAssignmentT<DualScalar> lift(const LambdaAssignment& lambda, FaceKey seed_face);

/// All four deficit components vanish. Throws SingularOmega.
bool is_flat(const LambdaAssignment& lambda);

/// 4 x 20 matrix of exact partials of (w1_ABC, w2_ABC, w1_DEF, w2_DEF) with
/// respect to the 20 lambdas, one dual pass per column.
RationalMatrix omega_jacobian(const LambdaAssignment& lambda);

/// Rank over Q of omega_jacobian at a flat point. Throws NotFlat.
std::size_t flatness_rank(const LambdaAssignment& lambda);

/// Copy of `lambda` with `delta` added on `face`.
LambdaAssignment perturb(const LambdaAssignment& lambda, FaceKey face, const Scalar& delta);

}  // namespace pachner
