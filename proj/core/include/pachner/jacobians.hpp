#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pachner/lambda_omega.hpp"

namespace pachner {

/// Faces other than ABC and DEF (18 of them), in enumeration order.
const std::vector<FaceKey>& admissible_aux_faces();

struct JacobiValue {
  Hinge hinge;
  FaceKey aux;
  Scalar value;
};

/**
 * det [[dw1/dl_h, dw1/dl_i], [dw2/dl_h, dw2/dl_i]] at a flat point, where
 * h is the hinge face and i = aux. Two dual passes through
 * omega_of_lambda. Throws BadAuxFace, NotFlat, SingularOmega.
 */
JacobiValue jacobi(Hinge hinge, FaceKey aux, const LambdaAssignment& lambda);

/// Same determinant without the flatness precondition; used by jacobi and
/// by harnesses that have already established flatness.
Scalar jacobi_unchecked(Hinge hinge, FaceKey aux, const LambdaAssignment& lambda);

/// J_ABC,i and J_DEF,i for every admissible i, aligned by index.
struct JacobiTable {
  std::vector<JacobiValue> abc;
  std::vector<JacobiValue> def;
};

JacobiTable jacobi_table(const LambdaAssignment& lambda);

struct RatioReport {
  std::size_t pairs_checked = 0;
  /// Pairs (i, j) with J_ABC,i * J_DEF,j != J_ABC,j * J_DEF,i.
  std::vector<std::pair<FaceKey, FaceKey>> violations;
  std::vector<FaceKey> zero_abc;
  std::vector<FaceKey> zero_def;

  bool ok() const { return violations.empty(); }
};

/// Cross-multiplied check over all unordered pairs of admissible faces.
RatioReport check_ratio_independence(const JacobiTable& table);
RatioReport check_ratio_independence(const LambdaAssignment& lambda);

/// (V_ABCD V_ABCE V_ABCF)^e J_ABC,i - (V_ADEF V_BDEF V_CDEF)^e J_DEF,i.
/// The 3->3 relation is the statement that this vanishes for e = 2.
Scalar main_relation_residual(const VolumeTable& volumes, const Scalar& j_abc, const Scalar& j_def,
                              unsigned exponent = 2);

Scalar check_main_relation(const LambdaAssignment& lambda, FaceKey aux, unsigned exponent = 2);

}  // namespace pachner
