#include "pachner/jacobians.hpp"

#include <string>

namespace pachner {

const std::vector<FaceKey>& admissible_aux_faces() {
  static const std::vector<FaceKey> faces = [] {
    std::vector<FaceKey> out;
    for (const FaceKey& f : enumerate_faces()) {
      if (f != hinge_face(Hinge::ABC) && f != hinge_face(Hinge::DEF)) out.push_back(f);
    }
    return out;
  }();
  return faces;
}

namespace {

void require_admissible(FaceKey aux) {
  if (aux == hinge_face(Hinge::ABC) || aux == hinge_face(Hinge::DEF)) {
    throw Error(ErrorCode::BadAuxFace, "aux face " + aux.str() + " coincides with a hinge");
  }
}

}  // namespace

Scalar jacobi_unchecked(Hinge hinge, FaceKey aux, const LambdaAssignment& lambda) {
  require_admissible(aux);
  const auto by_hinge = omega_of_lambda(hinge, lift(lambda, hinge_face(hinge)));
  const auto by_aux = omega_of_lambda(hinge, lift(lambda, aux));
  return by_hinge.w1.derivative() * by_aux.w2.derivative() - by_aux.w1.derivative() * by_hinge.w2.derivative();
}

JacobiValue jacobi(Hinge hinge, FaceKey aux, const LambdaAssignment& lambda) {
  require_admissible(aux);
  if (!is_flat(lambda)) throw Error(ErrorCode::NotFlat, "jacobi needs a flat point");
  return {hinge, aux, jacobi_unchecked(hinge, aux, lambda)};
}

JacobiTable jacobi_table(const LambdaAssignment& lambda) {
  if (!is_flat(lambda)) throw Error(ErrorCode::NotFlat, "jacobi_table needs a flat point");
  JacobiTable table;
  for (const FaceKey& i : admissible_aux_faces()) {
    table.abc.push_back({Hinge::ABC, i, jacobi_unchecked(Hinge::ABC, i, lambda)});
    table.def.push_back({Hinge::DEF, i, jacobi_unchecked(Hinge::DEF, i, lambda)});
  }
  return table;
}

RatioReport check_ratio_independence(const JacobiTable& table) {
  RatioReport report;
  const std::size_t n = table.abc.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (table.abc[k].value.is_zero()) report.zero_abc.push_back(table.abc[k].aux);
    if (table.def[k].value.is_zero()) report.zero_def.push_back(table.def[k].aux);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.pairs_checked;
      const Scalar lhs = table.abc[i].value * table.def[j].value;
      const Scalar rhs = table.abc[j].value * table.def[i].value;
      if (lhs != rhs) report.violations.emplace_back(table.abc[i].aux, table.abc[j].aux);
    }
  }
  return report;
}

RatioReport check_ratio_independence(const LambdaAssignment& lambda) {
  return check_ratio_independence(jacobi_table(lambda));
}

Scalar main_relation_residual(const VolumeTable& volumes, const Scalar& j_abc, const Scalar& j_def,
                              unsigned exponent) {
  const Scalar before = volumes.get(tuple_of("ABCD")) * volumes.get(tuple_of("ABCE")) * volumes.get(tuple_of("ABCF"));
  const Scalar after = volumes.get(tuple_of("ADEF")) * volumes.get(tuple_of("BDEF")) * volumes.get(tuple_of("CDEF"));
  return pow(before, exponent) * j_abc - pow(after, exponent) * j_def;
}

Scalar check_main_relation(const LambdaAssignment& lambda, FaceKey aux, unsigned exponent) {
  const JacobiValue j_abc = jacobi(Hinge::ABC, aux, lambda);
  const Scalar j_def = jacobi_unchecked(Hinge::DEF, aux, lambda);
  return main_relation_residual(volumes_from_lambda(lambda), j_abc.value, j_def, exponent);
}

}  // namespace pachner
