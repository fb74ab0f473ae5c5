#include "pachner/lambda_omega.hpp"

#include <vector>

namespace pachner {

RationalMatrix lambda_volume_matrix() {
  RationalMatrix m(TetraKey::kCount, FaceKey::kCount);
  for (const FaceKey& f : enumerate_faces()) {
    LambdaAssignment unit;
    unit[f] = Scalar(1);
    const VolumeTable column = volumes_from_lambda(unit);
    for (const TetraKey& t : enumerate_tetras()) m(t.index(), f.index()) = column[t];
  }
  return m;
}

LambdaAssignment solve_lambda(const VolumeTable& volumes) {
  // Unknowns: the ten faces avoiding A.
  std::vector<FaceKey> free_faces;
  for (const FaceKey& f : enumerate_faces()) {
    if (!f.contains(Vertex::A)) free_faces.push_back(f);
  }
  const RationalMatrix full = lambda_volume_matrix();
  RationalMatrix system(TetraKey::kCount, free_faces.size());
  for (std::size_t r = 0; r < TetraKey::kCount; ++r) {
    for (std::size_t c = 0; c < free_faces.size(); ++c) system(r, c) = full(r, free_faces[c].index());
  }
  std::vector<Scalar> rhs(volumes.values().begin(), volumes.values().end());

  const auto solution = solve(system, rhs);
  if (!solution) throw Error(ErrorCode::InconsistentVolumes, "volume table violates a boundary relation");

  LambdaAssignment lambda;
  for (std::size_t c = 0; c < free_faces.size(); ++c) lambda[free_faces[c]] = (*solution)[c];
  return lambda;
}

LambdaAssignmentT<DualScalar> lift(const LambdaAssignment& lambda, FaceKey seed_face) {
  LambdaAssignmentT<DualScalar> lifted;
  for (const FaceKey& f : enumerate_faces()) {
    lifted[f] = dual_lift(lambda[f], f == seed_face ? Scalar(1) : Scalar(0));
  }
  return lifted;
}

bool is_flat(const LambdaAssignment& lambda) {
  const VolumeTable volumes = volumes_from_lambda(lambda);
  for (Hinge h : {Hinge::ABC, Hinge::DEF}) {
    const OmegaPair w = omega(h, volumes);
    if (!w.w1.is_zero() || !w.w2.is_zero()) return false;
  }
  return true;
}

RationalMatrix omega_jacobian(const LambdaAssignment& lambda) {
  RationalMatrix jac(4, FaceKey::kCount);
  for (const FaceKey& f : enumerate_faces()) {
    const auto volumes = volumes_from_lambda(lift(lambda, f));
    const auto abc = omega(Hinge::ABC, volumes);
    const auto def = omega(Hinge::DEF, volumes);
    jac(0, f.index()) = abc.w1.derivative();
    jac(1, f.index()) = abc.w2.derivative();
    jac(2, f.index()) = def.w1.derivative();
    jac(3, f.index()) = def.w2.derivative();
  }
  return jac;
}

std::size_t flatness_rank(const LambdaAssignment& lambda) {
  if (!is_flat(lambda)) throw Error(ErrorCode::NotFlat, "flatness_rank needs a flat point");
  return rank(omega_jacobian(lambda));
}

LambdaAssignment perturb(const LambdaAssignment& lambda, FaceKey face, const Scalar& delta) {
  LambdaAssignment out = lambda;
  out[face] += delta;
  return out;
}

}  // namespace pachner
