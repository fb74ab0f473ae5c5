#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pachner/labels.hpp"
#include "pachner/rng.hpp"

namespace pachner {

// Floating-point only; nothing here mixes with Scalar.

using Point4 = std::array<double, 4>;

/// Points indexed by vertex A..F.
using Configuration4 = std::array<Point4, kVertexCount>;

using EdgeKey = SimplexKey<2>;

/// Squared edge lengths of the complete graph on A..F (15 edges).
class EdgeLengthVector {
 public:
  static constexpr std::size_t kCount = EdgeKey::kCount;

  EdgeLengthVector() { values_.fill(0.0); }
  explicit EdgeLengthVector(const std::array<double, kCount>& values) : values_(values) {}

  static EdgeLengthVector from_points(const Configuration4& points);

  double& operator()(Vertex u, Vertex v) { return values_[canonicalize(std::array{u, v}).key.index()]; }
  double operator()(Vertex u, Vertex v) const { return values_[canonicalize(std::array{u, v}).key.index()]; }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  const std::array<double, kCount>& values() const { return values_; }

  /// this + t * direction
  EdgeLengthVector shifted(const EdgeLengthVector& direction, double t) const;

 private:
  std::array<double, kCount> values_;
};

double oriented_volume4(const Configuration4& points, const std::array<Vertex, 5>& tuple);
double triangle_area(const Configuration4& points, FaceKey face);

/**
 * Interior dihedral angle, in (0, pi), between the two tetrahedral facets of
 * `simplex` that meet in `face`. Computed from the inverse Gram matrix of the
 * edge vectors at one face vertex. Throws NotRealizable if the Gram matrix is
 * not positive definite (the lengths span no nondegenerate 4-simplex).
 */
double dihedral_angle(const EdgeLengthVector& lengths, const std::array<Vertex, 5>& simplex, FaceKey face);

/// The three 4-simplices around a hinge, written hinge + (p, q) with (p, q)
/// running over the cycle: ABCDE, ABCEF, ABCFD for ABC and DEFAB, DEFBC,
/// DEFCA for DEF. The second-to-last is the minus-oriented simplex (-E^, -B^).
std::array<std::array<Vertex, 5>, 3> hinge_cycle(Hinge hinge);

std::array<double, 3> hinge_angles(const EdgeLengthVector& lengths, Hinge hinge);

/// eps_k per cycle simplex and the winding k with sum eps_k theta_k = 2 pi k.
struct AngleSigns {
  std::array<int, 3> eps{1, 1, 1};
  long winding = 1;
};

struct SignInference {
  AngleSigns signs;
  /// |sum eps theta - 2 pi winding| for the chosen assignment.
  double closure = 0.0;
  /// Number of assignments (up to global flip) that close to within the
  /// acceptance threshold; anything but 1 is a SignAmbiguity.
  std::size_t candidates = 0;

  bool ambiguous() const { return candidates != 1; }
};

/**
 * Chooses eps in {+-1}^3, unique up to global flip, making the eps-weighted
 * angle sum vanish mod 2 pi at the base lengths. `first_orientation` (+1 or
 * -1) fixes the global flip by setting eps of the first cycle simplex.
 */
SignInference infer_signs(const EdgeLengthVector& lengths, Hinge hinge, int first_orientation = 1,
                          double threshold = 1e-7);

/// omega = 2 pi winding - sum eps_k theta_k; zero at the base point.
double deficit_angle(const EdgeLengthVector& lengths, Hinge hinge, const AngleSigns& signs);

struct DeficitGradient {
  std::array<double, EdgeLengthVector::kCount> gradient{};
  /// Largest step h of the chosen stencil.
  double step = 0.0;
  /// ||R(h) - R(h/2)|| / ||R(h/2)||, where R(s) extrapolates twice from
  /// central differences at steps s, s/2, s/4. The gradient is R(h/2).
  double stability = 0.0;
  /// Ladder steps dropped because a stencil point was not realizable.
  int retries = 0;

  double contract(const EdgeLengthVector& direction) const;
};

/**
 * Gradient of the deficit angle with respect to the 15 squared lengths by
 * Richardson-refined central differences. Steps run down a ladder
 * h0, h0/4, h0/16, ... (`ladder` rungs, h0 = `largest_relative_step` times
 * the mean squared length); the rung with the best step-halving stability
 * wins. Rungs whose stencil leaves the realizable set are skipped; if all
 * do, throws NotRealizable.
 */
DeficitGradient deficit_gradient(const EdgeLengthVector& lengths, Hinge hinge, const AngleSigns& signs,
                                 double largest_relative_step = 1e-2, int ladder = 5);

/// Smallest |det| / (max squared edge)^2 over the six 4-simplices.
double simplex_quality(const Configuration4& points);

/// Coordinates uniform in [-1, 1]^4, resampled until simplex_quality
/// reaches `min_quality`.
Configuration4 random_configuration4(Rng& rng, double min_quality = 1e-2, std::size_t* resamples = nullptr);

/// Unit vector in R^15 (normalized uniform cube draw).
EdgeLengthVector random_direction(Rng& rng);

/// |a - b| / max(|a|, |b|), and 0 when both vanish.
double relative_residual(double a, double b);

struct EuclideanReport {
  SignInference signs_abc;
  SignInference signs_def;
  /// Oriented 4-volumes of the cycle simplices, in hinge_cycle order.
  std::array<double, 3> volumes_abc{};
  std::array<double, 3> volumes_def{};
  double area_abc = 0.0;
  double area_def = 0.0;
  double stability = 0.0;
  /// Per direction: (S_ABC, S_ABC) denominators as printed, and (S_ABC, S_DEF).
  std::vector<double> residual_same_area;
  std::vector<double> residual_own_area;

  bool sign_ambiguity() const { return signs_abc.ambiguous() || signs_def.ambiguous(); }
  double max_same_area() const;
  double max_own_area() const;
};

/**
 * Evaluates, for each perturbation direction dl,
 *   V_D^ V_-E^ V_F^ dw_ABC / S_ABC  against  V_A^ V_-B^ V_C^ dw_DEF / S
 * with S = S_ABC and with S = S_DEF. Throws NotRealizable if a base
 * simplex is degenerate.
 */
EuclideanReport check_euclidean_relation(const Configuration4& points, std::span<const EdgeLengthVector> directions);

}  // namespace pachner
