#pragma once

#include <array>
#include <cstddef>

#include "pachner/labels.hpp"
#include "pachner/rng.hpp"
#include "pachner/scalar.hpp"

namespace pachner {

/// Affine point (or vector) in R^3 with exact coordinates.
struct Point3 {
  Scalar x, y, z;

  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(const Scalar& k, const Point3& p) { return {k * p.x, k * p.y, k * p.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

using Vector3 = Point3;

Scalar determinant(const Vector3& u, const Vector3& v, const Vector3& w);

/// One point per vertex label A..F.
class Configuration3 {
 public:
  Configuration3() = default;
  explicit Configuration3(std::array<Point3, kVertexCount> points) : points_(std::move(points)) {}

  const Point3& operator[](Vertex v) const { return points_[index_of(v)]; }
  Point3& operator[](Vertex v) { return points_[index_of(v)]; }

  const std::array<Point3, kVertexCount>& points() const { return points_; }

 private:
  std::array<Point3, kVertexCount> points_;
};

/// A=(0,0,0) B=(1,0,0) C=(0,1,0) D=(0,0,1) E=(1,1,1) F=(2,3,5).
Configuration3 canonical_configuration();

template <typename T>
using VolumeTableT = SimplexTable<T, 4>;
using VolumeTable = VolumeTableT<Scalar>;

/// det[Q-P, R-P, S-P] / 6 for the tuple (P, Q, R, S).
Scalar oriented_volume(const Configuration3& config, const std::array<Vertex, 4>& tuple);

VolumeTable volume_table(const Configuration3& config);

/// All 15 volumes nonzero.
bool is_nondegenerate(const VolumeTable& volumes);

/**
 * Boundary relation of each 4-simplex, indexed by the omitted vertex:
 * for the remaining vertices v0 < ... < v4, sum_k (-1)^k V(v0..v4 without vk).
 * Identically zero for tables built from a configuration.
 */
std::array<Scalar, kVertexCount> check_boundary_relations(const VolumeTable& volumes);

/// Coefficients of CY = k_a * Ca + k_b * Cb + k_x * CX, where (a, b, c) are
/// the hinge vertices, read off the 4-simplex spanned by the hinge, X and Y.
struct TransportCoefficients {
  Scalar along_a;
  Scalar along_b;
  Scalar along_x;
};

/// Throws SingularTransport if V(abcX) = 0, DegenerateKey if X or Y lies on
/// the hinge or X = Y.
TransportCoefficients transport_coefficients(const VolumeTable& volumes, Hinge hinge, Vertex from, Vertex to);

/// Expresses vector cY through the base vectors ca, cb, cX.
Vector3 transport_vertex(const VolumeTable& volumes, Hinge hinge, Vertex from, Vertex to, const Vector3& ca,
                         const Vector3& cb, const Vector3& cx);

/// Result of carrying cX0 once around the hinge through X0 -> X1 -> X2 -> X0
/// (D -> E -> F -> D for ABC): cX0_new = c_a * ca + c_b * cb + c_x * cX0.
struct Holonomy {
  Scalar c_a;
  Scalar c_b;
  Scalar c_x;
};

/// Composes the three transports over the table alone; no coordinates are
/// needed, so tables that admit no embedding give a nontrivial result.
Holonomy holonomy(const VolumeTable& volumes, Hinge hinge = Hinge::ABC);

/// Integer coordinates uniform in [-range, range], resampled until the
/// volume table is nondegenerate. `resamples` receives the rejection count.
Configuration3 random_configuration(Rng& rng, int range, std::size_t* resamples = nullptr);

}  // namespace pachner
