#include "pachner/geometry3.hpp"

#include <string>

#include "pachner/error.hpp"

namespace pachner {

Scalar determinant(const Vector3& u, const Vector3& v, const Vector3& w) {
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) + u.z * (v.x * w.y - v.y * w.x);
}

Configuration3 canonical_configuration() {
  return Configuration3({Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}, Point3{1, 1, 1},
                         Point3{2, 3, 5}});
}

Scalar oriented_volume(const Configuration3& config, const std::array<Vertex, 4>& tuple) {
  permutation_sign(tuple);  // rejects repeated labels
  const Point3& p = config[tuple[0]];
  return determinant(config[tuple[1]] - p, config[tuple[2]] - p, config[tuple[3]] - p) / Scalar(6);
}

VolumeTable volume_table(const Configuration3& config) {
  VolumeTable table;
  for (const TetraKey& t : enumerate_tetras()) table[t] = oriented_volume(config, t.vertices());
  return table;
}

bool is_nondegenerate(const VolumeTable& volumes) {
  for (const Scalar& v : volumes.values()) {
    if (v.is_zero()) return false;
  }
  return true;
}

std::array<Scalar, kVertexCount> check_boundary_relations(const VolumeTable& volumes) {
  std::array<Scalar, kVertexCount> residuals;
  for (Vertex omitted : kAllVertices) {
    std::array<Vertex, 5> simplex{};
    std::size_t n = 0;
    for (Vertex v : kAllVertices) {
      if (v != omitted) simplex[n++] = v;
    }
    Scalar sum;
    for (std::size_t k = 0; k < 5; ++k) {
      std::array<Vertex, 4> facet{};
      std::size_t m = 0;
      for (std::size_t j = 0; j < 5; ++j) {
        if (j != k) facet[m++] = simplex[j];
      }
      const Scalar& v = volumes.get(facet);
      if (k % 2 == 0) {
        sum += v;
      } else {
        sum -= v;
      }
    }
    residuals[index_of(omitted)] = sum;
  }
  return residuals;
}

TransportCoefficients transport_coefficients(const VolumeTable& volumes, Hinge hinge, Vertex from, Vertex to) {
  const auto [a, b, c] = hinge_map(hinge, tuple_of("ABC"));
  const Vertex x = from;
  const Vertex y = to;
  permutation_sign(std::array{a, b, c, x, y});  // rejects X, Y on the hinge and X = Y

  const Scalar denominator = volumes.get({a, b, c, x});
  if (denominator.is_zero()) {
    throw Error(ErrorCode::SingularTransport,
                std::string("zero volume ") + to_char(a) + to_char(b) + to_char(c) + to_char(x));
  }
  return {-volumes.get({b, c, x, y}) / denominator, volumes.get({a, c, x, y}) / denominator,
          volumes.get({a, b, c, y}) / denominator};
}

Vector3 transport_vertex(const VolumeTable& volumes, Hinge hinge, Vertex from, Vertex to, const Vector3& ca,
                         const Vector3& cb, const Vector3& cx) {
  const auto k = transport_coefficients(volumes, hinge, from, to);
  return k.along_a * ca + k.along_b * cb + k.along_x * cx;
}

Holonomy holonomy(const VolumeTable& volumes, Hinge hinge) {
  const auto cycle = hinge_map(hinge, tuple_of("DEF"));

  // Current vector as coefficients over the fixed basis (ca, cb, cX0).
  Holonomy current{Scalar(0), Scalar(0), Scalar(1)};
  for (std::size_t step = 0; step < 3; ++step) {
    const auto k = transport_coefficients(volumes, hinge, cycle[step], cycle[(step + 1) % 3]);
    current = Holonomy{k.along_a + k.along_x * current.c_a, k.along_b + k.along_x * current.c_b,
                       k.along_x * current.c_x};
  }
  return current;
}

Configuration3 random_configuration(Rng& rng, int range, std::size_t* resamples) {
  std::size_t rejected = 0;
  for (;;) {
    std::array<Point3, kVertexCount> points;
    for (Point3& p : points) {
      p = Point3{Scalar(static_cast<long>(rng.uniform_int(-range, range))),
                 Scalar(static_cast<long>(rng.uniform_int(-range, range))),
                 Scalar(static_cast<long>(rng.uniform_int(-range, range)))};
    }
    Configuration3 config(points);
    if (is_nondegenerate(volume_table(config))) {
      if (resamples != nullptr) *resamples = rejected;
      return config;
    }
    ++rejected;
  }
}

}  // namespace pachner
