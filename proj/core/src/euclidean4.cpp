#include "pachner/euclidean4.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "pachner/error.hpp"

namespace pachner {

namespace {

using Matrix4 = std::array<std::array<double, 4>, 4>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double determinant4(Matrix4 m) {
  double det = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Lower-triangular Cholesky factor; false if `g` is not safely positive
// definite relative to its largest diagonal entry.
bool cholesky(const Matrix4& g, Matrix4& l) {
  double scale = 0.0;
  for (std::size_t i = 0; i < 4; ++i) scale = std::max(scale, std::abs(g[i][i]));
  if (scale == 0.0) return false;
  l = {};
  for (std::size_t j = 0; j < 4; ++j) {
    double d = g[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (!(d > 1e-12 * scale)) return false;
    l[j][j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < 4; ++i) {
      double s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = s / l[j][j];
    }
  }
  return true;
}

// Dual basis vector w_k (w_k . e_i = delta_ki) in the orthonormal frame in
// which the edge vectors e_i are the rows of the Cholesky factor `l`.
std::array<double, 4> dual_vector(const Matrix4& l, std::size_t k) {
  std::array<double, 4> w{};
  for (std::size_t i = 0; i < 4; ++i) {
    double s = (i == k) ? 1.0 : 0.0;
    for (std::size_t j = 0; j < i; ++j) s -= l[i][j] * w[j];
    w[i] = s / l[i][i];
  }
  return w;
}

double dot(const Point4& a, const Point4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

Point4 sub(const Point4& a, const Point4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

double norm(const std::array<double, EdgeLengthVector::kCount>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

EdgeLengthVector EdgeLengthVector::from_points(const Configuration4& points) {
  EdgeLengthVector out;
  for (const EdgeKey& e : all_keys<2>()) {
    const auto [u, v] = e.vertices();
    const Point4 d = sub(points[index_of(u)], points[index_of(v)]);
    out.values_[e.index()] = dot(d, d);
  }
  return out;
}

EdgeLengthVector EdgeLengthVector::shifted(const EdgeLengthVector& direction, double t) const {
  EdgeLengthVector out = *this;
  for (std::size_t i = 0; i < kCount; ++i) out.values_[i] += t * direction.values_[i];
  return out;
}

double oriented_volume4(const Configuration4& points, const std::array<Vertex, 5>& tuple) {
  permutation_sign(tuple);
  const Point4& p = points[index_of(tuple[0])];
  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r) m[r] = sub(points[index_of(tuple[r + 1])], p);
  return determinant4(m) / 24.0;
}

double triangle_area(const Configuration4& points, FaceKey face) {
  const auto [a, b, c] = face.vertices();
  const Point4 u = sub(points[index_of(b)], points[index_of(a)]);
  const Point4 v = sub(points[index_of(c)], points[index_of(a)]);
  const double g = dot(u, u) * dot(v, v) - dot(u, v) * dot(u, v);
  return 0.5 * std::sqrt(std::max(g, 0.0));
}

double dihedral_angle(const EdgeLengthVector& lengths, const std::array<Vertex, 5>& simplex, FaceKey face) {
  permutation_sign(simplex);
  std::array<Vertex, 5> order{};
  std::size_t n = 0;
  for (Vertex v : face.vertices()) order[n++] = v;
  for (Vertex v : simplex) {
    if (!face.contains(v)) {
      if (n == 5) break;
      order[n++] = v;
    }
  }
  std::size_t on_face = 0;
  for (Vertex v : simplex) on_face += face.contains(v) ? 1 : 0;
  if (on_face != 3) throw Error(ErrorCode::DegenerateKey, "face " + face.str() + " is not a face of the simplex");

  // Gram matrix of edge vectors from order[0] via the polarization identity.
  const Vertex apex = order[0];
  const auto sq = [&](Vertex u, Vertex v) { return u == v ? 0.0 : lengths(u, v); };
  Matrix4 gram;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      gram[i][j] = 0.5 * (sq(apex, order[i + 1]) + sq(apex, order[j + 1]) - sq(order[i + 1], order[j + 1]));
    }
  }
  Matrix4 chol;
  if (!cholesky(gram, chol)) throw Error(ErrorCode::NotRealizable, "squared lengths span no 4-simplex");

  // w_p and w_q are inward normals of the facets opposite p and q; the
  // interior angle is pi minus the angle between them. Half-angle form
  // stays accurate near 0 and pi, unlike acos.
  auto u = dual_vector(chol, 2);
  auto v = dual_vector(chol, 3);
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  Point4 sum{};
  Point4 diff{};
  for (std::size_t i = 0; i < 4; ++i) {
    sum[i] = u[i] / nu + v[i] / nv;
    diff[i] = u[i] / nu - v[i] / nv;
  }
  return 2.0 * std::atan2(std::sqrt(dot(sum, sum)), std::sqrt(dot(diff, diff)));
}

std::array<std::array<Vertex, 5>, 3> hinge_cycle(Hinge hinge) {
  const auto [a, b, c] = hinge_map(hinge, tuple_of("ABC"));
  const auto x = hinge_map(hinge, tuple_of("DEF"));
  std::array<std::array<Vertex, 5>, 3> cycle{};
  for (std::size_t k = 0; k < 3; ++k) cycle[k] = {a, b, c, x[k], x[(k + 1) % 3]};
  return cycle;
}

std::array<double, 3> hinge_angles(const EdgeLengthVector& lengths, Hinge hinge) {
  const auto cycle = hinge_cycle(hinge);
  const FaceKey face = hinge_face(hinge);
  return {dihedral_angle(lengths, cycle[0], face), dihedral_angle(lengths, cycle[1], face),
          dihedral_angle(lengths, cycle[2], face)};
}

SignInference infer_signs(const EdgeLengthVector& lengths, Hinge hinge, int first_orientation, double threshold) {
  const auto theta = hinge_angles(lengths, hinge);
  SignInference best;
  best.closure = INFINITY;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const double sum = theta[0] + s1 * theta[1] + s2 * theta[2];
      const long winding = std::lround(sum / kTwoPi);
      const double closure = std::abs(sum - kTwoPi * static_cast<double>(winding));
      if (closure < threshold) ++best.candidates;
      if (closure < best.closure) {
        best.closure = closure;
        best.signs = AngleSigns{{1, s1, s2}, winding};
      }
    }
  }
  if (first_orientation < 0) {
    for (int& e : best.signs.eps) e = -e;
    best.signs.winding = -best.signs.winding;
  }
  return best;
}

double deficit_angle(const EdgeLengthVector& lengths, Hinge hinge, const AngleSigns& signs) {
  const auto theta = hinge_angles(lengths, hinge);
  double sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) sum += signs.eps[k] * theta[k];
  return kTwoPi * static_cast<double>(signs.winding) - sum;
}

double DeficitGradient::contract(const EdgeLengthVector& direction) const {
  double s = 0.0;
  for (std::size_t i = 0; i < gradient.size(); ++i) s += gradient[i] * direction[i];
  return s;
}

namespace {

// Two-level Richardson extrapolation of central differences at h, h/2, h/4,
// h/8; throws NotRealizable if any stencil point leaves the realizable set.
DeficitGradient richardson_gradient(const EdgeLengthVector& lengths, Hinge hinge, const AngleSigns& signs,
                                    double h) {
  std::array<double, EdgeLengthVector::kCount> coarse{};
  std::array<double, EdgeLengthVector::kCount> fine{};
  for (std::size_t k = 0; k < EdgeLengthVector::kCount; ++k) {
    EdgeLengthVector unit;
    unit[k] = 1.0;
    const auto central = [&](double step) {
      return (deficit_angle(lengths.shifted(unit, step), hinge, signs) -
              deficit_angle(lengths.shifted(unit, -step), hinge, signs)) /
             (2.0 * step);
    };
    std::array<double, 4> c{};
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = central(h / static_cast<double>(1U << j));
    std::array<double, 3> r1{};
    for (std::size_t j = 0; j < r1.size(); ++j) r1[j] = (4.0 * c[j + 1] - c[j]) / 3.0;
    std::array<double, 2> r2{};
    for (std::size_t j = 0; j < r2.size(); ++j) r2[j] = (16.0 * r1[j + 1] - r1[j]) / 15.0;
    coarse[k] = r2[0];
    fine[k] = r2[1];
  }
  std::array<double, EdgeLengthVector::kCount> diff{};
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = coarse[k] - fine[k];
  const double scale = norm(fine);
  DeficitGradient out;
  out.gradient = fine;
  out.step = h;
  out.stability = scale > 0.0 ? norm(diff) / scale : norm(diff);
  return out;
}

}  // namespace

DeficitGradient deficit_gradient(const EdgeLengthVector& lengths, Hinge hinge, const AngleSigns& signs,
                                 double largest_relative_step, int ladder) {
  double mean = 0.0;
  for (double v : lengths.values()) mean += v;
  mean /= static_cast<double>(EdgeLengthVector::kCount);

  std::optional<DeficitGradient> best;
  int rejected = 0;
  double h = largest_relative_step * mean;
  for (int level = 0; level < ladder; ++level, h *= 0.25) {
    try {
      DeficitGradient candidate = richardson_gradient(lengths, hinge, signs, h);
      if (!best || candidate.stability < best->stability) best = candidate;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotRealizable) throw;
      ++rejected;
    }
  }
  if (!best) throw Error(ErrorCode::NotRealizable, "every finite-difference stencil leaves the realizable set");
  best->retries = rejected;
  return *best;
}

double simplex_quality(const Configuration4& points) {
  double max_sq = 0.0;
  const auto lengths = EdgeLengthVector::from_points(points);
  for (double v : lengths.values()) max_sq = std::max(max_sq, v);
  if (max_sq == 0.0) return 0.0;
  double worst = INFINITY;
  for (Vertex omitted : kAllVertices) {
    std::array<Vertex, 5> simplex{};
    std::size_t n = 0;
    for (Vertex v : kAllVertices) {
      if (v != omitted) simplex[n++] = v;
    }
    worst = std::min(worst, std::abs(24.0 * oriented_volume4(points, simplex)));
  }
  return worst / (max_sq * max_sq);
}

Configuration4 random_configuration4(Rng& rng, double min_quality, std::size_t* resamples) {
  std::size_t rejected = 0;
  for (;;) {
    Configuration4 points{};
    for (Point4& p : points) {
      for (double& x : p) x = rng.uniform(-1.0, 1.0);
    }
    if (simplex_quality(points) >= min_quality) {
      if (resamples != nullptr) *resamples = rejected;
      return points;
    }
    ++rejected;
  }
}

EdgeLengthVector random_direction(Rng& rng) {
  std::array<double, EdgeLengthVector::kCount> v{};
  double n = 0.0;
  while (n < 1e-3) {
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    n = norm(v);
  }
  for (double& x : v) x /= n;
  return EdgeLengthVector(v);
}

double relative_residual(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double EuclideanReport::max_same_area() const {
  double m = 0.0;
  for (double r : residual_same_area) m = std::max(m, r);
  return m;
}

double EuclideanReport::max_own_area() const {
  double m = 0.0;
  for (double r : residual_own_area) m = std::max(m, r);
  return m;
}

EuclideanReport check_euclidean_relation(const Configuration4& points, std::span<const EdgeLengthVector> directions) {
  EuclideanReport report;
  for (Hinge h : {Hinge::ABC, Hinge::DEF}) {
    const auto cycle = hinge_cycle(h);
    auto& volumes = h == Hinge::ABC ? report.volumes_abc : report.volumes_def;
    for (std::size_t k = 0; k < 3; ++k) {
      volumes[k] = oriented_volume4(points, cycle[k]);
      if (volumes[k] == 0.0) throw Error(ErrorCode::NotRealizable, "degenerate 4-simplex");
    }
  }
  report.area_abc = triangle_area(points, hinge_face(Hinge::ABC));
  report.area_def = triangle_area(points, hinge_face(Hinge::DEF));

  const auto lengths = EdgeLengthVector::from_points(points);
  report.signs_abc = infer_signs(lengths, Hinge::ABC, report.volumes_abc[0] > 0 ? 1 : -1);
  report.signs_def = infer_signs(lengths, Hinge::DEF, report.volumes_def[0] > 0 ? 1 : -1);

  const auto grad_abc = deficit_gradient(lengths, Hinge::ABC, report.signs_abc.signs);
  const auto grad_def = deficit_gradient(lengths, Hinge::DEF, report.signs_def.signs);
  report.stability = std::max(grad_abc.stability, grad_def.stability);

  const double weight_abc = report.volumes_abc[0] * report.volumes_abc[1] * report.volumes_abc[2];
  const double weight_def = report.volumes_def[0] * report.volumes_def[1] * report.volumes_def[2];
  for (const EdgeLengthVector& dl : directions) {
    const double lhs = weight_abc * grad_abc.contract(dl) / report.area_abc;
    const double rhs = weight_def * grad_def.contract(dl);
    report.residual_same_area.push_back(relative_residual(lhs, rhs / report.area_abc));
    report.residual_own_area.push_back(relative_residual(lhs, rhs / report.area_def));
  }
  return report;
}

}  // namespace pachner
