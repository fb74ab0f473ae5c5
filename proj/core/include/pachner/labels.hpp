#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "pachner/error.hpp"

namespace pachner {

/// The six vertices of the 3->3 move, totally ordered A < B < ... < F.
enum class Vertex : std::uint8_t { A, B, C, D, E, F };

inline constexpr std::size_t kVertexCount = 6;
inline constexpr std::array<Vertex, kVertexCount> kAllVertices = {Vertex::A, Vertex::B, Vertex::C,
                                                                  Vertex::D, Vertex::E, Vertex::F};

constexpr std::size_t index_of(Vertex v) { return static_cast<std::size_t>(v); }
constexpr char to_char(Vertex v) { return static_cast<char>('A' + index_of(v)); }
Vertex vertex_from_char(char c);

/// The involution A<->D, B<->E, C<->F.
constexpr Vertex relabel(Vertex v) { return static_cast<Vertex>((index_of(v) + 3) % kVertexCount); }

/// Ordered tuple from a literal such as "BCDE"; letters must be A..F.
template <std::size_t M>
consteval std::array<Vertex, M - 1> tuple_of(const char (&letters)[M]) {
  std::array<Vertex, M - 1> out{};
  for (std::size_t i = 0; i + 1 < M; ++i) {
    if (letters[i] < 'A' || letters[i] > 'F') throw "vertex letter out of range";
    out[i] = static_cast<Vertex>(letters[i] - 'A');
  }
  return out;
}

/// +1 or -1: parity of the permutation sorting `vertices` ascending.
/// Throws DegenerateKey if a vertex repeats.
int permutation_sign(std::span<const Vertex> vertices);

namespace detail {

constexpr std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic enumeration of N-subsets of the six vertices as bitmasks,
// plus the inverse map mask -> position.
template <std::size_t N>
struct SubsetTables {
  static constexpr std::size_t kCount = binomial(kVertexCount, N);
  std::array<std::array<Vertex, N>, kCount> subsets{};
  std::array<std::uint8_t, 64> position{};

  constexpr SubsetTables() {
    for (auto& p : position) p = 0xFF;
    std::array<std::size_t, N> c{};
    for (std::size_t i = 0; i < N; ++i) c[i] = i;
    for (std::size_t k = 0; k < kCount; ++k) {
      unsigned mask = 0;
      for (std::size_t i = 0; i < N; ++i) {
        subsets[k][i] = static_cast<Vertex>(c[i]);
        mask |= 1U << c[i];
      }
      position[mask] = static_cast<std::uint8_t>(k);
      // next combination
      std::size_t i = N;
      while (i > 0 && c[i - 1] == kVertexCount - N + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < N; ++j) c[j] = c[j - 1] + 1;
    }
  }
};

template <std::size_t N>
inline constexpr SubsetTables<N> kSubsetTables{};

}  // namespace detail

/// An unoriented N-subset of {A..F}, stored in ascending (canonical) order.
/// Orientation lives in the sign returned by canonicalize().
template <std::size_t N>
class SimplexKey {
 public:
  static constexpr std::size_t kSize = N;
  static constexpr std::size_t kCount = detail::SubsetTables<N>::kCount;

  /// Defaults to the first key in lexicographic order.
  SimplexKey() = default;

  static SimplexKey from_index(std::size_t index) { return SimplexKey(static_cast<std::uint8_t>(index)); }

  /// Parses letters in ascending order, e.g. "ABD". Use canonicalize() for
  /// arbitrary orderings.
  static SimplexKey parse(std::string_view letters);

  std::size_t index() const { return index_; }
  const std::array<Vertex, N>& vertices() const { return detail::kSubsetTables<N>.subsets[index_]; }

  bool contains(Vertex v) const {
    for (Vertex u : vertices()) {
      if (u == v) return true;
    }
    return false;
  }

  std::string str() const {
    std::string s;
    for (Vertex v : vertices()) s.push_back(to_char(v));
    return s;
  }

  friend bool operator==(SimplexKey a, SimplexKey b) { return a.index_ == b.index_; }
  friend auto operator<=>(SimplexKey a, SimplexKey b) { return a.index_ <=> b.index_; }

 private:
  explicit SimplexKey(std::uint8_t index) : index_(index) {}

  std::uint8_t index_ = 0;
};

using FaceKey = SimplexKey<3>;
using TetraKey = SimplexKey<4>;

template <std::size_t N>
struct SignedKey {
  SimplexKey<N> key;
  int sign;
};

template <std::size_t N>
SignedKey<N> canonicalize(const std::array<Vertex, N>& ordered) {
  const int sign = permutation_sign(ordered);
  unsigned mask = 0;
  for (Vertex v : ordered) mask |= 1U << index_of(v);
  return {SimplexKey<N>::from_index(detail::kSubsetTables<N>.position[mask]), sign};
}

template <std::size_t N>
SimplexKey<N> SimplexKey<N>::parse(std::string_view letters) {
  if (letters.size() != N) throw Error(ErrorCode::DegenerateKey, "wrong key length '" + std::string(letters) + "'");
  std::array<Vertex, N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i] = vertex_from_char(letters[i]);
  const auto signed_key = canonicalize(v);
  if (signed_key.key.vertices() != v) {
    throw Error(ErrorCode::DegenerateKey, "key '" + std::string(letters) + "' is not in ascending order");
  }
  return signed_key.key;
}

template <std::size_t N>
const std::array<SimplexKey<N>, SimplexKey<N>::kCount>& all_keys() {
  static const auto keys = [] {
    std::array<SimplexKey<N>, SimplexKey<N>::kCount> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = SimplexKey<N>::from_index(i);
    return out;
  }();
  return keys;
}

inline const std::array<FaceKey, 20>& enumerate_faces() { return all_keys<3>(); }
inline const std::array<TetraKey, 15>& enumerate_tetras() { return all_keys<4>(); }

/// Applies the A<->D, B<->E, C<->F involution vertexwise, then canonicalizes.
template <std::size_t N>
SignedKey<N> relabel(const SimplexKey<N>& key) {
  std::array<Vertex, N> image{};
  for (std::size_t i = 0; i < N; ++i) image[i] = relabel(key.vertices()[i]);
  return canonicalize(image);
}

/// The two hinge 2-faces of the move: ABC before, DEF after.
enum class Hinge { ABC, DEF };

constexpr std::string_view to_string(Hinge h) { return h == Hinge::ABC ? "ABC" : "DEF"; }

/// Label map carrying formulas written for ABC over to the given hinge.
constexpr Vertex hinge_map(Hinge h, Vertex v) { return h == Hinge::ABC ? v : relabel(v); }

template <std::size_t N>
constexpr std::array<Vertex, N> hinge_map(Hinge h, std::array<Vertex, N> ordered) {
  for (Vertex& v : ordered) v = hinge_map(h, v);
  return ordered;
}

inline FaceKey hinge_face(Hinge h) { return canonicalize(hinge_map(h, tuple_of("ABC"))).key; }

/**
 * One value per canonical N-simplex. Reads through an ordered tuple apply
 * the permutation sign, so the table is totally antisymmetric by
 * construction.
 */
template <typename T, std::size_t N>
class SimplexTable {
 public:
  using Key = SimplexKey<N>;
  static constexpr std::size_t kCount = Key::kCount;

  SimplexTable() { values_.fill(T(0)); }

  T& operator[](Key key) { return values_[key.index()]; }
  const T& operator[](Key key) const { return values_[key.index()]; }

  /// Signed read through an arbitrary vertex ordering.
  T get(const std::array<Vertex, N>& ordered) const {
    const auto [key, sign] = canonicalize(ordered);
    return sign > 0 ? values_[key.index()] : -values_[key.index()];
  }

  std::span<T, kCount> values() { return values_; }
  std::span<const T, kCount> values() const { return values_; }

  friend bool operator==(const SimplexTable& a, const SimplexTable& b) { return a.values_ == b.values_; }

 private:
  std::array<T, kCount> values_;
};

}  // namespace pachner
