#include "pachner/labels.hpp"

namespace pachner {

Vertex vertex_from_char(char c) {
  if (c < 'A' || c > 'F') throw Error(ErrorCode::DegenerateKey, std::string("unknown vertex '") + c + "'");
  return static_cast<Vertex>(c - 'A');
}

int permutation_sign(std::span<const Vertex> vertices) {
  unsigned seen = 0;
  int inversions = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const unsigned bit = 1U << index_of(vertices[i]);
    if (seen & bit) {
      std::string key;
      for (Vertex v : vertices) key.push_back(to_char(v));
      throw Error(ErrorCode::DegenerateKey, "repeated vertex in '" + key + "'");
    }
    seen |= bit;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[j] < vertices[i]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace pachner
