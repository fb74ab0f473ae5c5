#pragma once

// Test-only: the deficit components as expression trees in the 20 lambda
// variables, assembled from letter strings with an independent parity
// (cycle decomposition) and an independent face numbering.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "oracle/symbolic.hpp"

namespace oracle {

inline int cycle_parity(const std::string& seq) {
  std::string sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> perm;
  for (char c : seq) perm.push_back(sorted.find(c));
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t j = start; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Face names "ABC".."DEF" in lexicographic order; variable i is faces()[i].
inline const std::vector<std::string>& face_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    const std::string letters = "ABCDEF";
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) out.push_back({letters[a], letters[b], letters[c]});
    return out;
  }();
  return names;
}

inline int face_variable(const std::string& sorted_face) {
  const auto& names = face_names();
  return static_cast<int>(std::find(names.begin(), names.end(), sorted_face) - names.begin());
}

inline Expr lambda_expr(const std::string& face) {
  std::string sorted = face;
  std::sort(sorted.begin(), sorted.end());
  const Expr v = variable(face_variable(sorted));
  return cycle_parity(face) > 0 ? v : -v;
}

inline Expr volume_expr(const std::string& tetra) {
  std::string s = tetra;
  std::sort(s.begin(), s.end());
  const std::string w(1, s[0]), x(1, s[1]), y(1, s[2]), z(1, s[3]);
  const Expr v = lambda_expr(x + y + z) - lambda_expr(w + y + z) + lambda_expr(w + x + z) - lambda_expr(w + x + y);
  return cycle_parity(tetra) > 0 ? v : -v;
}

/// (w1, w2) at hinge "ABC" or "DEF" (DEF by letter substitution A<->D, B<->E, C<->F).
inline std::array<Expr, 2> omega_exprs(const std::string& hinge) {
  const bool swap = hinge == "DEF";
  const auto v = [&](std::string s) {
    if (swap) {
      for (char& c : s) c = static_cast<char>(c < 'D' ? c + 3 : c - 3);
    }
    return volume_expr(s);
  };
  const Expr de = v("ABCD") * v("ABCE");
  const Expr ef = v("ABCE") * v("ABCF");
  const Expr fd = v("ABCF") * v("ABCD");
  Expr w1 = -(v("BCDE") / de) - v("BCEF") / ef + v("BCDF") / fd;
  Expr w2 = v("ACDE") / de + v("ACEF") / ef - v("ACDF") / fd;
  return {w1, w2};
}

}  // namespace oracle
