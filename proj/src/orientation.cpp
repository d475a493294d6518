#include "chevkit/orientation.hpp"

#include <vector>

#include "chevkit/errors.hpp"

namespace chevkit {

bool SignAssignment::valid_for(const RootSystem& rs) const {
  if (static_cast<int>(c.size()) != rs.rank()) return false;
  for (int v : c)
    if (v != 1 && v != -1) return false;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (i != j && rs.cartan()[i][j] != 0 && c[i] != -c[j]) return false;
  return true;
}

SignAssignment SignAssignment::negated() const {
  SignAssignment out = *this;
  for (int& v : out.c) v = -v;
  return out;
}

std::pair<SignAssignment, SignAssignment> special_orientations(const RootSystem& rs) {
  const int r = rs.rank();
  SignAssignment plus;
  plus.c.assign(r, 0);
  plus.c[0] = 1;
  // The diagram is a connected tree, so bipartite propagation fixes the rest.
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < r; ++j) {
      if (j == i || rs.cartan()[i][j] == 0) continue;
      if (plus.c[j] == 0) {
        plus.c[j] = -plus.c[i];
        stack.push_back(j);
      } else if (plus.c[j] != -plus.c[i]) {
        throw Error("diagram is not bipartite");  // impossible for a tree
      }
    }
  }
  for (int v : plus.c)
    if (v == 0) throw Error("diagram is not connected");
  return {plus, plus.negated()};
}

SignAssignment special_orientation(const RootSystem& rs, Orientation which) {
  auto [plus, minus] = special_orientations(rs);
  return which == Orientation::plus ? plus : minus;
}

OrientedEdges oriented_edges(const RootSystem& rs, const SignAssignment& signs) {
  OrientedEdges out;
  for (int i = 0; i < rs.rank(); ++i) {
    if (signs.c[i] != -1) continue;
    for (int j = 0; j < rs.rank(); ++j)
      if (i != j && rs.cartan()[i][j] != 0) out.pairs.emplace_back(i, j);
  }
  return out;
}

long long rho(const RootSystem& rs, const OrientedEdges& edges, const Coeffs& alpha,
              const Coeffs& beta) {
  long long out = 0;
  for (auto [i, j] : edges.pairs)
    out += static_cast<long long>(rs.d()[i]) * rs.cartan()[i][j] * alpha[i] * beta[j];
  return out;
}

long long rho(const RootSystem& rs, const SignAssignment& signs, const Coeffs& alpha,
              const Coeffs& beta) {
  return rho(rs, oriented_edges(rs, signs), alpha, beta);
}

}  // namespace chevkit
