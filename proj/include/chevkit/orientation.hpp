#pragma once

#include <utility>
#include <vector>

#include "chevkit/root_system.hpp"

namespace chevkit {

/// Signs {c_i} encoding a sink/source orientation of the Dynkin graph:
/// adjacent vertices carry opposite signs, and the edge between i and j
/// points from i to j exactly when c_i = -1.
struct SignAssignment {
  std::vector<int> c;  // entries +-1

  bool valid_for(const RootSystem& rs) const;
  SignAssignment negated() const;
  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

enum class Orientation { plus, minus };

/// The two sink/source assignments of a connected diagram; the first has
/// c = +1 at the lowest-index vertex, the second is its negation.
std::pair<SignAssignment, SignAssignment> special_orientations(const RootSystem& rs);
SignAssignment special_orientation(const RootSystem& rs, Orientation which);

/// Ordered pairs (i,j) with i != j, a_ij != 0 and c_i = -1: one direction
/// per edge of the graph.
struct OrientedEdges {
  std::vector<std::pair<int, int>> pairs;
};

OrientedEdges oriented_edges(const RootSystem& rs, const SignAssignment& signs);

/// rho(alpha,beta) = sum over oriented edges (i,j) of d_i a_ij n_i m_j,
/// bilinear on the root lattice. Reduces to -sum n_i m_j when simply laced.
long long rho(const RootSystem& rs, const SignAssignment& signs,
              const Coeffs& alpha, const Coeffs& beta);
long long rho(const RootSystem& rs, const OrientedEdges& edges,
              const Coeffs& alpha, const Coeffs& beta);

}  // namespace chevkit
