#pragma once

#include <cstdint>
#include <vector>

#include "chevkit/orientation.hpp"
#include "chevkit/report.hpp"
#include "chevkit/root_system.hpp"

namespace chevkit {

/// A bimultiplicative {+-1}-valued pairing on the root lattice, stored as the
/// matrix of its values on pairs of simple roots. Bimultiplicativity makes
/// the normalisation and associativity axioms (FLM1, FLM2) automatic; the
/// commutator axiom (FLM3) depends on the generator matrix.
class Cocycle {
 public:
  Cocycle(const RootSystem& rs, std::vector<std::vector<int>> gen);

  int rank() const { return rank_; }
  int gen(int i, int j) const { return exp_[i * rank_ + j] ? -1 : 1; }

  /// Value on arbitrary lattice vectors: the product of gen(i,j)^(n_i m_j).
  int value(const Coeffs& alpha, const Coeffs& beta) const;

 private:
  int rank_;
  std::vector<std::uint8_t> exp_;  // exponent bits: gen = (-1)^exp
};

/// The special cocycle of a sink/source orientation: gen(i,j) = c_i^(a_ij),
/// so the diagonal is trivial and eps0(alpha,beta) = (-1)^rho(alpha,beta).
/// Requires a simply laced system (NotSimplyLacedError otherwise; the folding
/// module covers the remaining types).
Cocycle epsilon0(const RootSystem& rs, const SignAssignment& signs);

/// Kac's cocycle for an arbitrary orientation: gen(i,i) = -1 and
/// gen(i,j) = -1 exactly when the edge points from i to j.
Cocycle epsilon_kac(const RootSystem& rs, const OrientedEdges& edges);

/// Verifies FLM3 exactly on all pairs of roots, and FLM1/FLM2 on simple-root
/// generators plus seeded random lattice triples with coefficients in [-3,3].
/// Failure is recorded in the report, not thrown.
VerificationReport check_flm(const Cocycle& c, const RootSystem& rs,
                             int random_triples = 2000, unsigned seed = 20240901);

/// Checks value(alpha,alpha) = (-1)^(<alpha,alpha>/2) on all roots plus
/// seeded lattice vectors (holds for Kac's cocycle, not for eps0).
VerificationReport check_flm3_star(const Cocycle& c, const RootSystem& rs,
                                   int random_vectors = 2000, unsigned seed = 20240902);

}  // namespace chevkit
