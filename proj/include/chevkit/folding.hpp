#pragma once

#include <vector>

#include "chevkit/orientation.hpp"
#include "chevkit/root_system.hpp"

namespace chevkit {

/// Realisation of a root system as the image of a simply laced cover under a
/// linear projection eta whose fibres over roots are the orbits of a diagram
/// automorphism tau. For A/D/E the fold is the identity; B_r is covered by
/// D_{r+1} (tau swaps the fork), C_r by A_{2r-1} (tau flips the chain), F4 by
/// E6 (order-2 flip), G2 by D4 (triality). The cover carries the sink/source
/// orientation transported fibre-constantly from the target signs.
class FoldingData {
 public:
  static FoldingData build(CartanType type, const SignAssignment& target_signs);
  static FoldingData build(RootSystemPtr target, const SignAssignment& target_signs);

  const RootSystem& target() const { return *target_; }
  const RootSystem& cover() const { return *cover_; }
  const RootSystemPtr& target_ptr() const { return target_; }
  int order() const { return e_; }  // order of tau: 1, 2 or 3

  /// tau on cover roots, as an index permutation.
  int tau_root(int cover_idx) const;
  /// eta on the cover lattice.
  Coeffs eta(const Coeffs& cover_vec) const;
  /// Cover root indices in the fibre over a target root.
  const std::vector<int>& fibre(int target_idx) const { return fibres_[target_idx]; }

  const SignAssignment& cover_signs() const { return cover_signs_; }
  const SignAssignment& target_signs() const { return target_signs_; }

  struct LiftedPair {
    int alpha;  // cover root indices
    int beta;
  };

  /// A composable lift of a composable target pair, chosen lexicographically
  /// over the fibre product. Verifies that the cover sign takes one value on
  /// the whole lift set and throws FoldingError otherwise.
  LiftedPair lift_pair(int a, int b) const;

  /// The transported structure-constant sign: eps0 of the cover at any lift.
  int folded_sign(int a, int b) const;

  /// eps0 of the cover on cover lattice vectors.
  int cover_sign(const Coeffs& alpha, const Coeffs& beta) const;
  long long cover_rho(const Coeffs& alpha, const Coeffs& beta) const;

 private:
  FoldingData() = default;
  void finish_build();  // fibres, signs, axiom checks

  RootSystemPtr target_, cover_;
  int e_ = 1;
  std::vector<int> eta_simple_;  // cover simple -> target simple
  std::vector<int> tau_simple_;  // cover simple permutation
  std::vector<std::vector<int>> fibres_;
  SignAssignment target_signs_, cover_signs_;
  OrientedEdges cover_edges_;
};

/// The per-type closed-form sign: (-1)^rho for A/D/E/G, (-1)^(rho/2) for B,
/// the delta4 rule for F4, and the mu rule with sgn/height corrections for C.
/// Defined for all composable pairs in every sign quadrant.
int closed_form_sign(const RootSystem& rs, const SignAssignment& signs, int a, int b);

/// The F4 sign function: (-1)^(n/2) for even n, (-1)^((n+1)/2) for odd n.
int delta4(long long n);

}  // namespace chevkit
