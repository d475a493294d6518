#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevkit/cocycle.hpp"
#include "chevkit/orientation.hpp"
#include "chevkit/root_system.hpp"

namespace chevkit {

class LieAlgebra;

/// A finitely supported integer combination of the basis {h_i} u {e_alpha}.
struct Element {
  const LieAlgebra* owner = nullptr;
  std::vector<long long> h;       // coefficients of h_1..h_r
  std::map<int, long long> e;     // root index -> coefficient

  bool is_zero() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(long long k);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(long long k, Element a) { return a *= k; }
  friend bool operator==(const Element&, const Element&);

  std::string str() const;
};

/// An immutable bracket table on the basis {h_i} u {e_alpha}: structure
/// constants N(alpha,beta) for composable pairs, the coefficients zeta_alpha
/// in [e_alpha, e_-alpha] = zeta_alpha h_alpha, and the Cartan action
/// [h_i, e_alpha] = <alpha_i^vee, alpha> e_alpha. All coefficients are exact
/// integers; instances are safe for concurrent reads.
class LieAlgebra {
 public:
  /// The lattice-cocycle construction (simply laced only). Validates the
  /// cocycle axioms first and throws CocycleError with the counterexample on
  /// failure. N(alpha,beta) = c(alpha,beta), zeta_alpha = c(alpha,-alpha).
  static LieAlgebra from_cocycle(RootSystemPtr rs, const Cocycle& c);

  /// The special Chevalley system for the given signs {c_i}. Signs are
  /// transported through the simply laced cover for B/C/F/G; for A/D/E this
  /// is the eps0 route. N(alpha,beta) = eps(alpha,beta)(q+1),
  /// zeta_alpha = -(-1)^height(alpha).
  static LieAlgebra special(CartanType type, const SignAssignment& signs);
  static LieAlgebra special(RootSystemPtr rs, const SignAssignment& signs);

  const RootSystem& roots() const { return *rs_; }
  const RootSystemPtr& roots_ptr() const { return rs_; }

  bool composable(int a, int b) const { return rs_->sum_index(a, b) >= 0; }
  /// N(alpha,beta); throws NotComposableError when alpha+beta is not a root.
  long long structure_constant(int a, int b) const;
  /// The sign N(alpha,beta) / (q+1).
  int epsilon(int a, int b) const;
  int zeta(int a) const { return zeta_[a]; }

  /// The per-simple-root signs this table was built from (absent for
  /// cocycle-built and transformed tables).
  const std::optional<SignAssignment>& simple_signs() const { return signs_; }
  const std::string& normalization() const { return normalization_; }

  Element zero() const;
  Element h_element(int i) const;
  Element e_element(int root_idx) const;
  /// Bilinear antisymmetric extension of the basis brackets.
  /// Throws MismatchError unless both elements belong to this algebra.
  Element bracket(const Element& x, const Element& y) const;

  /// Rescales e_alpha for negative alpha by -eps*(-1)^height(alpha), turning a
  /// special system into the eps-normalised one: [e'_a, e'_-a] = eps h_a
  /// (eps=+1 Humphreys, eps=-1 Bourbaki).
  LieAlgebra breve(int eps) const;
  /// Negates e_alpha on the negative roots (for cocycle tables with
  /// [e_a,e_-a] = -h_a this restores [e'_a, e'_-a] = h_a).
  LieAlgebra hat() const;
  /// Negates every root element; a special system stays special with
  /// signs {-c_i}.
  LieAlgebra negated() const;

 private:
  friend struct TestAccess;  // mutation hooks for negative-control tests

  LieAlgebra() = default;
  LieAlgebra rescaled(const std::vector<int>& s, const std::string& tag) const;

  RootSystemPtr rs_;
  std::optional<SignAssignment> signs_;
  std::vector<std::int8_t> n_;     // dense R x R; 0 means not composable
  std::vector<std::int8_t> zeta_;  // per root
  std::string normalization_;
};

struct SpecialityReport {
  bool ok = false;
  std::vector<int> recovered_signs;  // valid when ok
  std::string violation;             // first violation when !ok
};

/// Checks whether the table is a special Chevalley system: [e_i, e_-i] = h_i
/// and a single sign vector {c_i} with [e_{a_i}, e_a] = c_i (q+1) e_{a+a_i}
/// and [e_{-a_i}, e_a] = c_i (p+1) e_{a-a_i} for every applicable root.
SpecialityReport is_special(const LieAlgebra& L);

using RootPair = std::pair<int, int>;

/// Extends a sign table given on positive composable pairs to all composable
/// pairs via eps(a,b) = eps(-a,-b) and the height-parity rotation
/// eps(a,b) = (-1)^ht(b) eps(b,-a-b). Throws SignConsistencyError with a
/// witness if the input violates the identities.
std::map<RootPair, int> extend_signs_from_positive(const RootSystem& rs,
                                                   const std::map<RootPair, int>& positive);

}  // namespace chevkit
