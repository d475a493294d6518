#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chevkit/cartan_type.hpp"

namespace chevkit {

/// Integer coefficient vector over the simple roots. Roots have all
/// coefficients >= 0 or all <= 0; general lattice vectors are unrestricted.
using Coeffs = std::vector<int>;

struct PQPair {
  int p = 0;  // max m with beta + m*alpha a root
  int q = 0;  // max m with beta - m*alpha a root
};

/// An immutable crystallographic root system, built once from a Cartan
/// matrix and safe for unrestricted concurrent reads afterwards.
///
/// Roots are addressed by index: positive roots first, enumerated by
/// increasing height with ties broken by descending lex order on the
/// coefficient tuple, then the negative roots in the mirrored order
/// (index P+k is the negative of index k).
class RootSystem {
 public:
  /// Builds from explicit Cartan data. `cartan[i][j]` is a_ij = <a_i^vee, a_j>,
  /// `d[i]` is 1 for short simple roots and the length ratio for long ones.
  /// Standard types should use build_root_system(); this entry point exists
  /// for relabelled covers used by the folding machinery.
  RootSystem(CartanType tag, std::vector<std::vector<int>> cartan, std::vector<int> d);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  bool simply_laced() const { return type_.simply_laced(); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& d() const { return d_; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }

  const Coeffs& root(int idx) const { return roots_[idx]; }
  bool is_positive(int idx) const { return idx < num_positive_; }
  int negate(int idx) const {
    return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
  }
  int simple_root_index(int i) const { return simple_index_[i]; }

  /// Index of the given coefficient vector, or -1 if it is not a root.
  int index_of(const Coeffs& v) const;
  bool is_root(const Coeffs& v) const { return index_of(v) >= 0; }

  /// Index of root(a) + root(b), -1 if not a root, -2 if zero.
  int sum_index(int a, int b) const;

  int height(int idx) const { return heights_[idx]; }

  /// <alpha_i, alpha_j> with short roots normalised to squared length 2.
  long long gram(int i, int j) const { return gram_[i][j]; }
  /// Lattice inner product via the Gram matrix (exact integer).
  long long inner(const Coeffs& a, const Coeffs& b) const;
  /// <alpha_i^vee, v> = sum_j a_ij v_j.
  long long pairing(int i, const Coeffs& v) const;
  /// Half the squared length of a root: 1 for short, length_ratio for long.
  int d_of_root(int idx) const;
  /// Coefficients of h_alpha over {h_i}: the coroot expansion d_i n_i / d_alpha.
  Coeffs coroot(int idx) const;

  /// The root string data through beta along alpha. Both must be roots and
  /// alpha != +-beta, else RootStringError.
  PQPair pq(int alpha_idx, int beta_idx) const;

  /// Compact digit string when rank <= 9 and all |n_i| <= 9 ("0121",
  /// negatives as "-0121"), otherwise "[n1,n2,...]".
  std::string render(int idx) const;
  std::string render(const Coeffs& v) const;
  /// Parses either rendering. Throws ParseError on malformed input and
  /// Error if the vector is not a root of this system.
  int parse_root(const std::string& text) const;

 private:
  CartanType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<std::vector<long long>> gram_;
  std::vector<Coeffs> roots_;
  std::vector<int> heights_;
  std::vector<int> simple_index_;
  std::map<Coeffs, int> index_;
  int num_positive_ = 0;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Constructs the root system of the given type with the standard simple-root
/// labelling: Bourbaki for A/D/E; B_r with alpha_1 short; C_r with alpha_r
/// long; F4 with alpha_1, alpha_2 long; G2 with alpha_1 long.
RootSystemPtr build_root_system(CartanType type);

}  // namespace chevkit
