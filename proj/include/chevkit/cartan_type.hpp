#pragma once

#include <string>

namespace chevkit {

enum class TypeLetter { A, B, C, D, E, F, G };

char to_char(TypeLetter l);
TypeLetter letter_from_char(char c);

/// A simple type letter plus rank, e.g. E8 or B3.
struct CartanType {
  TypeLetter letter;
  int rank;

  /// Throws RankError unless the rank is admissible:
  /// A r>=1, B r>=2, C r>=2, D r>=3, E r in {6,7,8}, F r=4, G r=2.
  void validate() const;

  bool simply_laced() const {
    return letter == TypeLetter::A || letter == TypeLetter::D || letter == TypeLetter::E;
  }

  /// Ratio of long to short squared root length: 1 for ADE, 2 for BCF, 3 for G.
  int length_ratio() const;

  /// Number of roots of the (validated) type.
  int root_count() const;

  std::string str() const;  // "E8"

  /// Accepts "E8", "e8", or a bare letter with rank < 0 (caller supplies rank).
  static CartanType parse(const std::string& text);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

}  // namespace chevkit
