#include "chevkit/cartan_type.hpp"

#include <cctype>

#include "chevkit/errors.hpp"

namespace chevkit {

char to_char(TypeLetter l) {
  switch (l) {
    case TypeLetter::A: return 'A';
    case TypeLetter::B: return 'B';
    case TypeLetter::C: return 'C';
    case TypeLetter::D: return 'D';
    case TypeLetter::E: return 'E';
    case TypeLetter::F: return 'F';
    case TypeLetter::G: return 'G';
  }
  return '?';
}

TypeLetter letter_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return TypeLetter::A;
    case 'B': return TypeLetter::B;
    case 'C': return TypeLetter::C;
    case 'D': return TypeLetter::D;
    case 'E': return TypeLetter::E;
    case 'F': return TypeLetter::F;
    case 'G': return TypeLetter::G;
    default: throw ParseError(std::string("unknown type letter '") + c + "'");
  }
}

void CartanType::validate() const {
  const auto fail = [&](const char* range) {
    throw RankError("type " + std::string(1, to_char(letter)) + " requires rank " + range +
                    " (got " + std::to_string(rank) + ")");
  };
  switch (letter) {
    case TypeLetter::A:
      if (rank < 1) fail(">= 1");
      break;
    case TypeLetter::B:
      if (rank < 2) fail(">= 2");
      break;
    case TypeLetter::C:
      if (rank < 2) fail(">= 2");
      break;
    case TypeLetter::D:
      if (rank < 3) fail(">= 3");
      break;
    case TypeLetter::E:
      if (rank < 6 || rank > 8) fail("in {6,7,8}");
      break;
    case TypeLetter::F:
      if (rank != 4) fail("= 4");
      break;
    case TypeLetter::G:
      if (rank != 2) fail("= 2");
      break;
  }
}

int CartanType::length_ratio() const {
  switch (letter) {
    case TypeLetter::B:
    case TypeLetter::C:
    case TypeLetter::F: return 2;
    case TypeLetter::G: return 3;
    default: return 1;
  }
}

int CartanType::root_count() const {
  switch (letter) {
    case TypeLetter::A: return rank * (rank + 1);
    case TypeLetter::B:
    case TypeLetter::C: return 2 * rank * rank;
    case TypeLetter::D: return 2 * rank * (rank - 1);
    case TypeLetter::E: return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
    case TypeLetter::F: return 48;
    case TypeLetter::G: return 12;
  }
  return 0;
}

std::string CartanType::str() const {
  return std::string(1, to_char(letter)) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty type name");
  TypeLetter l = letter_from_char(text[0]);
  if (text.size() == 1) return {l, -1};
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed type name '" + text + "'");
  return {l, std::stoi(text.substr(1))};
}

}  // namespace chevkit
