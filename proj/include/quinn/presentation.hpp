#pragma once

// Free-group words, group presentations and the transformations between
// presentations that the Andrews-Curtis moves are built from.
//
// Text forms:
//   presentation  <a,b | a b A B, a a b>    (uppercase letter = inverse, `1` = empty word)
//   script lines  conj 1 by "ab"            R1 -> w R1 w^-1
//                 inv 2                     R2 -> R2^-1
//                 mulR 1 2 / mulR 1 -2      R1 -> R1 R2 / R1 R2^-1
//                 mulL 1 2                  R1 -> R2 R1
//                 geninv 1                  a1 -> a1^-1 in every relator
//                 genmulR 1 2 / genmulL 1 2 a1 -> a1 a2 / a1 -> a2 a1
//                 prolong "ab"              new generator x, new relator w^-1 x
//                 deprolong
//                 swap 1 2                  exchange two relators (not an AC move)
// Relator and generator indices are 1-based in text and 0-based in code.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quinn/error.hpp"

namespace quinn {

/// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& x, const Word& y);

/// Generators are named a, b, c, ... in index order (at most 26).
struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;  // freely reduced, not cyclically reduced

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Reduces the relators; throws Error on out-of-range letters.
Presentation make_presentation(std::size_t generators, std::vector<Word> relators);

struct Transformation {
  enum class Kind {
    Conjugate,
    Invert,
    MultiplyRight,
    MultiplyLeft,
    GeneratorInvert,
    GeneratorMultiplyRight,
    GeneratorMultiplyLeft,
    Prolong,
    Deprolong,
    Swap,
  };
  Kind kind = Kind::Invert;
  std::size_t i = 0;
  std::size_t k = 0;
  int sign = 1;  // exponent of the multiplier in the multiply kinds
  Word word;     // conjugator or prolongation word

  friend bool operator==(const Transformation&, const Transformation&) = default;
};

/// Applies t; throws Error on invalid indices, i = k, or an unmatched deprolongation.
Presentation apply(const Presentation& p, const Transformation& t);
/// The transformation undoing t when applied to apply(before, t).
Transformation inverse(const Presentation& before, const Transformation& t);

/// Diagonal of the Smith normal form of the abelianized relator matrix
/// (relators by generators), length min(m, n), entries nonnegative.
std::vector<std::int64_t> smith_invariants(const Presentation& p);

std::string print_word(const Word& w);
Word parse_word(std::string_view text);
std::string print_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);
std::string print_transformation(const Transformation& t);
std::vector<Transformation> parse_transformations(std::string_view text);

}  // namespace quinn
