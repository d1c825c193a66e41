#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qtb {

/// A_{jk}: strand j loops once around strand k.  s_i: strands i and i+1
/// trade places.  Indices are 0-based slots.
struct BraidGenerator {
  enum class Kind { Pure, HalfTwist };
  Kind kind = Kind::Pure;
  int i = 0;
  int j = 0;
  bool inverse = false;

  /// Token in the input grammar, 1-based ("a12^-1", "s3").
  std::string text() const;

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
};

struct BraidWord {
  int strands = 0;
  std::vector<BraidGenerator> letters;

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& other) const;
  std::string text() const;
  bool empty() const noexcept { return letters.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Strand that ends in each slot.
std::vector<int> induced_permutation(const BraidWord& w);

/// Grammar: whitespace-separated tokens, token := ("a" j k | "s" i) ["^-1"]
/// with 1-based indices.  "a" takes two single digits ("a12") or two numbers
/// joined by a comma ("a10,11").  Throws ParseError with the 1-based token
/// position: SyntaxError, IndexOutOfRange, or NotPure when the word
/// permutes the strands.
BraidWord parse_braid(std::string_view text, int strands);

/// Same grammar without the purity requirement.
BraidWord parse_braid_unchecked(std::string_view text, int strands);

/// Random word in the pure generators A_{jk}^{+-1}.
BraidWord random_pure_word(int strands, int length, std::mt19937_64& rng);

}  // namespace qtb
