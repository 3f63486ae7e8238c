#pragma once

#include <string>
#include <vector>

#include "activity/forest.hpp"

namespace activity {

enum class Alphabet {
  kPruefer,  // letters 1..n
  kBlue,     // letters 1..n-1 and the token b
};

/// Word of length n-1 encoding a rooted labeled tree on [n].
struct CodeWord {
  static constexpr int kB = 0;  // the token b

  Alphabet alphabet = Alphabet::kPruefer;
  int n = 0;
  std::vector<int> letters;

  // Throws DomainError if the length or a letter does not fit the alphabet.
  void validate() const;
  // Comma separated, b written literally: "b,5,b,2,4,b".
  std::string to_string() const;
  static CodeWord parse(const std::string& text, Alphabet alphabet, int n);

  friend bool operator==(const CodeWord&, const CodeWord&) = default;
};

/// Removes the smallest leaf n-1 times, writing down its parent each time.
CodeWord pruefer_encode(const ColoredForest& tree);
ColoredForest pruefer_decode(const CodeWord& word);

/// Same removal order; the parent p of leaf l is written as b when p = l+1,
/// as p-1 when p > l, and as p otherwise.
CodeWord blue_encode(const ColoredForest& tree);
ColoredForest blue_decode(const CodeWord& word);

/// blue_decode(pruefer_encode(t) with every letter n replaced by b). Carries
/// the number of children of n onto the number of edges (i+1, i).
ColoredForest swap_bijection(const ColoredForest& tree);

/// Every word of the alphabet for the given n, lexicographic with b first.
std::vector<CodeWord> all_words(Alphabet alphabet, int n);

}  // namespace activity
