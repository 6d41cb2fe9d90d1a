#pragma once

// Words in named generators and finite presentations.

#include <string>
#include <string_view>
#include <vector>

namespace ltree {

struct Letter {
  std::string gen;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// "a b a- b-": whitespace-separated symbols, trailing '-' marks an inverse.
Word parse_word(std::string_view text);
std::string word_str(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word power(const Word& w, int k);

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> rels;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Whether every symbol of w is one of `gens`.
bool uses_only(const Word& w, const std::vector<std::string>& gens);

}  // namespace ltree
