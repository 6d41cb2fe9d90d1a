#include "ltree/words.hpp"

#include <algorithm>
#include <sstream>

#include "ltree/error.hpp"

namespace ltree {

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inv = tok.size() > 1 && tok.back() == '-';
    if (inv) tok.pop_back();
    if (tok.empty() || tok.find('-') != std::string::npos)
      fail(ErrorCode::ParseError, "bad symbol in word '" + std::string(text) + "'");
    out.push_back({tok, inv});
  }
  return out;
}

std::string word_str(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.inverse) out += '-';
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverted()) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == r[j - 1].inverted()) {
    ++i;
    --j;
  }
  return Word(r.begin() + i, r.begin() + j);
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w, out;
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return free_reduce(out);
}

bool uses_only(const Word& w, const std::vector<std::string>& gens) {
  return std::all_of(w.begin(), w.end(),
                     [&](const Letter& l) { return std::find(gens.begin(), gens.end(), l.gen) != gens.end(); });
}

}  // namespace ltree
