#include "activity/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "activity/errors.hpp"

namespace activity {

void CodeWord::validate() const {
  if (n < 2) throw DomainError("code words need n >= 2");
  if (letters.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("code word must have length n-1 = " + std::to_string(n - 1));
  }
  for (int x : letters) {
    const bool ok = alphabet == Alphabet::kPruefer ? (x >= 1 && x <= n) : (x == kB || (x >= 1 && x <= n - 1));
    if (!ok) throw DomainError("letter " + std::to_string(x) + " is outside the alphabet");
  }
}

std::string CodeWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += letters[i] == kB && alphabet == Alphabet::kBlue ? std::string("b") : std::to_string(letters[i]);
  }
  return out;
}

CodeWord CodeWord::parse(const std::string& text, Alphabet alphabet, int n) {
  CodeWord w;
  w.alphabet = alphabet;
  w.n = n;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }), token.end());
    if (token == "b") {
      if (alphabet != Alphabet::kBlue) throw DomainError("token b only belongs to the Blue alphabet");
      w.letters.push_back(kB);
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw DomainError("malformed token '" + token + "'");
      }
      if (value == kB) throw DomainError("letter 0 is outside the alphabet");
      w.letters.push_back(value);
    }
    pos = end + 1;
  }
  w.validate();
  return w;
}

namespace {

void require_tree(const ColoredForest& t) {
  if (t.vertex_count() < 2) throw DomainError("coding needs a tree with at least two vertices");
  if (!t.is_tree()) throw DomainError("coding needs a spanning tree");
}

// Smallest-leaf removal order as (leaf, parent) pairs.
std::vector<std::pair<int, int>> leaf_removals(const ColoredForest& t) {
  const int n = t.vertex_count();
  std::vector<int> child_count(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (t.parent(v) != 0) ++child_count[static_cast<std::size_t>(t.parent(v))];
  }
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::pair<int, int>> out;
  for (int step = 0; step < n - 1; ++step) {
    int leaf = 0;
    for (int v = 1; v <= n && leaf == 0; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (!removed[vi] && child_count[vi] == 0 && t.parent(v) != 0) leaf = v;
    }
    const int p = t.parent(leaf);
    out.emplace_back(leaf, p);
    removed[static_cast<std::size_t>(leaf)] = true;
    --child_count[static_cast<std::size_t>(p)];
  }
  return out;
}

// Shared decoder. For i = 1..n the last position "naming" i is found (an
// assigned position whose parent is i, or an open position whose letter is
// i); the first open position after it becomes the edge into i. The single
// vertex left without an open position is the root.
template <typename ParentOf>
ColoredForest decode_positions(const CodeWord& w, ParentOf&& parent_of) {
  const int n = w.n;
  const std::size_t len = w.letters.size();
  std::vector<int> assigned_parent(len, 0);  // 0 = still open
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  int root = 0;
  for (int i = 1; i <= n; ++i) {
    std::ptrdiff_t last = -1;
    for (std::size_t j = 0; j < len; ++j) {
      const bool names_i = assigned_parent[j] != 0 ? assigned_parent[j] == i : w.letters[j] == i;
      if (names_i) last = static_cast<std::ptrdiff_t>(j);
    }
    std::size_t slot = len;
    for (std::size_t j = static_cast<std::size_t>(last + 1); j < len; ++j) {
      if (assigned_parent[j] == 0) {
        slot = j;
        break;
      }
    }
    if (slot == len) {
      if (root != 0) throw DomainError("word " + w.to_string() + " does not decode to a tree");
      root = i;
      continue;
    }
    const int p = parent_of(w.letters[slot], i);
    if (p < 1 || p > n || p == i) throw DomainError("word " + w.to_string() + " does not decode to a tree");
    assigned_parent[slot] = p;
    parent[static_cast<std::size_t>(i)] = p;
  }
  if (root == 0) throw DomainError("word " + w.to_string() + " has no root");
  ColoredForest t(n, 1);
  for (int v = 1; v <= n; ++v) {
    if (v != root) t.add_edge({parent[static_cast<std::size_t>(v)], v, 1});
  }
  return t;
}

}  // namespace

CodeWord pruefer_encode(const ColoredForest& tree) {
  require_tree(tree);
  CodeWord w{Alphabet::kPruefer, tree.vertex_count(), {}};
  for (const auto& [leaf, p] : leaf_removals(tree)) w.letters.push_back(p);
  return w;
}

ColoredForest pruefer_decode(const CodeWord& word) {
  if (word.alphabet != Alphabet::kPruefer) throw DomainError("expected a Pruefer word");
  word.validate();
  ColoredForest t = decode_positions(word, [](int letter, int) { return letter; });
  if (t.root_of(1) != word.letters.back()) throw DomainError("decoded root differs from the last letter");
  return t;
}

CodeWord blue_encode(const ColoredForest& tree) {
  require_tree(tree);
  CodeWord w{Alphabet::kBlue, tree.vertex_count(), {}};
  for (const auto& [leaf, p] : leaf_removals(tree)) {
    if (p == leaf + 1) {
      w.letters.push_back(CodeWord::kB);
    } else if (p > leaf) {
      w.letters.push_back(p - 1);
    } else {
      w.letters.push_back(p);
    }
  }
  return w;
}

ColoredForest blue_decode(const CodeWord& word) {
  if (word.alphabet != Alphabet::kBlue) throw DomainError("expected a Blue word");
  word.validate();
  return decode_positions(word, [&](int letter, int i) {
    if (letter == CodeWord::kB) return i + 1;
    if (letter > i) return letter + 1;
    if (letter < i) return letter;
    throw DomainError("word " + word.to_string() + " does not decode to a tree");
  });
}

ColoredForest swap_bijection(const ColoredForest& tree) {
  CodeWord w = pruefer_encode(tree);
  w.alphabet = Alphabet::kBlue;
  for (int& x : w.letters) {
    if (x == w.n) x = CodeWord::kB;
  }
  return blue_decode(w);
}

std::vector<CodeWord> all_words(Alphabet alphabet, int n) {
  if (n < 2) throw DomainError("code words need n >= 2");
  std::vector<int> symbols;
  if (alphabet == Alphabet::kBlue) {
    symbols.push_back(CodeWord::kB);
    for (int x = 1; x <= n - 1; ++x) symbols.push_back(x);
  } else {
    for (int x = 1; x <= n; ++x) symbols.push_back(x);
  }
  const auto len = static_cast<std::size_t>(n - 1);
  std::vector<std::size_t> idx(len, 0);
  std::vector<CodeWord> out;
  while (true) {
    CodeWord w{alphabet, n, {}};
    for (std::size_t i : idx) w.letters.push_back(symbols[i]);
    out.push_back(std::move(w));
    std::size_t k = len;
    while (k > 0 && idx[k - 1] + 1 == symbols.size()) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return out;
}

}  // namespace activity
