#pragma once

// Letters tagged with a pair colour and a side, words over them, and formal
// rational combinations of words.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bifree/bnc.hpp"
#include "bifree/rational.hpp"

namespace bifree {

using PairId = int;

// `symbol` identifies the generator; `pair` and `side` are its tags and are
// a function of the symbol.
struct Letter {
  int symbol = 0;
  PairId pair = 0;
  Side side = Side::kLeft;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

using WordTable = std::unordered_map<Word, Rational, WordHash>;

ChiMap chi_of(const Word& w);
EpsMap eps_of(const Word& w);
// Letters at `indices`, in increasing natural order.
Word subword(const Word& w, std::span<const std::size_t> indices);
bool is_monochromatic(const Word& w);

// Visits every word of length 1..max_len over `letters` in lexicographic
// order of letter positions; stops early when `visit` returns false.
void for_each_word(std::span<const Letter> letters, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit);

// Name registry for symbols and pair ids.
class Alphabet {
 public:
  PairId add_pair(const std::string& name);
  // Registers a symbol; re-adding with the same tags is a no-op, a different
  // tagging throws ParseError.
  Letter add_symbol(const std::string& name, PairId pair, Side side);

  Letter letter(std::string_view name) const;
  bool has_symbol(std::string_view name) const;
  std::optional<PairId> find_pair(std::string_view name) const;
  PairId pair(std::string_view name) const;
  const std::string& symbol_name(int symbol) const;
  const std::string& pair_name(PairId pair) const;
  std::size_t pair_count() const { return pair_names_.size(); }
  std::size_t symbol_count() const { return symbols_.size(); }

  // Space-separated symbol names; an empty string is the empty word.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

 private:
  std::vector<std::string> pair_names_;
  std::vector<Letter> symbols_;
  std::vector<std::string> symbol_names_;
  std::map<std::string, int, std::less<>> symbol_index_;
};

// Formal rational combination of words; zero coefficients are never stored.
class ScalarWordSum {
 public:
  ScalarWordSum() = default;
  ScalarWordSum(Word w, Rational coefficient = 1);

  void add(const Word& w, const Rational& coefficient);
  ScalarWordSum& operator+=(const ScalarWordSum& other);
  // Concatenation product, extended bilinearly.
  friend ScalarWordSum operator*(const ScalarWordSum& a, const ScalarWordSum& b);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Expansion of (z_1 - c_1)(z_2 - c_2)...(z_n - c_n).
  static ScalarWordSum shifted_product(const Word& w, std::span<const Rational> shifts);

 private:
  std::map<Word, Rational> terms_;
};

}  // namespace bifree
