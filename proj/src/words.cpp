#include "bifree/words.hpp"

#include <sstream>

#include "bifree/errors.hpp"

namespace bifree {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Letter& l : w) {
    h ^= static_cast<std::size_t>(l.symbol) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(l.pair) * 131 +
         static_cast<std::size_t>(l.side);
    h *= 0x100000001b3ULL;
  }
  return h;
}

ChiMap chi_of(const Word& w) {
  std::vector<Side> sides;
  sides.reserve(w.size());
  for (const Letter& l : w) sides.push_back(l.side);
  return ChiMap(std::move(sides));
}

EpsMap eps_of(const Word& w) {
  std::vector<int> colors;
  colors.reserve(w.size());
  for (const Letter& l : w) colors.push_back(l.pair);
  return EpsMap(std::move(colors));
}

Word subword(const Word& w, std::span<const std::size_t> indices) {
  Word out;
  out.reserve(indices.size());
  std::size_t previous = 0;
  bool first = true;
  for (std::size_t i : indices) {
    if (i >= w.size()) {
      throw IndexError("subword index " + std::to_string(i + 1) + " outside word of length " + std::to_string(w.size()));
    }
    if (!first && i <= previous) throw IndexError("subword indices must be strictly increasing");
    out.push_back(w[i]);
    previous = i;
    first = false;
  }
  return out;
}

bool is_monochromatic(const Word& w) {
  for (const Letter& l : w) {
    if (l.pair != w.front().pair) return false;
  }
  return true;
}

PairId Alphabet::add_pair(const std::string& name) {
  if (auto existing = find_pair(name)) return *existing;
  pair_names_.push_back(name);
  return static_cast<PairId>(pair_names_.size() - 1);
}

Letter Alphabet::add_symbol(const std::string& name, PairId pair, Side side) {
  if (name.empty() || name.find_first_of(" \t\n") != std::string::npos) {
    throw ParseError("invalid symbol name '" + name + "'");
  }
  if (auto it = symbol_index_.find(name); it != symbol_index_.end()) {
    const Letter& existing = symbols_[it->second];
    if (existing.pair != pair || existing.side != side) {
      throw ParseError("symbol '" + name + "' declared with two different pair/side taggings");
    }
    return existing;
  }
  const Letter letter{static_cast<int>(symbols_.size()), pair, side};
  symbols_.push_back(letter);
  symbol_names_.push_back(name);
  symbol_index_.emplace(name, letter.symbol);
  return letter;
}

Letter Alphabet::letter(std::string_view name) const {
  auto it = symbol_index_.find(name);
  if (it == symbol_index_.end()) throw ParseError("unknown symbol '" + std::string(name) + "'");
  return symbols_[it->second];
}

bool Alphabet::has_symbol(std::string_view name) const { return symbol_index_.find(name) != symbol_index_.end(); }

std::optional<PairId> Alphabet::find_pair(std::string_view name) const {
  for (std::size_t i = 0; i < pair_names_.size(); ++i) {
    if (pair_names_[i] == name) return static_cast<PairId>(i);
  }
  return std::nullopt;
}

PairId Alphabet::pair(std::string_view name) const {
  if (auto id = find_pair(name)) return *id;
  throw ParseError("unknown pair '" + std::string(name) + "'");
}

const std::string& Alphabet::symbol_name(int symbol) const {
  if (symbol < 0 || static_cast<std::size_t>(symbol) >= symbol_names_.size()) {
    static const std::string kAnonymous = "?";
    return kAnonymous;
  }
  return symbol_names_[symbol];
}

const std::string& Alphabet::pair_name(PairId pair) const {
  if (pair < 0 || static_cast<std::size_t>(pair) >= pair_names_.size()) {
    static const std::string kAnonymous = "?";
    return kAnonymous;
  }
  return pair_names_[pair];
}

Word Alphabet::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word w;
  std::string token;
  while (in >> token) w.push_back(letter(token));
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += symbol_name(w[i].symbol);
  }
  return out;
}

ScalarWordSum::ScalarWordSum(Word w, Rational coefficient) { add(w, coefficient); }

void ScalarWordSum::add(const Word& w, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ScalarWordSum& ScalarWordSum::operator+=(const ScalarWordSum& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

ScalarWordSum operator*(const ScalarWordSum& a, const ScalarWordSum& b) {
  ScalarWordSum out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

ScalarWordSum ScalarWordSum::shifted_product(const Word& w, std::span<const Rational> shifts) {
  if (shifts.size() != w.size()) throw SizeError("one shift per letter required");
  ScalarWordSum out(Word{}, 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    ScalarWordSum factor(Word{w[i]}, 1);
    factor.add(Word{}, -shifts[i]);
    out = out * factor;
  }
  return out;
}

void for_each_word(std::span<const Letter> letters, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit) {
  if (letters.empty()) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    Word w(len);
    while (true) {
      for (std::size_t k = 0; k < len; ++k) w[k] = letters[digits[k]];
      if (!visit(w)) return;
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == letters.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

}  // namespace bifree
