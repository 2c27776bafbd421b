#pragma once

// The taur map into formal tensor sums, the (phi (x) phi) o taur test, the
// free liberation gradient, and the order-t liberation expansion through the
// semicircular replacement of unitary Brownian motion.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bifree/distribution.hpp"
#include "bifree/words.hpp"

namespace bifree {

class TensorSum {
 public:
  using Key = std::pair<Word, Word>;

  void add(const Word& left, const Word& right, const Rational& coefficient);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& left, const Word& right) const;

  // One `+p/q · [left] ⊗ [right]` line per term, sorted.
  std::vector<std::string> render(const Alphabet& alphabet) const;

  friend bool operator==(const TensorSum&, const TensorSum&) = default;

 private:
  std::map<Key, Rational> terms_;
};

TensorSum taur(const Word& w, PairId iota);
// sum of coefficient * phi(left) * phi(right).
Rational eval_tensor(const JointDistribution& d, const TensorSum& t);
// Prefix splits at iota-letters; all letters must be left letters.
TensorSum free_delta(const Word& w, PairId iota);

struct TaurVerdict {
  bool holds = true;
  // The equivalence is established for exactly two pairs.
  bool certified = false;
  std::size_t words_checked = 0;
  Word word;
  Rational value;

  std::string to_string(const Alphabet& alphabet) const;
};

// Scans every word up to max_len over one generator per face per pair, or
// every generator when `all_generators` is set.
TaurVerdict taur_test(const JointDistribution& d, PairId iota, std::size_t max_len, bool all_generators = false);

// A letter, or a unitary U_side^alpha of the Brownian pair.
struct Factor {
  enum class Kind { kLetter, kUnitary };
  Kind kind = Kind::kLetter;
  Letter letter;
  Side side = Side::kLeft;
  int alpha = 1;

  static Factor of(Letter l) { return {Kind::kLetter, l, l.side, 0}; }
  static Factor unitary(Side side, int alpha) { return {Kind::kUnitary, {}, side, alpha}; }
};

// Replaces each iota-letter x by U_chi x U_chi^*.
std::vector<Factor> conjugate_letters(const Word& w, PairId iota);

struct LiberationExpansion {
  Rational c0;
  Rational c1;
};

// Coefficients of t^0 and t^1 in phi(prod factors) after replacing each
// U^alpha by (1 - |alpha| t/2) + i psi sqrt(t) S with S an all-ones
// semicircular pair adjoined bi-freely.
class LiberationExpander {
 public:
  explicit LiberationExpander(std::vector<PureDistribution> pures);

  LiberationExpansion expand(std::span<const Factor> factors) const;
  LiberationExpansion expand(const Word& w, PairId iota) const;

 private:
  std::vector<PureDistribution> pures_;
  Letter s_left_;
  Letter s_right_;
  JointDistribution extended_;
};

LiberationExpansion replacement_expand(std::span<const PureDistribution> pures, const Word& w, PairId iota);

struct LiberationReport {
  LiberationExpansion expansion;
  Rational moment;
  Rational taur_value;
  bool match = false;
};

LiberationReport liberation_report(std::span<const PureDistribution> pures, const Word& w, PairId iota);
bool liberation_derivative_check(std::span<const PureDistribution> pures, const Word& w, PairId iota);

}  // namespace bifree
