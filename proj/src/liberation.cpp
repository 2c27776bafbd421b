#include "bifree/liberation.hpp"

#include <algorithm>

#include "bifree/cumulants.hpp"
#include "bifree/errors.hpp"

namespace bifree {

void TensorSum::add(const Word& left, const Word& right, const Rational& coefficient) {
  if (coefficient == 0) return;
  Key key{left, right};
  auto [it, inserted] = terms_.try_emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorSum::coefficient(const Word& left, const Word& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> TensorSum::render(const Alphabet& alphabet) const {
  std::vector<std::string> lines;
  for (const auto& [key, c] : terms_) {
    lines.push_back((c > 0 ? "+" : "") + to_string(c) + " · [" + alphabet.format_word(key.first) + "] ⊗ [" +
                    alphabet.format_word(key.second) + "]");
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

TensorSum taur(const Word& w, PairId iota) {
  TensorSum out;
  const ChiMap chi = chi_of(w);
  const std::size_t n = w.size();
  auto split = [&](std::size_t i, std::size_t j, bool left_closed, bool right_closed, int sign) {
    const auto inside = chi_interval(chi, i, j, left_closed, right_closed).indices;
    out.add(subword(w, complement(n, inside)), subword(w, inside), sign);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].pair != iota) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j].pair != iota || (i != j && !chi_precedes(chi, i, j))) continue;
      split(i, j, true, true, 1);
      split(i, j, true, false, -1);
      split(i, j, false, true, -1);
      split(i, j, false, false, 1);
    }
  }
  return out;
}

Rational eval_tensor(const JointDistribution& d, const TensorSum& t) {
  Rational total = 0;
  for (const auto& [key, c] : t.terms()) {
    const Rational left = d.moment(key.first);
    if (left != 0) total += c * left * d.moment(key.second);
  }
  return total;
}

TensorSum free_delta(const Word& w, PairId iota) {
  for (const Letter& l : w) {
    if (l.side != Side::kLeft) throw DomainError("free_delta is defined on words of left letters only");
  }
  TensorSum out;
  const ChiMap chi = chi_of(w);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].pair != iota) continue;
    for (bool closed : {false, true}) {
      const auto prefix = chi_interval(chi, kNegInfinity, i, true, closed).indices;
      out.add(subword(w, prefix), subword(w, complement(n, prefix)), closed ? 1 : -1);
    }
  }
  return out;
}

std::string TaurVerdict::to_string(const Alphabet& alphabet) const {
  std::string out = holds ? "HOLDS words=" + std::to_string(words_checked)
                          : "COUNTEREXAMPLE word=[" + alphabet.format_word(word) + "] value=" + bifree::to_string(value);
  if (!certified) out += " uncertified";
  return out;
}

TaurVerdict taur_test(const JointDistribution& d, PairId iota, std::size_t max_len, bool all_generators) {
  if (max_len < 1 || max_len > 8) throw SizeError("taur_test needs 1 <= max_len <= 8");
  const auto letters = scan_letters(d.pures(), all_generators);
  TaurVerdict verdict;
  verdict.certified = d.pair_ids().size() == 2;
  for_each_word(letters, max_len, [&](const Word& w) {
    ++verdict.words_checked;
    const Rational value = eval_tensor(d, taur(w, iota));
    if (value == 0) return true;
    verdict.holds = false;
    verdict.word = w;
    verdict.value = value;
    return false;
  });
  return verdict;
}

std::vector<Factor> conjugate_letters(const Word& w, PairId iota) {
  std::vector<Factor> out;
  for (const Letter& l : w) {
    if (l.pair == iota) {
      out.push_back(Factor::unitary(l.side, 1));
      out.push_back(Factor::of(l));
      out.push_back(Factor::unitary(l.side, -1));
    } else {
      out.push_back(Factor::of(l));
    }
  }
  return out;
}

namespace {

PairId fresh_pair(std::span<const PureDistribution> pures) {
  PairId id = 0;
  for (const auto& p : pures) id = std::max(id, p.pair() + 1);
  return id;
}

std::vector<PureDistribution> with_semicircular(std::vector<PureDistribution> pures, Letter l, Letter r) {
  pures.push_back(builtin_semicircular_pair(l.pair, l, r));
  return pures;
}

}  // namespace

LiberationExpander::LiberationExpander(std::vector<PureDistribution> pures)
    : pures_(std::move(pures)),
      s_left_{-1, fresh_pair(pures_), Side::kLeft},
      s_right_{-2, fresh_pair(pures_), Side::kRight},
      extended_(JointDistribution::bifree_product(with_semicircular(pures_, s_left_, s_right_))) {}

LiberationExpansion LiberationExpander::expand(std::span<const Factor> factors) const {
  Word letters;
  std::vector<std::size_t> slots;
  Rational constant_rate = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].kind == Factor::Kind::kLetter) {
      letters.push_back(factors[k].letter);
    } else {
      slots.push_back(k);
      constant_rate -= Rational(std::abs(factors[k].alpha)) / 2;
    }
  }
  LiberationExpansion out;
  out.c0 = extended_.moment(letters);
  out.c1 = constant_rate * out.c0;

  auto psi = [&](std::size_t k) { return factors[k].side == Side::kLeft ? factors[k].alpha : -factors[k].alpha; };
  for (std::size_t a = 0; a < slots.size(); ++a) {
    for (std::size_t b = a + 1; b < slots.size(); ++b) {
      Word w;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].kind == Factor::Kind::kLetter) {
          w.push_back(factors[k].letter);
        } else if (k == slots[a] || k == slots[b]) {
          w.push_back(factors[k].side == Side::kLeft ? s_left_ : s_right_);
        }
      }
      out.c1 -= psi(slots[a]) * psi(slots[b]) * extended_.moment(w);
    }
  }
  return out;
}

LiberationExpansion LiberationExpander::expand(const Word& w, PairId iota) const {
  const auto factors = conjugate_letters(w, iota);
  return expand(factors);
}

LiberationExpansion replacement_expand(std::span<const PureDistribution> pures, const Word& w, PairId iota) {
  return LiberationExpander({pures.begin(), pures.end()}).expand(w, iota);
}

LiberationReport liberation_report(std::span<const PureDistribution> pures, const Word& w, PairId iota) {
  LiberationReport report;
  report.expansion = replacement_expand(pures, w, iota);
  const JointDistribution d = JointDistribution::bifree_product({pures.begin(), pures.end()});
  report.moment = bifree_product_moment(pures, w);
  report.taur_value = eval_tensor(d, taur(w, iota));
  report.match = report.expansion.c0 == report.moment && report.expansion.c1 == report.taur_value;
  return report;
}

bool liberation_derivative_check(std::span<const PureDistribution> pures, const Word& w, PairId iota) {
  return liberation_report(pures, w, iota).match;
}

}  // namespace bifree
