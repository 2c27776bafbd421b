#include "bifree/vaccine.hpp"

#include <algorithm>

#include "bifree/errors.hpp"

namespace bifree {

namespace {

Rational evaluate_shifted(const MomentFn& phi, const Word& w, std::span<const std::size_t> indices,
                          std::span<const Rational> shifts, std::optional<std::size_t> skip) {
  Word sub;
  std::vector<Rational> sub_shifts;
  for (std::size_t i : indices) {
    if (skip && i == *skip) continue;
    sub.push_back(w[i]);
    sub_shifts.push_back(shifts[i]);
  }
  Rational value = 0;
  const ScalarWordSum expansion = ScalarWordSum::shifted_product(sub, sub_shifts);
  for (const auto& [v, c] : expansion.terms()) value += c * phi(v);
  return value;
}

Rational random_shift(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-6, 6);
  std::uniform_int_distribution<int> denominator(1, 5);
  Rational r(numerator(rng), denominator(rng));
  r.canonicalize();
  return r;
}

std::string format_shifts(std::span<const Rational> shifts) {
  std::string out = "[";
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (i) out += ' ';
    out += to_string(shifts[i]);
  }
  return out + "]";
}

std::uint64_t word_key(const Word& w) { return WordHash{}(w); }

}  // namespace

std::optional<Rational> solve_pivot_shift(const MomentFn& phi, const Word& w, std::span<const std::size_t> indices,
                                          std::span<const Rational> shifts, std::size_t pivot) {
  std::vector<Rational> trial(shifts.begin(), shifts.end());
  trial[pivot] = 0;
  const Rational at_zero = evaluate_shifted(phi, w, indices, trial, std::nullopt);
  const Rational slope = evaluate_shifted(phi, w, indices, trial, pivot);
  if (slope == 0) return std::nullopt;
  return at_zero / slope;
}

std::vector<Rational> centred_shifts(const MomentFn& phi, const Word& w, std::mt19937_64& rng) {
  std::vector<Rational> shifts(w.size());
  for (const ChiInterval& interval : maximal_mono_intervals(chi_of(w), eps_of(w))) {
    const auto& indices = interval.indices;
    std::vector<std::size_t> pivots(indices.rbegin(), indices.rend());
    bool solved = false;
    for (int attempt = 0; attempt <= kCentringResamples && !solved; ++attempt) {
      for (std::size_t i : indices) shifts[i] = random_shift(rng);
      for (std::size_t pivot : pivots) {
        if (auto c = solve_pivot_shift(phi, w, indices, shifts, pivot)) {
          shifts[pivot] = *c;
          solved = true;
          break;
        }
      }
    }
    if (!solved) throw DegenerateCentringError("degenerate centring: every pivot has zero coefficient");
  }
  return shifts;
}

std::vector<Rational> centred_shifts(std::span<const PureDistribution> pures, const Word& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const MomentFn phi = [pures](const Word& v) {
    return v.empty() ? Rational(1) : find_pure(pures, v.front().pair).moment(v);
  };
  return centred_shifts(phi, w, rng);
}

std::vector<Rational> centred_shifts(const JointDistribution& d, const Word& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return centred_shifts([&d](const Word& v) { return d.moment(v); }, w, rng);
}

CentredInstance centre(const JointDistribution& d, const Word& w, std::uint64_t seed) {
  return {w, centred_shifts(d, w, seed), maximal_mono_intervals(chi_of(w), eps_of(w))};
}

std::string VaccineVerdict::to_string(const Alphabet& alphabet) const {
  if (holds) return "HOLDS trials=" + std::to_string(trials) + " skipped=" + std::to_string(skipped);
  return "COUNTEREXAMPLE word=[" + alphabet.format_word(word) + "] shifts=" + format_shifts(shifts) +
         " value=" + bifree::to_string(value);
}

VaccineVerdict vaccine_test(const JointDistribution& d, std::size_t max_len, std::size_t trials, std::uint64_t seed) {
  if (max_len < 1 || max_len > 8) throw SizeError("vaccine_test needs 1 <= max_len <= 8");
  VaccineVerdict verdict;
  const auto& pures = d.pures();
  if (pures.size() < 2 || max_len < 2) return verdict;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> length_dist(2, max_len);
    std::uniform_int_distribution<std::size_t> pair_dist(0, pures.size() - 1);
    std::bernoulli_distribution side_dist;
    const std::size_t length = length_dist(rng);

    Word w;
    do {
      w.clear();
      for (std::size_t k = 0; k < length; ++k) {
        const PureDistribution& pure = pures[pair_dist(rng)];
        const bool right = pure.left_generators().empty() || (!pure.right_generators().empty() && side_dist(rng));
        const auto& gens = right ? pure.right_generators() : pure.left_generators();
        w.push_back(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]);
      }
    } while (is_monochromatic(w));

    ++verdict.trials;
    std::vector<Rational> shifts;
    try {
      shifts = centred_shifts([&d](const Word& v) { return d.moment(v); }, w, rng);
    } catch (const DegenerateCentringError&) {
      ++verdict.skipped;
      continue;
    }
    const Rational value = d.evaluate(ScalarWordSum::shifted_product(w, shifts));
    if (value != 0) {
      verdict.holds = false;
      verdict.word = std::move(w);
      verdict.shifts = std::move(shifts);
      verdict.value = value;
      return verdict;
    }
  }
  return verdict;
}

VaccineReconstructor::VaccineReconstructor(std::vector<PureDistribution> pures, std::uint64_t seed)
    : pures_(std::move(pures)), seed_(seed) {}

Rational VaccineReconstructor::moment(const Word& w) {
  if (w.empty()) return 1;
  if (is_monochromatic(w)) return find_pure(pures_, w.front().pair).moment(w);
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  const std::uint64_t key = word_key(w);
  const auto shifts = centred_shifts(pures_, w, seed_ ^ (key * 0x9e3779b97f4a7c15ULL));
  const std::size_t n = w.size();
  Rational value = 0;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    Rational coefficient = 1;
    Word sub;
    for (std::size_t i = 0; i < n && coefficient != 0; ++i) {
      if (mask & (1u << i)) {
        sub.push_back(w[i]);
      } else {
        coefficient *= -shifts[i];
      }
    }
    if (coefficient != 0) value -= coefficient * moment(sub);
  }
  memo_.emplace(w, value);
  return value;
}

Rational vaccine_reconstruct_moment(std::span<const PureDistribution> pures, const Word& w, std::uint64_t seed) {
  return VaccineReconstructor(std::vector<PureDistribution>(pures.begin(), pures.end()), seed).moment(w);
}

}  // namespace bifree
