#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/distribution.hpp"
#include "bifree/words.hpp"

namespace bifree::testing {

inline Rational random_rational(std::mt19937_64& rng, int span = 3, int max_den = 3) {
  Rational r(std::uniform_int_distribution<int>(-span, span)(rng), std::uniform_int_distribution<int>(1, max_den)(rng));
  r.canonicalize();
  return r;
}

// Every word of length 0..max_len over `letters`.
inline std::vector<Word> all_words(const std::vector<Letter>& letters, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for_each_word(letters, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

inline WordTable random_moment_table(const std::vector<Letter>& letters, std::size_t max_len, std::mt19937_64& rng) {
  WordTable table;
  for (const Word& w : all_words(letters, max_len)) table[w] = w.empty() ? Rational(1) : random_rational(rng);
  return table;
}

struct Family {
  Alphabet alphabet;
  std::vector<PureDistribution> pures;

  std::vector<Letter> letters() const { return scan_letters(pures, true); }
  JointDistribution product() const { return JointDistribution::bifree_product(pures); }
};

// Moment-backed pairs with complete random tables; `min_gens`..`max_gens`
// generators per face.
inline Family random_family(std::size_t pairs, std::size_t min_gens, std::size_t max_gens, std::size_t max_degree,
                            std::mt19937_64& rng, bool with_theta = false) {
  Family f;
  std::uniform_int_distribution<std::size_t> count(min_gens, max_gens);
  for (std::size_t p = 0; p < pairs; ++p) {
    const PairId id = f.alphabet.add_pair("p" + std::to_string(p));
    std::vector<Letter> left;
    std::vector<Letter> right;
    const std::size_t nl = count(rng);
    const std::size_t nr = count(rng);
    for (std::size_t k = 0; k < nl; ++k) {
      left.push_back(f.alphabet.add_symbol("x" + std::to_string(p) + std::string(1, char('a' + k)), id, Side::kLeft));
    }
    for (std::size_t k = 0; k < nr; ++k) {
      right.push_back(f.alphabet.add_symbol("y" + std::to_string(p) + std::string(1, char('a' + k)), id, Side::kRight));
    }
    std::vector<Letter> gens = left;
    gens.insert(gens.end(), right.begin(), right.end());
    auto pure = PureDistribution::from_moments(id, left, right, random_moment_table(gens, max_degree, rng), max_degree);
    if (with_theta) pure = pure.with_theta(random_moment_table(gens, max_degree, rng));
    f.pures.push_back(std::move(pure));
  }
  return f;
}

}  // namespace bifree::testing
