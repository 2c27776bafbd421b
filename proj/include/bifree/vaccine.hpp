#pragma once

// Centring of maximal epsilon-monochromatic chi-intervals, the vaccine
// property test, and reconstruction of mixed moments from it.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bifree/bnc.hpp"
#include "bifree/cumulants.hpp"
#include "bifree/distribution.hpp"
#include "bifree/words.hpp"

namespace bifree {

inline constexpr int kCentringResamples = 16;

struct CentredInstance {
  Word word;
  std::vector<Rational> shifts;
  std::vector<ChiInterval> intervals;
};

// Shift for `pivot` making phi(prod_{j in indices}(z_j - c_j)) vanish with the
// other shifts fixed; nullopt when the coefficient of c_pivot is zero.
std::optional<Rational> solve_pivot_shift(const MomentFn& phi, const Word& w, std::span<const std::size_t> indices,
                                          std::span<const Rational> shifts, std::size_t pivot);

std::vector<Rational> centred_shifts(const MomentFn& phi, const Word& w, std::mt19937_64& rng);
std::vector<Rational> centred_shifts(std::span<const PureDistribution> pures, const Word& w, std::uint64_t seed);
std::vector<Rational> centred_shifts(const JointDistribution& d, const Word& w, std::uint64_t seed);
CentredInstance centre(const JointDistribution& d, const Word& w, std::uint64_t seed);

struct VaccineVerdict {
  bool holds = true;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  Word word;
  std::vector<Rational> shifts;
  Rational value;

  // `HOLDS trials=N skipped=K` or `COUNTEREXAMPLE word=[...] shifts=[...] value=p/q`.
  std::string to_string(const Alphabet& alphabet) const;
};

VaccineVerdict vaccine_test(const JointDistribution& d, std::size_t max_len, std::size_t trials, std::uint64_t seed);

// Solves the vanishing of centred mixed moments for phi(w), recursing on
// shorter mixed words and reading single-pair words from the pures.
class VaccineReconstructor {
 public:
  VaccineReconstructor(std::vector<PureDistribution> pures, std::uint64_t seed);

  Rational moment(const Word& w);

 private:
  std::vector<PureDistribution> pures_;
  std::uint64_t seed_;
  WordTable memo_;
};

Rational vaccine_reconstruct_moment(std::span<const PureDistribution> pures, const Word& w, std::uint64_t seed);

}  // namespace bifree
