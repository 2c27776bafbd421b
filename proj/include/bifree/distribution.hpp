#pragma once

// Moment oracles: pure distributions of a single pair of faces, and joint
// distributions of a family of pairs (explicit tables, bi-free products,
// conditionally bi-free products, and perturbed tables).

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bifree/rational.hpp"
#include "bifree/words.hpp"

namespace bifree {

class PureDistribution {
 public:
  enum class Backing { kMoments, kCumulants, kHaar };

  // Moment table: every word over the generators up to max_degree must be
  // present when queried; a missing entry is an InsufficientDataError.
  static PureDistribution from_moments(PairId pair, std::vector<Letter> left, std::vector<Letter> right,
                                       WordTable moments, std::size_t max_degree);
  // Cumulant table: unspecified cumulants are zero.
  static PureDistribution from_cumulants(PairId pair, std::vector<Letter> left, std::vector<Letter> right,
                                         WordTable cumulants, std::size_t max_degree);
  // Commuting unitaries u_l, u_l^* (left) and u_r, u_r^* (right) with
  // phi(word) = [net left power == net right power].
  static PureDistribution haar(PairId pair, Letter u_left, Letter u_left_star, Letter u_right, Letter u_right_star);

  // Same phi-layer plus a theta-layer moment table (conditional setting).
  PureDistribution with_theta(WordTable theta) const;

  PairId pair() const;
  Backing backing() const;
  std::size_t max_degree() const;
  const std::vector<Letter>& left_generators() const;
  const std::vector<Letter>& right_generators() const;
  std::vector<Letter> generators() const;
  bool has_theta() const;

  Rational moment(const Word& w) const;
  // Bi-free cumulant kappa_{chi(w)}(w); requires |w| >= 1.
  Rational cumulant(const Word& w) const;
  Rational theta(const Word& w) const;
  // Conditional cumulant with respect to (theta, phi); requires |w| >= 1.
  Rational conditional_cumulant(const Word& w) const;

 private:
  struct State;
  explicit PureDistribution(std::shared_ptr<State> state);
  static std::shared_ptr<State> make_state(PairId pair, Backing backing, std::vector<Letter> left,
                                           std::vector<Letter> right, WordTable table, std::size_t max_degree);
  void check_word(const Word& w) const;

  std::shared_ptr<State> state_;
};

// Second-order covariances of a semicircular pair, by unordered side pattern.
struct SemicircularCovariance {
  Rational left_left = 1;
  Rational left_right = 1;
  Rational right_right = 1;
};

PureDistribution builtin_semicircular_pair(PairId pair, Letter s_left, Letter s_right,
                                           const SemicircularCovariance& cov = {});
// Registers S_l/S_r style symbols named "<prefix>_l", "<prefix>_r" in `alphabet`.
PureDistribution builtin_semicircular_pair(Alphabet& alphabet, const std::string& pair_name,
                                           const SemicircularCovariance& cov = {}, const std::string& prefix = "S");
PureDistribution builtin_haar_pair(Alphabet& alphabet, const std::string& pair_name, const std::string& prefix = "u");

const PureDistribution& find_pure(std::span<const PureDistribution> pures, PairId pair);
// The first generator of each face of each pair, or every generator.
std::vector<Letter> scan_letters(std::span<const PureDistribution> pures, bool all_generators);

class JointDistribution {
 public:
  enum class Mode { kExplicitTable, kBifreeProduct, kConditionalProduct, kTableWithPerturbation };

  // Mixed moments from `table`; single-pair words fall back to `pures`.
  static JointDistribution explicit_table(std::vector<PureDistribution> pures, WordTable table);
  static JointDistribution bifree_product(std::vector<PureDistribution> pures);
  // Every pure must carry a theta-layer.
  static JointDistribution conditional_product(std::vector<PureDistribution> pures);
  // phi(w) + delta(w) for each listed word; theta is unchanged.
  JointDistribution with_perturbation(WordTable deltas) const;

  Mode mode() const;
  const std::vector<PureDistribution>& pures() const;
  const PureDistribution& pure(PairId pair) const;
  // Distinct pair ids among the pures, ascending.
  std::vector<PairId> pair_ids() const;
  bool has_theta() const;

  Rational moment(const Word& w) const;
  Rational theta(const Word& w) const;
  Rational evaluate(const ScalarWordSum& s) const;
  Rational evaluate_theta(const ScalarWordSum& s) const;

 private:
  struct State;
  explicit JointDistribution(std::shared_ptr<const State> state);

  std::shared_ptr<const State> state_;
};

}  // namespace bifree
