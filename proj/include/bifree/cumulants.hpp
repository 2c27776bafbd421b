#pragma once

// Moment <-> cumulant transforms over BNC(chi), the bi-free and conditionally
// bi-free product constructions, and conditional cumulants.

#include <functional>
#include <mutex>
#include <optional>
#include <span>

#include "bifree/bnc.hpp"
#include "bifree/distribution.hpp"
#include "bifree/rational.hpp"
#include "bifree/words.hpp"

namespace bifree {

using MomentFn = std::function<Rational(const Word&)>;

// Memo of word -> value. Concurrent callers may compute the same entry twice;
// the first stored value wins and all later readers see it.
class CumulantCache {
 public:
  std::optional<Rational> find(const Word& w) const;
  Rational store(const Word& w, Rational value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  WordTable values_;
};

// prod_{B in pi} phi(w_B).
Rational phi_pi(const MomentFn& phi, const SetPartition& p, const Word& w);
Rational phi_pi(const JointDistribution& d, const BncPartition& p, const Word& w);

// kappa(w) = phi(w) - sum_{pi != 1} kappa_pi(w), memoized in `cache`.
Rational kappa_recursive(const MomentFn& phi, const Word& w, CumulantCache& cache);
// K(w) = theta(w) - sum_{pi != 1} prod_{inner} kappa(w_V) prod_{outer} K(w_V).
Rational conditional_kappa_recursive(const MomentFn& theta, const MomentFn& kappa, const Word& w,
                                     CumulantCache& cache);
// phi(w) = sum_{pi in BNC(chi)} prod_{B} kappa(w_B); the empty word gives 1.
Rational moments_from_cumulants(const MomentFn& kappa, const Word& w);

// Cumulants of a fixed distribution with shared memo tables.
class CumulantEngine {
 public:
  explicit CumulantEngine(JointDistribution d);
  CumulantEngine(MomentFn phi, std::optional<MomentFn> theta = std::nullopt);

  Rational kappa(const Word& w);
  // sum_{pi} mu(pi, 1) phi_pi(w): the Möbius-inversion route.
  Rational kappa_via_mobius(const Word& w);
  Rational conditional_kappa(const Word& w);

 private:
  MomentFn phi_;
  std::optional<MomentFn> theta_;
  CumulantCache kappa_cache_;
  CumulantCache conditional_cache_;
};

Rational kappa(const JointDistribution& d, const Word& w);
Rational kappa_via_mobius(const JointDistribution& d, const Word& w);
Rational conditional_kappa(const JointDistribution& d, const Word& w);

// Sum over pi in BNC(chi(w)) with epsilon-monochromatic blocks of the
// product of each block's pure cumulant.
Rational bifree_product_moment(std::span<const PureDistribution> pures, const Word& w);
// Same sum with pure kappa on inner blocks and pure conditional cumulants
// on outer blocks.
Rational conditional_product_theta(std::span<const PureDistribution> pures, const Word& w);

}  // namespace bifree
