#include "bifree/cumulants.hpp"

#include "bifree/errors.hpp"

namespace bifree {

std::optional<Rational> CumulantCache::find(const Word& w) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find(w);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Rational CumulantCache::store(const Word& w, Rational value) {
  std::lock_guard lock(mutex_);
  return values_.try_emplace(w, std::move(value)).first->second;
}

std::size_t CumulantCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

Rational phi_pi(const MomentFn& phi, const SetPartition& p, const Word& w) {
  if (p.size() != w.size()) throw SizeError("partition and word sizes differ");
  Rational product = 1;
  for (const Block& b : p.blocks()) {
    product *= phi(subword(w, b));
    if (product == 0) break;
  }
  return product;
}

Rational phi_pi(const JointDistribution& d, const BncPartition& p, const Word& w) {
  if (p.chi() != chi_of(w)) throw ChiMismatchError("partition chi differs from the word's chi");
  return phi_pi([&d](const Word& v) { return d.moment(v); }, p.partition(), w);
}

Rational kappa_recursive(const MomentFn& phi, const Word& w, CumulantCache& cache) {
  if (w.empty()) throw DomainError("cumulants are defined for words of length >= 1");
  if (auto hit = cache.find(w)) return *hit;
  Rational value = phi(w);
  const MomentFn sub = [&](const Word& v) { return kappa_recursive(phi, v, cache); };
  for (const SetPartition& p : bnc_partitions(chi_of(w))) {
    if (p.block_count() == 1) continue;
    value -= phi_pi(sub, p, w);
  }
  return cache.store(w, std::move(value));
}

Rational conditional_kappa_recursive(const MomentFn& theta, const MomentFn& kappa, const Word& w,
                                     CumulantCache& cache) {
  if (w.empty()) throw DomainError("conditional cumulants are defined for words of length >= 1");
  if (auto hit = cache.find(w)) return *hit;
  const ChiMap chi = chi_of(w);
  const auto& partitions = bnc_partitions(chi);
  const auto& kinds = bnc_block_kinds(chi);
  Rational value = theta(w);
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    const SetPartition& p = partitions[k];
    if (p.block_count() == 1) continue;
    Rational term = 1;
    for (std::size_t b = 0; b < p.block_count() && term != 0; ++b) {
      const Word sub = subword(w, p.blocks()[b]);
      term *= kinds[k][b] == BlockKind::kInner ? kappa(sub) : conditional_kappa_recursive(theta, kappa, sub, cache);
    }
    value -= term;
  }
  return cache.store(w, std::move(value));
}

Rational moments_from_cumulants(const MomentFn& kappa, const Word& w) {
  if (w.empty()) return 1;
  Rational total = 0;
  for (const SetPartition& p : bnc_partitions(chi_of(w))) total += phi_pi(kappa, p, w);
  return total;
}

CumulantEngine::CumulantEngine(JointDistribution d)
    : phi_([d](const Word& w) { return d.moment(w); }) {
  if (d.has_theta()) theta_ = [d](const Word& w) { return d.theta(w); };
}

CumulantEngine::CumulantEngine(MomentFn phi, std::optional<MomentFn> theta)
    : phi_(std::move(phi)), theta_(std::move(theta)) {}

Rational CumulantEngine::kappa(const Word& w) { return kappa_recursive(phi_, w, kappa_cache_); }

Rational CumulantEngine::kappa_via_mobius(const Word& w) {
  if (w.empty()) throw DomainError("cumulants are defined for words of length >= 1");
  const ChiMap chi = chi_of(w);
  const auto& partitions = bnc_partitions(chi);
  const auto& mu = bnc_mobius_to_full(chi);
  Rational total = 0;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    if (mu[k] != 0) total += mu[k] * phi_pi(phi_, partitions[k], w);
  }
  return total;
}

Rational CumulantEngine::conditional_kappa(const Word& w) {
  if (!theta_) throw ModeError("distribution has no theta-layer");
  return conditional_kappa_recursive(*theta_, [this](const Word& v) { return kappa(v); }, w, conditional_cache_);
}

Rational kappa(const JointDistribution& d, const Word& w) { return CumulantEngine(d).kappa(w); }
Rational kappa_via_mobius(const JointDistribution& d, const Word& w) { return CumulantEngine(d).kappa_via_mobius(w); }
Rational conditional_kappa(const JointDistribution& d, const Word& w) {
  return CumulantEngine(d).conditional_kappa(w);
}

namespace {

bool blocks_monochromatic(const SetPartition& p, const Word& w) {
  for (const Block& b : p.blocks()) {
    for (std::size_t i : b) {
      if (w[i].pair != w[b.front()].pair) return false;
    }
  }
  return true;
}

}  // namespace

Rational bifree_product_moment(std::span<const PureDistribution> pures, const Word& w) {
  if (w.empty()) return 1;
  Rational total = 0;
  for (const SetPartition& p : bnc_partitions(chi_of(w))) {
    if (!blocks_monochromatic(p, w)) continue;
    Rational term = 1;
    for (const Block& b : p.blocks()) {
      term *= find_pure(pures, w[b.front()].pair).cumulant(subword(w, b));
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

Rational conditional_product_theta(std::span<const PureDistribution> pures, const Word& w) {
  if (w.empty()) return 1;
  const ChiMap chi = chi_of(w);
  const auto& partitions = bnc_partitions(chi);
  const auto& kinds = bnc_block_kinds(chi);
  Rational total = 0;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    const SetPartition& p = partitions[k];
    if (!blocks_monochromatic(p, w)) continue;
    Rational term = 1;
    for (std::size_t b = 0; b < p.block_count() && term != 0; ++b) {
      const Block& block = p.blocks()[b];
      const PureDistribution& pure = find_pure(pures, w[block.front()].pair);
      const Word sub = subword(w, block);
      term *= kinds[k][b] == BlockKind::kInner ? pure.cumulant(sub) : pure.conditional_cumulant(sub);
    }
    total += term;
  }
  return total;
}

}  // namespace bifree
