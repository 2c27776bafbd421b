#include "bifree/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bifree/errors.hpp"

namespace bifree {

namespace {

void check_same_size(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) {
    throw SizeError("partitions of different ground sets (" + std::to_string(p.size()) + " vs " +
                    std::to_string(q.size()) + ")");
  }
}

// Union-find over element indices, used by join.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  SetPartition p;
  p.labels_.resize(labels.size());
  std::unordered_map<int, std::uint8_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = renumber.try_emplace(labels[i], static_cast<std::uint8_t>(renumber.size()));
    if (inserted) p.blocks_.emplace_back();
    p.labels_[i] = it->second;
    p.blocks_[it->second].push_back(i);
  }
  return p;
}

SetPartition SetPartition::from_blocks(std::size_t n, const std::vector<Block>& blocks) {
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ParseError("empty block in partition");
    for (std::size_t e : blocks[b]) {
      if (e >= n) throw ParseError("element " + std::to_string(e + 1) + " outside ground set of size " + std::to_string(n));
      if (labels[e] != -1) throw ParseError("element " + std::to_string(e + 1) + " appears in two blocks");
      labels[e] = static_cast<int>(b);
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (labels[e] == -1) throw ParseError("element " + std::to_string(e + 1) + " missing from partition");
  }
  return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    std::istringstream in{std::string(text.substr(start, bar - start))};
    Block block;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value == 0) throw ParseError("bad partition element '" + token + "'");
      block.push_back(value - 1);
      n = std::max<std::size_t>(n, value);
    }
    blocks.push_back(std::move(block));
    start = bar + 1;
  }
  if (n == 0) throw ParseError("empty partition text");
  if (n > kMaxGroundSize) throw SizeError("partition ground set exceeds " + std::to_string(kMaxGroundSize));
  return from_blocks(n, blocks);
}

SetPartition SetPartition::discrete(std::size_t n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

SetPartition SetPartition::full(std::size_t n) { return from_labels(std::vector<int>(n, 0)); }

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(blocks_[b][k] + 1);
    }
  }
  return out;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
  std::size_t h = p.size();
  for (auto l : p.labels()) h = h * 31 + l;
  return h;
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw SizeError("set partition enumeration needs 1 <= n <= " + std::to_string(kMaxGroundSize));
  }
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  // Iterative restricted-growth-string enumeration in lexicographic order.
  while (true) {
    out.push_back(SetPartition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rgs[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return out;
}

bool refines(const SetPartition& p, const SetPartition& q) {
  check_same_size(p, q);
  for (const auto& block : p.blocks()) {
    const auto target = q.block_of(block.front());
    for (std::size_t e : block) {
      if (q.block_of(e) != target) return false;
    }
  }
  return true;
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  check_same_size(p, q);
  DisjointSets sets(p.size());
  for (const auto* part : {&p, &q}) {
    for (const auto& block : part->blocks()) {
      for (std::size_t e : block) sets.unite(block.front(), e);
    }
  }
  std::vector<int> labels(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) labels[i] = static_cast<int>(sets.find(i));
  return SetPartition::from_labels(labels);
}

SetPartition meet(const SetPartition& p, const SetPartition& q) {
  check_same_size(p, q);
  std::vector<int> labels(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    labels[i] = static_cast<int>(p.block_of(i) * kMaxGroundSize + q.block_of(i));
  }
  return SetPartition::from_labels(labels);
}

MobiusTable::MobiusTable(std::vector<SetPartition> universe) : universe_(std::move(universe)) {
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], i);
}

std::size_t MobiusTable::index_of(const SetPartition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw OrderError("partition " + p.to_string() + " is not in the Möbius universe");
  return it->second;
}

std::int64_t MobiusTable::operator()(const SetPartition& lower, const SetPartition& upper) const {
  if (!refines(lower, upper)) {
    throw OrderError(lower.to_string() + " does not refine " + upper.to_string());
  }
  const std::size_t lo = index_of(lower);
  const std::size_t hi = index_of(upper);
  const std::uint64_t n = universe_.size();
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(lo * n + hi); it != memo_.end()) return it->second;
  }

  // Interval [lower, upper], finest first. A strict refinement always has
  // more blocks, so this is a linear extension of the order.
  std::vector<std::size_t> interval;
  for (std::size_t z = 0; z < universe_.size(); ++z) {
    if (refines(lower, universe_[z]) && refines(universe_[z], upper)) interval.push_back(z);
  }
  std::stable_sort(interval.begin(), interval.end(), [&](std::size_t a, std::size_t b) {
    return universe_[a].block_count() > universe_[b].block_count();
  });

  std::unordered_map<std::size_t, std::int64_t> mu;
  for (std::size_t k = 0; k < interval.size(); ++k) {
    const std::size_t z = interval[k];
    if (z == lo) {
      mu[z] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t y = interval[j];
      if (refines(universe_[y], universe_[z])) sum += mu.at(y);
    }
    mu[z] = -sum;
  }

  std::lock_guard lock(mutex_);
  for (const auto& [z, value] : mu) memo_.try_emplace(lo * n + z, value);
  return mu.at(hi);
}

std::int64_t lattice_mobius(const SetPartition& lower, const SetPartition& upper,
                            std::span<const SetPartition> universe) {
  MobiusTable table(std::vector<SetPartition>(universe.begin(), universe.end()));
  return table(lower, upper);
}

}  // namespace bifree
