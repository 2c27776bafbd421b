#pragma once

// Set partitions of a finite ground set, their refinement lattice, and a
// memoized Möbius function over an arbitrary sub-poset of that lattice.
//
// Elements are 0-based internally. The textual syntax is 1-based:
// "1|2 5 7|3 4|6 8" lists blocks separated by '|', elements by spaces.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bifree {

// Bell(12) ~ 4.2M is the largest lattice we are willing to enumerate.
inline constexpr std::size_t kMaxGroundSize = 12;

using Block = std::vector<std::size_t>;

class SetPartition {
 public:
  SetPartition() = default;

  // Any labelling of the elements; equal labels share a block.
  static SetPartition from_labels(std::span<const int> labels);
  // Throws ParseError unless the blocks are disjoint, nonempty and cover {0..n-1}.
  static SetPartition from_blocks(std::size_t n, const std::vector<Block>& blocks);
  static SetPartition parse(std::string_view text);
  static SetPartition discrete(std::size_t n);
  static SetPartition full(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  // Canonical form: sorted by least element, ascending within each block.
  const std::vector<Block>& blocks() const { return blocks_; }
  // Restricted growth string: label of element i is the index of its block.
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  std::size_t block_of(std::size_t element) const { return labels_[element]; }
  bool same_block(std::size_t a, std::size_t b) const { return labels_[a] == labels_[b]; }

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.labels_ == b.labels_; }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint8_t> labels_;
  std::vector<Block> blocks_;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept;
};

// Every partition of {0..n-1} once, in restricted-growth-string order.
std::vector<SetPartition> enumerate_set_partitions(std::size_t n);

// True iff every block of p lies inside a block of q.
bool refines(const SetPartition& p, const SetPartition& q);
SetPartition join(const SetPartition& p, const SetPartition& q);
SetPartition meet(const SetPartition& p, const SetPartition& q);

// Möbius function of the poset `universe` ordered by refinement.
// Values for each (lower, z) pair are computed once and kept.
class MobiusTable {
 public:
  explicit MobiusTable(std::vector<SetPartition> universe);

  std::int64_t operator()(const SetPartition& lower, const SetPartition& upper) const;
  const std::vector<SetPartition>& universe() const { return universe_; }

 private:
  std::size_t index_of(const SetPartition& p) const;

  std::vector<SetPartition> universe_;
  std::unordered_map<SetPartition, std::size_t, SetPartitionHash> index_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

std::int64_t lattice_mobius(const SetPartition& lower, const SetPartition& upper,
                            std::span<const SetPartition> universe);

}  // namespace bifree
