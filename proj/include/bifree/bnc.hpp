#pragma once

// Chi-maps, the chi-order, chi-intervals and the lattice BNC(chi) of
// bi-non-crossing partitions.
//
// The chi-order lists left positions in increasing order followed by right
// positions in decreasing order. All indices are 0-based; the textual chi
// syntax is a string over {l, r} ("rllr"), epsilon is "p0,p1,p1,p0".

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bifree/partitions.hpp"

namespace bifree {

enum class Side : std::uint8_t { kLeft, kRight };

char side_char(Side side);

class ChiMap {
 public:
  ChiMap() = default;
  explicit ChiMap(std::vector<Side> sides);
  static ChiMap parse(std::string_view text);
  static ChiMap all_left(std::size_t n);

  std::size_t size() const { return sides_.size(); }
  Side operator[](std::size_t i) const { return sides_[i]; }
  const std::vector<Side>& sides() const { return sides_; }
  std::string to_string() const;

  friend bool operator==(const ChiMap&, const ChiMap&) = default;

 private:
  std::vector<Side> sides_;
};

// Pair colours, stored as small integers.
class EpsMap {
 public:
  EpsMap() = default;
  explicit EpsMap(std::vector<int> colors);
  // Comma separated colour names; ids are assigned by first appearance.
  static EpsMap parse(std::string_view text);

  std::size_t size() const { return colors_.size(); }
  int operator[](std::size_t i) const { return colors_[i]; }
  const std::vector<int>& colors() const { return colors_; }
  bool is_constant() const;

  friend bool operator==(const EpsMap&, const EpsMap&) = default;

 private:
  std::vector<int> colors_;
};

// Position k of the result holds the k-th element in chi-order.
std::vector<std::size_t> s_chi_permutation(const ChiMap& chi);
// Inverse of s_chi: rank of each element in chi-order.
std::vector<std::size_t> chi_ranks(const ChiMap& chi);

bool chi_precedes(const ChiMap& chi, std::size_t i, std::size_t j);

// Ray endpoints for chi_interval: "before the chi-first" and "after the chi-last".
inline constexpr std::size_t kNegInfinity = std::numeric_limits<std::size_t>::max() - 1;
inline constexpr std::size_t kPosInfinity = std::numeric_limits<std::size_t>::max();

struct ChiInterval {
  std::vector<std::size_t> indices;  // natural increasing order
  std::size_t rank_begin = 0;        // chi-rank range [rank_begin, rank_end)
  std::size_t rank_end = 0;

  bool empty() const { return indices.empty(); }
};

// Elements between i and j in chi-order; flags choose closed/open endpoints.
// Sentinel endpoints (kNegInfinity / kPosInfinity) give rays; their flag is ignored.
ChiInterval chi_interval(const ChiMap& chi, std::size_t i, std::size_t j, bool left_closed, bool right_closed);
// Complement of an index set in {0..n-1}, in natural order.
std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& indices);

// s_chi^{-1} . pi : the partition of chi-ranks induced by pi.
SetPartition transport_to_chi_order(const SetPartition& p, const ChiMap& chi);
bool is_non_crossing(const SetPartition& p);
bool is_bi_non_crossing(const SetPartition& p, const ChiMap& chi);
// Direct check of i<j<k<l (chi-order), i~k, j~l  =>  i~j.
bool satisfies_four_point_condition(const SetPartition& p, const ChiMap& chi);

class BncPartition {
 public:
  // Throws OrderError if p is not bi-non-crossing for chi.
  BncPartition(SetPartition p, ChiMap chi);

  const SetPartition& partition() const { return partition_; }
  const ChiMap& chi() const { return chi_; }
  std::size_t size() const { return partition_.size(); }

  friend bool operator==(const BncPartition&, const BncPartition&) = default;

 private:
  SetPartition partition_;
  ChiMap chi_;
};

std::vector<BncPartition> enumerate_bnc(const ChiMap& chi);
// Shared, cached enumeration used by the moment/cumulant machinery.
const std::vector<SetPartition>& bnc_partitions(const ChiMap& chi);

// Least element of BNC(chi) above both: partition join, then merge crossing
// blocks until the result is bi-non-crossing.
BncPartition bnc_join(const BncPartition& p, const BncPartition& q);
BncPartition bnc_meet(const BncPartition& p, const BncPartition& q);

// Maximal runs of constant colour along the chi-order, in chi-order.
std::vector<ChiInterval> maximal_mono_intervals(const ChiMap& chi, const EpsMap& eps);
// The same runs as a partition of {0..n-1}.
SetPartition mono_interval_partition(const ChiMap& chi, const EpsMap& eps);

enum class BlockKind : std::uint8_t { kInner, kOuter };

// Labels aligned with p.blocks(): a block is inner when some other block has
// elements chi-before and chi-after all of its elements.
std::vector<BlockKind> classify_blocks(const SetPartition& p, const ChiMap& chi);
std::vector<BlockKind> classify_blocks(const BncPartition& p);
// classify_blocks for every partition of bnc_partitions(chi), cached.
const std::vector<std::vector<BlockKind>>& bnc_block_kinds(const ChiMap& chi);

std::int64_t bnc_mobius(const BncPartition& lower, const BncPartition& upper);
// mu(pi, 1_n) for every pi in bnc_partitions(chi), aligned with that list.
const std::vector<std::int64_t>& bnc_mobius_to_full(const ChiMap& chi);

}  // namespace bifree
