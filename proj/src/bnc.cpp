#include "bifree/bnc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "bifree/errors.hpp"

namespace bifree {

namespace {

void check_chi(const SetPartition& p, const ChiMap& chi) {
  if (p.size() != chi.size()) {
    throw SizeError("partition of size " + std::to_string(p.size()) + " with chi of length " +
                    std::to_string(chi.size()));
  }
}

void check_index(const ChiMap& chi, std::size_t i) {
  if (i >= chi.size()) {
    throw IndexError("index " + std::to_string(i + 1) + " outside 1.." + std::to_string(chi.size()));
  }
}

// Non-crossing partitions of {0..n-1} in restricted-growth form, built by
// placing elements left to right and pruning as soon as a crossing appears.
void extend_non_crossing(std::size_t n, std::vector<int>& labels, int used, std::vector<std::vector<int>>& out) {
  const std::size_t k = labels.size();
  if (k == n) {
    out.push_back(labels);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    bool crossing = false;
    if (b < used) {
      // Adding k to block b crosses a block c iff some c-element x lies
      // between a b-element a and k while c also has an element before a.
      for (std::size_t a = 0; a < k && !crossing; ++a) {
        if (labels[a] != b) continue;
        for (std::size_t x = a + 1; x < k && !crossing; ++x) {
          const int c = labels[x];
          if (c == b) continue;
          for (std::size_t y = 0; y < a; ++y) {
            if (labels[y] == c) {
              crossing = true;
              break;
            }
          }
        }
      }
    }
    if (crossing) continue;
    labels.push_back(b);
    extend_non_crossing(n, labels, b == used ? used + 1 : used, out);
    labels.pop_back();
  }
}

template <typename Value>
class ChiCache {
 public:
  template <typename Make>
  const Value& get(const ChiMap& chi, Make make) {
    const std::string key = chi.to_string();
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return *it->second;
    }
    std::unique_ptr<Value> value = make();
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, std::unique_ptr<Value>> entries_;
};

}  // namespace

char side_char(Side side) { return side == Side::kLeft ? 'l' : 'r'; }

ChiMap::ChiMap(std::vector<Side> sides) : sides_(std::move(sides)) {}

ChiMap ChiMap::parse(std::string_view text) {
  std::vector<Side> sides;
  for (char c : text) {
    if (c == 'l' || c == 'L') {
      sides.push_back(Side::kLeft);
    } else if (c == 'r' || c == 'R') {
      sides.push_back(Side::kRight);
    } else {
      throw ParseError("chi string may only contain 'l' and 'r', got '" + std::string(text) + "'");
    }
  }
  if (sides.empty()) throw ParseError("empty chi string");
  return ChiMap(std::move(sides));
}

ChiMap ChiMap::all_left(std::size_t n) { return ChiMap(std::vector<Side>(n, Side::kLeft)); }

std::string ChiMap::to_string() const {
  std::string out;
  for (Side s : sides_) out += side_char(s);
  return out;
}

EpsMap::EpsMap(std::vector<int> colors) : colors_(std::move(colors)) {}

EpsMap EpsMap::parse(std::string_view text) {
  std::vector<int> colors;
  std::map<std::string, int> ids;
  std::stringstream in{std::string(text)};
  std::string name;
  while (std::getline(in, name, ',')) {
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    if (name.empty()) throw ParseError("empty colour in epsilon list '" + std::string(text) + "'");
    auto [it, inserted] = ids.try_emplace(name, static_cast<int>(ids.size()));
    colors.push_back(it->second);
  }
  if (colors.empty()) throw ParseError("empty epsilon list");
  return EpsMap(std::move(colors));
}

bool EpsMap::is_constant() const {
  return std::adjacent_find(colors_.begin(), colors_.end(), std::not_equal_to<>()) == colors_.end();
}

std::vector<std::size_t> s_chi_permutation(const ChiMap& chi) {
  std::vector<std::size_t> order;
  order.reserve(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] == Side::kLeft) order.push_back(i);
  }
  for (std::size_t i = chi.size(); i-- > 0;) {
    if (chi[i] == Side::kRight) order.push_back(i);
  }
  return order;
}

std::vector<std::size_t> chi_ranks(const ChiMap& chi) {
  const auto order = s_chi_permutation(chi);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  return rank;
}

bool chi_precedes(const ChiMap& chi, std::size_t i, std::size_t j) {
  check_index(chi, i);
  check_index(chi, j);
  if (chi[i] != chi[j]) return chi[i] == Side::kLeft;
  return chi[i] == Side::kLeft ? i < j : i > j;
}

ChiInterval chi_interval(const ChiMap& chi, std::size_t i, std::size_t j, bool left_closed, bool right_closed) {
  const auto order = s_chi_permutation(chi);
  const auto rank = chi_ranks(chi);
  const std::size_t n = chi.size();
  if (i == kPosInfinity || j == kNegInfinity) throw OrderError("chi-interval with inverted ray endpoints");
  if (i != kNegInfinity) check_index(chi, i);
  if (j != kPosInfinity) check_index(chi, j);
  if (i != kNegInfinity && j != kPosInfinity && rank[j] < rank[i]) {
    throw OrderError("chi-interval endpoints out of order: " + std::to_string(j + 1) + " precedes " +
                     std::to_string(i + 1));
  }
  ChiInterval out;
  out.rank_begin = i == kNegInfinity ? 0 : rank[i] + (left_closed ? 0 : 1);
  out.rank_end = j == kPosInfinity ? n : rank[j] + (right_closed ? 1 : 0);
  out.rank_end = std::max(out.rank_end, out.rank_begin);
  for (std::size_t k = out.rank_begin; k < out.rank_end; ++k) out.indices.push_back(order[k]);
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<bool> member(n, false);
  for (std::size_t i : indices) member[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!member[i]) out.push_back(i);
  }
  return out;
}

SetPartition transport_to_chi_order(const SetPartition& p, const ChiMap& chi) {
  check_chi(p, chi);
  const auto order = s_chi_permutation(chi);
  std::vector<int> labels(p.size());
  for (std::size_t k = 0; k < order.size(); ++k) labels[k] = static_cast<int>(p.block_of(order[k]));
  return SetPartition::from_labels(labels);
}

bool is_non_crossing(const SetPartition& p) {
  // Scan left to right keeping the stack of blocks that are open; a block
  // that reappears must be on top, otherwise two blocks interleave.
  std::vector<std::size_t> last(p.block_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) last[b] = p.blocks()[b].back();
  std::vector<std::size_t> open;
  std::vector<bool> started(p.block_count(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t b = p.block_of(i);
    if (started[b]) {
      if (open.empty() || open.back() != b) return false;
      if (i == last[b]) open.pop_back();
    } else {
      started[b] = true;
      if (i != last[b]) open.push_back(b);
    }
  }
  return true;
}

bool is_bi_non_crossing(const SetPartition& p, const ChiMap& chi) {
  return is_non_crossing(transport_to_chi_order(p, chi));
}

bool satisfies_four_point_condition(const SetPartition& p, const ChiMap& chi) {
  check_chi(p, chi);
  const std::size_t n = p.size();
  const auto order = s_chi_permutation(chi);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!p.same_block(order[a], order[c])) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (p.same_block(order[b], order[d]) && !p.same_block(order[a], order[b])) return false;
        }
      }
    }
  }
  return true;
}

BncPartition::BncPartition(SetPartition p, ChiMap chi) : partition_(std::move(p)), chi_(std::move(chi)) {
  if (!is_bi_non_crossing(partition_, chi_)) {
    throw OrderError(partition_.to_string() + " is not bi-non-crossing for chi=" + chi_.to_string());
  }
}

const std::vector<SetPartition>& bnc_partitions(const ChiMap& chi) {
  static ChiCache<std::vector<SetPartition>> cache;
  if (chi.size() < 1 || chi.size() > kMaxGroundSize) {
    throw SizeError("BNC enumeration needs 1 <= n <= " + std::to_string(kMaxGroundSize));
  }
  return cache.get(chi, [&] {
    auto out = std::make_unique<std::vector<SetPartition>>();
    std::vector<std::vector<int>> nc;
    std::vector<int> labels;
    extend_non_crossing(chi.size(), labels, 0, nc);
    const auto order = s_chi_permutation(chi);
    out->reserve(nc.size());
    std::vector<int> transported(chi.size());
    for (const auto& ranks : nc) {
      for (std::size_t k = 0; k < order.size(); ++k) transported[order[k]] = ranks[k];
      out->push_back(SetPartition::from_labels(transported));
    }
    std::sort(out->begin(), out->end());
    return out;
  });
}

std::vector<BncPartition> enumerate_bnc(const ChiMap& chi) {
  std::vector<BncPartition> out;
  for (const auto& p : bnc_partitions(chi)) out.emplace_back(p, chi);
  return out;
}

BncPartition bnc_join(const BncPartition& p, const BncPartition& q) {
  if (p.chi() != q.chi()) throw ChiMismatchError("bnc_join of partitions with different chi");
  const ChiMap& chi = p.chi();
  SetPartition current = join(p.partition(), q.partition());
  const auto order = s_chi_permutation(chi);
  const std::size_t n = chi.size();
  // Merge any pair of interleaving blocks until none remain.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < n && !merged; ++a) {
      for (std::size_t b = a + 1; b < n && !merged; ++b) {
        for (std::size_t c = b + 1; c < n && !merged; ++c) {
          if (!current.same_block(order[a], order[c]) || current.same_block(order[a], order[b])) continue;
          for (std::size_t d = c + 1; d < n; ++d) {
            if (current.same_block(order[b], order[d])) {
              std::vector<int> labels(current.labels().begin(), current.labels().end());
              const int from = labels[order[b]];
              const int to = labels[order[a]];
              for (auto& l : labels) {
                if (l == from) l = to;
              }
              current = SetPartition::from_labels(labels);
              merged = true;
              break;
            }
          }
        }
      }
    }
  }
  return BncPartition(std::move(current), chi);
}

BncPartition bnc_meet(const BncPartition& p, const BncPartition& q) {
  if (p.chi() != q.chi()) throw ChiMismatchError("bnc_meet of partitions with different chi");
  return BncPartition(meet(p.partition(), q.partition()), p.chi());
}

std::vector<ChiInterval> maximal_mono_intervals(const ChiMap& chi, const EpsMap& eps) {
  if (chi.size() != eps.size()) {
    throw SizeError("chi of length " + std::to_string(chi.size()) + " with epsilon of length " +
                    std::to_string(eps.size()));
  }
  const auto order = s_chi_permutation(chi);
  std::vector<ChiInterval> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || eps[order[k]] != eps[order[k - 1]]) {
      out.push_back(ChiInterval{{}, k, k});
    }
    out.back().indices.push_back(order[k]);
    out.back().rank_end = k + 1;
  }
  for (auto& interval : out) std::sort(interval.indices.begin(), interval.indices.end());
  return out;
}

SetPartition mono_interval_partition(const ChiMap& chi, const EpsMap& eps) {
  std::vector<Block> blocks;
  for (auto& interval : maximal_mono_intervals(chi, eps)) blocks.push_back(std::move(interval.indices));
  return SetPartition::from_blocks(chi.size(), blocks);
}

std::vector<BlockKind> classify_blocks(const SetPartition& p, const ChiMap& chi) {
  check_chi(p, chi);
  const auto rank = chi_ranks(chi);
  struct Span {
    std::size_t first, last;
  };
  std::vector<Span> spans;
  for (const auto& block : p.blocks()) {
    Span s{rank[block.front()], rank[block.front()]};
    for (std::size_t e : block) {
      s.first = std::min(s.first, rank[e]);
      s.last = std::max(s.last, rank[e]);
    }
    spans.push_back(s);
  }
  std::vector<BlockKind> kinds(spans.size(), BlockKind::kOuter);
  for (std::size_t b = 0; b < spans.size(); ++b) {
    for (std::size_t c = 0; c < spans.size(); ++c) {
      if (c != b && spans[c].first < spans[b].first && spans[b].last < spans[c].last) {
        kinds[b] = BlockKind::kInner;
        break;
      }
    }
  }
  return kinds;
}

std::vector<BlockKind> classify_blocks(const BncPartition& p) { return classify_blocks(p.partition(), p.chi()); }

const std::vector<std::vector<BlockKind>>& bnc_block_kinds(const ChiMap& chi) {
  static ChiCache<std::vector<std::vector<BlockKind>>> cache;
  return cache.get(chi, [&] {
    auto kinds = std::make_unique<std::vector<std::vector<BlockKind>>>();
    for (const auto& p : bnc_partitions(chi)) kinds->push_back(classify_blocks(p, chi));
    return kinds;
  });
}

namespace {

const MobiusTable& mobius_table(const ChiMap& chi) {
  static ChiCache<MobiusTable> cache;
  return cache.get(chi, [&] { return std::make_unique<MobiusTable>(bnc_partitions(chi)); });
}

}  // namespace

std::int64_t bnc_mobius(const BncPartition& lower, const BncPartition& upper) {
  if (lower.chi() != upper.chi()) throw ChiMismatchError("bnc_mobius of partitions with different chi");
  return mobius_table(lower.chi())(lower.partition(), upper.partition());
}

const std::vector<std::int64_t>& bnc_mobius_to_full(const ChiMap& chi) {
  static ChiCache<std::vector<std::int64_t>> cache;
  return cache.get(chi, [&] {
    const auto& table = mobius_table(chi);
    const auto top = SetPartition::full(chi.size());
    auto values = std::make_unique<std::vector<std::int64_t>>();
    for (const auto& p : bnc_partitions(chi)) values->push_back(table(p, top));
    return values;
  });
}

}  // namespace bifree
