#include "bifree/distribution.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "bifree/cumulants.hpp"
#include "bifree/errors.hpp"

namespace bifree {

namespace {

std::vector<int> symbols_of(const Word& w) {
  std::vector<int> out;
  for (const Letter& l : w) out.push_back(l.symbol);
  return out;
}

std::string describe(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += '#' + std::to_string(w[i].symbol);
  }
  return out + "]";
}

[[noreturn]] void insufficient(const std::string& reason, const Word& w) {
  throw InsufficientDataError("insufficient pure data: " + reason + " for word " + describe(w), symbols_of(w));
}

}  // namespace

struct PureDistribution::State {
  PairId pair = 0;
  Backing backing = Backing::kMoments;
  std::vector<Letter> left;
  std::vector<Letter> right;
  std::set<int> symbols;
  WordTable table;
  std::size_t max_degree = 0;
  std::unordered_map<int, int> haar_power;
  std::optional<WordTable> theta;

  CumulantCache moment_cache;
  CumulantCache cumulant_cache;
  CumulantCache conditional_cache;
};

PureDistribution::PureDistribution(std::shared_ptr<State> state) : state_(std::move(state)) {}

PureDistribution PureDistribution::from_moments(PairId pair, std::vector<Letter> left, std::vector<Letter> right,
                                                WordTable moments, std::size_t max_degree) {
  PureDistribution d(make_state(pair, Backing::kMoments, std::move(left), std::move(right), std::move(moments),
                                max_degree));
  if (auto it = d.state_->table.find(Word{}); it != d.state_->table.end() && it->second != 1) {
    throw ParseError("moment of the empty word must be 1");
  }
  return d;
}

PureDistribution PureDistribution::from_cumulants(PairId pair, std::vector<Letter> left, std::vector<Letter> right,
                                                  WordTable cumulants, std::size_t max_degree) {
  if (cumulants.count(Word{})) throw ParseError("cumulant table may not contain the empty word");
  return PureDistribution(make_state(pair, Backing::kCumulants, std::move(left), std::move(right),
                                     std::move(cumulants), max_degree));
}

PureDistribution PureDistribution::haar(PairId pair, Letter u_left, Letter u_left_star, Letter u_right,
                                        Letter u_right_star) {
  auto state = make_state(pair, Backing::kHaar, {u_left, u_left_star}, {u_right, u_right_star}, {}, kMaxGroundSize);
  state->haar_power = {{u_left.symbol, 1}, {u_left_star.symbol, -1}, {u_right.symbol, 1}, {u_right_star.symbol, -1}};
  return PureDistribution(std::move(state));
}

std::shared_ptr<PureDistribution::State> PureDistribution::make_state(PairId pair, Backing backing,
                                                                     std::vector<Letter> left,
                                                                     std::vector<Letter> right, WordTable table,
                                                                     std::size_t max_degree) {
  if (max_degree < 1) throw ParseError("max_degree must be positive");
  auto state = std::make_shared<State>();
  state->pair = pair;
  state->backing = backing;
  for (const auto* list : {&left, &right}) {
    const Side expected = list == &left ? Side::kLeft : Side::kRight;
    for (const Letter& l : *list) {
      if (l.pair != pair || l.side != expected) {
        throw ParseError("generator #" + std::to_string(l.symbol) + " tagged with the wrong pair or side");
      }
      if (!state->symbols.insert(l.symbol).second) {
        throw ParseError("generator #" + std::to_string(l.symbol) + " listed twice");
      }
    }
  }
  for (const auto& [w, value] : table) {
    for (const Letter& l : w) {
      if (!state->symbols.count(l.symbol)) {
        throw ParseError("table word " + describe(w) + " uses a symbol outside its pair");
      }
    }
  }
  state->left = std::move(left);
  state->right = std::move(right);
  state->table = std::move(table);
  state->max_degree = max_degree;
  return state;
}

PureDistribution PureDistribution::with_theta(WordTable theta) const {
  auto state = make_state(state_->pair, state_->backing, state_->left, state_->right, state_->table,
                          state_->max_degree);
  state->haar_power = state_->haar_power;
  for (const auto& [w, value] : theta) {
    for (const Letter& l : w) {
      if (!state->symbols.count(l.symbol)) {
        throw ParseError("theta word " + describe(w) + " uses a symbol outside its pair");
      }
    }
    if (w.empty() && value != 1) throw ParseError("theta of the empty word must be 1");
  }
  state->theta = std::move(theta);
  return PureDistribution(std::move(state));
}

PairId PureDistribution::pair() const { return state_->pair; }
PureDistribution::Backing PureDistribution::backing() const { return state_->backing; }
std::size_t PureDistribution::max_degree() const { return state_->max_degree; }
const std::vector<Letter>& PureDistribution::left_generators() const { return state_->left; }
const std::vector<Letter>& PureDistribution::right_generators() const { return state_->right; }
bool PureDistribution::has_theta() const { return state_->theta.has_value(); }

std::vector<Letter> PureDistribution::generators() const {
  std::vector<Letter> out = state_->left;
  out.insert(out.end(), state_->right.begin(), state_->right.end());
  return out;
}

void PureDistribution::check_word(const Word& w) const {
  for (const Letter& l : w) {
    if (!state_->symbols.count(l.symbol)) {
      throw DomainError("word " + describe(w) + " leaves pair " + std::to_string(state_->pair));
    }
  }
  if (w.size() > state_->max_degree) insufficient("degree exceeds max_degree", w);
}

Rational PureDistribution::moment(const Word& w) const {
  check_word(w);
  if (w.empty()) return 1;
  switch (state_->backing) {
    case Backing::kMoments: {
      auto it = state_->table.find(w);
      if (it == state_->table.end()) insufficient("missing moment-table entry", w);
      return it->second;
    }
    case Backing::kCumulants: {
      if (auto hit = state_->moment_cache.find(w)) return *hit;
      const PureDistribution self = *this;
      return state_->moment_cache.store(
          w, moments_from_cumulants([&self](const Word& v) { return self.cumulant(v); }, w));
    }
    case Backing::kHaar: {
      int net_left = 0;
      int net_right = 0;
      for (const Letter& l : w) (l.side == Side::kLeft ? net_left : net_right) += state_->haar_power.at(l.symbol);
      return net_left == net_right ? 1 : 0;
    }
  }
  return 0;
}

Rational PureDistribution::cumulant(const Word& w) const {
  if (w.empty()) throw DomainError("cumulants are defined for words of length >= 1");
  check_word(w);
  if (state_->backing == Backing::kCumulants) {
    auto it = state_->table.find(w);
    return it == state_->table.end() ? Rational(0) : it->second;
  }
  const PureDistribution self = *this;
  return kappa_recursive([&self](const Word& v) { return self.moment(v); }, w, state_->cumulant_cache);
}

Rational PureDistribution::theta(const Word& w) const {
  if (!state_->theta) throw ModeError("pure distribution has no theta-layer");
  check_word(w);
  if (w.empty()) return 1;
  auto it = state_->theta->find(w);
  if (it == state_->theta->end()) insufficient("missing theta-table entry", w);
  return it->second;
}

Rational PureDistribution::conditional_cumulant(const Word& w) const {
  if (!state_->theta) throw ModeError("pure distribution has no theta-layer");
  if (w.empty()) throw DomainError("conditional cumulants are defined for words of length >= 1");
  check_word(w);
  const PureDistribution self = *this;
  return conditional_kappa_recursive([&self](const Word& v) { return self.theta(v); },
                                     [&self](const Word& v) { return self.cumulant(v); }, w,
                                     state_->conditional_cache);
}

PureDistribution builtin_semicircular_pair(PairId pair, Letter s_left, Letter s_right,
                                           const SemicircularCovariance& cov) {
  WordTable cumulants;
  cumulants[{s_left, s_left}] = cov.left_left;
  cumulants[{s_left, s_right}] = cov.left_right;
  cumulants[{s_right, s_left}] = cov.left_right;
  cumulants[{s_right, s_right}] = cov.right_right;
  for (auto it = cumulants.begin(); it != cumulants.end();) {
    it = it->second == 0 ? cumulants.erase(it) : std::next(it);
  }
  return PureDistribution::from_cumulants(pair, {s_left}, {s_right}, std::move(cumulants), kMaxGroundSize);
}

PureDistribution builtin_semicircular_pair(Alphabet& alphabet, const std::string& pair_name,
                                           const SemicircularCovariance& cov, const std::string& prefix) {
  const PairId pair = alphabet.add_pair(pair_name);
  const Letter l = alphabet.add_symbol(prefix + "_l", pair, Side::kLeft);
  const Letter r = alphabet.add_symbol(prefix + "_r", pair, Side::kRight);
  return builtin_semicircular_pair(pair, l, r, cov);
}

PureDistribution builtin_haar_pair(Alphabet& alphabet, const std::string& pair_name, const std::string& prefix) {
  const PairId pair = alphabet.add_pair(pair_name);
  return PureDistribution::haar(pair, alphabet.add_symbol(prefix + "_l", pair, Side::kLeft),
                                alphabet.add_symbol(prefix + "_l*", pair, Side::kLeft),
                                alphabet.add_symbol(prefix + "_r", pair, Side::kRight),
                                alphabet.add_symbol(prefix + "_r*", pair, Side::kRight));
}

const PureDistribution& find_pure(std::span<const PureDistribution> pures, PairId pair) {
  for (const auto& p : pures) {
    if (p.pair() == pair) return p;
  }
  throw InsufficientDataError("insufficient pure data: no pure distribution for pair " + std::to_string(pair));
}

std::vector<Letter> scan_letters(std::span<const PureDistribution> pures, bool all_generators) {
  std::vector<Letter> letters;
  for (const auto& pure : pures) {
    for (const auto* gens : {&pure.left_generators(), &pure.right_generators()}) {
      if (gens->empty()) continue;
      if (all_generators) {
        letters.insert(letters.end(), gens->begin(), gens->end());
      } else {
        letters.push_back(gens->front());
      }
    }
  }
  return letters;
}

struct JointDistribution::State {
  Mode mode = Mode::kBifreeProduct;
  std::vector<PureDistribution> pures;
  WordTable table;
  WordTable deltas;
  std::shared_ptr<const State> base;
  mutable CumulantCache moment_memo;
  mutable CumulantCache theta_memo;
};

JointDistribution::JointDistribution(std::shared_ptr<const State> state) : state_(std::move(state)) {}

namespace {

void check_distinct_pairs(const std::vector<PureDistribution>& pures) {
  std::set<PairId> seen;
  for (const auto& p : pures) {
    if (!seen.insert(p.pair()).second) throw ParseError("two pure distributions for pair " + std::to_string(p.pair()));
  }
}

}  // namespace

JointDistribution JointDistribution::explicit_table(std::vector<PureDistribution> pures, WordTable table) {
  check_distinct_pairs(pures);
  auto state = std::make_shared<State>();
  state->mode = Mode::kExplicitTable;
  state->pures = std::move(pures);
  state->table = std::move(table);
  return JointDistribution(std::move(state));
}

JointDistribution JointDistribution::bifree_product(std::vector<PureDistribution> pures) {
  check_distinct_pairs(pures);
  auto state = std::make_shared<State>();
  state->mode = Mode::kBifreeProduct;
  state->pures = std::move(pures);
  return JointDistribution(std::move(state));
}

JointDistribution JointDistribution::conditional_product(std::vector<PureDistribution> pures) {
  check_distinct_pairs(pures);
  for (const auto& p : pures) {
    if (!p.has_theta()) throw ModeError("conditional product needs a theta-layer on pair " + std::to_string(p.pair()));
  }
  auto state = std::make_shared<State>();
  state->mode = Mode::kConditionalProduct;
  state->pures = std::move(pures);
  return JointDistribution(std::move(state));
}

JointDistribution JointDistribution::with_perturbation(WordTable deltas) const {
  auto state = std::make_shared<State>();
  state->mode = Mode::kTableWithPerturbation;
  state->pures = state_->pures;
  state->deltas = std::move(deltas);
  state->base = state_;
  return JointDistribution(std::move(state));
}

JointDistribution::Mode JointDistribution::mode() const { return state_->mode; }
const std::vector<PureDistribution>& JointDistribution::pures() const { return state_->pures; }
const PureDistribution& JointDistribution::pure(PairId pair) const { return find_pure(state_->pures, pair); }

std::vector<PairId> JointDistribution::pair_ids() const {
  std::vector<PairId> ids;
  for (const auto& p : state_->pures) ids.push_back(p.pair());
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool JointDistribution::has_theta() const {
  switch (state_->mode) {
    case Mode::kConditionalProduct:
      return true;
    case Mode::kTableWithPerturbation:
      return JointDistribution(state_->base).has_theta();
    default:
      return false;
  }
}

Rational JointDistribution::moment(const Word& w) const {
  if (w.empty()) return 1;
  switch (state_->mode) {
    case Mode::kExplicitTable: {
      if (auto it = state_->table.find(w); it != state_->table.end()) return it->second;
      if (is_monochromatic(w)) return pure(w.front().pair).moment(w);
      insufficient("missing joint-table entry", w);
    }
    case Mode::kBifreeProduct:
    case Mode::kConditionalProduct: {
      if (is_monochromatic(w)) return pure(w.front().pair).moment(w);
      if (auto hit = state_->moment_memo.find(w)) return *hit;
      return state_->moment_memo.store(w, bifree_product_moment(state_->pures, w));
    }
    case Mode::kTableWithPerturbation: {
      Rational value = JointDistribution(state_->base).moment(w);
      if (auto it = state_->deltas.find(w); it != state_->deltas.end()) value += it->second;
      return value;
    }
  }
  return 0;
}

Rational JointDistribution::theta(const Word& w) const {
  switch (state_->mode) {
    case Mode::kConditionalProduct: {
      if (w.empty()) return 1;
      if (is_monochromatic(w)) return pure(w.front().pair).theta(w);
      if (auto hit = state_->theta_memo.find(w)) return *hit;
      return state_->theta_memo.store(w, conditional_product_theta(state_->pures, w));
    }
    case Mode::kTableWithPerturbation:
      return JointDistribution(state_->base).theta(w);
    default:
      throw ModeError("distribution has no theta-layer");
  }
}

Rational JointDistribution::evaluate(const ScalarWordSum& s) const {
  Rational total = 0;
  for (const auto& [w, c] : s.terms()) total += c * moment(w);
  return total;
}

Rational JointDistribution::evaluate_theta(const ScalarWordSum& s) const {
  Rational total = 0;
  for (const auto& [w, c] : s.terms()) total += c * theta(w);
  return total;
}

}  // namespace bifree
