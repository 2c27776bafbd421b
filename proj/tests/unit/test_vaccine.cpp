#include <doctest.h>

#include <random>

#include "bifree/errors.hpp"
#include "bifree/vaccine.hpp"
#include "random_tables.hpp"

using namespace bifree;
using bifree::testing::random_family;

namespace {

Rational shifted_value(const MomentFn& phi, const Word& w, const std::vector<Rational>& shifts,
                       const std::vector<std::size_t>& indices) {
  Word sub;
  std::vector<Rational> sub_shifts;
  for (std::size_t i : indices) {
    sub.push_back(w[i]);
    sub_shifts.push_back(shifts[i]);
  }
  Rational value = 0;
  const auto sum = ScalarWordSum::shifted_product(sub, sub_shifts);
  for (const auto& [v, c] : sum.terms()) value += c * phi(v);
  return value;
}

}  // namespace

TEST_CASE("pivot solves") {
  std::mt19937_64 rng(1);
  auto f = random_family(1, 1, 1, 3, rng);
  const auto& p = f.pures[0];
  const MomentFn phi = [&](const Word& v) { return p.moment(v); };
  const Letter g = f.alphabet.letter("x0a");
  const Letter h = f.alphabet.letter("y0a");
  const Word single{g};
  const std::vector<std::size_t> one{0};
  CHECK(*solve_pivot_shift(phi, single, one, std::vector<Rational>{5}, 0) == p.moment({g}));

  const Word two{g, h};
  const std::vector<std::size_t> both{0, 1};
  const auto c = solve_pivot_shift(phi, two, both, std::vector<Rational>{0, 0}, 1);
  if (p.moment({g}) != 0) {
    CHECK(*c == p.moment({g, h}) / p.moment({g}));
  } else {
    CHECK_FALSE(c.has_value());
  }
}

TEST_CASE("centring the ten-letter word") {
  std::mt19937_64 rng(2);
  Alphabet a;
  const std::string chi = "rlrrllllrr";
  const std::vector<int> eps{0, 0, 0, 1, 0, 1, 1, 0, 0, 0};
  std::vector<std::vector<Letter>> left(2);
  std::vector<std::vector<Letter>> right(2);
  a.add_pair("p0");
  a.add_pair("p1");
  Word w;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const Side side = chi[i] == 'l' ? Side::kLeft : Side::kRight;
    const Letter l = a.add_symbol("z" + std::to_string(i + 1), eps[i], side);
    (side == Side::kLeft ? left : right)[eps[i]].push_back(l);
    w.push_back(l);
  }
  std::vector<PureDistribution> pures;
  for (int p = 0; p < 2; ++p) {
    std::vector<Letter> gens = left[p];
    gens.insert(gens.end(), right[p].begin(), right[p].end());
    WordTable cumulants;
    for (const Letter& g : gens) {
      cumulants[{g}] = bifree::testing::random_rational(rng);
      for (const Letter& h : gens) cumulants[{g, h}] = bifree::testing::random_rational(rng);
    }
    pures.push_back(PureDistribution::from_cumulants(p, left[p], right[p], cumulants, 10));
  }
  const auto d = JointDistribution::bifree_product(pures);
  const auto instance = centre(d, w, 99);
  CHECK(instance.intervals.size() == 5);
  const MomentFn phi = [&](const Word& v) { return d.moment(v); };
  for (const auto& interval : instance.intervals) {
    CHECK(shifted_value(phi, w, instance.shifts, interval.indices) == 0);
  }
  CHECK(d.evaluate(ScalarWordSum::shifted_product(w, instance.shifts)) == 0);
}

TEST_CASE("single letters centre at their mean; a null functional cannot be centred") {
  const Letter x{0, 0, Side::kLeft};
  const Letter y{1, 1, Side::kLeft};
  WordTable px;
  px[{x}] = Rational(-2, 3);
  WordTable py;
  py[{y}] = 4;
  std::vector<PureDistribution> pures{PureDistribution::from_moments(0, {x}, {}, px, 1),
                                      PureDistribution::from_moments(1, {y}, {}, py, 1)};
  CHECK(centred_shifts(pures, {x, y}, 1) == std::vector<Rational>{Rational(-2, 3), 4});

  std::mt19937_64 rng(5);
  const MomentFn null = [](const Word&) { return Rational(0); };
  CHECK_THROWS_AS(centred_shifts(null, {x, x, y}, rng), DegenerateCentringError);
}

TEST_CASE("vaccine verdicts") {
  std::mt19937_64 rng(3);
  auto f = random_family(2, 1, 2, 5, rng);
  const auto d = f.product();
  const auto verdict = vaccine_test(d, 5, 50, 8);
  CHECK(verdict.holds);
  CHECK(verdict.to_string(f.alphabet) == "HOLDS trials=50 skipped=" + std::to_string(verdict.skipped));
  CHECK(vaccine_test(d, 5, 50, 8).to_string(f.alphabet) == verdict.to_string(f.alphabet));

  auto single = random_family(1, 1, 1, 3, rng);
  const auto vacuous = vaccine_test(single.product(), 3, 10, 1);
  CHECK(vacuous.holds);
  CHECK(vacuous.trials == 0);
  CHECK_THROWS_AS(vaccine_test(d, 9, 1, 1), SizeError);
  CHECK_THROWS_AS(vaccine_test(d, 0, 1, 1), SizeError);

  WordTable delta;
  delta[f.alphabet.parse_word("x0a x1a")] = 1;
  const auto broken = vaccine_test(d.with_perturbation(delta), 3, 200, 8);
  CHECK_FALSE(broken.holds);
  CHECK(broken.to_string(f.alphabet).rfind("COUNTEREXAMPLE word=[", 0) == 0);
}

TEST_CASE("reconstruction agrees with the product and ignores the seed") {
  std::mt19937_64 rng(4);
  auto f = random_family(2, 1, 1, 5, rng);
  const Letter x = f.alphabet.letter("x0a");
  const Letter y = f.alphabet.letter("x1a");
  CHECK(vaccine_reconstruct_moment(f.pures, {x, y}, 1) == f.pures[0].moment({x}) * f.pures[1].moment({y}));
  CHECK(vaccine_reconstruct_moment(f.pures, {x, x}, 1) == f.pures[0].moment({x, x}));
  const auto d = f.product();
  VaccineReconstructor r1(f.pures, 1);
  VaccineReconstructor r2(f.pures, 2);
  for_each_word(f.letters(), 5, [&](const Word& w) {
    CHECK(r1.moment(w) == d.moment(w));
    CHECK(r2.moment(w) == r1.moment(w));
    return true;
  });
}
