#include <doctest.h>

#include <cmath>
#include <random>

#include "bifree/errors.hpp"
#include "bifree/exp_poly.hpp"
#include "bifree/liberation.hpp"
#include "random_tables.hpp"

using namespace bifree;
using bifree::testing::random_family;

TEST_CASE("taur on short words") {
  const Letter a{0, 1, Side::kLeft};
  const Letter b{1, 0, Side::kLeft};
  TensorSum single;
  single.add({}, {a}, 1);
  single.add({a}, {}, -1);
  CHECK(taur({a}, 1) == single);
  CHECK(taur({b, b}, 1).empty());

  const TensorSum two = taur({b, a}, 1);
  CHECK(two.coefficient({b}, {a}) == 1);
  CHECK(two.coefficient({b, a}, {}) == -1);
  CHECK(two.size() == 2);
}

TEST_CASE("evaluating taur") {
  std::mt19937_64 rng(1);
  auto f = random_family(2, 1, 1, 4, rng);
  const Letter x = f.alphabet.letter("x0a");
  const Letter y = f.alphabet.letter("x1a");
  const auto d = f.product();
  CHECK(eval_tensor(d, TensorSum{}) == 0);
  CHECK(eval_tensor(d, taur({y}, 1)) == 0);
  CHECK(eval_tensor(d, taur({x, y}, 1)) == d.moment({x}) * d.moment({y}) - d.moment({x, y}));
  CHECK(eval_tensor(d, taur({x, y}, 1)) == 0);
  WordTable delta;
  delta[{x, y}] = 1;
  CHECK(eval_tensor(d.with_perturbation(delta), taur({x, y}, 1)) == -1);
}

TEST_CASE("taur test") {
  std::mt19937_64 rng(2);
  auto f = random_family(2, 1, 2, 5, rng);
  const auto d = f.product();
  for (PairId iota : {0, 1}) {
    const auto v = taur_test(d, iota, 4);
    CHECK(v.holds);
    CHECK(v.certified);
    CHECK(v.to_string(f.alphabet) == "HOLDS words=" + std::to_string(v.words_checked));
  }
  CHECK(taur_test(d, 0, 3, true).holds);

  auto three = random_family(3, 1, 1, 4, rng);
  const auto u = taur_test(three.product(), 0, 3);
  CHECK(u.holds);
  CHECK_FALSE(u.certified);
  CHECK(u.to_string(three.alphabet).find("uncertified") != std::string::npos);

  WordTable delta;
  delta[f.alphabet.parse_word("x0a x1a")] = 1;
  const auto broken = taur_test(d.with_perturbation(delta), 1, 3);
  CHECK_FALSE(broken.holds);
  CHECK(broken.value != 0);
}

TEST_CASE("taur is well defined on commutation classes") {
  std::mt19937_64 rng(3);
  auto f = random_family(2, 1, 1, 6, rng);
  const auto d = f.product();
  for (PairId iota : {0, 1}) {
    for_each_word(f.letters(), 5, [&](const Word& w) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].side != w[i + 1].side && w[i].pair != w[i + 1].pair) {
          Word swapped = w;
          std::swap(swapped[i], swapped[i + 1]);
          CHECK(eval_tensor(d, taur(w, iota)) == eval_tensor(d, taur(swapped, iota)));
        }
      }
      return true;
    });
  }
}

TEST_CASE("free liberation gradient") {
  const Letter a{0, 1, Side::kLeft};
  const Letter b{1, 0, Side::kLeft};
  TensorSum single;
  single.add({}, {a}, -1);
  single.add({a}, {}, 1);
  CHECK(free_delta({a}, 1) == single);
  CHECK(free_delta({b, b}, 1).empty());
  TensorSum ab;
  ab.add({}, {a, b}, -1);
  ab.add({a}, {b}, 1);
  CHECK(free_delta({a, b}, 1) == ab);
  CHECK_THROWS_AS(free_delta({Letter{2, 1, Side::kRight}}, 1), DomainError);
}

TEST_CASE("unitary Brownian motion moments") {
  CHECK(ubm_moment(1).render() == "exp(-1/2*t)");
  CHECK(ubm_moment(2).render() == "(1 - t) * exp(-t)");
  CHECK(ubm_moment(3).render() == "(1 - 3*t + 3/2*t^2) * exp(-3/2*t)");
  CHECK(ubm_moment(0).render() == "1");
  CHECK(std::abs(ubm_eval(1, 1.0) - 0.6065306597126334) < 1e-12);
  CHECK(std::abs(ubm_eval(2, 1.0)) < 1e-15);
  for (unsigned n = 0; n <= 8; ++n) CHECK(ubm_eval(n, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (unsigned n = 1; n <= 8; ++n) CHECK(std::abs(ubm_eval(n, 50.0)) < 1e-9);
  CHECK_THROWS_AS(ubm_eval(1, -1.0), DomainError);

  // Taylor coefficients of exp(-n t / 2) (1 - ...) match the series of the formula.
  const auto m = ubm_moment(4);
  CHECK(m.taylor_coefficient(0) == 1);
  CHECK(m.taylor_coefficient(1) == -2 - 6);
}

TEST_CASE("liberation expansion") {
  std::mt19937_64 rng(4);
  auto f = random_family(2, 1, 1, 5, rng);
  const Letter x = f.alphabet.letter("x0a");
  const Letter y = f.alphabet.letter("x1a");
  const Letter w = f.alphabet.letter("y0a");
  const auto d = f.product();

  const auto none = replacement_expand(f.pures, {x, w}, 1);
  CHECK(none.c0 == d.moment({x, w}));
  CHECK(none.c1 == 0);

  const auto r = liberation_report(f.pures, {x, y}, 1);
  CHECK(r.expansion.c1 == d.moment({x}) * d.moment({y}) - d.moment({x, y}));
  CHECK(r.match);
  CHECK(liberation_derivative_check(f.pures, {y, w, x, y}, 0));

  LiberationExpander expander({});
  for (unsigned m = 1; m <= 5; ++m) {
    const std::vector<Factor> unitaries(m, Factor::unitary(Side::kRight, -1));
    const auto e = expander.expand(unitaries);
    CHECK(e.c0 == 1);
    CHECK(e.c1 == -Rational(m) / 2 - Rational(m * (m - 1) / 2));
  }
}

TEST_CASE("surviving taur terms never split a maximal monochromatic interval") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back({static_cast<int>(i), static_cast<PairId>(rng() % 2), rng() % 2 ? Side::kLeft : Side::kRight});
    }
    std::vector<std::size_t> interval_of(n);
    const auto intervals = maximal_mono_intervals(chi_of(w), eps_of(w));
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      for (std::size_t i : intervals[k].indices) interval_of[i] = k;
    }
    for (PairId iota : {0, 1}) {
      const TensorSum t = taur(w, iota);
      for (const auto& [key, c] : t.terms()) {
        std::vector<bool> right(n, false);
        for (const Letter& l : key.second) right[l.symbol] = true;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (interval_of[i] == interval_of[j]) CHECK(right[i] == right[j]);
          }
        }
      }
    }
  }
}
