#include <doctest.h>

#include <set>

#include "bifree/errors.hpp"
#include "bifree/partitions.hpp"

using namespace bifree;

namespace {

// Bell numbers by the Bell triangle.
std::vector<std::size_t> bell_numbers(std::size_t n) {
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("enumeration sizes follow the Bell numbers") {
  const auto bell = bell_numbers(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto all = enumerate_set_partitions(n);
    CHECK(all.size() == bell[n]);
    CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_set_partitions(0), SizeError);
  CHECK_THROWS_AS(enumerate_set_partitions(kMaxGroundSize + 1), SizeError);
}

TEST_CASE("parsing and printing") {
  const auto p = SetPartition::parse("1|2 5 7|3 4|6 8");
  CHECK(p.size() == 8);
  CHECK(p.block_count() == 4);
  CHECK(p.same_block(1, 6));
  CHECK_FALSE(p.same_block(0, 1));
  CHECK(p.to_string() == "1|2 5 7|3 4|6 8");
  CHECK(SetPartition::parse("3 4|1|2 7 5|8 6") == p);
  CHECK_THROWS_AS(SetPartition::parse("1 2|2 3"), ParseError);
  CHECK_THROWS_AS(SetPartition::parse("1|3"), ParseError);
  CHECK_THROWS_AS(SetPartition::parse("1 x"), ParseError);
}

TEST_CASE("refinement order, join and meet") {
  const auto a = SetPartition::parse("1 2|3|4");
  const auto b = SetPartition::parse("1|2 3|4");
  CHECK(join(a, b) == SetPartition::parse("1 2 3|4"));
  CHECK(meet(a, b) == SetPartition::discrete(4));
  CHECK(refines(a, join(a, b)));
  CHECK_FALSE(refines(a, b));
  CHECK(refines(SetPartition::discrete(4), a));
  CHECK(refines(a, SetPartition::full(4)));
  CHECK_THROWS_AS(join(a, SetPartition::full(3)), SizeError);
}

TEST_CASE("join and meet are the lattice bounds on random pairs") {
  const auto all = enumerate_set_partitions(5);
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const auto& p = all[i];
      const auto& q = all[j];
      const auto up = join(p, q);
      const auto down = meet(p, q);
      for (const auto& r : all) {
        if (refines(p, r) && refines(q, r)) CHECK(refines(up, r));
        if (refines(r, p) && refines(r, q)) CHECK(refines(r, down));
      }
    }
  }
}

TEST_CASE("Möbius function of the full partition lattice") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_set_partitions(n);
    const std::int64_t expected = (n % 2 == 1 ? 1 : -1) * factorial(n - 1);
    CHECK(lattice_mobius(SetPartition::discrete(n), SetPartition::full(n), all) == expected);
  }
  const auto all = enumerate_set_partitions(3);
  CHECK(lattice_mobius(SetPartition::parse("1 2|3"), SetPartition::parse("1 2|3"), all) == 1);
  CHECK(lattice_mobius(SetPartition::parse("1 2|3"), SetPartition::full(3), all) == -1);
  CHECK_THROWS_AS(lattice_mobius(SetPartition::full(3), SetPartition::discrete(3), all), OrderError);
}
