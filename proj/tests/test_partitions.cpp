#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "stablering/partition.hpp"

namespace sr = stablering;

namespace {

// Independent oracle: count weakly-decreasing positive tuples summing to n.
long long count_partitions_oracle(int n, int max_part) {
  if (n == 0) return 1;
  long long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p)
    total += count_partitions_oracle(n - p, p);
  return total;
}

sr::Partition P(std::vector<int> parts) { return sr::Partition(std::move(parts)); }

}  // namespace

TEST_CASE("enumerate_partitions basics") {
  auto p0 = sr::enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p4 = sr::enumerate_partitions(4);
  std::vector<sr::Partition> want = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                     P({1, 1, 1, 1})};
  CHECK(p4 == want);

  CHECK(sr::enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 12; ++n)
    CHECK((long long)sr::enumerate_partitions(n).size() ==
          count_partitions_oracle(n, n == 0 ? 1 : n));
}

TEST_CASE("enumerate_partitions respects the weight cap") {
  sr::Caps caps;
  caps.partition_weight = 5;
  CHECK_THROWS_AS(sr::enumerate_partitions(6, caps), sr::size_limit_error);
  CHECK_NOTHROW(sr::enumerate_partitions(5, caps));
}

TEST_CASE("partition construction and validation") {
  CHECK_THROWS_AS(P({2, 3}), sr::validation_error);
  CHECK_THROWS_AS(P({1, 0}), sr::validation_error);
  CHECK(sr::Partition::from_unsorted({1, 3, 2}) == P({3, 2, 1}));
  CHECK(P({3, 1, 1}).weight() == 5);
  CHECK(P({3, 1, 1}).length() == 3);
  CHECK(P({3, 1, 1}).multiplicity(1) == 2);
  CHECK(P({3, 2, 1}).is_strict());
  CHECK_FALSE(P({2, 2}).is_strict());
}

TEST_CASE("conjugate is an involution") {
  CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
  CHECK(P({3, 1, 1}).conjugate() == P({3, 1, 1}));
  for (const auto& lam : sr::enumerate_partitions(7))
    CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("partition format and parse round-trip") {
  CHECK(sr::format_partition(P({3, 1, 1})) == "3,1,1");
  CHECK(sr::format_partition(sr::Partition()) == "-");
  CHECK(sr::parse_partition("3,1,1") == P({3, 1, 1}));
  CHECK(sr::parse_partition("-") == sr::Partition());
  CHECK_THROWS_AS(sr::parse_partition("1,2"), sr::validation_error);
  CHECK_THROWS_AS(sr::parse_partition("2,x"), sr::validation_error);
  for (const auto& lam : sr::enumerate_partitions(6))
    CHECK(sr::parse_partition(sr::format_partition(lam)) == lam);
}

TEST_CASE("enumerate_pvf counts") {
  sr::IndexSet one = sr::IndexSet::all_even(1);
  auto v = sr::enumerate_pvf(2, one);
  REQUIRE(v.size() == 2);
  CHECK(v[0].at(0) == P({2}));
  CHECK(v[1].at(0) == P({1, 1}));

  sr::IndexSet two = sr::IndexSet::all_even(2);
  CHECK(sr::enumerate_pvf(2, two).size() == 5);

  sr::IndexSet mixed({false, true});
  CHECK(sr::enumerate_pvf(2, mixed).size() == 4);

  // Single even label reduces to ordinary partitions.
  for (int n = 0; n <= 8; ++n)
    CHECK(sr::enumerate_pvf(n, one).size() == sr::enumerate_partitions(n).size());
}

TEST_CASE("strict partitions honor odd labels") {
  auto s4 = sr::enumerate_strict_partitions(4);
  std::vector<sr::Partition> want = {P({4}), P({3, 1})};
  CHECK(s4 == want);
  sr::IndexSet mixed({false, true});
  for (const auto& rho : sr::enumerate_pvf(4, mixed)) CHECK(rho.at(1).is_strict());
  CHECK_THROWS_AS(sr::PartitionFunction({sr::Partition(), P({1, 1})}, mixed),
                  sr::validation_error);
}

TEST_CASE("modify_type examples") {
  auto pf = [](std::vector<sr::Partition> a) {
    return sr::PartitionFunction(std::move(a));
  };
  CHECK(sr::modify_type(pf({P({3, 1, 1})})) == pf({P({2})}));
  CHECK(sr::modify_type(pf({P({1, 1, 1, 1, 1})})) == sr::PartitionFunction());
  CHECK(sr::modify_type(pf({P({2, 1}), P({2})})) == pf({P({1}), P({2})}));
}

TEST_CASE("unmodify_type examples and minimal n") {
  auto pf = [](std::vector<sr::Partition> a) {
    return sr::PartitionFunction(std::move(a));
  };
  CHECK(sr::unmodify_type(pf({P({2})}), 5) == pf({P({3, 1, 1})}));
  CHECK(sr::unmodify_type(pf({sr::Partition(), P({2})}), 2) ==
        pf({sr::Partition(), P({2})}));
  CHECK_THROWS_AS(sr::unmodify_type(pf({P({1, 1})}), 3), sr::class_empty_error);
  CHECK(sr::min_ambient_n(pf({P({1, 1})})) == 4);
  CHECK(sr::min_ambient_n(pf({sr::Partition(), P({2})})) == 2);
}

TEST_CASE("modify/unmodify round-trip") {
  sr::IndexSet two = sr::IndexSet::all_even(2);
  for (int w = 0; w <= 4; ++w)
    for (const auto& mu : sr::enumerate_pvf(w, two))
      for (int n = sr::min_ambient_n(mu); n <= sr::min_ambient_n(mu) + 3; ++n) {
        auto full = sr::unmodify_type(mu, n);
        CHECK(full.weight() == n);
        CHECK(sr::modify_type(full) == mu);
        // degree + padding length = full weight
        CHECK(sr::modify_type(full).weight() + full.at(0).length() == full.weight());
      }
}

TEST_CASE("pvf format and parse round-trip") {
  auto rho = sr::parse_pvf("0:2,1;1:3");
  CHECK(rho.at(0) == P({2, 1}));
  CHECK(rho.at(1) == P({3}));
  CHECK(sr::format_pvf(rho) == "0:2,1;1:3");
  CHECK(sr::format_pvf(sr::PartitionFunction()) == "-");
  CHECK(sr::parse_pvf("-") == sr::PartitionFunction());
  sr::IndexSet two = sr::IndexSet::all_even(2);
  for (int w = 0; w <= 4; ++w)
    for (const auto& mu : sr::enumerate_pvf(w, two))
      CHECK(sr::parse_pvf(sr::format_pvf(mu)) == mu);
}
