#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>

#include "skeinlab/partition.hpp"

using namespace skeinlab;
using LP = LaurentPoly;

namespace {

// Brute force over compositions of n, keeping the weakly decreasing ones.
std::size_t count_by_compositions(int n) {
  std::set<std::vector<int>> seen;
  std::function<void(int, std::vector<int>&)> go = [&](int left, std::vector<int>& parts) {
    if (left == 0) {
      std::vector<int> p = parts;
      std::sort(p.rbegin(), p.rend());
      seen.insert(p);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      parts.push_back(k);
      go(left - k, parts);
      parts.pop_back();
    }
  };
  std::vector<int> parts;
  go(n, parts);
  return seen.size();
}

}  // namespace

TEST_CASE("parse and print", "[partition]") {
  CHECK(Partition::parse("2,1") == Partition{2, 1});
  CHECK(Partition::parse("0").empty());
  CHECK(Partition{3, 1}.to_string() == "3,1");
  CHECK(Partition{}.to_string() == "0");
  CHECK_THROWS(Partition::parse("1,2"));
  CHECK_THROWS(Partition::parse("2,x"));
}

TEST_CASE("content polynomial", "[partition]") {
  CHECK(content_polynomial(Partition{}).is_zero());
  CHECK(content_polynomial(Partition{2, 1}) == LP::s(-1) + LP::constant(1) + LP::s(1));
  CHECK(content_polynomial(Partition{2}) == LP::constant(1) + LP::s(1));
}

TEST_CASE("content polynomial at one is the size", "[partition][property]") {
  for (const auto& p : enumerate_partitions(8)) {
    BigInt total = 0;
    for (const auto& t : content_polynomial(p).terms()) total += t.coeff;
    CHECK(total == p.size());
  }
}

TEST_CASE("Frobenius form", "[partition]") {
  auto f = Partition{2, 1}.frobenius();
  CHECK(f.arms == std::vector<int>{1});
  CHECK(f.legs == std::vector<int>{1});
  f = Partition{1}.frobenius();
  CHECK(f.arms == std::vector<int>{0});
  CHECK(f.legs == std::vector<int>{0});
  f = Partition{}.frobenius();
  CHECK(f.arms.empty());
  CHECK(f.legs.empty());
}

TEST_CASE("Frobenius round trip and strict decrease", "[partition][property]") {
  for (const auto& p : enumerate_partitions(10)) {
    auto f = p.frobenius();
    REQUIRE(f.arms.size() == f.legs.size());
    for (std::size_t i = 1; i < f.arms.size(); ++i) {
      CHECK(f.arms[i - 1] > f.arms[i]);
      CHECK(f.legs[i - 1] > f.legs[i]);
    }
    CHECK(Partition::from_frobenius(f) == p);
  }
}

TEST_CASE("Frobenius content identity", "[partition]") {
  CHECK(LP::quantum_factor(1) * (LP::s(-2) + LP::constant(1) + LP::s(2)) == LP::s(3) - LP::s(-3));
  for (const auto& p : enumerate_partitions(10)) CHECK(frobenius_identity_check(p));
}

TEST_CASE("neighbors", "[partition]") {
  using V = std::vector<Partition>;
  CHECK(Partition{1}.plus() == V{{2}, {1, 1}});
  CHECK(Partition{1}.minus() == V{Partition{}});
  CHECK(Partition{2, 1}.plus() == V{{3, 1}, {2, 2}, {2, 1, 1}});
  CHECK(Partition{2, 1}.minus() == V{{2}, {1, 1}});
  CHECK(Partition{}.minus().empty());
  CHECK(neighbors(Partition{2, 1}, NeighborKind::minus) == Partition{2, 1}.minus());
}

TEST_CASE("plus and minus are dual", "[partition][property]") {
  for (const auto& rho : enumerate_partitions(9)) {
    std::set<int> values(rho.parts().begin(), rho.parts().end());
    CHECK(rho.plus().size() == values.size() + 1);
    for (const auto& mu : rho.plus()) {
      auto back = mu.minus();
      CHECK(std::find(back.begin(), back.end(), rho) != back.end());
    }
  }
}

TEST_CASE("enumeration", "[partition]") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(2) == std::vector<Partition>{Partition{}, {1}, {2}, {1, 1}});
  std::size_t six = 0;
  for (const auto& p : enumerate_partitions(6)) six += p.size() == 6;
  CHECK(six == 11);
  CHECK(six == count_by_compositions(6));
  CHECK(enumerate_partitions(8).size() == 67);
  CHECK_THROWS(enumerate_partitions(-1));
}

TEST_CASE("enumeration order is the partition order", "[partition]") {
  auto all = enumerate_partitions(7);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}
