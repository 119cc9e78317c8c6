#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "a4strat/characteristic.hpp"
#include "a4strat/errors.hpp"
#include "oracles.hpp"

using namespace a4strat;

namespace {

std::vector<std::string> strings(const std::vector<Characteristic>& v) {
  std::vector<std::string> out;
  for (const auto& m : v) out.push_back(m.to_string());
  return out;
}

}  // namespace

TEST_CASE("string form round trips and rejects junk") {
  const auto m = Characteristic::parse("0110|1001");
  CHECK(m.genus() == 4);
  CHECK(m.eps(1) == 1);
  CHECK(m.delta(0) == 1);
  CHECK(m.to_string() == "0110|1001");
  CHECK_THROWS_AS(Characteristic::parse("01|1"), DomainError);
  CHECK_THROWS_AS(Characteristic::parse("0110"), DomainError);
  CHECK_THROWS_AS(Characteristic::parse("02|11"), DomainError);
  CHECK_THROWS_AS(Characteristic::parse("|"), DomainError);
  CHECK_THROWS_AS(Characteristic(0, 0, 0), DomainError);
}

TEST_CASE("enumeration at genus 1") {
  CHECK(strings(all_characteristics(1, ParityFilter::kEven)) == std::vector<std::string>{"0|0", "0|1", "1|0"});
  CHECK(strings(all_characteristics(1, ParityFilter::kOdd)) == std::vector<std::string>{"1|1"});
  CHECK(all_characteristics(1).size() == 4);
  CHECK_THROWS_AS(all_characteristics(0), DomainError);
}

TEST_CASE("enumeration matches the string-built oracle") {
  for (int g = 1; g <= 4; ++g) {
    const auto oracle = testing::enumerate_strings(g);
    CHECK(strings(all_characteristics(g)) == oracle);
    std::size_t even = 0;
    for (const auto& s : oracle) even += testing::string_parity(s) == 0;
    CHECK(all_characteristics(g, ParityFilter::kEven).size() == even);
    CHECK(all_characteristics(g, ParityFilter::kOdd).size() == oracle.size() - even);
    CHECK(even_count(g) == even);
    CHECK(odd_count(g) == oracle.size() - even);
  }
  CHECK(all_characteristics(4, ParityFilter::kEven).size() == 136);
}

TEST_CASE("parity") {
  CHECK(parity(Characteristic::parse("0|0")) == Parity::kEven);
  CHECK(parity(Characteristic::parse("1|1")) == Parity::kOdd);
  CHECK(parity(Characteristic::parse("11|11")) == Parity::kEven);
  CHECK(parity(Characteristic::parse("101|100")) == Parity::kOdd);
}

TEST_CASE("addition") {
  CHECK(add(Characteristic::parse("0|1"), Characteristic::parse("0|1")) == Characteristic::parse("0|0"));
  CHECK(add(Characteristic::parse("0|1"), Characteristic::parse("1|0")) == Characteristic::parse("1|1"));
  CHECK(add(Characteristic::parse("01|10"), Characteristic::parse("10|10")) == Characteristic::parse("11|00"));
  CHECK_THROWS_AS(add(Characteristic::parse("0|1"), Characteristic::parse("00|10")), DomainError);
}

TEST_CASE("addition is a commutative, associative, self-inverse group law") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int g = 1 + trial % 6;
    std::uniform_int_distribution<std::uint32_t> pick(0, (1U << (2 * g)) - 1);
    const auto a = Characteristic::from_index(g, pick(rng));
    const auto b = Characteristic::from_index(g, pick(rng));
    const auto c = Characteristic::from_index(g, pick(rng));
    CHECK((a + a).is_even());
    CHECK((a + a).is_zero());
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("columns and concat are inverse") {
  const auto m = Characteristic::parse("1011|0110");
  CHECK(m.columns(0, 1).to_string() == "1|0");
  CHECK(m.columns(1, 3).to_string() == "011|110");
  CHECK(concat(m.columns(0, 2), m.columns(2, 2)) == m);
  CHECK_THROWS_AS(m.columns(3, 2), DomainError);
}

TEST_CASE("product split tuples") {
  const auto i21 = product_split_tuple(2, 1);
  REQUIRE(i21.size() == 1);
  CHECK(i21[0].to_string() == "11|11");
  CHECK(product_split_tuple(4, 1).size() == 28);
  CHECK(product_split_tuple(4, 2).size() == 36);
  CHECK(n_k(2, 1) == 1);
  CHECK(n_k(4, 1) == 28);
  CHECK(n_k(4, 2) == 36);
  CHECK_THROWS_AS(product_split_tuple(4, 0), DomainError);
  CHECK_THROWS_AS(product_split_tuple(4, 4), DomainError);
  CHECK_THROWS_AS(n_k(1, 1), DomainError);
}

TEST_CASE("product split tuples: properties against enumeration") {
  for (int g = 2; g <= 5; ++g) {
    for (int k = 1; k < g; ++k) {
      const auto tuple = product_split_tuple(g, k);
      CHECK(tuple.size() == odd_count(k) * odd_count(g - k));
      CHECK(n_k(g, k) == n_k(g, g - k));
      CHECK(std::is_sorted(tuple.begin(), tuple.end()));
      for (const auto& m : tuple) {
        CHECK(m.is_even());
        CHECK_FALSE(m.columns(0, k).is_even());
        CHECK_FALSE(m.columns(k, g - k).is_even());
      }
    }
  }
}

TEST_CASE("tuples reject odd or mixed-genus entries") {
  CHECK_THROWS_AS(CharTuple(1, {Characteristic::parse("1|1")}), DomainError);
  CHECK_THROWS_AS(CharTuple(2, {Characteristic::parse("0|1")}), DomainError);
  const std::vector<std::string> texts{"00|01", "11|11"};
  CHECK(CharTuple::parse(2, texts).size() == 2);
}
