#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "a4strat/errors.hpp"
#include "a4strat/orbit.hpp"
#include "a4strat/patterns.hpp"
#include "a4strat/symplectic.hpp"

using namespace a4strat;
using K = FactorKind;

namespace {

Decomposition decomp(std::initializer_list<K> kinds) {
  Decomposition d;
  for (auto k : kinds) d.push_back({k, factor_genus(k)});
  return d;
}

/// Evens m such that some way of cutting the columns into consecutive blocks of the
/// given sizes leaves an odd block; checked on strings.
std::size_t count_by_strings(int g, const std::vector<int>& sizes) {
  std::size_t count = 0;
  for (const auto& m : all_characteristics(g, ParityFilter::kEven)) {
    const auto text = m.to_string();
    int first = 0;
    bool hit = false;
    for (int s : sizes) {
      int p = 0;
      for (int i = first; i < first + s; ++i) p += (text[i] - '0') * (text[g + 1 + i] - '0');
      hit = hit || (p % 2 == 1);
      first += s;
    }
    count += hit;
  }
  return count;
}

}  // namespace

TEST_CASE("pattern sizes") {
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kElliptic, K::kElliptic, K::kElliptic})).size() == 55);
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kElliptic, K::kGenus2})).size() == 46);
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kGenus3Hyperelliptic})).size() == 31);
  CHECK(vanishing_pattern(decomp({K::kGenus2, K::kGenus2})).size() == 36);
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kGenus3Generic})).size() == 28);
  CHECK(vanishing_pattern(Decomposition{{K::kIndecomposable, 4}}).size() == 0);
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kElliptic, K::kElliptic, K::kElliptic})).size() ==
        count_by_strings(4, {1, 1, 1, 1}));
  CHECK(vanishing_pattern(decomp({K::kGenus2, K::kGenus2})).size() == count_by_strings(4, {2, 2}));
}

TEST_CASE("split patterns coincide with the product split tuples") {
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kGenus3Generic})) == product_split_tuple(4, 1));
  CHECK(vanishing_pattern(decomp({K::kGenus2, K::kGenus2})) == product_split_tuple(4, 2));
  CHECK(vanishing_pattern(decomp({K::kElliptic, K::kElliptic})) == product_split_tuple(2, 1));
}

TEST_CASE("canonical order and description") {
  const auto d = canonical(decomp({K::kGenus2, K::kElliptic, K::kElliptic}));
  CHECK(d == decomp({K::kElliptic, K::kElliptic, K::kGenus2}));
  CHECK_FALSE(describe(d).empty());
}

TEST_CASE("find_pattern locates images of the pattern") {
  const auto pattern = vanishing_pattern(decomp({K::kElliptic, K::kGenus3Generic}));
  const std::vector<Characteristic> set(pattern.begin(), pattern.end());
  const auto self = find_pattern(set, pattern);
  REQUIRE(self.found);
  CHECK(tuples_equivalent(*self.witness, pattern));

  std::mt19937_64 rng(1);
  const auto evens = all_characteristics(4, ParityFilter::kEven);
  for (int trial = 0; trial < 10; ++trial) {
    const auto gamma = random_symplectic(4, 8, rng()).reduce();
    auto image = act_on_tuple(gamma, pattern);
    std::vector<Characteristic> noisy(image.begin(), image.end());
    for (int extra = 0; extra < 5; ++extra) noisy.push_back(evens[rng() % evens.size()]);
    std::sort(noisy.begin(), noisy.end());
    noisy.erase(std::unique(noisy.begin(), noisy.end()), noisy.end());
    const auto match = find_pattern(noisy, pattern);
    REQUIRE(match.found);
    CHECK(tuples_equivalent(*match.witness, pattern));
    const std::set<Characteristic> pool(noisy.begin(), noisy.end());
    for (const auto& m : *match.witness) CHECK(pool.count(m) == 1);
  }
}

TEST_CASE("find_pattern reports absence and budget exhaustion") {
  const auto pattern = product_split_tuple(4, 2);
  const auto i1 = product_split_tuple(4, 1);
  const std::vector<Characteristic> small(i1.begin(), i1.end());
  CHECK_FALSE(find_pattern(small, pattern).found);
  CHECK_FALSE(find_pattern(std::vector<Characteristic>{}, pattern).found);
  const auto all = all_characteristics(4, ParityFilter::kEven);
  CHECK_THROWS_AS(find_pattern(all, vanishing_pattern(decomp({K::kElliptic, K::kElliptic, K::kElliptic, K::kElliptic})), 3),
                  CapExceededError);
  CHECK_THROWS_AS(find_pattern(std::vector<Characteristic>{Characteristic::parse("1|1")}, product_split_tuple(2, 1)),
                  DomainError);
}

TEST_CASE("decompositions recovered from conjugated patterns") {
  std::mt19937_64 rng(2);
  const std::vector<Decomposition> cases{
      decomp({K::kElliptic, K::kElliptic, K::kElliptic, K::kElliptic}),
      decomp({K::kElliptic, K::kElliptic, K::kGenus2}),
      decomp({K::kElliptic, K::kGenus3Hyperelliptic}),
      decomp({K::kGenus2, K::kGenus2}),
      decomp({K::kElliptic, K::kGenus3Generic}),
  };
  for (const auto& d : cases) {
    const auto gamma = random_symplectic(4, 6, rng()).reduce();
    const auto image = act_on_tuple(gamma, vanishing_pattern(d));
    const std::vector<Characteristic> set(image.begin(), image.end());
    const auto ev = decompose_from_vanishing(4, set);
    CHECK(canonical(ev.factors) == canonical(d));
    CHECK(ev.unexplained == 0);
    CHECK_FALSE(ev.ambiguous);
  }
  const auto none = decompose_from_vanishing(4, std::vector<Characteristic>{});
  CHECK(none.factors == Decomposition{{K::kIndecomposable, 4}});
  CHECK(decompose_from_vanishing(3, std::vector<Characteristic>{}).factors == decomp({K::kGenus3Generic}));
  CHECK(decompose_from_vanishing(3, std::vector<Characteristic>{Characteristic::parse("000|000")}).factors ==
        decomp({K::kGenus3Hyperelliptic}));
  CHECK(decompose_from_vanishing(2, std::vector<Characteristic>{Characteristic::parse("11|11")}).factors ==
        decomp({K::kElliptic, K::kElliptic}));
  CHECK_THROWS_AS(decompose_from_vanishing(5, std::vector<Characteristic>{}), DomainError);
}
