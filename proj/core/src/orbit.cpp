#include "a4strat/orbit.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "a4strat/errors.hpp"
#include "a4strat/symplectic.hpp"

namespace a4strat {
namespace {

/// Dense bit vector over F2.
class BitRow {
 public:
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  std::size_t size() const { return bits_; }

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

/// In-place reduced row echelon form; returns pivot columns, one per surviving row.
std::vector<std::size_t> reduce_rows(std::vector<BitRow>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                           [c](const BitRow& row) { return row.get(c); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other != r && rows[other].get(c)) rows[other] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r, BitRow(cols));
  return pivots;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

int index_parity(int genus, std::uint32_t index) {
  const std::uint32_t mask = (1U << genus) - 1U;
  return std::popcount((index >> genus) & index & mask) & 1;
}

}  // namespace

std::size_t triple_rank(std::size_t p, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t before_i = choose(p, 3) - choose(p - i, 3);
  const std::size_t before_j = choose(p - 1 - i, 2) - choose(p - j, 2);
  return before_i + before_j + (k - j - 1);
}

std::uint8_t OrbitProfile::triple_parity(std::size_t i, std::size_t j, std::size_t k) const {
  std::size_t t[3] = {i, j, k};
  std::sort(t, t + 3);
  if (t[0] == t[1] || t[1] == t[2] || t[2] >= length) {
    throw DomainError("triple indices must be distinct and in range");
  }
  return triple_parities[triple_rank(length, t[0], t[1], t[2])];
}

OrbitProfile orbit_profile(const CharTuple& tuple) {
  if (tuple.empty()) throw DomainError("orbit_profile needs a non-empty tuple");
  const int g = tuple.genus();
  const std::size_t p = tuple.size();
  const std::size_t equations = 2 * static_cast<std::size_t>(g) + 1;

  // Column i is (bits of m_i, 1); its kernel is the even-cardinality zero-sum sets.
  std::vector<BitRow> system(equations, BitRow(p));
  for (std::size_t i = 0; i < p; ++i) {
    const auto idx = tuple[i].index();
    for (std::size_t r = 0; r + 1 < equations; ++r) {
      if ((idx >> r) & 1U) system[r].set(i);
    }
    system[equations - 1].set(i);
  }
  const auto pivots = reduce_rows(system, p);

  std::vector<BitRow> kernel;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < p; ++col) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    BitRow v(p);
    v.set(col);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (system[r].get(col)) v.flip(pivots[r]);
    }
    kernel.push_back(std::move(v));
  }
  reduce_rows(kernel, p);

  OrbitProfile out;
  out.length = p;
  for (const auto& row : kernel) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < p; ++i)
      if (row.get(i)) subset.push_back(i);
    out.relation_basis.push_back(std::move(subset));
  }

  out.triple_parities.reserve(choose(p, 3));
  for (std::size_t i = 0; i < p; ++i) {
    const auto mi = tuple[i].index();
    for (std::size_t j = i + 1; j < p; ++j) {
      const auto mij = mi ^ tuple[j].index();
      for (std::size_t k = j + 1; k < p; ++k) {
        out.triple_parities.push_back(static_cast<std::uint8_t>(index_parity(g, mij ^ tuple[k].index())));
      }
    }
  }
  return out;
}

bool tuples_equivalent(const CharTuple& lhs, const CharTuple& rhs) {
  if (lhs.genus() != rhs.genus()) throw DomainError("tuples_equivalent: genus mismatch");
  if (lhs.size() != rhs.size()) throw DomainError("tuples_equivalent: length mismatch");
  if (lhs.empty()) return true;
  return orbit_profile(lhs) == orbit_profile(rhs);
}

std::set<CharTuple> orbit_bfs(const CharTuple& tuple) {
  const int g = tuple.genus();
  if (g > kMaxBfsGenus) {
    throw DomainError("orbit_bfs is limited to genus <= " + std::to_string(kMaxBfsGenus));
  }
  std::vector<std::vector<std::uint32_t>> tables;
  for (const auto& gen : standard_generators(g)) tables.push_back(action_table(gen.reduce()));

  auto encode = [](const CharTuple& t) {
    std::string key;
    key.reserve(t.size());
    for (const auto& m : t) key.push_back(static_cast<char>(m.index()));
    return key;
  };

  std::unordered_set<std::string> seen;
  std::vector<std::string> frontier{encode(tuple)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      for (const auto& table : tables) {
        std::string image(key.size(), '\0');
        for (std::size_t i = 0; i < key.size(); ++i) {
          image[i] = static_cast<char>(table[static_cast<unsigned char>(key[i])]);
        }
        if (seen.insert(image).second) {
          if (seen.size() > kMaxBfsOrbit) throw CapExceededError("orbit exceeds 2^24 tuples");
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }

  std::set<CharTuple> orbit;
  for (const auto& key : seen) {
    std::vector<Characteristic> entries;
    entries.reserve(key.size());
    for (char c : key) entries.push_back(Characteristic::from_index(g, static_cast<unsigned char>(c)));
    orbit.emplace(g, std::move(entries));
  }
  return orbit;
}

}  // namespace a4strat
