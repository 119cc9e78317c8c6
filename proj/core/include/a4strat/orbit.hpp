#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "a4strat/characteristic.hpp"

namespace a4strat {

/// Orbit invariants of an even tuple (m_0, ..., m_{p-1}) under Sp(2g, F2).
struct OrbitProfile {
  std::size_t length = 0;
  /// Reduced echelon basis of the even-cardinality index sets whose characteristic
  /// sum is zero. Each set is a sorted list of 0-based indices.
  std::vector<std::vector<std::size_t>> relation_basis;
  /// e(m_i + m_j + m_k) for i < j < k, in lexicographic order of (i, j, k).
  std::vector<std::uint8_t> triple_parities;

  std::uint8_t triple_parity(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;
};

/// Position of (i, j, k), i < j < k < p, in lexicographic triple order.
std::size_t triple_rank(std::size_t p, std::size_t i, std::size_t j, std::size_t k);

/// Throws DomainError on an empty tuple.
OrbitProfile orbit_profile(const CharTuple& tuple);

/// Same orbit under Sp(2g, F2) iff relation spaces and triple parities agree.
/// Throws DomainError on genus or length mismatch.
bool tuples_equivalent(const CharTuple& lhs, const CharTuple& rhs);

inline constexpr int kMaxBfsGenus = 3;
inline constexpr std::size_t kMaxBfsOrbit = std::size_t{1} << 24;

/// Full orbit of the tuple under the group generated by the reduced standard generators.
std::set<CharTuple> orbit_bfs(const CharTuple& tuple);

}  // namespace a4strat
