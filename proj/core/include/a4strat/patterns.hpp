#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a4strat/characteristic.hpp"

namespace a4strat {

/// Indecomposable building blocks of a product of ppav, as seen by theta constants.
enum class FactorKind {
  kElliptic,              // genus 1
  kGenus2,                // indecomposable genus 2 (a genus-2 Jacobian)
  kGenus3Hyperelliptic,   // indecomposable genus 3, one even theta constant vanishes
  kGenus3Generic,         // indecomposable genus 3, no even theta constant vanishes
  kIndecomposable,        // any other indecomposable factor (no prescribed vanishing)
};

int factor_genus(FactorKind kind);
std::string factor_name(FactorKind kind);

struct Factor {
  FactorKind kind;
  int genus;
  friend bool operator==(const Factor&, const Factor&) = default;
};

using Decomposition = std::vector<Factor>;

std::string describe(const Decomposition& d);

/// Canonical order (elliptic first, then by genus) so decompositions compare as multisets.
Decomposition canonical(Decomposition d);

/// Even characteristics whose theta constant vanishes at a generic block-diagonal point
/// with the given factors stacked along the diagonal in order. A characteristic vanishes
/// when one of its block parts is odd, or when the part on a hyperelliptic genus-3 factor
/// equals that factor's vanishing even characteristic (taken as 000|000).
CharTuple vanishing_pattern(const Decomposition& factors);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct PatternMatch {
  bool found = false;
  /// When found: an Sp(2g, F2)-image of the pattern, entry i the image of pattern[i],
  /// all contained in the searched set.
  std::optional<CharTuple> witness;
  std::uint64_t nodes = 0;
};

/// Searches `set` for a sub-tuple equivalent to `pattern` (distinct entries) under the
/// affine Sp(2g, F2) action. Backtracks over the affinely independent entries of the
/// pattern; every other entry is then forced by the linear relations. Candidates are
/// filtered by triple parities. Throws CapExceededError past node_budget.
PatternMatch find_pattern(std::span<const Characteristic> set, const CharTuple& pattern,
                          std::uint64_t node_budget = kDefaultNodeBudget);

/// Finest decomposition of a genus-g ppav consistent with its vanishing set.
struct DecompositionEvidence {
  Decomposition factors;
  /// Pattern witness for the chosen decomposition, when one was needed.
  std::optional<CharTuple> witness;
  /// Vanishing characteristics not explained by the chosen decomposition.
  std::size_t unexplained = 0;
  bool ambiguous = false;
  std::string note;
};

/// Tries the decomposition patterns at this genus from finest to coarsest and keeps the
/// first contained in `vanishing`. With nothing found the point is a single
/// indecomposable factor (hyperelliptic at g = 3 when exactly one constant vanishes).
/// Supports genus 1..4.
DecompositionEvidence decompose_from_vanishing(int genus, std::span<const Characteristic> vanishing,
                                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace a4strat
