#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a4strat/characteristic.hpp"
#include "a4strat/patterns.hpp"
#include "a4strat/siegel.hpp"

namespace a4strat {

enum class Stratum { kX0, kX1, kX2, kX3, kX4, kX5, kX6, kUnresolved };

std::string_view stratum_name(Stratum s);

inline constexpr double kDefaultVanishingThreshold = 1e-6;
inline constexpr double kRequiredMargin = 10.0;
inline constexpr double kClassifyTarget = 1e-14;
/// Relative magnitude below which the Schottky form counts as zero. Product points sit
/// at the rounding floor (~1e-15); generic points near Im = 1 stay above ~1e-9.
inline constexpr double kFormVanishingThreshold = 1e-11;

struct VanishingSet {
  std::vector<Characteristic> members;
  /// max_m |theta_m(0, tau)|.
  double scale = 0.0;
  /// Smallest surviving ratio over largest vanishing ratio. With nothing vanishing the
  /// threshold stands in for the denominator.
  double margin = 0.0;
  bool well_separated() const noexcept { return margin >= kRequiredMargin; }
};

/// Even m with |theta_m(0, tau)| / max |theta| < rel_threshold.
VanishingSet vanishing_set(const SiegelPoint& tau, double rel_threshold = kDefaultVanishingThreshold);
VanishingSet vanishing_set_from_constants(int genus, std::span<const Complex> even_constants,
                                          double rel_threshold);

struct SplitResult {
  bool found = false;
  std::optional<CharTuple> witness;
};

/// Does `set` contain an Sp(2g, F2)-image of product_split_tuple(g, k)?
/// Throws CapExceededError when the search budget runs out.
SplitResult detect_split(std::span<const Characteristic> set, int genus, int k,
                         std::uint64_t node_budget = kDefaultNodeBudget);

struct SplitEvidence {
  int k;
  CharTuple witness;
};

struct FormMagnitudes {
  double schottky = 0.0;
  double theta_null = 0.0;
  double f1 = 0.0;
};

struct StratumReport {
  Stratum label = Stratum::kUnresolved;
  FormMagnitudes form_magnitudes;
  std::vector<Characteristic> vanishing_set;
  std::vector<SplitEvidence> splits;
  Decomposition decomposition;
  double threshold = kDefaultVanishingThreshold;
  double margin = 0.0;
  std::vector<std::string> warnings;
  std::vector<std::string> diagnostics;
};

/// Stratum of a decomposition whose three forms all vanish.
Stratum stratum_of(const Decomposition& d);

/// Decision chain on a genus-4 period matrix. F_T is tested against
/// kFormVanishingThreshold; Theta_null vanishes iff the vanishing set (theta constants
/// below rel_threshold) is nonempty, F1 iff it has two or more members.
/// Throws DomainError for genus != 4.
StratumReport classify(const SiegelPoint& tau, double rel_threshold = kDefaultVanishingThreshold);

struct FormFlags {
  bool schottky_vanishes = false;
  bool theta_null_vanishes = false;
  bool f1_vanishes = false;
};

/// Facts about the factors of a product point that the vanishing set alone may not carry.
struct FactorFlags {
  std::optional<bool> genus3_factor_hyperelliptic;
  std::optional<bool> genus2_factor_decomposable;
};

/// The decision chain of classify() driven by synthetic flags and a synthetic vanishing
/// set. Throws DomainError on inconsistent inputs, e.g. Theta_null flagged vanishing
/// with an empty set.
StratumReport classify_from_pattern(const FormFlags& forms, std::span<const Characteristic> vanishing,
                                    const FactorFlags& factors = {});

}  // namespace a4strat
