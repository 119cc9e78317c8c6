#include "a4strat/strata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "a4strat/errors.hpp"
#include "a4strat/modular_forms.hpp"
#include "a4strat/theta.hpp"

namespace a4strat {
namespace {

using K = FactorKind;

bool same_kinds(const Decomposition& d, std::initializer_list<K> kinds) {
  const auto c = canonical(d);
  if (c.size() != kinds.size()) return false;
  return std::equal(c.begin(), c.end(), kinds.begin(), [](const Factor& f, K k) { return f.kind == k; });
}

std::vector<Complex> values_of(const std::vector<ThetaValue>& thetas) {
  std::vector<Complex> out;
  out.reserve(thetas.size());
  for (const auto& t : thetas) out.push_back(t.value);
  return out;
}

std::vector<SplitEvidence> collect_splits(std::span<const Characteristic> set, int genus) {
  std::vector<SplitEvidence> out;
  if (set.empty()) return out;
  for (int k = 1; k < genus; ++k) {
    auto r = detect_split(set, genus, k);
    if (r.found) out.push_back({k, std::move(*r.witness)});
  }
  return out;
}

/// Finest decomposition read off the diagonal blocks of a block-diagonal tau, each block
/// analysed through its own vanishing set. nullopt when tau has no exact block split.
std::optional<Decomposition> block_route(const SiegelPoint& tau, double rel_threshold) {
  const int g = tau.genus();
  std::vector<int> cuts{0};
  for (int k = 1; k < g; ++k) {
    // A cut at k is a block boundary when everything coupling rows < k to rows >= k vanishes.
    if (tau.tau().block(0, k, k, g - k).cwiseAbs().maxCoeff() == 0.0) cuts.push_back(k);
  }
  if (cuts.size() == 1) return std::nullopt;
  cuts.push_back(g);
  Decomposition out;
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    const auto block = sub_block(tau, cuts[b], cuts[b + 1] - cuts[b]);
    const auto constants = values_of(even_theta_constants(block, kClassifyTarget));
    const auto vs = vanishing_set_from_constants(block.genus(), constants, rel_threshold);
    const auto part = decompose_from_vanishing(block.genus(), vs.members);
    out.insert(out.end(), part.factors.begin(), part.factors.end());
  }
  return out;
}

}  // namespace

std::string_view stratum_name(Stratum s) {
  switch (s) {
    case Stratum::kX0: return "X0";
    case Stratum::kX1: return "X1";
    case Stratum::kX2: return "X2";
    case Stratum::kX3: return "X3";
    case Stratum::kX4: return "X4";
    case Stratum::kX5: return "X5";
    case Stratum::kX6: return "X6";
    case Stratum::kUnresolved: return "UNRESOLVED";
  }
  return "?";
}

VanishingSet vanishing_set_from_constants(int genus, std::span<const Complex> even_constants,
                                          double rel_threshold) {
  if (!(rel_threshold > 0.0)) throw DomainError("vanishing threshold must be positive");
  const auto evens = all_characteristics(genus, ParityFilter::kEven);
  if (evens.size() != even_constants.size()) throw DomainError("vanishing_set: wrong number of constants");
  VanishingSet out;
  for (const auto& t : even_constants) out.scale = std::max(out.scale, std::abs(t));
  double largest_vanishing = 0.0;
  double smallest_surviving = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < evens.size(); ++i) {
    const double ratio = std::abs(even_constants[i]) / out.scale;
    if (ratio < rel_threshold) {
      out.members.push_back(evens[i]);
      largest_vanishing = std::max(largest_vanishing, ratio);
    } else {
      smallest_surviving = std::min(smallest_surviving, ratio);
    }
  }
  const double floor = out.members.empty() ? rel_threshold : std::max(largest_vanishing, 1e-300);
  out.margin = smallest_surviving / floor;
  return out;
}

VanishingSet vanishing_set(const SiegelPoint& tau, double rel_threshold) {
  const auto constants = values_of(even_theta_constants(tau, kClassifyTarget));
  return vanishing_set_from_constants(tau.genus(), constants, rel_threshold);
}

SplitResult detect_split(std::span<const Characteristic> set, int genus, int k, std::uint64_t node_budget) {
  const auto target = product_split_tuple(genus, k);
  for (const auto& m : set) {
    if (m.genus() != genus) throw DomainError("detect_split: genus mismatch");
  }
  auto match = find_pattern(set, target, node_budget);
  return SplitResult{match.found, std::move(match.witness)};
}

Stratum stratum_of(const Decomposition& d) {
  if (same_kinds(d, {K::kElliptic, K::kElliptic, K::kElliptic, K::kElliptic})) return Stratum::kX6;
  if (same_kinds(d, {K::kElliptic, K::kElliptic, K::kGenus2})) return Stratum::kX5;
  if (same_kinds(d, {K::kElliptic, K::kGenus3Hyperelliptic})) return Stratum::kX4;
  if (same_kinds(d, {K::kGenus2, K::kGenus2})) return Stratum::kX4;
  if (same_kinds(d, {K::kElliptic, K::kGenus3Generic})) return Stratum::kX3;
  if (d.size() == 1 && d.front().kind == K::kIndecomposable && d.front().genus == 4) return Stratum::kX3;
  return Stratum::kUnresolved;
}

StratumReport classify(const SiegelPoint& tau, double rel_threshold) {
  if (tau.genus() != 4) throw DomainError("classify expects a genus-4 period matrix");
  const auto constants = values_of(even_theta_constants(tau, kClassifyTarget));
  const auto ft = schottky_from_constants(4, constants);
  const auto tn = theta_null_from_constants(4, constants);
  const auto f1 = f1_from_constants(4, constants);
  const auto vs = vanishing_set_from_constants(4, constants, rel_threshold);

  StratumReport report;
  report.threshold = rel_threshold;
  report.form_magnitudes = {ft.relative_magnitude, tn.relative_magnitude, f1.relative_magnitude};
  report.vanishing_set = vs.members;
  report.margin = vs.margin;
  if (!vs.well_separated()) {
    std::ostringstream msg;
    msg << "vanishing and surviving theta constants are separated by only " << vs.margin << "x";
    report.warnings.push_back(msg.str());
  }
  report.splits = collect_splits(vs.members, 4);

  // Theta_null is a product and each F1 monomial omits exactly one constant, so both
  // are decided from the vanishing set; their normalized magnitudes are reported only.
  const bool ft_zero = ft.relative_magnitude < kFormVanishingThreshold;
  const bool tn_zero = !vs.members.empty();
  const bool f1_zero = vs.members.size() >= 2;
  if (ft.relative_magnitude >= kFormVanishingThreshold && ft.relative_magnitude < 1e3 * kFormVanishingThreshold) {
    report.warnings.push_back("Schottky form is within 1000x of its vanishing threshold");
  }
  if (!ft_zero) {
    report.label = Stratum::kX0;
    return report;
  }
  if (!tn_zero) {
    report.label = Stratum::kX1;
    return report;
  }
  if (!f1_zero) {
    report.label = Stratum::kX2;
    return report;
  }

  const auto evidence = decompose_from_vanishing(4, vs.members);
  report.decomposition = evidence.factors;
  if (!evidence.note.empty()) report.diagnostics.push_back(evidence.note);
  if (evidence.unexplained > 0) {
    report.warnings.push_back(std::to_string(evidence.unexplained) +
                              " vanishing constants are not explained by " + describe(evidence.factors));
  }
  if (evidence.ambiguous) {
    report.label = Stratum::kUnresolved;
    return report;
  }
  report.label = stratum_of(evidence.factors);

  if (const auto blocks = block_route(tau, rel_threshold)) {
    const auto from_blocks = canonical(*blocks);
    if (from_blocks != canonical(evidence.factors)) {
      report.diagnostics.push_back("block factors give " + describe(from_blocks) +
                                   " but the vanishing pattern gives " + describe(evidence.factors));
      report.label = Stratum::kUnresolved;
    }
  }
  return report;
}

StratumReport classify_from_pattern(const FormFlags& forms, std::span<const Characteristic> vanishing,
                                    const FactorFlags& factors) {
  for (const auto& m : vanishing) {
    if (m.genus() != 4 || !m.is_even()) {
      throw DomainError("vanishing set must consist of even genus-4 characteristics");
    }
  }
  StratumReport report;
  report.vanishing_set.assign(vanishing.begin(), vanishing.end());
  std::sort(report.vanishing_set.begin(), report.vanishing_set.end());
  report.vanishing_set.erase(std::unique(report.vanishing_set.begin(), report.vanishing_set.end()),
                             report.vanishing_set.end());
  const auto& set = report.vanishing_set;
  auto flag = [](bool zero) { return zero ? 0.0 : 1.0; };
  report.form_magnitudes = {flag(forms.schottky_vanishes), flag(forms.theta_null_vanishes), flag(forms.f1_vanishes)};

  if (!forms.schottky_vanishes) {
    report.label = Stratum::kX0;
    return report;
  }
  if (!forms.theta_null_vanishes) {
    if (!set.empty()) throw DomainError("inconsistent flags: Theta_null nonvanishing with vanishing constants");
    report.label = Stratum::kX1;
    return report;
  }
  if (set.empty()) throw DomainError("inconsistent flags: Theta_null vanishing with an empty vanishing set");
  // Every monomial of F1 omits exactly one constant, so F1 survives iff exactly one vanishes.
  if (!forms.f1_vanishes) {
    if (set.size() != 1) throw DomainError("inconsistent flags: F1 nonvanishing with two or more vanishing constants");
    report.label = Stratum::kX2;
    return report;
  }
  if (set.size() == 1) throw DomainError("inconsistent flags: F1 vanishing with a single vanishing constant");

  report.splits = collect_splits(set, 4);
  auto evidence = decompose_from_vanishing(4, set);
  if (!evidence.note.empty()) report.diagnostics.push_back(evidence.note);
  if (evidence.ambiguous) {
    report.decomposition = evidence.factors;
    report.label = Stratum::kUnresolved;
    return report;
  }
  Decomposition d = evidence.factors;
  if (factors.genus3_factor_hyperelliptic) {
    for (auto& f : d) {
      if (f.kind == K::kGenus3Generic || f.kind == K::kGenus3Hyperelliptic) {
        f.kind = *factors.genus3_factor_hyperelliptic ? K::kGenus3Hyperelliptic : K::kGenus3Generic;
      }
    }
  }
  if (factors.genus2_factor_decomposable && *factors.genus2_factor_decomposable) {
    Decomposition refined;
    bool split_one = false;
    for (const auto& f : d) {
      if (f.kind == K::kGenus2 && !split_one) {
        refined.push_back({K::kElliptic, 1});
        refined.push_back({K::kElliptic, 1});
        split_one = true;
      } else {
        refined.push_back(f);
      }
    }
    d = std::move(refined);
  }
  if (d != evidence.factors) {
    report.diagnostics.push_back("factor flags refine " + describe(evidence.factors) + " to " + describe(d));
  }
  report.decomposition = d;
  report.label = stratum_of(d);
  return report;
}

}  // namespace a4strat
