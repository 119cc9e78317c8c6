#include "a4strat/patterns.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "a4strat/errors.hpp"
#include "a4strat/orbit.hpp"

namespace a4strat {
namespace {

constexpr int kMaxPatternGenus = 8;

int index_parity(int genus, std::uint32_t index) {
  const std::uint32_t mask = (1U << genus) - 1U;
  return std::popcount((index >> genus) & index & mask) & 1;
}

/// F2 span with membership test and coordinates relative to inserted generators.
class TrackedBasis {
 public:
  /// Returns the combination mask of `v` over inserted generators, or nullopt if v is
  /// outside the span.
  std::optional<std::uint32_t> coordinates(std::uint32_t v) const {
    std::uint32_t combo = 0;
    for (const auto& row : rows_) {
      if (v & row.lead) {
        v ^= row.value;
        combo ^= row.combo;
      }
    }
    if (v != 0) return std::nullopt;
    return combo;
  }
  bool contains(std::uint32_t v) const { return coordinates(v).has_value(); }
  /// Inserts v (assumed independent) as generator number `slot`.
  void insert(std::uint32_t v, int slot) {
    std::uint32_t combo = 1U << slot;
    for (const auto& row : rows_) {
      if (v & row.lead) {
        v ^= row.value;
        combo ^= row.combo;
      }
    }
    const std::uint32_t lead = std::bit_floor(v);
    for (auto& row : rows_) {
      if (row.value & lead) {
        row.value ^= v;
        row.combo ^= combo;
      }
    }
    rows_.push_back({v, combo, lead});
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::uint32_t value, combo, lead;
  };
  std::vector<Row> rows_;
};

class PatternSearch {
 public:
  PatternSearch(std::span<const Characteristic> set, const CharTuple& pattern, std::uint64_t budget)
      : genus_(pattern.genus()), budget_(budget) {
    for (const auto& m : set) set_values_.push_back(m.index());
    std::sort(set_values_.begin(), set_values_.end());
    set_values_.erase(std::unique(set_values_.begin(), set_values_.end()), set_values_.end());
    in_set_.assign(std::size_t{1} << (2 * genus_), 0);
    for (auto v : set_values_) in_set_[v] = 1;
    set_degree_ = degrees(set_values_, in_set_);

    for (const auto& m : pattern) pattern_.push_back(m.index());
    auto sorted = pattern_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("pattern entries must be distinct");
    std::vector<std::uint8_t> in_pattern(in_set_.size(), 0);
    for (auto v : pattern_) in_pattern[v] = 1;
    pattern_degree_ = degrees(pattern_, in_pattern);
    image_.assign(pattern_.size(), 0);
    if (pattern_.empty()) return;

    // The anchor fixes the affine frame; the other levels are independent differences,
    // chosen greedily so that as many entries as possible are forced early. Every
    // remaining entry is forced once its highest generator is placed.
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < pattern_.size(); ++i)
      if (pattern_degree_[i].planes > pattern_degree_[anchor].planes) anchor = i;
    levels_.push_back({anchor, {}});
    std::vector<std::uint8_t> covered(pattern_.size(), 0);
    covered[anchor] = 1;
    TrackedBasis basis;
    while (true) {
      std::size_t best = pattern_.size();
      std::size_t best_gain = 0;
      for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (covered[i]) continue;
        TrackedBasis trial = basis;
        trial.insert(pattern_[i] ^ pattern_[anchor], static_cast<int>(levels_.size() - 1));
        std::size_t gain = 0;
        for (std::size_t j = 0; j < pattern_.size(); ++j)
          if (!covered[j] && trial.contains(pattern_[j] ^ pattern_[anchor])) ++gain;
        if (best == pattern_.size() || gain > best_gain) {
          best = i;
          best_gain = gain;
        }
      }
      if (best == pattern_.size()) break;
      basis.insert(pattern_[best] ^ pattern_[anchor], static_cast<int>(levels_.size() - 1));
      levels_.push_back({best, {}});
      for (std::size_t j = 0; j < pattern_.size(); ++j) {
        if (covered[j] || j == best) {
          covered[j] = 1;
          continue;
        }
        if (auto combo = basis.coordinates(pattern_[j] ^ pattern_[anchor])) {
          covered[j] = 1;
          const int top = std::bit_width(*combo) - 1;  // generator slots are 0-based
          levels_[static_cast<std::size_t>(top) + 1].forced.push_back({j, *combo});
        }
      }
    }
  }

  std::optional<std::vector<std::uint32_t>> run() {
    if (set_values_.size() < pattern_.size()) return std::nullopt;
    if (search(0)) return image_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Forced {
    std::size_t index;
    std::uint32_t combo;
  };
  struct Level {
    std::size_t index;
    std::vector<Forced> forced;
  };
  /// Per-point counts that can only grow when passing to a superset: affine planes
  /// {x, y, z, x+y+z} through x, and pairs {y, z} with x+y+z odd.
  struct Degree {
    std::uint32_t planes = 0;
    std::uint32_t odd_triples = 0;
  };

  std::vector<Degree> degrees(const std::vector<std::uint32_t>& values,
                              const std::vector<std::uint8_t>& member) const {
    std::vector<Degree> out(values.size());
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = 0; b < values.size(); ++b) {
        if (b == a) continue;
        for (std::size_t c = b + 1; c < values.size(); ++c) {
          if (c == a) continue;
          const std::uint32_t sum = values[a] ^ values[b] ^ values[c];
          if (index_parity(genus_, sum)) ++out[a].odd_triples;
          else if (member[sum]) ++out[a].planes;
        }
      }
    return out;
  }

  bool dominates(std::uint32_t value, std::size_t pattern_index) const {
    const auto it = std::lower_bound(set_values_.begin(), set_values_.end(), value);
    const auto& have = set_degree_[static_cast<std::size_t>(it - set_values_.begin())];
    const auto& need = pattern_degree_[pattern_index];
    return have.planes >= need.planes && have.odd_triples >= need.odd_triples;
  }

  bool parity_consistent(std::size_t pattern_index, std::uint32_t value) const {
    const std::uint32_t p = pattern_[pattern_index];
    for (std::size_t x = 0; x < assigned_.size(); ++x) {
      const auto px = pattern_[assigned_[x]] ^ p;
      const auto vx = image_[assigned_[x]] ^ value;
      for (std::size_t y = x + 1; y < assigned_.size(); ++y) {
        if (index_parity(genus_, px ^ pattern_[assigned_[y]]) != index_parity(genus_, vx ^ image_[assigned_[y]]))
          return false;
      }
    }
    return true;
  }

  bool place(std::size_t pattern_index, std::uint32_t value) {
    if (!dominates(value, pattern_index) || !parity_consistent(pattern_index, value)) return false;
    image_[pattern_index] = value;
    assigned_.push_back(pattern_index);
    return true;
  }

  bool search(std::size_t level) {
    if (level == levels_.size()) return true;
    const std::size_t idx = levels_[level].index;
    const std::size_t mark = assigned_.size();
    for (const auto candidate : set_values_) {
      if (++nodes_ > budget_) {
        throw CapExceededError("pattern search exceeded its node budget of " + std::to_string(budget_));
      }
      if (level > 0) {
        const std::uint32_t d = candidate ^ image_[levels_[0].index];
        if (d == 0 || span_.contains(d)) continue;
      }
      if (!place(idx, candidate)) continue;
      if (level > 0) span_slots_.push_back(candidate ^ image_[levels_[0].index]);
      TrackedBasis saved = span_;
      if (level > 0) span_.insert(span_slots_.back(), static_cast<int>(level - 1));

      bool ok = true;
      for (const auto& f : levels_[level].forced) {
        std::uint32_t value = image_[levels_[0].index];
        for (int slot = 0; slot < 32; ++slot)
          if (f.combo & (1U << slot)) value ^= span_slots_[static_cast<std::size_t>(slot)];
        if (!in_set_[value] || !place(f.index, value)) {
          ok = false;
          break;
        }
      }
      if (ok && search(level + 1)) return true;

      assigned_.resize(mark);
      span_ = std::move(saved);
      if (level > 0) span_slots_.pop_back();
    }
    return false;
  }

  int genus_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> set_values_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint32_t> pattern_;
  std::vector<Degree> set_degree_;
  std::vector<Degree> pattern_degree_;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> image_;
  std::vector<std::size_t> assigned_;
  std::vector<std::uint32_t> span_slots_;
  TrackedBasis span_;
};

Decomposition make(std::initializer_list<FactorKind> kinds) {
  Decomposition d;
  for (auto k : kinds) d.push_back({k, factor_genus(k)});
  return d;
}

}  // namespace

int factor_genus(FactorKind kind) {
  switch (kind) {
    case FactorKind::kElliptic: return 1;
    case FactorKind::kGenus2: return 2;
    case FactorKind::kGenus3Hyperelliptic:
    case FactorKind::kGenus3Generic: return 3;
    case FactorKind::kIndecomposable: return 0;
  }
  return 0;
}

std::string factor_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::kElliptic: return "A1";
    case FactorKind::kGenus2: return "M2";
    case FactorKind::kGenus3Hyperelliptic: return "Hyp3";
    case FactorKind::kGenus3Generic: return "A3-Hyp3";
    case FactorKind::kIndecomposable: return "Ind";
  }
  return "?";
}

std::string describe(const Decomposition& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out << " x ";
    out << factor_name(d[i].kind);
    if (d[i].kind == FactorKind::kIndecomposable) out << d[i].genus;
  }
  return out.str();
}

Decomposition canonical(Decomposition d) {
  std::stable_sort(d.begin(), d.end(), [](const Factor& a, const Factor& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return d;
}

CharTuple vanishing_pattern(const Decomposition& factors) {
  int genus = 0;
  for (const auto& f : factors) {
    if (f.genus < 1) throw DomainError("factor genus must be positive");
    genus += f.genus;
  }
  std::vector<Characteristic> out;
  for (const auto& m : all_characteristics(genus, ParityFilter::kEven)) {
    int first = 0;
    bool vanishes = false;
    for (const auto& f : factors) {
      const auto part = m.columns(first, f.genus);
      first += f.genus;
      if (!part.is_even() || (f.kind == FactorKind::kGenus3Hyperelliptic && part.is_zero())) {
        vanishes = true;
        break;
      }
    }
    if (vanishes) out.push_back(m);
  }
  return CharTuple(genus, std::move(out));
}

PatternMatch find_pattern(std::span<const Characteristic> set, const CharTuple& pattern,
                          std::uint64_t node_budget) {
  const int g = pattern.genus();
  if (g > kMaxPatternGenus) throw DomainError("pattern search is limited to genus <= 8");
  for (const auto& m : set) {
    if (m.genus() != g) throw DomainError("find_pattern: genus mismatch");
    if (!m.is_even()) throw DomainError("find_pattern: set contains odd characteristic " + m.to_string());
  }
  PatternMatch out;
  if (pattern.empty()) {
    out.found = true;
    out.witness = pattern;
    return out;
  }
  PatternSearch search(set, pattern, node_budget);
  const auto image = search.run();
  out.nodes = search.nodes();
  if (image) {
    std::vector<Characteristic> entries;
    for (auto v : *image) entries.push_back(Characteristic::from_index(g, v));
    out.found = true;
    out.witness = CharTuple(g, std::move(entries));
  }
  return out;
}

DecompositionEvidence decompose_from_vanishing(int genus, std::span<const Characteristic> vanishing,
                                               std::uint64_t node_budget) {
  using K = FactorKind;
  DecompositionEvidence out;
  auto try_patterns = [&](std::initializer_list<Decomposition> candidates) -> bool {
    for (const auto& d : candidates) {
      const auto pattern = vanishing_pattern(d);
      const auto match = find_pattern(vanishing, pattern, node_budget);
      if (match.found) {
        out.factors = d;
        out.witness = match.witness;
        out.unexplained = vanishing.size() - pattern.size();
        return true;
      }
    }
    return false;
  };
  auto single = [&](Factor f, std::string note) {
    out.factors = {f};
    out.note = std::move(note);
    return out;
  };

  switch (genus) {
    case 1:
      out.factors = make({K::kElliptic});
      out.unexplained = vanishing.size();
      return out;
    case 2:
      if (try_patterns({make({K::kElliptic, K::kElliptic})})) return out;
      return single({K::kGenus2, 2}, "");
    case 3:
      if (try_patterns({make({K::kElliptic, K::kElliptic, K::kElliptic}), make({K::kElliptic, K::kGenus2})}))
        return out;
      if (vanishing.empty()) return single({K::kGenus3Generic, 3}, "");
      out.unexplained = vanishing.size() - 1;
      return single({K::kGenus3Hyperelliptic, 3}, "one vanishing even constant: hyperelliptic genus 3");
    case 4: {
      if (try_patterns({make({K::kElliptic, K::kElliptic, K::kElliptic, K::kElliptic}),
                        make({K::kElliptic, K::kElliptic, K::kGenus2})}))
        return out;
      const auto hyp = make({K::kElliptic, K::kGenus3Hyperelliptic});
      const auto twos = make({K::kGenus2, K::kGenus2});
      const auto hyp_match = find_pattern(vanishing, vanishing_pattern(hyp), node_budget);
      const auto twos_match = find_pattern(vanishing, vanishing_pattern(twos), node_budget);
      if (hyp_match.found && twos_match.found) {
        out.ambiguous = true;
        out.note = "both A1 x Hyp3 and M2 x M2 patterns present without a finer common pattern";
      }
      if (hyp_match.found || twos_match.found) {
        const bool use_hyp = hyp_match.found;
        out.factors = use_hyp ? hyp : twos;
        out.witness = use_hyp ? hyp_match.witness : twos_match.witness;
        out.unexplained = vanishing.size() - out.witness->size();
        return out;
      }
      if (try_patterns({make({K::kElliptic, K::kGenus3Generic})})) return out;
      return single({K::kIndecomposable, 4}, vanishing.empty()
                                                 ? ""
                                                 : "theta constants vanish without a product split: hyperelliptic branch");
    }
    default:
      throw DomainError("decompose_from_vanishing supports genus 1..4");
  }
}

}  // namespace a4strat
