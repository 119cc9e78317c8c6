#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace a4strat {

inline constexpr int kMaxGenus = 15;

enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };
enum class ParityFilter { kAll, kEven, kOdd };

/// A half-integer theta characteristic [eps|delta] over F2.
///
/// Bits are stored most-significant-first: eps_1 is bit (genus-1) of eps_bits().
/// With this layout the numeric order of (eps, delta) is the lexicographic order
/// of the string form "eps_1...eps_g|delta_1...delta_g".
class Characteristic {
 public:
  Characteristic(int genus, std::uint32_t eps, std::uint32_t delta);

  /// Builds from a packed index (eps << genus) | delta.
  static Characteristic from_index(int genus, std::uint32_t index);
  /// Parses "0110|1001". Throws DomainError on malformed input.
  static Characteristic parse(std::string_view text);
  static Characteristic zero(int genus);

  int genus() const noexcept { return genus_; }
  std::uint32_t eps_bits() const noexcept { return eps_; }
  std::uint32_t delta_bits() const noexcept { return delta_; }
  std::uint32_t index() const noexcept { return (eps_ << genus_) | delta_; }

  /// Entry i (0-based, i < genus) of eps / delta.
  int eps(int i) const noexcept { return static_cast<int>((eps_ >> (genus_ - 1 - i)) & 1U); }
  int delta(int i) const noexcept { return static_cast<int>((delta_ >> (genus_ - 1 - i)) & 1U); }

  Parity parity() const noexcept;
  bool is_even() const noexcept { return parity() == Parity::kEven; }
  bool is_zero() const noexcept { return eps_ == 0 && delta_ == 0; }

  /// Columns [first, first+count) as a genus-`count` characteristic.
  Characteristic columns(int first, int count) const;

  std::string to_string() const;

  friend bool operator==(const Characteristic&, const Characteristic&) = default;
  friend std::strong_ordering operator<=>(const Characteristic& a, const Characteristic& b) {
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    if (auto c = a.eps_ <=> b.eps_; c != 0) return c;
    return a.delta_ <=> b.delta_;
  }

 private:
  int genus_;
  std::uint32_t eps_;
  std::uint32_t delta_;
};

Parity parity(const Characteristic& m) noexcept;

/// Componentwise sum over F2. Throws DomainError on genus mismatch.
Characteristic add(const Characteristic& a, const Characteristic& b);
Characteristic operator+(const Characteristic& a, const Characteristic& b);

/// Concatenates columns: the result has genus a.genus() + b.genus().
Characteristic concat(const Characteristic& a, const Characteristic& b);

/// All characteristics of genus g passing the filter, lexicographically ordered.
std::vector<Characteristic> all_characteristics(int genus, ParityFilter filter = ParityFilter::kAll);

/// Closed-form counts 2^{g-1}(2^g +- 1); tests recompute these by enumeration.
std::size_t even_count(int genus);
std::size_t odd_count(int genus);

/// An ordered tuple of even characteristics of a common genus.
class CharTuple {
 public:
  CharTuple(int genus, std::vector<Characteristic> entries);
  static CharTuple parse(int genus, std::span<const std::string> texts);

  int genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Characteristic>& entries() const noexcept { return entries_; }
  const Characteristic& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const CharTuple&, const CharTuple&) = default;
  friend auto operator<=>(const CharTuple& a, const CharTuple& b) {
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int genus_;
  std::vector<Characteristic> entries_;
};

/// The tuple I_k: all even genus-g characteristics whose first k columns form an odd
/// genus-k characteristic and whose last g-k columns form an odd one. Lexicographic.
CharTuple product_split_tuple(int genus, int k);

/// |product_split_tuple(genus, k)|.
std::size_t n_k(int genus, int k);

}  // namespace a4strat
