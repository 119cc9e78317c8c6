#include "a4strat/characteristic.hpp"

#include <bit>
#include <sstream>

#include "a4strat/errors.hpp"

namespace a4strat {
namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus) {
    throw DomainError("genus must lie in [1, " + std::to_string(kMaxGenus) + "], got " +
                      std::to_string(genus));
  }
}

std::uint32_t low_mask(int bits) { return bits >= 32 ? ~0U : ((1U << bits) - 1U); }

}  // namespace

Characteristic::Characteristic(int genus, std::uint32_t eps, std::uint32_t delta)
    : genus_(genus), eps_(eps), delta_(delta) {
  check_genus(genus);
  if ((eps & ~low_mask(genus)) != 0 || (delta & ~low_mask(genus)) != 0) {
    throw DomainError("characteristic bits exceed genus " + std::to_string(genus));
  }
}

Characteristic Characteristic::from_index(int genus, std::uint32_t index) {
  check_genus(genus);
  return Characteristic(genus, index >> genus, index & low_mask(genus));
}

Characteristic Characteristic::zero(int genus) { return Characteristic(genus, 0, 0); }

Characteristic Characteristic::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw DomainError("characteristic must look like \"eps|delta\": " + std::string(text));
  }
  const auto eps_text = text.substr(0, bar);
  const auto delta_text = text.substr(bar + 1);
  if (eps_text.empty() || eps_text.size() != delta_text.size()) {
    throw DomainError("eps and delta must be non-empty and of equal length: " + std::string(text));
  }
  const int genus = static_cast<int>(eps_text.size());
  check_genus(genus);
  auto bits = [&](std::string_view s) {
    std::uint32_t v = 0;
    for (char c : s) {
      if (c != '0' && c != '1') throw DomainError("characteristic entries must be 0 or 1: " + std::string(text));
      v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return v;
  };
  return Characteristic(genus, bits(eps_text), bits(delta_text));
}

Parity Characteristic::parity() const noexcept {
  return (std::popcount(eps_ & delta_) & 1) ? Parity::kOdd : Parity::kEven;
}

Characteristic Characteristic::columns(int first, int count) const {
  if (first < 0 || count < 1 || first + count > genus_) {
    throw DomainError("column range out of bounds");
  }
  const int shift = genus_ - first - count;
  return Characteristic(count, (eps_ >> shift) & low_mask(count), (delta_ >> shift) & low_mask(count));
}

std::string Characteristic::to_string() const {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(genus_) + 1);
  for (int i = 0; i < genus_; ++i) out.push_back(static_cast<char>('0' + eps(i)));
  out.push_back('|');
  for (int i = 0; i < genus_; ++i) out.push_back(static_cast<char>('0' + delta(i)));
  return out;
}

Parity parity(const Characteristic& m) noexcept { return m.parity(); }

Characteristic add(const Characteristic& a, const Characteristic& b) {
  if (a.genus() != b.genus()) {
    throw DomainError("cannot add characteristics of genus " + std::to_string(a.genus()) + " and " +
                      std::to_string(b.genus()));
  }
  return Characteristic(a.genus(), a.eps_bits() ^ b.eps_bits(), a.delta_bits() ^ b.delta_bits());
}

Characteristic operator+(const Characteristic& a, const Characteristic& b) { return add(a, b); }

Characteristic concat(const Characteristic& a, const Characteristic& b) {
  const int genus = a.genus() + b.genus();
  check_genus(genus);
  return Characteristic(genus, (a.eps_bits() << b.genus()) | b.eps_bits(),
                        (a.delta_bits() << b.genus()) | b.delta_bits());
}

std::vector<Characteristic> all_characteristics(int genus, ParityFilter filter) {
  check_genus(genus);
  if (genus > 12) throw DomainError("enumeration is limited to genus <= 12");
  std::vector<Characteristic> out;
  const std::uint32_t total = 1U << (2 * genus);
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    const auto m = Characteristic::from_index(genus, idx);
    if (filter == ParityFilter::kEven && !m.is_even()) continue;
    if (filter == ParityFilter::kOdd && m.is_even()) continue;
    out.push_back(m);
  }
  return out;
}

std::size_t even_count(int genus) {
  check_genus(genus);
  const std::size_t p = std::size_t{1} << genus;
  return (p / 2) * (p + 1);
}

std::size_t odd_count(int genus) {
  check_genus(genus);
  const std::size_t p = std::size_t{1} << genus;
  return (p / 2) * (p - 1);
}

CharTuple::CharTuple(int genus, std::vector<Characteristic> entries)
    : genus_(genus), entries_(std::move(entries)) {
  check_genus(genus);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& m = entries_[i];
    if (m.genus() != genus) {
      throw DomainError("tuple entry " + std::to_string(i) + " has genus " + std::to_string(m.genus()) +
                        ", expected " + std::to_string(genus));
    }
    if (!m.is_even()) {
      throw DomainError("tuple entry " + std::to_string(i) + " (" + m.to_string() + ") is odd");
    }
  }
}

CharTuple CharTuple::parse(int genus, std::span<const std::string> texts) {
  std::vector<Characteristic> entries;
  entries.reserve(texts.size());
  for (const auto& t : texts) entries.push_back(Characteristic::parse(t));
  return CharTuple(genus, std::move(entries));
}

CharTuple product_split_tuple(int genus, int k) {
  check_genus(genus);
  if (k < 1 || k >= genus) {
    throw DomainError("split index k must satisfy 1 <= k < g; got k=" + std::to_string(k) +
                      ", g=" + std::to_string(genus));
  }
  std::vector<Characteristic> entries;
  for (const auto& m : all_characteristics(genus, ParityFilter::kEven)) {
    if (!m.columns(0, k).is_even() && !m.columns(k, genus - k).is_even()) entries.push_back(m);
  }
  return CharTuple(genus, std::move(entries));
}

std::size_t n_k(int genus, int k) { return product_split_tuple(genus, k).size(); }

}  // namespace a4strat
