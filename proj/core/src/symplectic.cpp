#include "a4strat/symplectic.hpp"

#include <random>
#include <string>

#include "a4strat/errors.hpp"

namespace a4strat {
namespace {

IntMatrix standard_form(int genus) {
  IntMatrix j = IntMatrix::Zero(2 * genus, 2 * genus);
  j.topRightCorner(genus, genus) = IntMatrix::Identity(genus, genus);
  j.bottomLeftCorner(genus, genus) = -IntMatrix::Identity(genus, genus);
  return j;
}

int genus_of(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols || rows == 0 || rows % 2 != 0) {
    throw DomainError("symplectic matrix must be 2g x 2g, got " + std::to_string(rows) + " x " +
                      std::to_string(cols));
  }
  return static_cast<int>(rows / 2);
}

BitMatrix mod_two(const IntMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = static_cast<std::uint8_t>(m(i, j) & 1);
  return out;
}

}  // namespace

bool is_symplectic(const IntMatrix& gamma) {
  if (gamma.rows() != gamma.cols() || gamma.rows() == 0 || gamma.rows() % 2 != 0) return false;
  const IntMatrix j = standard_form(static_cast<int>(gamma.rows() / 2));
  return gamma.transpose() * j * gamma == j;
}

SymplecticInteger::SymplecticInteger(IntMatrix gamma)
    : genus_(genus_of(gamma.rows(), gamma.cols())), gamma_(std::move(gamma)) {
  if (!is_symplectic(gamma_)) throw DomainError("matrix does not preserve the symplectic form");
}

SymplecticInteger::SymplecticInteger(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                                     const IntMatrix& d)
    : genus_(static_cast<int>(a.rows())) {
  const auto g = a.rows();
  for (const IntMatrix* blk : {&a, &b, &c, &d}) {
    if (blk->rows() != g || blk->cols() != g) throw DomainError("A, B, C, D must all be g x g");
  }
  if (g == 0) throw DomainError("genus must be positive");
  gamma_.resize(2 * g, 2 * g);
  gamma_ << a, b, c, d;
  if (!is_symplectic(gamma_)) throw DomainError("matrix does not preserve the symplectic form");
}

SymplecticInteger SymplecticInteger::identity(int genus) {
  if (genus < 1) throw DomainError("genus must be positive");
  return SymplecticInteger(IntMatrix::Identity(2 * genus, 2 * genus));
}

SymplecticInteger SymplecticInteger::inverse() const {
  IntMatrix inv(2 * genus_, 2 * genus_);
  inv << d().transpose(), -b().transpose(), -c().transpose(), a().transpose();
  return SymplecticInteger(std::move(inv));
}

SymplecticModTwo SymplecticInteger::reduce() const { return SymplecticModTwo(mod_two(gamma_)); }

SymplecticInteger operator*(const SymplecticInteger& x, const SymplecticInteger& y) {
  if (x.genus_ != y.genus_) throw DomainError("cannot multiply symplectic matrices of different genus");
  return SymplecticInteger(IntMatrix(x.gamma_ * y.gamma_));
}

SymplecticModTwo::SymplecticModTwo(BitMatrix gamma)
    : genus_(genus_of(gamma.rows(), gamma.cols())), gamma_(std::move(gamma)) {
  IntMatrix as_int = gamma_.cast<std::int64_t>();
  for (Eigen::Index i = 0; i < as_int.size(); ++i) {
    if (as_int(i) > 1) throw DomainError("mod-2 matrix entries must be 0 or 1");
  }
  const IntMatrix j = standard_form(genus_);
  if (mod_two(IntMatrix(as_int.transpose() * j * as_int)) != mod_two(j)) {
    throw DomainError("matrix is not symplectic over F2");
  }
}

SymplecticModTwo SymplecticModTwo::identity(int genus) {
  if (genus < 1) throw DomainError("genus must be positive");
  return SymplecticModTwo(BitMatrix::Identity(2 * genus, 2 * genus));
}

SymplecticModTwo operator*(const SymplecticModTwo& x, const SymplecticModTwo& y) {
  if (x.genus_ != y.genus_) throw DomainError("cannot multiply symplectic matrices of different genus");
  const IntMatrix prod = x.gamma_.cast<std::int64_t>() * y.gamma_.cast<std::int64_t>();
  return SymplecticModTwo(mod_two(prod));
}

std::vector<SymplecticInteger> standard_generators(int genus) {
  if (genus < 1) throw DomainError("genus must be positive");
  std::vector<SymplecticInteger> out;
  out.emplace_back(standard_form(genus));
  for (int i = 0; i < genus; ++i) {
    for (int j = i; j < genus; ++j) {
      IntMatrix t = IntMatrix::Identity(2 * genus, 2 * genus);
      t(i, genus + j) = 1;
      t(j, genus + i) = 1;
      out.emplace_back(std::move(t));
    }
  }
  return out;
}

Characteristic affine_action(const SymplecticModTwo& gamma, const Characteristic& m) {
  const int g = gamma.genus();
  if (m.genus() != g) {
    throw DomainError("genus mismatch: element of Sp(" + std::to_string(2 * g) +
                      ", F2) acting on a genus-" + std::to_string(m.genus()) + " characteristic");
  }
  std::uint32_t eps = 0;
  std::uint32_t delta = 0;
  for (int i = 0; i < g; ++i) {
    int e = 0;
    int d = 0;
    for (int j = 0; j < g; ++j) {
      e += gamma.a(j, i) * m.eps(j) + gamma.c(j, i) * m.delta(j) + gamma.a(j, i) * gamma.c(j, i);
      d += gamma.b(j, i) * m.eps(j) + gamma.d(j, i) * m.delta(j) + gamma.b(j, i) * gamma.d(j, i);
    }
    eps = (eps << 1) | static_cast<std::uint32_t>(e & 1);
    delta = (delta << 1) | static_cast<std::uint32_t>(d & 1);
  }
  return Characteristic(g, eps, delta);
}

CharTuple act_on_tuple(const SymplecticModTwo& gamma, const CharTuple& tuple) {
  if (tuple.genus() != gamma.genus()) throw DomainError("genus mismatch between group element and tuple");
  std::vector<Characteristic> out;
  out.reserve(tuple.size());
  for (const auto& m : tuple) out.push_back(affine_action(gamma, m));
  return CharTuple(tuple.genus(), std::move(out));
}

std::vector<std::uint32_t> action_table(const SymplecticModTwo& gamma) {
  const int g = gamma.genus();
  if (g > 8) throw DomainError("action tables are limited to genus <= 8");
  const std::uint32_t total = 1U << (2 * g);
  std::vector<std::uint32_t> table(total);
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    table[idx] = affine_action(gamma, Characteristic::from_index(g, idx)).index();
  }
  return table;
}

SymplecticInteger random_symplectic(int genus, int word_length, std::uint64_t seed) {
  if (word_length < 1) throw DomainError("word_length must be at least 1");
  const auto gens = standard_generators(genus);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution invert(0.5);
  SymplecticInteger out = SymplecticInteger::identity(genus);
  for (int step = 0; step < word_length; ++step) {
    const auto& gen = gens[pick(rng)];
    out = out * (invert(rng) ? gen.inverse() : gen);
  }
  return out;
}

}  // namespace a4strat
