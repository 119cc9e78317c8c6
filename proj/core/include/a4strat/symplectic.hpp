#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "a4strat/characteristic.hpp"

namespace a4strat {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using BitMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

class SymplecticModTwo;

/// gamma^T J gamma == J with J = [[0, 1_g], [-1_g, 0]].
bool is_symplectic(const IntMatrix& gamma);

/// An element of Sp(2g, Z) stored as a 2g x 2g matrix [[A, B], [C, D]].
class SymplecticInteger {
 public:
  /// Throws DomainError if the matrix is not 2g x 2g or not symplectic.
  explicit SymplecticInteger(IntMatrix gamma);
  SymplecticInteger(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);

  static SymplecticInteger identity(int genus);

  int genus() const noexcept { return genus_; }
  const IntMatrix& matrix() const noexcept { return gamma_; }
  IntMatrix a() const { return gamma_.topLeftCorner(genus_, genus_); }
  IntMatrix b() const { return gamma_.topRightCorner(genus_, genus_); }
  IntMatrix c() const { return gamma_.bottomLeftCorner(genus_, genus_); }
  IntMatrix d() const { return gamma_.bottomRightCorner(genus_, genus_); }

  /// [[D^T, -B^T], [-C^T, A^T]].
  SymplecticInteger inverse() const;
  SymplecticModTwo reduce() const;

  friend SymplecticInteger operator*(const SymplecticInteger& x, const SymplecticInteger& y);
  friend bool operator==(const SymplecticInteger& x, const SymplecticInteger& y) {
    return x.genus_ == y.genus_ && x.gamma_ == y.gamma_;
  }

 private:
  int genus_;
  IntMatrix gamma_;
};

/// An element of Sp(2g, F2), entries 0/1.
class SymplecticModTwo {
 public:
  explicit SymplecticModTwo(BitMatrix gamma);
  static SymplecticModTwo identity(int genus);

  int genus() const noexcept { return genus_; }
  const BitMatrix& matrix() const noexcept { return gamma_; }
  int a(int i, int j) const { return gamma_(i, j); }
  int b(int i, int j) const { return gamma_(i, genus_ + j); }
  int c(int i, int j) const { return gamma_(genus_ + i, j); }
  int d(int i, int j) const { return gamma_(genus_ + i, genus_ + j); }

  friend SymplecticModTwo operator*(const SymplecticModTwo& x, const SymplecticModTwo& y);
  friend bool operator==(const SymplecticModTwo& x, const SymplecticModTwo& y) {
    return x.genus_ == y.genus_ && x.gamma_ == y.gamma_;
  }

 private:
  int genus_;
  BitMatrix gamma_;
};

/// The inversion [[0, 1], [-1, 0]] followed by the translations [[1, S], [0, 1]]
/// for S = e_ii (i = 1..g) and S = e_ij + e_ji (i < j), in row-major order.
std::vector<SymplecticInteger> standard_generators(int genus);

/// The action of gamma on theta characteristics for which
///
///   theta_m(0, gamma o tau)^8 = det(C tau + D)^4 theta_{gamma * m}(0, tau)^8.
///
/// With gamma^{-1} = [[A', B'], [C', D']] this is
///   gamma * [eps; delta] = [[D', C'], [B', A']] [eps; delta] + [diag(C' D'^T); diag(A' B'^T)]
/// which mod 2 reads [[A^T, C^T], [B^T, D^T]] [eps; delta] + [diag(A^T C); diag(B^T D)].
/// It is a right action: (g1 g2) * m == g2 * (g1 * m).
Characteristic affine_action(const SymplecticModTwo& gamma, const Characteristic& m);
CharTuple act_on_tuple(const SymplecticModTwo& gamma, const CharTuple& tuple);

/// Permutation table of affine_action on all 4^g characteristic indices.
std::vector<std::uint32_t> action_table(const SymplecticModTwo& gamma);

/// Product of word_length random generators or their inverses; deterministic per seed.
SymplecticInteger random_symplectic(int genus, int word_length, std::uint64_t seed);

}  // namespace a4strat
