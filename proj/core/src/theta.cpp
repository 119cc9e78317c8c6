#include "a4strat/theta.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "a4strat/errors.hpp"

namespace a4strat {
namespace {

constexpr double kPi = std::numbers::pi;

/// Neumaier-compensated complex accumulator.
class Accumulator {
 public:
  void add(Complex z) {
    add_part(re_, re_c_, z.real());
    add_part(im_, im_c_, z.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

/// Odometer over n in prod_i [-R - eps_i, R]; the shifted vectors n + eps/2 then form a
/// box symmetric under v -> -v.
class LatticeBox {
 public:
  LatticeBox(int genus, std::uint32_t eps_bits, int radius) : n_(genus), lo_(genus), eps_(genus) {
    for (int i = 0; i < genus; ++i) {
      eps_[i] = static_cast<int>((eps_bits >> (genus - 1 - i)) & 1U);
      lo_[i] = -radius - eps_[i];
      n_[i] = lo_[i];
    }
    hi_ = radius;
  }
  const std::vector<int>& n() const { return n_; }
  int twice_v(int i) const { return 2 * n_[i] + eps_[i]; }
  bool next() {
    for (std::size_t i = 0; i < n_.size(); ++i) {
      if (n_[i] < hi_) {
        ++n_[i];
        return true;
      }
      n_[i] = lo_[i];
    }
    return false;
  }

 private:
  std::vector<int> n_, lo_, eps_;
  int hi_ = 0;
};

/// i^k for integer k.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// pi i v^T tau v with v = (twice_v)/2.
Complex quadratic_phase(const ComplexMatrix& tau, const LatticeBox& box, int genus) {
  Complex q = 0.0;
  for (int i = 0; i < genus; ++i) {
    const double vi = 0.5 * box.twice_v(i);
    if (vi == 0.0) continue;
    Complex row = 0.5 * tau(i, i) * vi;
    for (int j = i + 1; j < genus; ++j) row += tau(i, j) * (0.5 * box.twice_v(j));
    q += 2.0 * vi * row;
  }
  return Complex(0.0, kPi) * q;
}

/// Whether v is the representative of the pair {v, -v}: its first non-zero entry is positive.
int pair_role(const LatticeBox& box, int genus) {
  for (int i = 0; i < genus; ++i) {
    const int t = box.twice_v(i);
    if (t != 0) return t > 0 ? 1 : -1;
  }
  return 0;
}

void check_target(double target) {
  if (!(target > 0.0)) throw DomainError("target accuracy must be positive");
}

}  // namespace

double theta_tail_bound(int genus, double lambda_min, int radius, double im_z_norm) {
  if (genus < 1 || !(lambda_min > 0.0) || radius < 0) throw DomainError("invalid tail-bound arguments");
  if (radius - 0.5 < im_z_norm / lambda_min) return std::numeric_limits<double>::infinity();
  // log t_s is concave in s, so successive ratios t_{s+1}/t_s never increase and the
  // remainder after s is at most t_s q / (1 - q) with q = t_{s+1}/t_s.
  auto log_term = [&](int s) {
    const double r = s - 0.5;
    return genus * std::log(2.0 * s + 1.0) - kPi * lambda_min * r * r + 2.0 * kPi * im_z_norm * r;
  };
  double sum = 0.0;
  for (int s = std::max(radius, 1);; ++s) {
    const double lt = log_term(s);
    const double q = std::exp(log_term(s + 1) - lt);
    const double t = std::exp(lt);
    sum += t;
    if (q < 0.5) {
      const double rest = t * q / (1.0 - q);
      if (rest <= 1e-17 * sum || t == 0.0) return sum + rest;
    }
    if (s > radius + 100000) return std::numeric_limits<double>::infinity();
  }
}

int truncation_radius(const SiegelPoint& tau, double target, double im_z_norm) {
  check_target(target);
  const double lambda = tau.min_im_eigenvalue();
  for (int r = 1; r <= kMaxRadius; ++r) {
    if (theta_tail_bound(tau.genus(), lambda, r, im_z_norm) < target) return r;
  }
  std::ostringstream msg;
  msg << "truncation radius would exceed " << kMaxRadius << " (lambda_min = " << lambda
      << ", target = " << target << ")";
  throw CapExceededError(msg.str());
}

ThetaValue theta_function(const Characteristic& m, const ComplexVector& z, const SiegelPoint& tau,
                          double target) {
  check_target(target);
  const int g = tau.genus();
  if (m.genus() != g || z.size() != g) throw DomainError("theta_function: genus mismatch");
  const double im_z = z.imag().norm();
  if (!(im_z <= kMaxImZ)) throw DomainError("theta_function: |Im z| exceeds 10");
  if (z.isZero(0.0)) return theta_constant(m, tau, target);

  const int radius = truncation_radius(tau, target, im_z);
  LatticeBox box(g, m.eps_bits(), radius);
  Accumulator acc;
  do {
    Complex phase = quadratic_phase(tau.tau(), box, g);
    int k = 0;
    for (int i = 0; i < g; ++i) {
      phase += Complex(0.0, kPi) * static_cast<double>(box.twice_v(i)) * z(i);
      k += box.twice_v(i) * m.delta(i);
    }
    acc.add(std::exp(phase) * i_power(k));
  } while (box.next());
  return ThetaValue{acc.value(), theta_tail_bound(g, tau.min_im_eigenvalue(), radius, im_z), radius};
}

ThetaValue theta_constant(const Characteristic& m, const SiegelPoint& tau, double target) {
  const Characteristic one[] = {m};
  return theta_constants(one, tau, target).front();
}

std::vector<ThetaValue> theta_constants(std::span<const Characteristic> chars, const SiegelPoint& tau,
                                        double target) {
  check_target(target);
  const int g = tau.genus();
  for (const auto& m : chars) {
    if (m.genus() != g) throw DomainError("theta_constants: genus mismatch");
  }
  const int radius = truncation_radius(tau, target);
  const double bound = theta_tail_bound(g, tau.min_im_eigenvalue(), radius);

  std::map<std::uint32_t, std::vector<std::size_t>> by_eps;
  for (std::size_t i = 0; i < chars.size(); ++i) by_eps[chars[i].eps_bits()].push_back(i);

  std::vector<ThetaValue> out(chars.size());
  for (const auto& [eps, members] : by_eps) {
    // At z = 0 the terms for v and -v carry i^k and i^{-k}; summing each pair once with
    // weight i^k + i^{-k} in {2, 0, -2} makes odd constants cancel exactly.
    std::vector<Accumulator> acc(members.size());
    LatticeBox box(g, eps, radius);
    do {
      const int role = pair_role(box, g);
      if (role < 0) continue;
      const Complex term = std::exp(quadratic_phase(tau.tau(), box, g));
      for (std::size_t j = 0; j < members.size(); ++j) {
        const auto& m = chars[members[j]];
        if (role == 0) {
          acc[j].add(term);
          continue;
        }
        int k = 0;
        for (int i = 0; i < g; ++i) k += box.twice_v(i) * m.delta(i);
        k = ((k % 4) + 4) % 4;
        if (k == 0) acc[j].add(2.0 * term);
        else if (k == 2) acc[j].add(-2.0 * term);
      }
    } while (box.next());
    for (std::size_t j = 0; j < members.size(); ++j) {
      out[members[j]] = ThetaValue{acc[j].value(), bound, radius};
    }
  }
  return out;
}

std::vector<ThetaValue> even_theta_constants(const SiegelPoint& tau, double target) {
  const auto evens = all_characteristics(tau.genus(), ParityFilter::kEven);
  return theta_constants(evens, tau, target);
}

}  // namespace a4strat
