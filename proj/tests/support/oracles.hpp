#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's evaluation paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace a4strat::testing {

using cplx = std::complex<double>;

/// theta[eps; delta](z, tau) by plain summation over n in [-radius, radius]^g.
inline cplx direct_theta(const std::vector<int>& eps, const std::vector<int>& delta,
                         const Eigen::MatrixXcd& tau, const Eigen::VectorXcd& z, int radius) {
  const int g = static_cast<int>(eps.size());
  std::vector<int> n(g, -radius);
  cplx sum = 0.0;
  while (true) {
    Eigen::VectorXd v(g);
    for (int i = 0; i < g; ++i) v(i) = n[i] + 0.5 * eps[i];
    cplx quad = 0.0;
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) quad += v(i) * tau(i, j) * v(j);
    cplx lin = 0.0;
    for (int i = 0; i < g; ++i) lin += v(i) * (z(i) + 0.5 * delta[i]);
    sum += std::exp(cplx(0.0, std::numbers::pi) * (quad + 2.0 * lin));
    int i = 0;
    while (i < g && n[i] == radius) n[i++] = -radius;
    if (i == g) break;
    ++n[i];
  }
  return sum;
}

inline cplx direct_theta_constant(const std::vector<int>& eps, const std::vector<int>& delta,
                                  const Eigen::MatrixXcd& tau, int radius) {
  return direct_theta(eps, delta, tau, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(eps.size())), radius);
}

/// Splits "01|10" into bit vectors without touching the library parser.
inline void split_bits(const std::string& text, std::vector<int>& eps, std::vector<int>& delta) {
  const auto bar = text.find('|');
  eps.clear();
  delta.clear();
  for (std::size_t i = 0; i < bar; ++i) eps.push_back(text[i] - '0');
  for (std::size_t i = bar + 1; i < text.size(); ++i) delta.push_back(text[i] - '0');
}

/// All 2^{2g} characteristic strings in lexicographic order, built from string products.
inline std::vector<std::string> enumerate_strings(int g) {
  std::vector<std::string> halves{""};
  for (int i = 0; i < g; ++i) {
    std::vector<std::string> next;
    for (const auto& h : halves) {
      next.push_back(h + "0");
      next.push_back(h + "1");
    }
    halves = std::move(next);
  }
  std::vector<std::string> out;
  for (const auto& e : halves)
    for (const auto& d : halves) out.push_back(e + "|" + d);
  return out;
}

inline int string_parity(const std::string& text) {
  std::vector<int> e, d;
  split_bits(text, e, d);
  int s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * d[i];
  return s % 2;
}

}  // namespace a4strat::testing
