#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "a4strat/errors.hpp"
#include "a4strat/linalg.hpp"
#include "a4strat/siegel.hpp"
#include "a4strat/theta.hpp"
#include "oracles.hpp"

using namespace a4strat;
using cplx = std::complex<double>;

namespace {

ComplexMatrix imag_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = cplx(0.0, v);
    ++r;
  }
  return m;
}

SiegelPoint genus1(cplx t) {
  ComplexMatrix m(1, 1);
  m(0, 0) = t;
  return validate_siegel(m);
}

cplx oracle_constant(const Characteristic& m, const SiegelPoint& tau, int radius) {
  std::vector<int> eps, delta;
  testing::split_bits(m.to_string(), eps, delta);
  return testing::direct_theta_constant(eps, delta, tau.tau(), radius);
}

}  // namespace

TEST_CASE("Jacobi eigenvalues agree with a reference solver") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int n = 1; n <= 8; ++n) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
    a = (a + a.transpose()).eval();
    const auto ours = jacobi_eigenvalues(a);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues();
    REQUIRE(ours.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) CHECK(ours[i] == doctest::Approx(ref(i)).epsilon(1e-10));
    CHECK(gershgorin_lower_bound(a) <= ours.front() + 1e-12);
  }
}

TEST_CASE("validate_siegel") {
  CHECK(scalar_point(4).min_im_eigenvalue() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(validate_siegel(imag_matrix({{1, 0}, {0, 2}})).min_im_eigenvalue() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(min_im_eigenvalue(validate_siegel(imag_matrix({{2, 1}, {1, 2}}))) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(validate_siegel(imag_matrix({{1, 2}, {2, 1}})), DomainError);
  CHECK_THROWS_AS(validate_siegel(imag_matrix({{1, 0.5}, {0.4, 1}})), DomainError);
  CHECK_THROWS_AS(validate_siegel(ComplexMatrix::Zero(2, 3)), DomainError);
  // Asymmetry inside the tolerance is symmetrized away.
  auto nearly = imag_matrix({{1, 0.25}, {0.25, 1}});
  nearly(0, 1) += cplx(1e-14, 0);
  const auto p = validate_siegel(nearly);
  CHECK(p.tau()(0, 1) == p.tau()(1, 0));
}

TEST_CASE("truncation radius") {
  CHECK(truncation_radius(scalar_point(1), 1e-12) == 4);
  CHECK(theta_tail_bound(1, 1.0, 3) > 1e-12);
  CHECK(theta_tail_bound(1, 1.0, 4) < 1e-12);
  CHECK(std::isinf(theta_tail_bound(1, 1.0, 1, 5.0)));
  for (int g = 1; g <= 4; ++g) {
    for (int r = 1; r < 20; ++r) CHECK(theta_tail_bound(g, 0.7, r + 1) <= theta_tail_bound(g, 0.7, r));
    CHECK(truncation_radius(scalar_point(g, 2.0), 1e-12) <= truncation_radius(scalar_point(g, 1.0), 1e-12));
  }
  CHECK_THROWS_AS(truncation_radius(scalar_point(2, 1e-6), 1e-300), CapExceededError);
  CHECK_THROWS_AS(truncation_radius(scalar_point(1), 0.0), DomainError);
}

TEST_CASE("genus-1 reference values") {
  const auto at_i = theta_constant(Characteristic::parse("0|0"), scalar_point(1), 1e-14);
  CHECK(std::abs(at_i.value - cplx(1.08643481121330801, 0.0)) < 1e-13);
  CHECK(at_i.tail_bound < 1e-14);
  const auto at_2i = theta_constant(Characteristic::parse("0|0"), scalar_point(1, 2.0), 1e-14);
  CHECK(std::abs(at_2i.value - cplx(1.00373488548773909, 0.0)) < 1e-13);
  const double t01 = 0.913579138156116821;
  CHECK(std::abs(theta_constant(Characteristic::parse("0|1"), scalar_point(1), 1e-14).value - t01) < 1e-13);
  CHECK(std::abs(theta_constant(Characteristic::parse("1|0"), scalar_point(1), 1e-14).value - t01) < 1e-13);
}

TEST_CASE("odd constants vanish") {
  std::mt19937_64 rng(2);
  for (int g = 1; g <= 3; ++g) {
    const auto tau = random_siegel_point(g, rng);
    for (const auto& m : all_characteristics(g, ParityFilter::kOdd)) {
      const auto v = theta_constant(m, tau, 1e-12);
      CHECK(std::abs(v.value) <= 10 * v.tail_bound + 1e-15);
    }
  }
  const auto split = theta_constant(Characteristic::parse("11|11"), scalar_point(2), 1e-12);
  CHECK(std::abs(split.value) <= 10 * split.tail_bound + 1e-15);
}

TEST_CASE("even characteristics give even functions of z") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int g = 1; g <= 3; ++g) {
    const auto tau = random_siegel_point(g, rng);
    ComplexVector z(g);
    for (int i = 0; i < g; ++i) z(i) = cplx(unit(rng), unit(rng));
    for (const auto& m : all_characteristics(g, ParityFilter::kEven)) {
      const auto plus = theta_function(m, z, tau, 1e-12);
      const auto minus = theta_function(m, -z, tau, 1e-12);
      CHECK(std::abs(plus.value - minus.value) <= 2 * plus.tail_bound + 1e-12);
    }
  }
}

TEST_CASE("theta_function rejects bad input") {
  CHECK_THROWS_AS(theta_function(Characteristic::parse("0|0"), ComplexVector::Zero(2), scalar_point(1), 1e-10),
                  DomainError);
  ComplexVector far(1);
  far(0) = cplx(0.0, 11.0);
  CHECK_THROWS_AS(theta_function(Characteristic::parse("0|0"), far, scalar_point(1), 1e-10), DomainError);
}

TEST_CASE("random constants match the widened-box oracle") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int g = 1 + trial % 3;
    const auto tau = random_siegel_point(g, rng);
    const auto evens = all_characteristics(g);
    const auto& m = evens[rng() % evens.size()];
    const auto v = theta_constant(m, tau, 1e-10);
    CHECK(std::abs(v.value - oracle_constant(m, tau, v.radius + 8)) < 1e-9);
  }
}

TEST_CASE("tail bound is honest") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int g = 1 + trial % 3;
    const auto tau = random_siegel_point(g, rng);
    for (const auto& m : all_characteristics(g, ParityFilter::kEven)) {
      const auto v = theta_constant(m, tau, 1e-6);
      CHECK(std::abs(v.value - oracle_constant(m, tau, v.radius + 4)) <= v.tail_bound + 1e-13);
    }
  }
}

TEST_CASE("batch evaluation equals single evaluation") {
  std::mt19937_64 rng(6);
  const auto tau = random_siegel_point(3, rng);
  const auto all = all_characteristics(3);
  const auto batch = theta_constants(all, tau, 1e-12);
  REQUIRE(batch.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    CHECK(std::abs(batch[i].value - theta_constant(all[i], tau, 1e-12).value) < 1e-13);
  CHECK(even_theta_constants(tau, 1e-12).size() == 36);
}

TEST_CASE("block_diag") {
  const auto d = block_diag(scalar_point(1), scalar_point(1));
  CHECK(d.tau().isApprox(scalar_point(2).tau()));
  std::mt19937_64 rng(7);
  const auto a = random_siegel_point(1, rng);
  const auto b = random_siegel_point(3, rng);
  const auto ab = block_diag(a, b);
  CHECK(ab.genus() == 4);
  CHECK(ab.min_im_eigenvalue() == doctest::Approx(std::min(a.min_im_eigenvalue(), b.min_im_eigenvalue())).epsilon(1e-10));
  CHECK(is_block_split(ab, 1));
  CHECK_FALSE(is_block_split(random_siegel_point(4, rng), 1));
  CHECK(sub_block(ab, 1, 3).tau().isApprox(b.tau()));
}

TEST_CASE("theta constants factor over block-diagonal points") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const int k = 1 + trial % 3;
    const auto t1 = random_siegel_point(k, rng);
    const auto t2 = random_siegel_point(4 - k, rng);
    const auto tau = block_diag(t1, t2);
    const auto all = all_characteristics(4, ParityFilter::kEven);
    const auto values = theta_constants(all, tau, 1e-12);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto m1 = all[i].columns(0, k);
      const auto m2 = all[i].columns(k, 4 - k);
      const auto v1 = theta_constant(m1, t1, 1e-12);
      const auto v2 = theta_constant(m2, t2, 1e-12);
      CHECK(std::abs(values[i].value - v1.value * v2.value) < 1e-10);
      if (!m1.is_even() || !m2.is_even()) CHECK(std::abs(values[i].value) < 1e-10);
    }
  }
}

TEST_CASE("siegel action examples") {
  const auto gens = standard_generators(1);
  CHECK(std::abs(siegel_action(gens[0], scalar_point(1)).tau()(0, 0) - cplx(0, 1)) < 1e-14);
  CHECK(std::abs(siegel_action(gens[1], scalar_point(1)).tau()(0, 0) - cplx(1, 1)) < 1e-14);
  std::mt19937_64 rng(9);
  const auto tau = random_siegel_point(3, rng);
  CHECK(siegel_action(SymplecticInteger::identity(3), tau).tau().isApprox(tau.tau(), 1e-14));
  const auto gamma = random_symplectic(3, 5, 21);
  const auto there = siegel_action(gamma, tau);
  CHECK(siegel_action(gamma.inverse(), there).tau().isApprox(tau.tau(), 1e-9));
  // C tau + D = tau for the inversion; tau near 0 makes it singular.
  CHECK_THROWS_AS(siegel_action(gens[0], genus1(cplx(0, 1e-9))), SingularTransformError);
}
