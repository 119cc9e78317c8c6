#include "a4strat/modular_forms.hpp"

#include <cmath>
#include <string>

#include "a4strat/errors.hpp"

namespace a4strat {
namespace {

void check_constants(int genus, std::span<const Complex> constants) {
  if (genus < 1 || genus > kMaxFormGenus) {
    throw DomainError("modular forms are evaluated for genus 1.." + std::to_string(kMaxFormGenus));
  }
  if (constants.size() != even_count(genus)) {
    throw DomainError("expected " + std::to_string(even_count(genus)) + " even theta constants, got " +
                      std::to_string(constants.size()));
  }
}

Complex pow8(Complex z) {
  const Complex z2 = z * z;
  const Complex z4 = z2 * z2;
  return z4 * z4;
}

/// log s with s^2 = sum |theta|^2 / N.
double log_mean_scale(std::span<const Complex> constants) {
  double sum = 0.0;
  for (const auto& t : constants) sum += std::norm(t);
  return 0.5 * std::log(sum / static_cast<double>(constants.size()));
}

std::vector<Complex> constants_of(const SiegelPoint& tau, double target) {
  if (tau.genus() > kMaxFormGenus) {
    throw DomainError("modular forms are evaluated for genus 1.." + std::to_string(kMaxFormGenus));
  }
  const auto values = even_theta_constants(tau, target);
  std::vector<Complex> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.value);
  return out;
}

}  // namespace

std::string_view form_name(FormId id) {
  switch (id) {
    case FormId::kSchottky: return "FT";
    case FormId::kThetaNull: return "THETANULL";
    case FormId::kF1: return "F1";
  }
  return "?";
}

std::optional<FormId> parse_form_name(std::string_view name) {
  if (name == "FT") return FormId::kSchottky;
  if (name == "THETANULL") return FormId::kThetaNull;
  if (name == "F1") return FormId::kF1;
  return std::nullopt;
}

int theta_degree(FormId id, int genus) {
  const int n = static_cast<int>(even_count(genus));
  switch (id) {
    case FormId::kSchottky: return 16;
    case FormId::kThetaNull: return n;
    case FormId::kF1: return 8 * (n - 1);
  }
  return 0;
}

int form_weight(FormId id, int genus) { return theta_degree(id, genus) / 2; }

FormValue schottky_from_constants(int genus, std::span<const Complex> even_constants) {
  check_constants(genus, even_constants);
  Complex sum8 = 0.0;
  Complex sum16 = 0.0;
  double abs8 = 0.0;
  double abs16 = 0.0;
  for (const auto& t : even_constants) {
    const Complex t8 = pow8(t);
    sum8 += t8;
    sum16 += t8 * t8;
    const double a8 = std::abs(t8);
    abs8 += a8;
    abs16 += a8 * a8;
  }
  const double coeff = std::ldexp(1.0, genus);
  FormValue out{FormId::kSchottky, coeff * sum16 - sum8 * sum8, abs16 + abs8 * abs8, 0.0};
  out.relative_magnitude = std::abs(out.value) / out.normalizer;
  return out;
}

FormValue theta_null_from_constants(int genus, std::span<const Complex> even_constants) {
  check_constants(genus, even_constants);
  const double n = static_cast<double>(even_constants.size());
  const double log_s = log_mean_scale(even_constants);
  Complex product = 1.0;
  double log_abs = 0.0;
  for (const auto& t : even_constants) {
    product *= t;
    log_abs += std::log(std::abs(t));
  }
  FormValue out{FormId::kThetaNull, product, std::exp(n * log_s), 0.0};
  out.relative_magnitude = std::exp(log_abs - n * log_s);
  return out;
}

FormValue f1_from_constants(int genus, std::span<const Complex> even_constants) {
  check_constants(genus, even_constants);
  const std::size_t n = even_constants.size();
  const double log_s = log_mean_scale(even_constants);

  // Work with theta_m / s so the products stay near unit scale; rescale at the end.
  const double s = std::exp(log_s);
  std::vector<Complex> t8(n);
  for (std::size_t i = 0; i < n; ++i) t8[i] = pow8(even_constants[i] / s);
  std::vector<Complex> prefix(n + 1, 1.0);
  std::vector<Complex> suffix(n + 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * t8[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * t8[i];
  Complex scaled = 0.0;
  for (std::size_t i = 0; i < n; ++i) scaled += prefix[i] * suffix[i + 1];

  const double log_norm = std::log(static_cast<double>(n)) + 8.0 * static_cast<double>(n - 1) * log_s;
  FormValue out{FormId::kF1, scaled * std::exp(8.0 * static_cast<double>(n - 1) * log_s), std::exp(log_norm),
                0.0};
  out.relative_magnitude = std::abs(scaled) / static_cast<double>(n);
  return out;
}

Complex f1_by_division(std::span<const Complex> even_constants) {
  Complex null8 = 1.0;
  for (const auto& t : even_constants) null8 *= pow8(t);
  Complex sum = 0.0;
  for (const auto& t : even_constants) sum += null8 / pow8(t);
  return sum;
}

FormValue schottky_form(const SiegelPoint& tau, double target) {
  return schottky_from_constants(tau.genus(), constants_of(tau, target));
}

FormValue theta_null_product(const SiegelPoint& tau, double target) {
  return theta_null_from_constants(tau.genus(), constants_of(tau, target));
}

FormValue f1_form(const SiegelPoint& tau, double target) {
  return f1_from_constants(tau.genus(), constants_of(tau, target));
}

FormValue evaluate_form(FormId id, const SiegelPoint& tau, double target) {
  switch (id) {
    case FormId::kSchottky: return schottky_form(tau, target);
    case FormId::kThetaNull: return theta_null_product(tau, target);
    case FormId::kF1: return f1_form(tau, target);
  }
  throw DomainError("unknown form id");
}

double transformation_residual(const SymplecticInteger& gamma, const Characteristic& m,
                               const SiegelPoint& tau, double target) {
  if (gamma.genus() != tau.genus() || m.genus() != tau.genus()) {
    throw DomainError("transformation_residual: genus mismatch");
  }
  if (!m.is_even()) return 0.0;
  const auto [image, det] = siegel_action_with_det(gamma, tau);
  const Characteristic moved = affine_action(gamma.reduce(), m);
  const auto left = theta_constant(m, image, target);
  const auto right = theta_constant(moved, tau, target);
  const Complex lhs = pow8(left.value);
  const Complex det2 = det * det;
  const double det4 = std::abs(det2 * det2);
  const Complex rhs = det2 * det2 * pow8(right.value);
  // Where both constants vanish exactly only noise is left; the floor is the eighth power
  // of what each evaluation can certify as distinguishable from zero.
  const double noise_left = left.tail_bound + kRoundingAllowance;
  const double noise_right = right.tail_bound + kRoundingAllowance;
  const double floor = std::pow(noise_left, 8) + det4 * std::pow(noise_right, 8) + kResidualFloor;
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + floor);
}

}  // namespace a4strat
