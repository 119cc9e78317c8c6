#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "a4strat/characteristic.hpp"
#include "a4strat/siegel.hpp"
#include "a4strat/theta.hpp"

namespace a4strat {

enum class FormId { kSchottky, kThetaNull, kF1 };

/// "FT", "THETANULL", "F1".
std::string_view form_name(FormId id);
std::optional<FormId> parse_form_name(std::string_view name);

inline constexpr int kMaxFormGenus = 6;

struct FormValue {
  FormId form;
  Complex value;
  /// Scale used to decide vanishing; strictly positive.
  double normalizer = 1.0;
  double relative_magnitude = 0.0;
};

/// Number of theta-constant factors in each monomial of the form.
int theta_degree(FormId id, int genus);
/// theta_degree / 2; each theta constant has weight 1/2. At g = 4: 8, 68, 540.
int form_weight(FormId id, int genus);

/// 2^g sum theta_m^16 - (sum theta_m^8)^2 over even m.
/// normalizer = sum |theta_m|^16 + (sum |theta_m|^8)^2.
FormValue schottky_from_constants(int genus, std::span<const Complex> even_constants);

/// prod theta_m over even m. normalizer = s^N with s^2 = sum |theta_m|^2 / N, N = #evens;
/// relative_magnitude is evaluated in log space.
FormValue theta_null_from_constants(int genus, std::span<const Complex> even_constants);

/// sum_m prod_{n != m} theta_n^8, the division-free form of sum_m Theta_null^8 / theta_m^8.
/// normalizer = N s^{8(N-1)} with s as for Theta_null.
FormValue f1_from_constants(int genus, std::span<const Complex> even_constants);

/// sum_m Theta_null^8 / theta_m^8 evaluated literally; only meaningful when no
/// constant vanishes. Used to cross-check f1_from_constants.
Complex f1_by_division(std::span<const Complex> even_constants);

FormValue schottky_form(const SiegelPoint& tau, double target);
FormValue theta_null_product(const SiegelPoint& tau, double target);
FormValue f1_form(const SiegelPoint& tau, double target);
FormValue evaluate_form(FormId id, const SiegelPoint& tau, double target);

inline constexpr double kResidualFloor = 1e-300;
/// Absolute rounding error allowed per theta constant on top of its tail bound.
inline constexpr double kRoundingAllowance = 1e-13;

/// |theta_m(0, gamma o tau)^8 - det(C tau + D)^4 theta_{gamma*m}(0, tau)^8| divided by
/// |theta_m(0, gamma o tau)|^8 + |det|^4 |theta_{gamma*m}(0, tau)|^8 + floor, where
/// floor = e_l^8 + |det|^4 e_r^8 + kResidualFloor and e = tail_bound + kRoundingAllowance
/// for each side. Both sides vanishing to within their error gives a residual near 0.
/// Odd m gives 0: both sides vanish identically.
double transformation_residual(const SymplecticInteger& gamma, const Characteristic& m,
                               const SiegelPoint& tau, double target);

}  // namespace a4strat
