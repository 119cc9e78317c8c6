// a4strat: JSON front end for the theta-characteristic and stratification library.
//
// Exit codes: 0 success, 1 domain error or bad usage, 2 verification failure,
// 3 numeric cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a4strat/errors.hpp"
#include "a4strat/json_io.hpp"

using namespace a4strat;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitCap = 3;

constexpr double kResidualTol = 1e-8;
constexpr double kDegenerateTol = 1e-10;
constexpr double kGenericFloor = 1e-4;

struct VerifyFailure : std::runtime_error {
  Json report;
  explicit VerifyFailure(Json r) : std::runtime_error("verification failed"), report(std::move(r)) {}
};

CharTuple parse_tuple(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  if (parts.empty()) throw DomainError("empty tuple: " + text);
  const int genus = Characteristic::parse(parts.front()).genus();
  return CharTuple::parse(genus, parts);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Json cmd_chars(int genus, const std::string& parity, std::optional<int> split) {
  if (split) return to_json(product_split_tuple(genus, *split));
  ParityFilter filter = ParityFilter::kAll;
  if (parity == "even") filter = ParityFilter::kEven;
  if (parity == "odd") filter = ParityFilter::kOdd;
  Json out = Json::array();
  for (const auto& m : all_characteristics(genus, filter)) out.push_back(to_json(m));
  return out;
}

Json cmd_verify_transformation(int genus, std::uint64_t seed, int count) {
  if (count < 1) throw DomainError("--count must be positive");
  std::mt19937_64 rng(seed);
  const auto evens = all_characteristics(genus, ParityFilter::kEven);
  double worst = 0.0;
  Json cases = Json::array();
  for (int i = 0; i < count; ++i) {
    const auto gamma = random_symplectic(genus, 1 + static_cast<int>(rng() % 6), rng());
    const auto& m = evens[rng() % evens.size()];
    const auto tau = random_siegel_point(genus, rng);
    const double r = transformation_residual(gamma, m, tau, 1e-12);
    worst = std::max(worst, r);
    cases.push_back({{"gamma", to_json(gamma)}, {"char", m.to_string()}, {"residual", r}});
  }
  Json out{{"check", "transformation"}, {"genus", genus}, {"seed", seed}, {"count", count},
           {"max_residual", worst}, {"tolerance", kResidualTol}, {"cases", cases}};
  out["passed"] = worst < kResidualTol;
  if (!out["passed"].get<bool>()) throw VerifyFailure(out);
  return out;
}

Json cmd_verify_schottky(int genus, std::uint64_t seed, int count) {
  if (count < 1) throw DomainError("--count must be positive");
  std::mt19937_64 rng(seed);
  Json mags = Json::array();
  bool ok = true;
  const bool expect_zero = genus <= 3;
  for (int i = 0; i < count; ++i) {
    const double r = schottky_form(random_siegel_point(genus, rng), 1e-12).relative_magnitude;
    mags.push_back(r);
    ok = ok && (expect_zero ? r < kDegenerateTol : r > kGenericFloor);
  }
  Json out{{"check", "schottky-degeneration"}, {"genus", genus}, {"seed", seed}, {"count", count},
           {"expect", expect_zero ? "vanishing" : "nonvanishing"},
           {"tolerance", expect_zero ? kDegenerateTol : kGenericFloor}, {"relative_magnitudes", mags},
           {"passed", ok}};
  if (!ok) throw VerifyFailure(out);
  return out;
}

Json cmd_verify_orbit_oracle(int genus) {
  if (genus < 1 || genus > 2) throw DomainError("orbit-oracle runs at genus 1 or 2");
  const auto evens = all_characteristics(genus, ParityFilter::kEven);
  std::size_t checked = 0, disagree = 0;
  for (int len = 2; len <= 3; ++len) {
    std::vector<CharTuple> tuples;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<Characteristic> entries;
      for (auto i : idx) entries.push_back(evens[i]);
      tuples.emplace_back(genus, entries);
      int p = 0;
      while (p < len && ++idx[p] == evens.size()) idx[p++] = 0;
      if (p == len) break;
    }
    for (const auto& a : tuples) {
      const auto orbit = orbit_bfs(a);
      for (const auto& b : tuples) {
        ++checked;
        disagree += tuples_equivalent(a, b) != (orbit.count(b) == 1);
      }
    }
  }
  Json out{{"check", "orbit-oracle"}, {"genus", genus}, {"comparisons", checked},
           {"disagreements", disagree}, {"passed", disagree == 0}};
  if (disagree != 0) throw VerifyFailure(out);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta characteristics, Siegel modular forms and genus-4 strata"};
  app.require_subcommand(1, 1);

  int genus = 0;
  std::string parity = "all";
  std::optional<int> split;
  auto* chars = app.add_subcommand("chars", "List characteristics or a product split tuple");
  chars->add_option("--genus", genus, "Genus")->required();
  chars->add_option("--parity", parity, "even, odd or all")->check(CLI::IsMember({"even", "odd", "all"}));
  chars->add_option("--split", split, "List the split tuple I_k instead");

  std::vector<std::string> tuples;
  auto* orbit = app.add_subcommand("orbit", "Orbit tests under Sp(2g, F2)");
  orbit->require_subcommand(1, 1);
  auto* equiv = orbit->add_subcommand("equiv", "Invariant-based equivalence of two tuples");
  equiv->add_option("--tuple", tuples, "Comma-separated characteristics")->required()->expected(2);
  std::string bfs_tuple;
  auto* bfs = orbit->add_subcommand("bfs", "Full orbit by breadth-first search (genus <= 3)");
  bfs->add_option("--tuple", bfs_tuple, "Comma-separated characteristics")->required();

  std::string what, form, char_text, tau_file;
  double target = 1e-10;
  auto* eval = app.add_subcommand("eval", "Evaluate a form, or a theta constant with `eval theta`");
  eval->add_option("what", what, "theta")->check(CLI::IsMember({"theta"}));
  eval->add_option("--form", form, "FT, THETANULL or F1");
  eval->add_option("--char", char_text, "Characteristic for `eval theta`");
  eval->add_option("--tau", tau_file, "Period matrix JSON file")->required()->check(CLI::ExistingFile);
  eval->add_option("--target", target, "Truncation error target");

  std::uint64_t seed = 0;
  int count = 20;
  auto* verify = app.add_subcommand("verify", "Numerical self-checks");
  verify->require_subcommand(1, 1);
  auto* v_trans = verify->add_subcommand("transformation", "Theta transformation law at random points");
  v_trans->add_option("--genus", genus)->required();
  v_trans->add_option("--seed", seed)->required();
  v_trans->add_option("--count", count);
  auto* v_schottky = verify->add_subcommand("schottky-degeneration", "Schottky form below and at genus 4");
  v_schottky->add_option("--genus", genus)->required();
  v_schottky->add_option("--seed", seed)->required();
  v_schottky->add_option("--count", count);
  auto* v_orbit = verify->add_subcommand("orbit-oracle", "Invariants against BFS on all pairs and triples");
  v_orbit->add_option("--genus", genus)->required();

  double threshold = kDefaultVanishingThreshold;
  auto* cls = app.add_subcommand("classify", "Stratum of a genus-4 period matrix");
  cls->add_option("--tau", tau_file, "Period matrix JSON file")->required()->check(CLI::ExistingFile);
  cls->add_option("--threshold", threshold, "Relative vanishing threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitDomain;
  }

  try {
    if (*chars) {
      emit(cmd_chars(genus, parity, split));
    } else if (*equiv) {
      const auto a = parse_tuple(tuples[0]);
      const auto b = parse_tuple(tuples[1]);
      emit({{"equivalent", tuples_equivalent(a, b)}, {"profiles", {to_json(orbit_profile(a)), to_json(orbit_profile(b))}}});
    } else if (*bfs) {
      const auto orbit_set = orbit_bfs(parse_tuple(bfs_tuple));
      Json members = Json::array();
      for (const auto& t : orbit_set) members.push_back(to_json(t));
      emit({{"size", orbit_set.size()}, {"orbit", members}});
    } else if (*eval) {
      const auto tau = read_siegel_file(tau_file);
      if (what == "theta") {
        if (char_text.empty()) throw DomainError("eval theta needs --char");
        const auto m = Characteristic::parse(char_text);
        Json out = to_json(theta_constant(m, tau, target));
        out["char"] = m.to_string();
        emit(out);
      } else {
        if (form.empty()) throw DomainError("eval needs --form or the `theta` argument");
        const auto id = parse_form_name(form);
        if (!id) throw DomainError("unknown form " + form + " (expected FT, THETANULL or F1)");
        emit(to_json(evaluate_form(*id, tau, target)));
      }
    } else if (*v_trans) {
      emit(cmd_verify_transformation(genus, seed, count));
    } else if (*v_schottky) {
      emit(cmd_verify_schottky(genus, seed, count));
    } else if (*v_orbit) {
      emit(cmd_verify_orbit_oracle(genus));
    } else if (*cls) {
      emit(to_json(classify(read_siegel_file(tau_file), threshold)));
    }
  } catch (const VerifyFailure& e) {
    emit(e.report);
    return kExitVerify;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
