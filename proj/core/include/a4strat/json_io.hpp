#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "a4strat/characteristic.hpp"
#include "a4strat/modular_forms.hpp"
#include "a4strat/orbit.hpp"
#include "a4strat/siegel.hpp"
#include "a4strat/strata.hpp"
#include "a4strat/symplectic.hpp"
#include "a4strat/theta.hpp"

namespace a4strat {

using Json = nlohmann::json;

Json to_json(const Characteristic& m);
Json to_json(const CharTuple& t);
Json to_json(const SymplecticInteger& gamma);
Json to_json(const SymplecticModTwo& gamma);
Json to_json(const SiegelPoint& tau);
Json to_json(const ThetaValue& v);
Json to_json(const FormValue& v);
Json to_json(const OrbitProfile& p);
Json to_json(const StratumReport& r);
Json complex_to_json(Complex z);

/// Array of characteristic strings.
CharTuple tuple_from_json(const Json& j);
SymplecticInteger symplectic_from_json(const Json& j);
SymplecticModTwo symplectic_mod_two_from_json(const Json& j);
/// {"genus": g, "tau": [[[re, im], ...], ...]}; validated as a Siegel point.
SiegelPoint siegel_from_json(const Json& j);
Complex complex_from_json(const Json& j);

SiegelPoint read_siegel_file(const std::string& path);

}  // namespace a4strat
